#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace brauer {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image list.
///
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  explicit Perm(std::size_t degree = 1);

  /// Throws InvalidPermutation unless `images` is a bijection of 0..n-1.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation of the given degree from disjoint cycles.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::vector<std::vector<Point>> cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& perm);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace brauer
