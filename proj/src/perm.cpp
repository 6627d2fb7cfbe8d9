#include "brauer/perm.hpp"

#include <numeric>

#include "brauer/errors.hpp"

namespace brauer {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x])
      throw InvalidPermutation("image list is not a bijection of 0.." +
                               std::to_string(images_.size() - 1));
    hit[x] = true;
  }
  if (images_.empty()) throw InvalidPermutation("permutation of degree 0");
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || seen[x])
        throw InvalidPermutation("cycles are not disjoint or exceed degree");
      seen[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw InvalidPermutation("composing permutations of different degree");
  Perm r(a.degree());
  for (std::size_t i = 0; i < b.images_.size(); ++i)
    r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::ostream& operator<<(std::ostream& os, const Perm& perm) {
  auto cs = perm.cycles();
  if (cs.empty()) return os << "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace brauer
