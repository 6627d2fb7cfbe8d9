#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/lattice.hpp"
#include "brauer/subgroups.hpp"

namespace brauer {

class BurnsideRing;
using RingPtr = std::shared_ptr<const BurnsideRing>;

/// The Burnside ring of a group, with basis [G/H] over the subgroup classes
/// in canonical order.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static RingPtr create(GroupPtr g, std::size_t work_limit = kDefaultSubgroupWorkLimit);

  const GroupPtr& group_ptr() const { return group_; }
  const Group& group() const { return *group_; }
  const SubgroupTable& subgroups() const { return table_; }
  const ClassPartition& classes() const { return classes_; }
  std::size_t rank() const { return table_.size(); }
  const std::string& label(std::size_t i) const { return table_[i].label; }
  std::size_t class_of(const Subgroup& h) const { return table_.class_of(h); }
  std::size_t top() const { return rank() - 1; }

  /// marks()(i, j) = |(G/H_i)^{H_j}|.
  const IntMatrix& marks() const { return marks_; }
  /// Number of cosets of class i's representative fixed by g, counted on the
  /// coset space directly.
  std::size_t fixed_points(std::size_t i, Elem g) const;
  /// Class of the cyclic subgroup generated by g.
  std::size_t cyclic_class_of(Elem g) const { return cyclic_class_[g]; }

  /// Coefficient vector of [G/H_i] * [G/H_j].
  const IntVector& basis_product(std::size_t i, std::size_t j) const;

 private:
  BurnsideRing() = default;
  GroupPtr group_;
  SubgroupTable table_;
  ClassPartition classes_;
  IntMatrix marks_;
  std::vector<std::size_t> cyclic_class_;
  mutable std::once_flag products_once_;
  mutable std::vector<IntVector> products_;
};

/// Integer combination of the basis [G/H] of a Burnside ring.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  BurnsideElement(RingPtr ring, IntVector coeffs);
  static BurnsideElement zero(RingPtr ring);
  static BurnsideElement basis(RingPtr ring, std::size_t i);
  static BurnsideElement one(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const { return brauer::is_zero(coeffs_); }

  /// Marks at every subgroup class.
  IntVector mark_vector() const;

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator-() const;
  friend BurnsideElement operator*(const Integer& k, const BurnsideElement& x);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

  /// Human-readable form, e.g. "2[C_2] - [{e}]".
  std::string to_string() const;

 private:
  RingPtr ring_;
  IntVector coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BurnsideElement& x);

/// Throws GroupMismatch.
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

/// Induction along an injective homomorphism emb: H -> G. `x` lives over H.
/// Throws GroupMismatch or NotASubgroup.
BurnsideElement induce(const GroupHom& emb, const RingPtr& target, const BurnsideElement& x);

/// Restriction along an injective homomorphism emb: K -> G. `x` lives over G.
/// Throws GroupMismatch or NotASubgroup.
BurnsideElement restrict_to(const GroupHom& emb, const RingPtr& source, const BurnsideElement& x);

/// Inflation along a surjection proj: G -> Q. `x` lives over Q.
/// Throws GroupMismatch or InvalidProjection.
BurnsideElement inflate(const GroupHom& proj, const RingPtr& source, const BurnsideElement& x);

/// Double coset representatives H\G/K, each the least element of its double coset.
std::vector<Elem> double_coset_representatives(const Group& g, const Subgroup& h,
                                               const Subgroup& k);
/// Same, for H, K inside `within`, ranging over the elements of `within`.
std::vector<Elem> double_coset_representatives(const Group& g, const Subgroup& h,
                                               const Subgroup& k, const Subgroup& within);

}  // namespace brauer
