#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "brauer/perm.hpp"

namespace brauer {

/// Index of an element in its group's enumeration.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 2000;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup of an enumerated group, stored as a sorted element list plus a
/// membership mask over the parent's elements.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<Elem> sorted_elements, std::vector<Elem> generators,
           std::size_t parent_order);

  std::size_t order() const { return elements_.size(); }
  std::span<const Elem> elements() const { return elements_; }
  std::span<const Elem> generators() const { return generators_; }
  bool contains(Elem g) const { return g < mask_.size() && mask_[g]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
};

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image list, so the identity is
/// element 0. Multiplication, inversion and element orders are tabulated.
class Group {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  std::span<const Elem> generator_ids() const { return generator_ids_; }
  const Perm& element(Elem g) const { return elements_[g]; }
  const std::vector<Perm>& elements() const { return elements_; }

  /// Writes the index of `p` to `out`; false when `p` is not an element.
  bool find(const Perm& p, Elem& out) const;
  /// Throws NotASubgroup when `p` is not an element.
  Elem index_of(const Perm& p) const;

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(Elem a) const { return elem_order_[a]; }
  bool is_abelian() const;

  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup closure(std::span<const Elem> gens) const;
  Subgroup closure(const Subgroup& h, Elem extra) const;
  /// Throws NotASubgroup if the list is not closed under multiplication.
  Subgroup subgroup_from_elements(std::vector<Elem> elements) const;

  Subgroup conjugate(const Subgroup& h, Elem g) const;
  Subgroup intersection(const Subgroup& a, const Subgroup& b) const;
  bool is_normal(const Subgroup& h) const;
  /// Normal closure of `seed` under conjugation by elements of `within`.
  Subgroup normal_closure(std::span<const Elem> seed, const Subgroup& within) const;
  Subgroup derived_subgroup(const Subgroup& h) const;
  Subgroup centralizer(const Subgroup& h) const;
  Subgroup normalizer(const Subgroup& h) const;
  bool is_cyclic(const Subgroup& h) const;

  /// One representative per left coset gH, the smallest element index in it.
  std::vector<Elem> left_coset_representatives(const Subgroup& h) const;

 private:
  friend GroupPtr close_group(const std::vector<Perm>&, std::size_t);
  Group() = default;
  void build_tables();

  std::size_t degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Elem> generator_ids_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> elem_order_;
};

/// Enumerates the group generated by `generators`.
///
/// Throws InvalidPermutation on mismatched degrees and OrderBoundExceeded as
/// soon as more than `bound` elements are found.
GroupPtr close_group(const std::vector<Perm>& generators,
                     std::size_t bound = kDefaultOrderBound);

/// A homomorphism between enumerated groups, tabulated on every element.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

  /// Extends an assignment on the source generators; throws
  /// InvalidHomomorphism when the assignment does not extend.
  static GroupHom from_generator_images(GroupPtr source, GroupPtr target,
                                        const std::vector<Elem>& images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Elem operator()(Elem g) const { return images_[g]; }
  std::vector<Elem> generator_images() const;

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
  Subgroup kernel() const;
  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& h) const;
  GroupHom compose_after(const GroupHom& first) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

struct ConjugacyClass {
  Elem representative = 0;
  std::size_t size = 0;
  std::size_t element_order = 1;
  std::vector<Elem> elements;
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element -> class index
};

/// Classes ordered by their smallest element index; the identity comes first.
ClassPartition conjugacy_classes(const Group& g);

/// Indices (into `classes`) of the classes of elements of order prime to p.
std::vector<std::size_t> p_regular_classes(const ClassPartition& classes, std::uint64_t p);
std::vector<std::size_t> p_regular_classes(const Group& g, std::uint64_t p);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N acting on the left cosets of N. Throws NotNormal.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

struct SubgroupGroup {
  GroupPtr group;
  GroupHom inclusion;
};

/// Realizes a subgroup as a group in its own right, with its inclusion map.
SubgroupGroup subgroup_as_group(const GroupPtr& g, const Subgroup& h);

/// O^q(H): the subgroup generated by the elements of H of order prime to q.
Subgroup o_q(const Group& g, const Subgroup& h, std::uint64_t q);
Subgroup o_q(const Group& g, std::uint64_t q);

struct StructuralFlags {
  std::size_t order = 1;
  bool soluble = true;
  bool p_group = false;
  bool cyclic = false;
  bool cyclic_p_prime = false;
  /// For each prime q dividing the order: whether O^q is cyclic.
  std::map<std::uint64_t, bool> quasi_elementary;
  /// For each q with quasi_elementary[q]: |O^q|.
  std::map<std::uint64_t, std::size_t> cyclic_part_order;
};

StructuralFlags structural_predicates(const Group& g, const Subgroup& h, std::uint64_t p);
StructuralFlags structural_predicates(const Group& g, std::uint64_t p);

bool is_soluble(const Group& g, const Subgroup& h);

/// True when some prime q has O^q(H) cyclic of order prime to p.
bool is_primordial_subgroup(const Group& g, const Subgroup& h, std::uint64_t p);

}  // namespace brauer
