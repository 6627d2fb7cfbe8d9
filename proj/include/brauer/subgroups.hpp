#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauer/group.hpp"

namespace brauer {

/// One conjugacy class of subgroups.
struct SubgroupClass {
  Subgroup representative;  // lexicographically least conjugate
  std::vector<Subgroup> conjugates;
  std::size_t order = 1;
  bool normal = false;
  bool cyclic = false;
  std::string label;

  std::size_t size() const { return conjugates.size(); }
  bool cyclic_p_prime(std::uint64_t p) const { return cyclic && order % p != 0; }
};

/// Conjugacy classes of subgroups of a group, in canonical order: by order,
/// then by the sorted element tuple of the class representative. The trivial
/// subgroup comes first and the whole group last.
class SubgroupTable {
 public:
  std::size_t size() const { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  /// Class of an arbitrary subgroup of the parent group.
  std::size_t class_of(const Subgroup& h) const;

  /// True when class j is contained in a conjugate of class i's representative.
  bool subconjugate(std::size_t j, std::size_t i) const { return incl_[i * size() + j]; }

  /// Number of members of class i that contain the representative of class j.
  std::size_t containing_conjugates(std::size_t i, std::size_t j) const {
    return containing_[i * size() + j];
  }

  std::size_t count_cyclic_p_prime(std::uint64_t p) const;
  std::size_t count_cyclic() const;
  std::size_t total_subgroups() const;

  /// Classes of maximal subgroups.
  std::vector<std::size_t> maximal_classes() const;
  /// Normal subgroups (class size one), excluding or including the trivial one.
  std::vector<std::size_t> normal_classes(bool include_trivial = false) const;
  std::vector<std::size_t> minimal_normal_classes() const;

 private:
  friend SubgroupTable subgroup_classes(const Group& g, std::size_t work_limit);
  std::vector<SubgroupClass> classes_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<bool> incl_;
  std::vector<std::size_t> containing_;
};

inline constexpr std::size_t kDefaultSubgroupWorkLimit = 5'000'000;

/// Enumerates subgroup classes by layered closure.
///
/// `work_limit` caps the number of closure elements generated; exceeding it
/// throws OrderBoundExceeded.
SubgroupTable subgroup_classes(const Group& g,
                               std::size_t work_limit = kDefaultSubgroupWorkLimit);

/// Short descriptive name for a subgroup ({e}, C_n, C_2^2, S_3, D_4, Q_8, ...).
/// Dihedral groups are named by half their order.
/// Based on order and element-order statistics; not an isomorphism test.
std::string describe_subgroup(const Group& g, const Subgroup& h);

}  // namespace brauer
