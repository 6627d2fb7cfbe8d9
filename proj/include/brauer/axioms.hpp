#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brauer/burnside.hpp"

namespace brauer {

/// Outcome of one axiom family on one group.
struct AxiomResult {
  std::string family;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

inline const std::vector<std::string>& axiom_families() {
  static const std::vector<std::string> names{
      "mackey",          // Res Ind against the double coset expansion
      "frobenius",       // Ind(x) y = Ind(x Res(y))
      "ind_transitive",  // Ind along U <= H <= G
      "ind_inf",         // Inf Ind = Ind Inf for N <= H
      "marks",           // marks(x y) = marks(x) marks(y)
      "fixed_points",    // marks and restriction against direct counting
      "m_ind",           // characters commute with induction
      "m_res",           // characters commute with restriction
      "m_inf",           // characters commute with inflation
  };
  return names;
}

/// Runs every axiom family exhaustively over subgroup classes, normal
/// subgroups and basis elements of the Burnside rings involved.
std::vector<AxiomResult> check_axioms(const RingPtr& ring);

}  // namespace brauer
