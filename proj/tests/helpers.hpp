#pragma once

#include <string>

#include "brauer/burnside.hpp"
#include "brauer/catalog.hpp"
#include "brauer/cli.hpp"

namespace brauer::testing {

inline GroupPtr group_of(const std::string& arg) {
  return build(resolve_group_argument(arg)).group;
}

inline RingPtr ring_of(const std::string& arg) { return BurnsideRing::create(group_of(arg)); }

inline std::size_t index_of_label(const BurnsideRing& r, const std::string& label) {
  for (std::size_t i = 0; i < r.rank(); ++i)
    if (r.label(i) == label) return i;
  throw std::runtime_error("no subgroup class labelled " + label);
}

/// Element of b(G) from (label, coefficient) pairs.
inline BurnsideElement element(const RingPtr& r,
                               std::initializer_list<std::pair<const char*, long>> terms) {
  IntVector v(r->rank());
  for (const auto& [label, c] : terms) v[index_of_label(*r, label)] += c;
  return BurnsideElement(r, v);
}

}  // namespace brauer::testing
