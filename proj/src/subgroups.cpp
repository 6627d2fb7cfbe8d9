#include "brauer/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "brauer/errors.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

namespace {

std::string key_of(std::span<const Elem> els) {
  return std::string(reinterpret_cast<const char*>(els.data()), els.size() * sizeof(Elem));
}

bool lex_less(const Subgroup& a, const Subgroup& b) {
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

std::vector<Subgroup> conjugacy_class_of(const Group& g, const Subgroup& h) {
  std::map<std::string, Subgroup> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    Subgroup c = g.conjugate(h, x);
    seen.try_emplace(key_of(c.elements()), std::move(c));
  }
  std::vector<Subgroup> out;
  for (auto& [k, s] : seen) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::string join_cyclic(const std::vector<std::uint64_t>& factors) {
  if (factors.empty()) return "{e}";
  if (factors.size() == 1) return "C_" + std::to_string(factors[0]);
  bool same = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t f) { return f == factors[0]; });
  if (same) return "C_" + std::to_string(factors[0]) + "^" + std::to_string(factors.size());
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i)
    s += (i ? "xC_" : "C_") + std::to_string(factors[i]);
  return s;
}

// Invariant factors of an abelian subgroup from element-order counts.
std::vector<std::uint64_t> abelian_invariants(const Group& g, const Subgroup& h) {
  // Per prime: exponents of the cyclic p-factors, largest first.
  std::vector<std::vector<std::uint64_t>> prime_parts;
  for (std::uint64_t p : prime_divisors(h.order())) {
    std::vector<std::size_t> log_count;  // log_p #{x : x^(p^k) = 1}
    std::uint64_t pk = 1;
    while (true) {
      std::size_t cnt = 0;
      for (Elem x : h.elements())
        if (pk % g.element_order(x) == 0) ++cnt;
      std::size_t lg = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++lg;
      log_count.push_back(lg);
      if (log_count.size() > 1 && log_count.back() == log_count[log_count.size() - 2]) break;
      pk *= p;
    }
    // factors with exponent >= k: log_count[k] - log_count[k-1]
    std::vector<std::uint64_t> powers;
    std::size_t kmax = log_count.size() - 1;
    for (std::size_t k = kmax; k >= 1; --k) {
      std::size_t at_least_k = log_count[k] - log_count[k - 1];
      std::size_t at_least_k1 = (k + 1 <= kmax) ? log_count[k + 1] - log_count[k] : 0;
      std::uint64_t pw = 1;
      for (std::size_t i = 0; i < k; ++i) pw *= p;
      for (std::size_t i = at_least_k1; i < at_least_k; ++i) powers.push_back(pw);
    }
    prime_parts.push_back(powers);
  }
  std::size_t len = 0;
  for (const auto& v : prime_parts) len = std::max(len, v.size());
  std::vector<std::uint64_t> factors(len, 1);
  for (const auto& v : prime_parts)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::string describe_subgroup(const Group& g, const Subgroup& h) {
  const std::size_t n = h.order();
  if (n == 1) return "{e}";
  if (g.is_cyclic(h)) return "C_" + std::to_string(n);
  bool abelian = true;
  for (Elem a : h.generators())
    for (Elem b : h.generators())
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  if (abelian) return join_cyclic(abelian_invariants(g, h));

  std::map<std::size_t, std::size_t> orders;
  for (Elem x : h.elements()) ++orders[g.element_order(x)];
  if (n == 6) return "S_3";
  if (n == 8) return orders[2] == 1 ? "Q_8" : "D_4";
  if (n == 12 && orders[3] == 8 && orders[2] == 3) return "A_4";
  if (n == 24 && orders[2] == 9 && orders[3] == 8 && orders[4] == 6) return "S_4";
  if (n == 60 && g.derived_subgroup(h).order() == 60) return "A_5";
  if (n == 120 && orders[2] == 25 && orders[5] == 24) return "S_5";

  // Dihedral: a cyclic subgroup of index 2 whose complement is all involutions.
  if (n % 2 == 0) {
    for (Elem r : h.elements()) {
      if (g.element_order(r) != n / 2) continue;
      Subgroup rot = g.closure(std::vector<Elem>{r});
      bool dihedral = std::all_of(h.elements().begin(), h.elements().end(), [&](Elem x) {
        return rot.contains(x) || g.element_order(x) == 2;
      });
      if (dihedral) return "D_" + std::to_string(n / 2);
      break;
    }
  }
  // Split metacyclic: normal cyclic subgroup with a cyclic complement.
  std::vector<Elem> by_order(h.elements().begin(), h.elements().end());
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  for (Elem x : by_order) {
    Subgroup cx = g.closure(std::vector<Elem>{x});
    bool normal_in_h = std::all_of(h.generators().begin(), h.generators().end(),
                                   [&](Elem s) { return cx.contains(g.conj(s, x)); });
    if (!normal_in_h || cx.order() == n) continue;
    std::size_t k = n / cx.order();
    for (Elem y : h.elements()) {
      if (g.element_order(y) != k) continue;
      Subgroup cy = g.closure(std::vector<Elem>{y});
      if (g.intersection(cx, cy).is_trivial())
        return "C_" + std::to_string(cx.order()) + ":C_" + std::to_string(k);
    }
  }
  return "G_" + std::to_string(n);
}

std::size_t SubgroupTable::class_of(const Subgroup& h) const {
  auto it = lookup_.find(key_of(h.elements()));
  if (it == lookup_.end()) throw NotASubgroup("subgroup not found in table");
  return it->second;
}

std::size_t SubgroupTable::count_cyclic_p_prime(std::uint64_t p) const {
  return std::count_if(classes_.begin(), classes_.end(),
                       [&](const SubgroupClass& c) { return c.cyclic_p_prime(p); });
}

std::size_t SubgroupTable::count_cyclic() const {
  return std::count_if(classes_.begin(), classes_.end(),
                       [](const SubgroupClass& c) { return c.cyclic; });
}

std::size_t SubgroupTable::total_subgroups() const {
  std::size_t n = 0;
  for (const auto& c : classes_) n += c.size();
  return n;
}

std::vector<std::size_t> SubgroupTable::maximal_classes() const {
  std::vector<std::size_t> out;
  const std::size_t top = size() - 1;
  for (std::size_t i = 0; i < top; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < top && maximal; ++j)
      if (j != i && classes_[j].order > classes_[i].order && subconjugate(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SubgroupTable::normal_classes(bool include_trivial) const {
  std::vector<std::size_t> out;
  for (std::size_t i = include_trivial ? 0 : 1; i < size(); ++i)
    if (classes_[i].normal) out.push_back(i);
  return out;
}

std::vector<std::size_t> SubgroupTable::minimal_normal_classes() const {
  std::vector<std::size_t> normals = normal_classes(false);
  std::vector<std::size_t> out;
  for (std::size_t i : normals) {
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](std::size_t j) {
      return j != i && classes_[j].order < classes_[i].order && subconjugate(j, i);
    });
    if (minimal) out.push_back(i);
  }
  return out;
}

SubgroupTable subgroup_classes(const Group& g, std::size_t work_limit) {
  std::vector<SubgroupClass> found;
  std::unordered_map<std::string, std::size_t> lookup;
  std::size_t work = 0;

  auto add_class = [&](const Subgroup& h) {
    SubgroupClass cls;
    cls.conjugates = conjugacy_class_of(g, h);
    cls.representative = cls.conjugates.front();
    cls.order = h.order();
    cls.normal = cls.conjugates.size() == 1;
    cls.cyclic = g.is_cyclic(h);
    std::size_t idx = found.size();
    for (const auto& c : cls.conjugates) lookup.emplace(key_of(c.elements()), idx);
    work += cls.conjugates.size() * h.order();
    found.push_back(std::move(cls));
  };
  auto charge = [&](std::size_t amount) {
    work += amount;
    if (work > work_limit)
      throw OrderBoundExceeded("subgroup enumeration exceeded its work limit");
  };

  // Layer 1: cyclic subgroups.
  for (Elem x = 0; x < g.order(); ++x) {
    Subgroup c = g.closure(std::vector<Elem>{x});
    charge(c.order());
    if (!lookup.contains(key_of(c.elements()))) add_class(c);
  }
  // Extend representatives one element at a time until nothing new appears.
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Subgroup h = found[next].representative;
    if (h.order() == g.order()) continue;
    std::vector<bool> done(g.order(), false);
    for (Elem x : h.elements()) done[x] = true;
    for (Elem x = 0; x < g.order(); ++x) {
      if (done[x]) continue;
      for (Elem y : h.elements()) done[g.mul(y, x)] = true;  // coset Hx gives the same closure
      Subgroup k = g.closure(h, x);
      charge(k.order());
      if (!lookup.contains(key_of(k.elements()))) add_class(k);
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return lex_less(found[a].representative, found[b].representative);
  });

  SubgroupTable table;
  for (std::size_t i : perm) table.classes_.push_back(std::move(found[i]));
  for (std::size_t i = 0; i < table.classes_.size(); ++i)
    for (const auto& c : table.classes_[i].conjugates) table.lookup_[key_of(c.elements())] = i;

  const std::size_t n = table.size();
  table.containing_.assign(n * n, 0);
  table.incl_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ci = table.classes_[i];
      const auto& cj = table.classes_[j];
      if (ci.order % cj.order != 0) continue;
      std::size_t cnt = 0;
      for (const auto& k : ci.conjugates)
        if (cj.representative.is_subset_of(k)) ++cnt;
      table.containing_[i * n + j] = cnt;
      table.incl_[i * n + j] = cnt > 0;
    }
  }

  std::map<std::string, std::size_t> label_count;
  for (auto& c : table.classes_) {
    c.label = describe_subgroup(g, c.representative);
    ++label_count[c.label];
  }
  std::map<std::string, std::size_t> seen;
  for (auto& c : table.classes_)
    if (label_count[c.label] > 1) c.label += "#" + std::to_string(++seen[c.label]);
  return table;
}

}  // namespace brauer
