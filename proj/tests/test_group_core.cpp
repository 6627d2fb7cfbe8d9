#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "brauer/errors.hpp"
#include "brauer/group.hpp"
#include "brauer/numtheory.hpp"
#include "brauer/subgroups.hpp"
#include "helpers.hpp"

using namespace brauer;
using brauer::testing::group_of;

namespace {

// Every subgroup, found as the closure of each set of at most three
// elements. Enough for groups whose subgroups are all 3-generated.
std::set<std::vector<Elem>> brute_force_subgroups(const Group& g) {
  std::set<std::vector<Elem>> out;
  const Elem n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      for (Elem c = b; c < n; ++c) {
        const std::vector<Elem> gens{a, b, c};
        const Subgroup h = g.closure(gens);
        out.insert(std::vector<Elem>(h.elements().begin(), h.elements().end()));
      }
  return out;
}

std::size_t brute_force_class_count(const Group& g, const std::set<std::vector<Elem>>& subs) {
  std::set<std::vector<Elem>> seen;
  std::size_t classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    ++classes;
    for (Elem x = 0; x < g.order(); ++x) {
      std::vector<Elem> c;
      for (Elem y : h) c.push_back(g.conj(x, y));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("permutations compose right to left") {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  CHECK((a * b)[1] == a[b[1]]);
  CHECK((a * a).is_identity());
  CHECK(a.inverse() == a);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), InvalidPermutation);
}

TEST_CASE("closure orders") {
  CHECK(group_of("symmetric(3)")->order() == 6);
  CHECK(group_of("symmetric(4)")->order() == 24);
  CHECK(group_of("alternating(5)")->order() == 60);
  CHECK(group_of("dihedral(4)")->order() == 8);
  CHECK(group_of("quaternion8")->order() == 8);
  CHECK(group_of("elementary_abelian(3,2)")->order() == 9);
  CHECK_THROWS_AS(build(resolve_group_argument("alternating(5)"), 59), OrderBoundExceeded);
}

TEST_CASE("conjugacy classes of S_3 have sizes 1, 3, 2") {
  const GroupPtr g = group_of("symmetric(3)");
  const ClassPartition cp = conjugacy_classes(*g);
  REQUIRE(cp.classes.size() == 3);
  CHECK(cp.classes[0].size == 1);
  CHECK(cp.classes[1].size == 3);
  CHECK(cp.classes[2].size == 2);
  CHECK(p_regular_classes(*g, 3).size() == 2);
  CHECK(p_regular_classes(*g, 2).size() == 2);
}

TEST_CASE("class sizes sum to the order and divide it") {
  for (const char* s : {"alternating(5)", "symmetric(4)", "dihedral(5)", "quaternion8"}) {
    const GroupPtr g = group_of(s);
    const ClassPartition cp = conjugacy_classes(*g);
    std::size_t total = 0;
    for (const auto& c : cp.classes) {
      total += c.size;
      CHECK(g->order() % c.size == 0);
    }
    CHECK(total == g->order());
  }
  CHECK(conjugacy_classes(*group_of("alternating(5)")).classes.size() == 5);
  CHECK(conjugacy_classes(*group_of("symmetric(4)")).classes.size() == 5);
}

TEST_CASE("subgroup classes against brute force") {
  SUBCASE("S_3 has 4 classes") {
    const GroupPtr g = group_of("symmetric(3)");
    const SubgroupTable t = subgroup_classes(*g);
    CHECK(t.size() == 4);
    CHECK(t.total_subgroups() == 6);
  }
  SUBCASE("A_5 has 9 classes") {
    const GroupPtr g = group_of("alternating(5)");
    const SubgroupTable t = subgroup_classes(*g);
    CHECK(t.size() == 9);
    CHECK(t.total_subgroups() == 59);
  }
  for (const char* s : {"symmetric(3)", "symmetric(4)", "dihedral(4)", "quaternion8",
                        "alternating(4)", "cyclic(12)", "elementary_abelian(2,3)"}) {
    CAPTURE(s);
    const GroupPtr g = group_of(s);
    const SubgroupTable t = subgroup_classes(*g);
    const auto subs = brute_force_subgroups(*g);
    CHECK(t.total_subgroups() == subs.size());
    CHECK(t.size() == brute_force_class_count(*g, subs));
    CHECK(t[0].order == 1);
    CHECK(t[t.size() - 1].order == g->order());
  }
}

TEST_CASE("subgroup labels are unique") {
  const SubgroupTable t = subgroup_classes(*group_of("dihedral(4)"));
  std::set<std::string> labels;
  for (const auto& c : t.classes()) labels.insert(c.label);
  CHECK(labels.size() == t.size());
}

TEST_CASE("quotients and homomorphisms") {
  const GroupPtr g = group_of("symmetric(4)");
  const SubgroupTable t = subgroup_classes(*g);
  std::vector<std::size_t> normal_orders;
  for (std::size_t i : t.normal_classes()) normal_orders.push_back(t[i].order);
  CHECK(normal_orders == std::vector<std::size_t>{4, 12, 24});
  const Subgroup v4 = t[t.normal_classes()[0]].representative;
  const Quotient q = quotient(g, v4);
  CHECK(q.group->order() == 6);
  CHECK(q.projection.is_homomorphism());
  CHECK(q.projection.is_surjective());
  CHECK(q.projection.kernel() == v4);
  CHECK_THROWS_AS(quotient(g, t[1].representative), NotNormal);
}

TEST_CASE("O^q and structural predicates") {
  const GroupPtr s3 = group_of("symmetric(3)");
  CHECK(o_q(*s3, 2).order() == 3);
  CHECK(o_q(*s3, 3).order() == 6);
  const StructuralFlags f = structural_predicates(*s3, 2);
  CHECK(f.quasi_elementary.at(2));
  CHECK_FALSE(f.quasi_elementary.at(3));
  CHECK(f.cyclic_part_order.at(2) == 3);

  const GroupPtr a4 = group_of("alternating(4)");
  CHECK(o_q(*a4, 3).order() == 4);
  CHECK(o_q(*a4, 2).order() == 12);
  CHECK(structural_predicates(*a4, 2).soluble);
  CHECK_FALSE(structural_predicates(*group_of("alternating(5)"), 2).soluble);
  CHECK(structural_predicates(*group_of("cyclic(6)"), 5).cyclic_p_prime);
  CHECK(structural_predicates(*group_of("dihedral(4)"), 2).p_group);
}

TEST_CASE("O^q is the least normal subgroup of q-power index") {
  for (const char* s : {"symmetric(4)", "alternating(4)", "dihedral(5)", "cyclic(12)"}) {
    const GroupPtr g = group_of(s);
    const SubgroupTable t = subgroup_classes(*g);
    for (std::uint64_t q : prime_divisors(g->order())) {
      const Subgroup o = o_q(*g, q);
      CHECK(g->is_normal(o));
      CHECK(is_power_of(g->order() / o.order(), q));
      for (std::size_t i : t.normal_classes(true)) {
        const Subgroup& n = t[i].representative;
        if (is_power_of(g->order() / n.order(), q)) CHECK(o.is_subset_of(n));
      }
    }
  }
}

TEST_CASE("number theory") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(coprime_part(24, 2) == 3);
  CHECK_THROWS_AS(require_prime(9), NotPrime);
}
