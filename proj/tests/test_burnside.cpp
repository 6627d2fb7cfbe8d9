#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "brauer/axioms.hpp"
#include "brauer/burnside.hpp"
#include "brauer/errors.hpp"
#include "helpers.hpp"

using namespace brauer;
using brauer::testing::element;
using brauer::testing::ring_of;

namespace {

// |(G/H)^K| by acting on left cosets given as element sets.
std::size_t coset_fixed_points(const Group& g, const Subgroup& h, const Subgroup& k) {
  std::set<std::vector<Elem>> cosets;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> c;
    for (Elem y : h.elements()) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    cosets.insert(c);
  }
  std::size_t fixed = 0;
  for (const auto& c : cosets) {
    bool ok = true;
    for (Elem a : k.elements()) {
      std::vector<Elem> moved;
      for (Elem y : c) moved.push_back(g.mul(a, y));
      std::sort(moved.begin(), moved.end());
      ok = ok && moved == c;
    }
    if (ok) ++fixed;
  }
  return fixed;
}

}  // namespace

TEST_CASE("table of marks of S_3") {
  const RingPtr r = ring_of("symmetric(3)");
  REQUIRE(r->rank() == 4);
  CHECK(r->label(0) == "{e}");
  CHECK(r->label(1) == "C_2");
  CHECK(r->label(2) == "C_3");
  CHECK(r->label(3) == "S_3");
  CHECK(r->marks() == IntMatrix{{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}});
}

TEST_CASE("marks against coset counting") {
  for (const char* s : {"symmetric(4)", "dihedral(4)", "quaternion8", "alternating(4)", "dihedral(5)"}) {
    CAPTURE(s);
    const RingPtr r = ring_of(s);
    const auto& t = r->subgroups();
    for (std::size_t i = 0; i < r->rank(); ++i)
      for (std::size_t j = 0; j < r->rank(); ++j)
        CHECK(r->marks()(i, j) ==
              static_cast<unsigned long>(
                  coset_fixed_points(r->group(), t[i].representative, t[j].representative)));
  }
}

TEST_CASE("products in b(S_3)") {
  const RingPtr r = ring_of("symmetric(3)");
  const auto c2 = element(r, {{"C_2", 1}});
  const auto c3 = element(r, {{"C_3", 1}});
  CHECK(multiply(c2, c2) == element(r, {{"{e}", 1}, {"C_2", 1}}));
  CHECK(multiply(c2, c3) == element(r, {{"{e}", 1}}));
  CHECK(multiply(c3, c3) == element(r, {{"C_3", 2}}));
  CHECK(multiply(BurnsideElement::one(r), c2) == c2);
  CHECK((element(r, {{"S_3", 1}, {"C_3", 1}, {"C_2", -1}})).to_string() == "[S_3] + [C_3] - [C_2]");
  CHECK(BurnsideElement::zero(r).to_string() == "0");
}

TEST_CASE("double cosets partition the group") {
  const RingPtr r = ring_of("symmetric(4)");
  const Group& g = r->group();
  const auto& t = r->subgroups();
  for (std::size_t i = 0; i < r->rank(); ++i)
    for (std::size_t j = 0; j < r->rank(); ++j) {
      const Subgroup& h = t[i].representative;
      const Subgroup& k = t[j].representative;
      std::size_t total = 0;
      for (Elem x : double_coset_representatives(g, h, k))
        total += h.order() * k.order() / g.intersection(h, g.conjugate(k, x)).order();
      CHECK(total == g.order());
    }
}

TEST_CASE("restriction and induction in S_3") {
  const RingPtr r = ring_of("symmetric(3)");
  const auto& t = r->subgroups();
  const SubgroupGroup c3 = subgroup_as_group(r->group_ptr(), t[2].representative);
  const RingPtr r3 = BurnsideRing::create(c3.group);
  const auto res = restrict_to(c3.inclusion, r3, element(r, {{"C_2", 1}}));
  CHECK(res == element(r3, {{"{e}", 1}}));
  CHECK(induce(c3.inclusion, r, BurnsideElement::one(r3)) == element(r, {{"C_3", 1}}));
  CHECK(induce(c3.inclusion, r, element(r3, {{"{e}", 1}})) == element(r, {{"{e}", 1}}));
  CHECK_THROWS_AS(induce(c3.inclusion, r, element(r, {{"C_2", 1}})), GroupMismatch);
  CHECK_THROWS_AS(element(r, {{"C_2", 1}}) + element(r3, {{"C_3", 1}}), GroupMismatch);
}

TEST_CASE("inflation from S_3 / C_3") {
  const RingPtr r = ring_of("symmetric(3)");
  const Quotient q = quotient(r->group_ptr(), r->subgroups()[2].representative);
  const RingPtr rq = BurnsideRing::create(q.group);
  CHECK(inflate(q.projection, r, BurnsideElement::basis(rq, 0)) == element(r, {{"C_3", 1}}));
  CHECK(inflate(q.projection, r, BurnsideElement::one(rq)) == BurnsideElement::one(r));
}

TEST_CASE("mark vectors form a ring homomorphism") {
  const RingPtr r = ring_of("alternating(4)");
  for (std::size_t i = 0; i < r->rank(); ++i)
    for (std::size_t j = 0; j < r->rank(); ++j) {
      const auto a = BurnsideElement::basis(r, i), b = BurnsideElement::basis(r, j);
      const IntVector ma = a.mark_vector(), mb = b.mark_vector(), mab = multiply(a, b).mark_vector();
      for (std::size_t k = 0; k < r->rank(); ++k) CHECK(mab[k] == ma[k] * mb[k]);
    }
}

TEST_CASE("axiom suites") {
  for (const char* s : {"symmetric(3)", "cyclic(6)", "dihedral(4)", "alternating(4)"}) {
    CAPTURE(s);
    const auto results = check_axioms(ring_of(s));
    CHECK(results.size() == axiom_families().size());
    for (const auto& res : results) {
      CAPTURE(res.family);
      CAPTURE(res.first_failure);
      CHECK(res.checks > 0);
      CHECK(res.passed());
    }
  }
  const auto s3 = check_axioms(ring_of("symmetric(3)"));
  CHECK(s3[0].family == "mackey");
  CHECK(s3[0].checks == 16);
}
