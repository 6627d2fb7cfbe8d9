#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/errors.hpp"
#include "brauer/primitivity.hpp"
#include "helpers.hpp"

using namespace brauer;
using brauer::testing::element;
using brauer::testing::ring_of;

namespace {

// Imprim from every proper subgroup and every nontrivial quotient, built
// from induce / inflate and the kernels of the smaller groups.
IntegerLattice independent_imprim(const RingPtr& r, std::uint64_t p) {
  std::vector<IntVector> gens;
  const auto& t = r->subgroups();
  for (std::size_t i = 0; i + 1 < r->rank(); ++i) {
    const SubgroupGroup h = subgroup_as_group(r->group_ptr(), t[i].representative);
    const RingPtr rh = BurnsideRing::create(h.group);
    for (const auto& x : kernel_lattice(rh, p).basis())
      gens.push_back(induce(h.inclusion, r, x).coeffs());
  }
  for (std::size_t i : t.normal_classes()) {
    if (i + 1 == r->rank()) {
      // G/G is trivial and has no relations
      continue;
    }
    const Quotient q = quotient(r->group_ptr(), t[i].representative);
    const RingPtr rq = BurnsideRing::create(q.group);
    for (const auto& x : kernel_lattice(rq, p).basis())
      gens.push_back(inflate(q.projection, r, x).coeffs());
  }
  return IntegerLattice::spanned_by(r->rank(), gens);
}

AbelianInvariants inv(std::vector<long> f) {
  std::vector<Integer> v(f.begin(), f.end());
  return AbelianInvariants(v);
}

}  // namespace

TEST_CASE("Prim of C_p is Z, generated by p[C_p] - [{e}]") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const RingPtr r = ring_of("cyclic(" + std::to_string(p) + ")");
    const PrimReport rep = analyze(r, p);
    CHECK(rep.prim == inv({0}));
    const std::string top = "C_" + std::to_string(p);
    const auto gen = element(r, {{top.c_str(), static_cast<long>(p)}, {"{e}", -1}});
    CHECK(explicit_generator(r, p) == gen);
    CHECK(generates_quotient(rep.kernel.lattice, rep.imprim, gen));
    CHECK(rep.match);
  }
}

TEST_CASE("closed-form generators for C_p : C_k") {
  SUBCASE("S_3 at 3") {
    const RingPtr r = ring_of("symmetric(3)");
    const auto gen = element(r, {{"S_3", 1}, {"C_3", 1}, {"C_2", -1}});
    CHECK(explicit_generator(r, 3) == gen);
    const PrimReport rep = analyze(r, 3);
    CHECK(rep.prim == inv({0}));
    CHECK(rep.generator_generates);
  }
  SUBCASE("C_5 : C_4 at 5") {
    const RingPtr r = BurnsideRing::create(build(resolve_group_argument("catalog:C_5:C_4")).group);
    const BurnsideElement gen = explicit_generator(r, 5);
    CHECK(gen.to_string() == "[C_5:C_4] + [C_5] - [C_4]");
    CHECK(analyze(r, 5).generator_generates);
  }
  SUBCASE("C_7 : C_3 at 7") {
    const RingPtr r = BurnsideRing::create(build(resolve_group_argument("catalog:C_7:C_3")).group);
    const BurnsideElement gen = explicit_generator(r, 7);
    CHECK(gen.to_string() == "[C_7:C_3] + 2[C_7] - [C_3]");
    const PrimReport rep = analyze(r, 7);
    CHECK(rep.prim == inv({0}));
    CHECK(rep.generator_generates);
  }
}

TEST_CASE("explicit generator errors") {
  CHECK_THROWS_AS(explicit_generator(ring_of("alternating(4)"), 2), NotInFamily);
  CHECK_THROWS_AS(explicit_generator(ring_of("cyclic(4)"), 2), NotInFamily);
  CHECK_THROWS_AS(unit_coefficient_relation(ring_of("cyclic(4)"), 2), NoUnitRelation);
  CHECK_THROWS_AS(explicit_generator(ring_of("symmetric(3)"), 4), NotPrime);
}

TEST_CASE("unit coefficient relations have coefficient 1 on the top class") {
  const RingPtr r = ring_of("alternating(5)");
  for (std::uint64_t p : {2, 3, 5}) {
    const BurnsideElement x = unit_coefficient_relation(r, p);
    CHECK(x[r->top()] == 1);
    CHECK(kernel_lattice(r, p).contains(x));
    const PrimReport rep = analyze(r, p);
    CHECK(generates_quotient(rep.kernel.lattice, rep.imprim, x));
  }
}

TEST_CASE("noprimss certificates") {
  for (const char* s : {"cyclic(4)", "elementary_abelian(2,2)", "dihedral(4)", "quaternion8",
                        "symmetric(3)"}) {
    CAPTURE(s);
    const RingPtr r = ring_of(s);
    const NoprimssCertificate c = noprimss_sublattice(r, 2);
    CHECK(c.in_kernel);
    CHECK(c.in_imprim);
    CHECK(c.full_rank);
    CHECK(c.saturated);
    CHECK(c.lattice.rank() == c.kernel_rank);
    CHECK(prim_quotient(r, 2).is_trivial());
  }
  CHECK_THROWS_AS(noprimss_sublattice(ring_of("alternating(4)"), 2), NotPQuasiElementary);
}

TEST_CASE("Imprim against an independent construction") {
  for (const char* s : {"symmetric(3)", "alternating(4)", "symmetric(4)", "dihedral(5)",
                        "cyclic(12)", "quaternion8"}) {
    for (std::uint64_t p : {2, 3, 5}) {
      CAPTURE(s);
      CAPTURE(p);
      const RingPtr r = ring_of(s);
      const IntegerLattice expected = independent_imprim(r, p);
      CHECK(imprim_lattice(r, p) == expected);
      CHECK(imprim_lattice(r, p, ImprimMode::AllSubquotients) == expected);
    }
  }
}

TEST_CASE("Prim values") {
  CHECK(prim_quotient(ring_of("alternating(4)"), 2) == inv({0}));
  CHECK(prim_quotient(ring_of("alternating(4)"), 3) == inv({3}));
  CHECK(prim_quotient(ring_of("symmetric(4)"), 2) == inv({2}));
  CHECK(prim_quotient(ring_of("symmetric(4)"), 3).is_trivial());
  CHECK(prim_quotient(ring_of("dihedral(5)"), 5) == inv({0}));
  CHECK(prim_quotient(ring_of("alternating(5)"), 5) == inv({0}));
}

TEST_CASE("expected verdicts") {
  CHECK(expected_prim(ring_of("cyclic(3)"), 3).kind == Verdict::Kind::Z);
  CHECK(expected_prim(ring_of("cyclic(4)"), 2).kind == Verdict::Kind::Trivial);
  CHECK(expected_prim(ring_of("cyclic(4)"), 3).kind == Verdict::Kind::CharZeroEquivalent);
  CHECK(expected_prim(ring_of("alternating(5)"), 5).kind == Verdict::Kind::Z);
  const Verdict a4 = expected_prim(ring_of("alternating(4)"), 3);
  CHECK(a4.kind == Verdict::Kind::CyclicQ);
  CHECK(a4.q == 3);
  CHECK(a4.invariants() == inv({3}));
}

TEST_CASE("characteristic-zero equivalence when p does not divide |G|") {
  const RingPtr r = ring_of("symmetric(3)");
  const PrimReport rep = analyze(r, 5);
  REQUIRE(rep.kernel_char0.has_value());
  CHECK(rep.kernel_char0->lattice == rep.kernel.lattice);
  CHECK(rep.prim_char0.value() == rep.prim);
  CHECK(rep.match);
}
