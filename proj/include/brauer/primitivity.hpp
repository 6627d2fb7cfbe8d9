#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/burnside.hpp"
#include "brauer/lattice.hpp"
#include "brauer/modular.hpp"

namespace brauer {

enum class ImprimMode {
  MaximalMinimal,   // maximal subgroups and minimal normal subgroups
  AllSubquotients,  // every proper subgroup and every nontrivial normal subgroup
};

/// One generator of the imprimitive lattice and where it came from.
struct ImprimGenerator {
  enum class Kind { Induced, Inflated };
  Kind kind = Kind::Induced;
  std::size_t class_index = 0;  // subgroup class of H (induced) or N (inflated)
  BurnsideElement relation;
};

struct ImprimData {
  IntegerLattice lattice;
  std::vector<ImprimGenerator> generators;
};

ImprimData imprim_data(const RingPtr& ring, Characteristic ch,
                       ImprimMode mode = ImprimMode::MaximalMinimal);
IntegerLattice imprim_lattice(const RingPtr& ring, Characteristic ch,
                              ImprimMode mode = ImprimMode::MaximalMinimal);
/// Throws NotPrime.
IntegerLattice imprim_lattice(const RingPtr& ring, std::uint64_t p,
                              ImprimMode mode = ImprimMode::MaximalMinimal);

AbelianInvariants prim_quotient(const RingPtr& ring, Characteristic ch,
                                ImprimMode mode = ImprimMode::MaximalMinimal);
/// Throws NotPrime.
AbelianInvariants prim_quotient(const RingPtr& ring, std::uint64_t p,
                                ImprimMode mode = ImprimMode::MaximalMinimal);

struct Verdict {
  enum class Kind { Z, CyclicQ, Trivial, CharZeroEquivalent, OutOfClassification };
  Kind kind = Kind::Trivial;
  std::uint64_t q = 0;  // for CyclicQ
  std::string rule;     // which case of the classification fired

  /// Expected invariants for Z, CyclicQ and Trivial.
  AbelianInvariants invariants() const;
  std::string to_string() const;
};

/// Throws NotPrime.
Verdict expected_prim(const RingPtr& ring, std::uint64_t p);

/// True when the class of x generates kernel / imprim.
bool generates_quotient(const IntegerLattice& kernel, const IntegerLattice& imprim,
                        const BurnsideElement& x);

/// Closed-form generator for C_p and for C_p : C_{q^r} with faithful action;
/// other complements go through unit_coefficient_relation.
/// Throws NotInFamily, NonIntegralCoefficient, NotPrime.
BurnsideElement explicit_generator(const RingPtr& ring, std::uint64_t p);

/// A relation with coefficient 1 on [G/G], reduced modulo the imprimitive
/// relations that do not involve [G/G]. Throws NoUnitRelation, NotPrime.
BurnsideElement unit_coefficient_relation(const RingPtr& ring, std::uint64_t p);

struct NoprimssCertificate {
  IntegerLattice lattice;
  std::vector<BurnsideElement> generators;
  std::size_t kernel_rank = 0;
  bool in_kernel = false;
  bool in_imprim = false;
  bool full_rank = false;
  bool saturated = false;

  bool certified() const { return in_kernel && in_imprim && full_rank && saturated; }
};

/// Full-rank sublattice of imprimitive relations for a p-quasi-elementary
/// group, built along a maximal chain in a Sylow p-subgroup.
/// Throws NotPQuasiElementary, NotPrime.
NoprimssCertificate noprimss_sublattice(const RingPtr& ring, std::uint64_t p);

struct PrimReport {
  RingPtr ring;
  std::uint64_t p = 0;
  RelationLattice kernel;
  IntegerLattice imprim;
  std::vector<ImprimGenerator> imprim_generators;
  AbelianInvariants prim;
  Verdict expected;
  std::optional<BurnsideElement> generator;
  std::string generator_source;  // "closed form" or "unit coefficient"
  bool generator_in_kernel = false;
  bool generator_generates = false;
  /// Filled when p does not divide |G|.
  std::optional<RelationLattice> kernel_char0;
  std::optional<AbelianInvariants> prim_char0;
  bool match = false;
};

/// Throws NotPrime.
PrimReport analyze(const RingPtr& ring, std::uint64_t p,
                   ImprimMode mode = ImprimMode::MaximalMinimal);

}  // namespace brauer
