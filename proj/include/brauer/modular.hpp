#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "brauer/burnside.hpp"
#include "brauer/lattice.hpp"

namespace brauer {

/// Either characteristic zero or a prime p.
class Characteristic {
 public:
  static Characteristic zero() { return Characteristic(0); }
  /// Throws NotPrime.
  static Characteristic prime(std::uint64_t p);

  bool is_zero() const { return p_ == 0; }
  std::uint64_t p() const { return p_; }
  /// True for elements of this order that lie in the character domain.
  bool is_regular_order(std::uint64_t order) const { return p_ == 0 || order % p_ != 0; }
  std::string to_string() const;

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  explicit Characteristic(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Element classes in the character domain: p-regular classes, or all
/// classes in characteristic zero.
std::vector<std::size_t> character_classes(const BurnsideRing& ring, Characteristic ch);

/// Rows: character-domain classes; columns: subgroup classes; entries: fixed
/// points of a class representative on G/H.
IntMatrix character_matrix(const BurnsideRing& ring, Characteristic ch);

/// Throws NotPrime.
IntMatrix brauer_matrix(const BurnsideRing& ring, std::uint64_t p);
/// Permutation characters on every conjugacy class.
IntMatrix fixed_point_matrix(const BurnsideRing& ring);

/// Image of x: its Brauer character (or permutation character) on the
/// character-domain classes.
IntVector brauer_vector(const BurnsideElement& x, Characteristic ch);

struct RelationLattice {
  RingPtr ring;
  Characteristic ch = Characteristic::zero();
  IntegerLattice lattice;

  std::vector<BurnsideElement> basis() const;
  bool contains(const BurnsideElement& x) const { return lattice.contains(x.coeffs()); }
};

RelationLattice kernel_lattice(const RingPtr& ring, Characteristic ch);
/// Throws NotPrime.
RelationLattice kernel_lattice(const RingPtr& ring, std::uint64_t p);
RelationLattice kernel_lattice_char0(const RingPtr& ring);

/// Number of subgroup classes minus the cyclic classes in the character domain.
std::size_t expected_kernel_rank(const BurnsideRing& ring, Characteristic ch);

/// True iff G is cyclic of order prime to p. Throws NotPrime.
bool is_coprimordial(const BurnsideRing& ring, std::uint64_t p);

/// sum over n | m of mu(n) n [C/C_n] for cyclic C of order m.
/// Throws NotCyclic, PrimeDividesOrder, NotPrime.
BurnsideElement mobius_witness(const RingPtr& ring, std::uint64_t p);

/// True iff some O^q(G) is cyclic of order prime to p. Throws NotPrime.
bool is_primordial(const BurnsideRing& ring, std::uint64_t p);

/// Rational a_C with 1 = sum a_C m([G/C]) over cyclic p'-classes C.
/// Keys are subgroup class indices. Throws NotPrime.
std::map<std::size_t, Rational> artin_coefficients(const BurnsideRing& ring, std::uint64_t p);

/// Integer a_H with 1 = sum a_H m([G/H]) over the classes that are
/// quasi-elementary with cyclic part prime to p. Throws NotPrime, SolverFailure.
std::map<std::size_t, Integer> quasi_elementary_integral_coefficients(const BurnsideRing& ring,
                                                                      std::uint64_t p);

}  // namespace brauer
