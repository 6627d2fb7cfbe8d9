#include "brauer/modular.hpp"

#include "brauer/errors.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

Characteristic Characteristic::prime(std::uint64_t p) {
  require_prime(p);
  return Characteristic(p);
}

std::string Characteristic::to_string() const { return p_ == 0 ? "0" : std::to_string(p_); }

std::vector<std::size_t> character_classes(const BurnsideRing& ring, Characteristic ch) {
  if (ch.is_zero()) {
    std::vector<std::size_t> all(ring.classes().classes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  return p_regular_classes(ring.classes(), ch.p());
}

IntMatrix character_matrix(const BurnsideRing& ring, Characteristic ch) {
  const auto rows = character_classes(ring, ch);
  IntMatrix m(rows.size(), ring.rank());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t c = ring.cyclic_class_of(ring.classes().classes[rows[r]].representative);
    for (std::size_t h = 0; h < ring.rank(); ++h) m(r, h) = ring.marks()(h, c);
  }
  return m;
}

IntMatrix brauer_matrix(const BurnsideRing& ring, std::uint64_t p) {
  return character_matrix(ring, Characteristic::prime(p));
}

IntMatrix fixed_point_matrix(const BurnsideRing& ring) {
  return character_matrix(ring, Characteristic::zero());
}

IntVector brauer_vector(const BurnsideElement& x, Characteristic ch) {
  return character_matrix(*x.ring(), ch).apply(x.coeffs());
}

std::vector<BurnsideElement> RelationLattice::basis() const {
  std::vector<BurnsideElement> out;
  for (auto& v : lattice.basis_vectors()) out.emplace_back(ring, std::move(v));
  return out;
}

RelationLattice kernel_lattice(const RingPtr& ring, Characteristic ch) {
  return RelationLattice{ring, ch, integer_kernel(character_matrix(*ring, ch))};
}

RelationLattice kernel_lattice(const RingPtr& ring, std::uint64_t p) {
  return kernel_lattice(ring, Characteristic::prime(p));
}

RelationLattice kernel_lattice_char0(const RingPtr& ring) {
  return kernel_lattice(ring, Characteristic::zero());
}

std::size_t expected_kernel_rank(const BurnsideRing& ring, Characteristic ch) {
  std::size_t cyclic = 0;
  for (const auto& c : ring.subgroups().classes())
    if (c.cyclic && ch.is_regular_order(c.order)) ++cyclic;
  return ring.rank() - cyclic;
}

bool is_coprimordial(const BurnsideRing& ring, std::uint64_t p) {
  require_prime(p);
  const Group& g = ring.group();
  return g.is_cyclic(g.whole()) && g.order() % p != 0;
}

BurnsideElement mobius_witness(const RingPtr& ring, std::uint64_t p) {
  require_prime(p);
  const Group& g = ring->group();
  if (!g.is_cyclic(g.whole())) throw NotCyclic("the Moebius witness needs a cyclic group");
  const std::uint64_t m = g.order();
  if (m % p == 0) throw PrimeDividesOrder("p divides the order of the cyclic group");
  IntVector v(ring->rank());
  // A cyclic group has exactly one subgroup, hence one class, of each order.
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    const std::uint64_t n = ring->subgroups()[i].order;
    v[i] = static_cast<long>(mobius(n)) * static_cast<long>(n);
  }
  return BurnsideElement(ring, std::move(v));
}

bool is_primordial(const BurnsideRing& ring, std::uint64_t p) {
  return is_primordial_subgroup(ring.group(), ring.group().whole(), p);
}

std::map<std::size_t, Rational> artin_coefficients(const BurnsideRing& ring, std::uint64_t p) {
  const IntMatrix full = brauer_matrix(ring, p);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < ring.rank(); ++i)
    if (ring.subgroups()[i].cyclic_p_prime(p)) cols.push_back(i);
  IntMatrix a(full.rows(), cols.size());
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) a(r, c) = full(r, cols[c]);
  const IntVector ones(full.rows(), Integer(1));
  auto x = solve_rational(a, ones);
  if (!x) throw SolverFailure("no rational solution for the Artin coefficients");
  std::map<std::size_t, Rational> out;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if ((*x)[c] != 0) out[cols[c]] = (*x)[c];
  return out;
}

std::map<std::size_t, Integer> quasi_elementary_integral_coefficients(const BurnsideRing& ring,
                                                                      std::uint64_t p) {
  const IntMatrix full = brauer_matrix(ring, p);
  const Group& g = ring.group();
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < ring.rank(); ++i)
    if (is_primordial_subgroup(g, ring.subgroups()[i].representative, p)) cols.push_back(i);
  if (!cols.empty() && cols.back() == ring.top()) return {{ring.top(), Integer(1)}};

  IntMatrix a(full.rows(), cols.size());
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) a(r, c) = full(r, cols[c]);
  const IntVector ones(full.rows(), Integer(1));
  auto x = solve_integer(a, ones);
  if (!x) throw SolverFailure("no integral solution over the quasi-elementary subgroups");
  std::map<std::size_t, Integer> out;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if ((*x)[c] != 0) out[cols[c]] = (*x)[c];
  return out;
}

}  // namespace brauer
