#include "brauer/primitivity.hpp"

#include <algorithm>
#include <set>

#include "brauer/errors.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

namespace {

Elem power(const Group& g, Elem x, std::uint64_t k) {
  Elem r = Group::identity();
  for (std::uint64_t i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

// Primes q for which O^q(H) is cyclic of order prime to p, among the primes
// dividing |G|.
std::vector<std::uint64_t> quasi_elementary_primes(const Group& g, const Subgroup& h,
                                                   std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q : prime_divisors(g.order())) {
    Subgroup oq = o_q(g, h, q);
    if (g.is_cyclic(oq) && oq.order() % p != 0) out.push_back(q);
  }
  return out;
}

bool cyclic_p_prime(const Group& g, const Subgroup& h, std::uint64_t p) {
  return g.is_cyclic(h) && h.order() % p != 0;
}

bool is_p_quasi_elementary(const Group& g, std::uint64_t p) { return g.is_cyclic(o_q(g, p)); }

// Elementary abelian: every non-identity element has the same prime order.
std::uint64_t elementary_abelian_prime(const Group& g, const Subgroup& w) {
  if (w.is_trivial()) return 0;
  std::uint64_t l = 0;
  for (Elem x : w.elements()) {
    if (x == Group::identity()) continue;
    std::uint64_t o = g.element_order(x);
    if (!is_prime(o) || (l != 0 && o != l)) return 0;
    l = o;
  }
  for (Elem a : w.generators())
    for (Elem b : w.generators())
      if (g.mul(a, b) != g.mul(b, a)) return 0;
  return l;
}

struct SemidirectShape {
  std::uint64_t l = 0;
  std::uint64_t q = 0;
};

// A = C_l : C_{q^k} with k >= 1 and faithful action.
std::optional<SemidirectShape> faithful_cyclic_semidirect(const Group& g, const Subgroup& a) {
  const std::uint64_t n = a.order();
  const auto primes = prime_divisors(n);
  if (primes.size() != 2) return std::nullopt;
  for (std::uint64_t l : primes) {
    const std::uint64_t q = primes[0] == l ? primes[1] : primes[0];
    if ((n / l) % l == 0 || !is_power_of(n / l, q)) continue;
    for (Elem x : a.elements()) {
      if (g.element_order(x) != l) continue;
      Subgroup cl = g.closure(std::vector<Elem>{x});
      bool normal = std::all_of(a.generators().begin(), a.generators().end(), [&](Elem s) {
        return cl.contains(g.conj(s, x));
      });
      if (!normal) break;
      if (!(g.intersection(g.centralizer(cl), a) == cl)) break;
      bool has_complement = std::any_of(a.elements().begin(), a.elements().end(),
                                        [&](Elem y) { return g.element_order(y) == n / l; });
      if (has_complement) return SemidirectShape{l, q};
      break;
    }
  }
  return std::nullopt;
}

Verdict verdict(Verdict::Kind kind, std::string rule, std::uint64_t q = 0) {
  Verdict v;
  v.kind = kind;
  v.q = q;
  v.rule = std::move(rule);
  return v;
}

// Value of Prim from the proper quotients of G, for non-primordial G.
Verdict from_quotients(const RingPtr& ring, std::uint64_t p) {
  const Group& g = ring->group();
  const SubgroupTable& t = ring->subgroups();
  bool all_cyclic = true;
  std::set<std::uint64_t> common;
  bool first = true;
  for (std::size_t i : t.normal_classes(false)) {
    Quotient q = quotient(ring->group_ptr(), t[i].representative);
    const Group& qg = *q.group;
    if (cyclic_p_prime(qg, qg.whole(), p)) continue;
    all_cyclic = false;
    std::set<std::uint64_t> here;
    for (std::uint64_t r : prime_divisors(g.order())) {
      Subgroup oq = o_q(qg, qg.whole(), r);
      if (qg.is_cyclic(oq) && oq.order() % p != 0) here.insert(r);
    }
    if (first) common = here;
    else {
      std::set<std::uint64_t> both;
      std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                            std::inserter(both, both.begin()));
      common = both;
    }
    first = false;
  }
  if (all_cyclic) return verdict(Verdict::Kind::Z, "insoluble: proper quotients cyclic of p'-order");
  if (!common.empty())
    return verdict(Verdict::Kind::CyclicQ, "insoluble: proper quotients q-quasi-elementary",
                   *common.begin());
  return verdict(Verdict::Kind::Trivial, "insoluble: mixed proper quotients");
}

IntegerLattice lattice_of(std::size_t dim, const std::vector<BurnsideElement>& xs) {
  std::vector<IntVector> rows;
  for (const auto& x : xs) rows.push_back(x.coeffs());
  return IntegerLattice::spanned_by(dim, rows);
}

}  // namespace

// ---------------------------------------------------------------- imprim

ImprimData imprim_data(const RingPtr& ring, Characteristic ch, ImprimMode mode) {
  const SubgroupTable& t = ring->subgroups();
  ImprimData out;
  std::vector<std::size_t> subs;
  if (mode == ImprimMode::MaximalMinimal) {
    subs = t.maximal_classes();
  } else {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) subs.push_back(i);
  }
  for (std::size_t i : subs) {
    SubgroupGroup sg = subgroup_as_group(ring->group_ptr(), t[i].representative);
    RingPtr sub = BurnsideRing::create(sg.group);
    for (const auto& r : kernel_lattice(sub, ch).basis())
      out.generators.push_back(
          {ImprimGenerator::Kind::Induced, i, induce(sg.inclusion, ring, r)});
  }
  const std::vector<std::size_t> normals = mode == ImprimMode::MaximalMinimal
                                               ? t.minimal_normal_classes()
                                               : t.normal_classes(false);
  for (std::size_t i : normals) {
    Quotient q = quotient(ring->group_ptr(), t[i].representative);
    RingPtr qr = BurnsideRing::create(q.group);
    for (const auto& r : kernel_lattice(qr, ch).basis())
      out.generators.push_back(
          {ImprimGenerator::Kind::Inflated, i, inflate(q.projection, ring, r)});
  }
  std::vector<BurnsideElement> rels;
  for (const auto& gen : out.generators) rels.push_back(gen.relation);
  out.lattice = lattice_of(ring->rank(), rels);
  return out;
}

IntegerLattice imprim_lattice(const RingPtr& ring, Characteristic ch, ImprimMode mode) {
  return imprim_data(ring, ch, mode).lattice;
}

IntegerLattice imprim_lattice(const RingPtr& ring, std::uint64_t p, ImprimMode mode) {
  return imprim_lattice(ring, Characteristic::prime(p), mode);
}

AbelianInvariants prim_quotient(const RingPtr& ring, Characteristic ch, ImprimMode mode) {
  return quotient_invariants(kernel_lattice(ring, ch).lattice, imprim_lattice(ring, ch, mode));
}

AbelianInvariants prim_quotient(const RingPtr& ring, std::uint64_t p, ImprimMode mode) {
  return prim_quotient(ring, Characteristic::prime(p), mode);
}

// ---------------------------------------------------------------- verdicts

AbelianInvariants Verdict::invariants() const {
  switch (kind) {
    case Kind::Z: return AbelianInvariants({Integer(0)});
    case Kind::CyclicQ: return AbelianInvariants({Integer(static_cast<unsigned long>(q))});
    default: return AbelianInvariants();
  }
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::CyclicQ: return "Z/" + std::to_string(q);
    case Kind::Trivial: return "trivial";
    case Kind::CharZeroEquivalent: return "char-zero-equivalent";
    case Kind::OutOfClassification: return "out-of-classification";
  }
  return "?";
}

Verdict expected_prim(const RingPtr& ring, std::uint64_t p) {
  require_prime(p);
  const Group& g = ring->group();
  const SubgroupTable& t = ring->subgroups();
  const std::size_t n = g.order();

  if (n % p != 0) return verdict(Verdict::Kind::CharZeroEquivalent, "p does not divide |G|");
  if (n == p) return verdict(Verdict::Kind::Z, "cyclic of order p");
  if (is_p_quasi_elementary(g, p)) return verdict(Verdict::Kind::Trivial, "p-quasi-elementary");

  if (!is_soluble(g, g.whole())) {
    const auto mins = t.minimal_normal_classes();
    if (mins.size() == 1) {
      const Subgroup& m = t[mins[0]].representative;
      bool nonabelian = elementary_abelian_prime(g, m) == 0;
      bool faithful = g.centralizer(m).is_trivial();
      Quotient h = quotient(ring->group_ptr(), m);
      bool top_ok = !quasi_elementary_primes(*h.group, h.group->whole(), p).empty() ||
                    h.group->order() == 1;
      if (nonabelian && faithful && top_ok) return from_quotients(ring, p);
    }
    return verdict(Verdict::Kind::OutOfClassification, "insoluble without the primitive shape");
  }

  // (C_l)^d : H with H acting faithfully and irreducibly.
  const auto mins = t.minimal_normal_classes();
  if (mins.size() == 1) {
    const Subgroup& w = t[mins[0]].representative;
    if (elementary_abelian_prime(g, w) != 0 && g.centralizer(w) == w) {
      for (const auto& cls : t.classes()) {
        if (cls.order * w.order() != n) continue;
        if (!g.intersection(cls.representative, w).is_trivial()) continue;
        const Subgroup& h = cls.representative;
        auto qs = quasi_elementary_primes(g, h, p);
        if (qs.empty()) break;
        if (cyclic_p_prime(g, h, p))
          return verdict(Verdict::Kind::Z, "elementary abelian by cyclic p'-group");
        return verdict(Verdict::Kind::CyclicQ, "elementary abelian by q-quasi-elementary", qs[0]);
      }
    }
  }

  // (C_l : C_{q^r}) x (C_l : C_{q^s}) with faithful actions and l != p.
  const auto normals = t.normal_classes(false);
  for (std::size_t a : normals) {
    for (std::size_t b : normals) {
      if (b <= a) continue;
      const Subgroup& x = t[a].representative;
      const Subgroup& y = t[b].representative;
      if (x.order() * y.order() != n || !g.intersection(x, y).is_trivial()) continue;
      auto sx = faithful_cyclic_semidirect(g, x);
      auto sy = faithful_cyclic_semidirect(g, y);
      if (sx && sy && sx->l == sy->l && sx->q == sy->q && sx->l != p)
        return verdict(Verdict::Kind::CyclicQ, "product of two faithful C_l : C_q^k", sx->q);
    }
  }
  return verdict(Verdict::Kind::Trivial, "soluble, outside the nontrivial families");
}

// ---------------------------------------------------------------- generators

bool generates_quotient(const IntegerLattice& kernel, const IntegerLattice& imprim,
                        const BurnsideElement& x) {
  if (!kernel.contains(x.coeffs())) return false;
  IntegerLattice span = imprim + IntegerLattice::spanned_by(kernel.ambient_dim(), {x.coeffs()});
  return span == kernel;
}

BurnsideElement unit_coefficient_relation(const RingPtr& ring, std::uint64_t p) {
  const Characteristic ch = Characteristic::prime(p);
  const RelationLattice k = kernel_lattice(ring, ch);
  const std::size_t top = ring->top();
  const IntMatrix& basis = k.lattice.basis();
  IntMatrix last(1, basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) last(0, i) = basis(i, top);
  auto x = solve_integer(last, IntVector{Integer(1)});
  if (!x) throw NoUnitRelation("no relation has coefficient 1 on [G/G]");
  IntVector v = basis.apply_left(*x);

  // Canonical representative modulo the relations that avoid [G/G].
  IntMatrix m = character_matrix(*ring, ch);
  IntVector e(ring->rank());
  e[top] = 1;
  m.append_row(e);
  v = integer_kernel(m).reduce(v);
  return BurnsideElement(ring, std::move(v));
}

BurnsideElement explicit_generator(const RingPtr& ring, std::uint64_t p) {
  require_prime(p);
  const Group& g = ring->group();
  const SubgroupTable& t = ring->subgroups();
  const std::size_t n = g.order();
  const std::size_t top = ring->top();

  if (n == p) {
    IntVector v(ring->rank());
    v[top] = static_cast<unsigned long>(p);
    v[0] = -1;
    return BurnsideElement(ring, std::move(v));
  }
  if (n % p != 0 || (n / p) % p == 0)
    throw NotInFamily("no closed-form generator for this group");
  const std::size_t k = n / p;
  std::optional<std::size_t> cp, comp;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].order == p && t[i].normal && !cp) cp = i;
    if (t[i].order == k && t[i].cyclic && !comp) comp = i;
  }
  if (!cp || !comp) throw NotInFamily("no closed-form generator for this group");
  if ((p - 1) % k != 0)
    throw NonIntegralCoefficient("complement order does not divide p - 1");
  const Subgroup& c = t[*cp].representative;
  if (!(g.centralizer(c) == c)) throw NotInFamily("action on C_p is not faithful");

  const auto qs = prime_divisors(k);
  if (qs.size() != 1) return unit_coefficient_relation(ring, p);
  IntVector v(ring->rank());
  v[*comp] -= 1;
  v[*cp] += static_cast<unsigned long>((p - 1) / k);
  v[top] += 1;
  return BurnsideElement(ring, std::move(v));
}

// ---------------------------------------------------------------- noprimss

NoprimssCertificate noprimss_sublattice(const RingPtr& ring, std::uint64_t p) {
  require_prime(p);
  const Group& g = ring->group();
  const SubgroupTable& t = ring->subgroups();
  const Subgroup c = o_q(g, p);
  if (!g.is_cyclic(c)) throw NotPQuasiElementary("O^p(G) is not cyclic");
  if (cyclic_p_prime(g, g.whole(), p))
    throw NotPQuasiElementary("G is cyclic of order prime to p");

  const std::size_t m = c.order();
  const std::size_t sylow_order = g.order() / m;
  std::size_t sylow_class = t.size();
  for (std::size_t i = 0; i < t.size() && sylow_class == t.size(); ++i)
    if (t[i].order == sylow_order) sylow_class = i;

  // Maximal chain {e} = P_0 < P_1 < ... < P_n = P.
  std::vector<Subgroup> chain{t[sylow_class].representative};
  while (chain.back().order() > 1) {
    const Subgroup& cur = chain.back();
    std::optional<Subgroup> below;
    for (const auto& cls : t.classes()) {
      if (cls.order * p != cur.order()) continue;
      for (const auto& s : cls.conjugates)
        if (s.is_subset_of(cur)) {
          below = s;
          break;
        }
      if (below) break;
    }
    chain.push_back(*below);
  }
  std::reverse(chain.begin(), chain.end());
  const std::size_t height = chain.size() - 1;

  Elem cgen = Group::identity();
  for (Elem x : c.elements())
    if (g.element_order(x) == m) cgen = x;

  NoprimssCertificate cert;
  const std::size_t dim = ring->rank();
  auto diff = [&](std::size_t a, long ka, std::size_t b) {
    IntVector v(dim);
    v[a] += ka;
    v[b] -= 1;
    return BurnsideElement(ring, std::move(v));
  };
  for (std::uint64_t s : divisors(m)) {
    const Elem cs_gen = power(g, cgen, m / s);
    std::vector<std::size_t> idx;
    for (const auto& pi : chain) {
      std::vector<Elem> gens(pi.generators().begin(), pi.generators().end());
      gens.push_back(cs_gen);
      idx.push_back(ring->class_of(g.closure(gens)));
    }
    for (std::size_t i = 1; i <= height; ++i)
      cert.generators.push_back(diff(idx[i], static_cast<long>(p), idx[i - 1]));
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j].cyclic_p_prime(p)) continue;
      const std::size_t sj = coprime_part(t[j].order, p);
      if (sj != s) continue;
      std::size_t i = 0;
      for (std::size_t rest = t[j].order / sj; rest > 1; rest /= p) ++i;
      if (i >= 1 && j != idx[i]) cert.generators.push_back(diff(idx[i], 1, j));
    }
  }

  cert.lattice = lattice_of(dim, cert.generators);
  const RelationLattice k = kernel_lattice(ring, Characteristic::prime(p));
  const IntegerLattice imprim = imprim_lattice(ring, Characteristic::prime(p));
  cert.kernel_rank = k.lattice.rank();
  cert.in_kernel = k.lattice.contains(cert.lattice);
  cert.in_imprim = imprim.contains(cert.lattice);
  cert.full_rank = cert.lattice.rank() == cert.kernel_rank &&
                   cert.kernel_rank == expected_kernel_rank(*ring, Characteristic::prime(p));
  cert.saturated = is_saturated(cert.lattice);
  return cert;
}

// ---------------------------------------------------------------- analyze

PrimReport analyze(const RingPtr& ring, std::uint64_t p, ImprimMode mode) {
  const Characteristic ch = Characteristic::prime(p);
  PrimReport r;
  r.ring = ring;
  r.p = p;
  r.kernel = kernel_lattice(ring, ch);
  ImprimData data = imprim_data(ring, ch, mode);
  r.imprim = data.lattice;
  r.imprim_generators = std::move(data.generators);
  r.prim = quotient_invariants(r.kernel.lattice, r.imprim);
  r.expected = expected_prim(ring, p);

  if (ring->group().order() % p != 0) {
    r.kernel_char0 = kernel_lattice_char0(ring);
    r.prim_char0 = prim_quotient(ring, Characteristic::zero(), mode);
  }

  const bool nontrivial_expected =
      r.expected.kind == Verdict::Kind::Z || r.expected.kind == Verdict::Kind::CyclicQ;
  if (nontrivial_expected || !r.prim.is_trivial()) {
    try {
      r.generator = explicit_generator(ring, p);
      r.generator_source = "closed form";
    } catch (const NotInFamily&) {
      try {
        r.generator = unit_coefficient_relation(ring, p);
        r.generator_source = "unit coefficient";
      } catch (const NoUnitRelation&) {
      }
    }
    if (r.generator) {
      r.generator_in_kernel = r.kernel.contains(*r.generator);
      r.generator_generates = generates_quotient(r.kernel.lattice, r.imprim, *r.generator);
    }
  }

  switch (r.expected.kind) {
    case Verdict::Kind::CharZeroEquivalent:
      r.match = r.kernel_char0->lattice == r.kernel.lattice && *r.prim_char0 == r.prim;
      break;
    case Verdict::Kind::OutOfClassification:
      r.match = r.prim.is_trivial();
      break;
    default:
      r.match = r.prim == r.expected.invariants();
  }
  return r;
}

}  // namespace brauer
