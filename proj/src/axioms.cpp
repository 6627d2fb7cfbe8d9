#include "brauer/axioms.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "brauer/modular.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

namespace {

class Tally {
 public:
  explicit Tally(std::map<std::string, AxiomResult>& results) : results_(results) {}
  void check(const std::string& family, bool ok, const std::string& what) {
    AxiomResult& r = results_[family];
    ++r.checks;
    if (!ok) {
      if (r.failures++ == 0) r.first_failure = what;
    }
  }

 private:
  std::map<std::string, AxiomResult>& results_;
};

// Character of x at the element g: sum of x_i |(G/H_i)^g|.
Integer char_value(const BurnsideElement& x, Elem g) {
  const BurnsideRing& r = *x.ring();
  const std::size_t c = r.cyclic_class_of(g);
  Integer v = 0;
  for (std::size_t i = 0; i < r.rank(); ++i)
    if (x[i] != 0) v += x[i] * r.marks()(i, c);
  return v;
}

struct SubRing {
  SubgroupGroup sg;
  RingPtr ring;
  std::vector<std::optional<Elem>> preimage;  // G element -> element of the subgroup group
};

SubRing make_subring(const RingPtr& ring, const Subgroup& h) {
  SubRing s{subgroup_as_group(ring->group_ptr(), h), nullptr, {}};
  s.ring = BurnsideRing::create(s.sg.group);
  s.preimage.assign(ring->group().order(), std::nullopt);
  for (Elem x = 0; x < s.sg.group->order(); ++x) s.preimage[s.sg.inclusion(x)] = x;
  return s;
}

std::string where(const BurnsideRing& r, std::size_t i, const std::string& extra) {
  return "[" + r.label(i) + "] " + extra;
}

std::vector<Characteristic> characteristics(const Group& g) {
  std::vector<Characteristic> out{Characteristic::zero()};
  for (std::uint64_t p : prime_divisors(g.order())) out.push_back(Characteristic::prime(p));
  return out;
}

}  // namespace

std::vector<AxiomResult> check_axioms(const RingPtr& ring) {
  std::map<std::string, AxiomResult> results;
  for (const auto& f : axiom_families()) results[f].family = f;
  Tally tally(results);

  const Group& g = ring->group();
  const SubgroupTable& t = ring->subgroups();
  const std::size_t n = ring->rank();
  const auto chars = characteristics(g);

  std::vector<SubRing> subs;
  for (std::size_t i = 0; i < n; ++i) subs.push_back(make_subring(ring, t[i].representative));

  // marks and fixed points on G itself
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BurnsideElement a = BurnsideElement::basis(ring, i), b = BurnsideElement::basis(ring, j);
      IntVector ma = a.mark_vector(), mb = b.mark_vector(), mab = multiply(a, b).mark_vector();
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) ok = ok && mab[k] == ma[k] * mb[k];
      tally.check("marks", ok, where(*ring, i, "x [" + ring->label(j) + "]"));
    }
    for (Elem x = 0; x < g.order(); ++x)
      tally.check("fixed_points",
                  ring->marks()(i, ring->cyclic_class_of(x)) == static_cast<unsigned long>(ring->fixed_points(i, x)),
                  where(*ring, i, "mark against direct count"));
  }

  for (std::size_t hi = 0; hi < n; ++hi) {
    const SubRing& h = subs[hi];
    const BurnsideRing& rh = *h.ring;
    const Subgroup& hg = t[hi].representative;

    std::vector<std::string> mackey_bad(n);  // per K, first failing U
    for (std::size_t u = 0; u < rh.rank(); ++u) {
      const BurnsideElement x = BurnsideElement::basis(h.ring, u);
      const BurnsideElement ind = induce(h.sg.inclusion, ring, x);

      // Frobenius reciprocity against every basis element of b(G).
      for (std::size_t j = 0; j < n; ++j) {
        const BurnsideElement y = BurnsideElement::basis(ring, j);
        const BurnsideElement lhs = multiply(ind, y);
        const BurnsideElement rhs =
            induce(h.sg.inclusion, ring, multiply(x, restrict_to(h.sg.inclusion, h.ring, y)));
        tally.check("frobenius", lhs == rhs, where(*ring, hi, "u=" + rh.label(u) + " y=" + ring->label(j)));
      }

      // Mackey: Res_K Ind_H [H/U] against the two-level double coset expansion.
      const Subgroup ug = h.sg.inclusion.image(rh.subgroups()[u].representative);
      for (std::size_t ki = 0; ki < n; ++ki) {
        const SubRing& k = subs[ki];
        const Subgroup& kg = t[ki].representative;
        const BurnsideElement lhs = restrict_to(k.sg.inclusion, k.ring, ind);
        IntVector rhs(k.ring->rank());
        for (Elem a : double_coset_representatives(g, kg, hg)) {
          const Subgroup m = g.intersection(g.conjugate(kg, g.inv(a)), hg);
          for (Elem b : double_coset_representatives(g, m, ug, hg)) {
            const Subgroup s = g.intersection(m, g.conjugate(ug, b));
            rhs[k.ring->class_of(k.sg.inclusion.preimage(g.conjugate(s, a)))] += 1;
          }
        }
        if (lhs.coeffs() != rhs && mackey_bad[ki].empty())
          mackey_bad[ki] = where(*ring, hi, "K=" + ring->label(ki) + " U=" + rh.label(u));
      }

      // Characters commute with induction.
      for (Characteristic ch : chars) {
        for (Elem y = 0; y < g.order(); ++y) {
          if (!ch.is_regular_order(g.element_order(y))) continue;
          Integer sum = 0;
          for (Elem z = 0; z < g.order(); ++z) {
            const Elem c = g.mul(g.mul(g.inv(z), y), z);
            if (h.preimage[c]) sum += char_value(x, *h.preimage[c]);
          }
          tally.check("m_ind", char_value(ind, y) * static_cast<unsigned long>(hg.order()) == sum,
                      where(*ring, hi, "char " + ch.to_string()));
        }
      }
    }

    for (std::size_t ki = 0; ki < n; ++ki)
      tally.check("mackey", mackey_bad[ki].empty(), mackey_bad[ki]);

    // Transitivity of induction along L <= H <= G.
    for (std::size_t li = 0; li < rh.rank(); ++li) {
      SubgroupGroup lg = subgroup_as_group(h.sg.group, rh.subgroups()[li].representative);
      RingPtr rl = BurnsideRing::create(lg.group);
      const GroupHom composite = h.sg.inclusion.compose_after(lg.inclusion);
      for (std::size_t v = 0; v < rl->rank(); ++v) {
        const BurnsideElement z = BurnsideElement::basis(rl, v);
        const BurnsideElement two = induce(h.sg.inclusion, ring, induce(lg.inclusion, h.ring, z));
        const BurnsideElement one = induce(composite, ring, z);
        tally.check("ind_transitive", two == one,
                    where(*ring, hi, "L=" + rh.label(li) + " V=" + rl->label(v)));
      }
    }

    // Restriction: characters and direct fixed-point counts.
    for (std::size_t j = 0; j < n; ++j) {
      const BurnsideElement y = BurnsideElement::basis(ring, j);
      const BurnsideElement res = restrict_to(h.sg.inclusion, h.ring, y);
      for (Elem k = 0; k < h.sg.group->order(); ++k) {
        const Elem kg = h.sg.inclusion(k);
        Integer direct = 0;
        for (std::size_t v = 0; v < rh.rank(); ++v)
          if (res[v] != 0) direct += res[v] * static_cast<unsigned long>(rh.fixed_points(v, k));
        tally.check("fixed_points", direct == static_cast<unsigned long>(ring->fixed_points(j, kg)),
                    where(*ring, j, "restricted to " + ring->label(hi)));
        for (Characteristic ch : chars) {
          if (!ch.is_regular_order(g.element_order(kg))) continue;
          tally.check("m_res", char_value(res, k) == char_value(y, kg),
                      where(*ring, j, "to " + ring->label(hi) + " char " + ch.to_string()));
        }
      }
    }
  }

  // Inflation, and its commutation with induction.
  for (std::size_t ni : t.normal_classes(true)) {
    const Subgroup& ng = t[ni].representative;
    const Quotient q = quotient(ring->group_ptr(), ng);
    const RingPtr rq = BurnsideRing::create(q.group);

    for (std::size_t j = 0; j < rq->rank(); ++j) {
      const BurnsideElement y = BurnsideElement::basis(rq, j);
      const BurnsideElement inf = inflate(q.projection, ring, y);
      for (Characteristic ch : chars)
        for (Elem x = 0; x < g.order(); ++x) {
          if (!ch.is_regular_order(g.element_order(x))) continue;
          tally.check("m_inf", char_value(inf, x) == char_value(y, q.projection(x)),
                      "N=" + ring->label(ni) + " [" + rq->label(j) + "] char " + ch.to_string());
        }
    }

    for (std::size_t hi = 0; hi < n; ++hi) {
      const Subgroup& hg = t[hi].representative;
      if (!ng.is_subset_of(hg)) continue;
      const SubRing& h = subs[hi];
      const Subgroup hbar = q.projection.image(hg);
      const SubgroupGroup sbar = subgroup_as_group(q.group, hbar);
      const RingPtr rbar = BurnsideRing::create(sbar.group);
      const Quotient qh = quotient(h.sg.group, h.sg.inclusion.preimage(ng));
      const RingPtr rqh = BurnsideRing::create(qh.group);

      std::vector<Elem> bar_index(q.group->order(), 0);
      for (Elem z = 0; z < sbar.group->order(); ++z) bar_index[sbar.inclusion(z)] = z;
      std::vector<Elem> iso(qh.group->order(), 0);
      for (Elem z = 0; z < h.sg.group->order(); ++z)
        iso[qh.projection(z)] = bar_index[q.projection(h.sg.inclusion(z))];
      const GroupHom phi(qh.group, sbar.group, std::move(iso));

      std::string bad;
      for (std::size_t v = 0; v < rqh->rank(); ++v) {
        const BurnsideElement x = BurnsideElement::basis(rqh, v);
        const BurnsideElement lhs =
            inflate(q.projection, ring, induce(sbar.inclusion, rq, induce(phi, rbar, x)));
        const BurnsideElement rhs = induce(h.sg.inclusion, ring, inflate(qh.projection, h.ring, x));
        if (lhs != rhs && bad.empty())
          bad = "N=" + ring->label(ni) + " H=" + ring->label(hi) + " [" + rqh->label(v) + "]";
      }
      tally.check("ind_inf", bad.empty(), bad);
    }
  }

  std::vector<AxiomResult> out;
  for (const auto& f : axiom_families()) out.push_back(results[f]);
  return out;
}

}  // namespace brauer
