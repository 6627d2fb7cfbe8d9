#include "brauer/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "brauer/errors.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

namespace {

struct PointsHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::vector<Elem> sorted_elements, std::vector<Elem> generators,
                   std::size_t parent_order)
    : elements_(std::move(sorted_elements)),
      generators_(std::move(generators)),
      mask_(parent_order, false) {
  for (Elem g : elements_) mask_[g] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order() || other.order() % order() != 0) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem g) { return other.contains(g); });
}

// ---------------------------------------------------------------- Group

GroupPtr close_group(const std::vector<Perm>& generators, std::size_t bound) {
  if (bound < 1) throw OrderBoundExceeded("order bound must be at least 1");
  std::size_t degree = generators.empty() ? 1 : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidPermutation("generators act on sets of different sizes");

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> found;
  Perm id(degree);
  seen.insert(id);
  found.push_back(id);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : generators) {
      Perm next = s * found[i];
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        if (found.size() > bound)
          throw OrderBoundExceeded("group order exceeds bound " + std::to_string(bound));
      }
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  g->generators_ = generators;
  std::sort(found.begin(), found.end());
  g->elements_ = std::move(found);
  g->build_tables();
  return g;
}

void Group::build_tables() {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<Elem>(i));
  generator_ids_.clear();
  for (const auto& s : generators_) generator_ids_.push_back(index_.at(s));

  // A base: points whose images determine an element uniquely.
  std::vector<Point> base;
  std::vector<Elem> moving;
  for (std::size_t i = 1; i < n; ++i) moving.push_back(static_cast<Elem>(i));
  for (Point x = 0; x < degree_ && !moving.empty(); ++x) {
    bool moved = std::any_of(moving.begin(), moving.end(),
                             [&](Elem e) { return elements_[e][x] != x; });
    if (!moved) continue;
    base.push_back(x);
    std::erase_if(moving, [&](Elem e) { return elements_[e][x] != x; });
  }

  std::unordered_map<std::vector<Point>, Elem, PointsHash> by_base;
  by_base.reserve(n);
  std::vector<Point> key(base.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < base.size(); ++k) key[k] = elements_[i][base[k]];
    by_base.emplace(key, static_cast<Elem>(i));
  }

  mul_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Perm& pa = elements_[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Perm& pb = elements_[b];
      for (std::size_t k = 0; k < base.size(); ++k) key[k] = pa[pb[base[k]]];
      mul_[a * n + b] = by_base.at(key);
    }
  }

  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a * n + b] == 0) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }

  elem_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    std::size_t k = 1;
    while (x != identity()) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    elem_order_[a] = k;
  }
}

bool Group::find(const Perm& p, Elem& out) const {
  auto it = index_.find(p);
  if (it == index_.end()) return false;
  out = it->second;
  return true;
}

Elem Group::index_of(const Perm& p) const {
  Elem e;
  if (!find(p, e)) throw NotASubgroup("permutation is not an element of the group");
  return e;
}

bool Group::is_abelian() const {
  for (Elem a : generator_ids_)
    for (Elem b : generator_ids_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup Group::whole() const {
  std::vector<Elem> all(order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(std::move(all), generator_ids_, order());
}

Subgroup Group::trivial() const { return Subgroup({identity()}, {}, order()); }

Subgroup Group::closure(std::span<const Elem> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Elem> found{identity()};
  in[identity()] = true;
  std::vector<Elem> kept;
  for (Elem s : gens)
    if (s != identity() && std::find(kept.begin(), kept.end(), s) == kept.end())
      kept.push_back(s);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem s : kept) {
      Elem next = mul(found[i], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(found), std::move(kept), order());
}

Subgroup Group::closure(const Subgroup& h, Elem extra) const {
  std::vector<Elem> gens(h.generators().begin(), h.generators().end());
  if (!h.contains(extra)) gens.push_back(extra);
  return closure(gens);
}

Subgroup Group::subgroup_from_elements(std::vector<Elem> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> in(order(), false);
  for (Elem e : elements) {
    if (e >= order()) throw NotASubgroup("element index out of range");
    in[e] = true;
  }
  if (elements.empty() || !in[identity()])
    throw NotASubgroup("element set does not contain the identity");
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[mul(a, b)]) throw NotASubgroup("element set is not closed under products");
  // Greedy generating set.
  std::vector<Elem> gens;
  Subgroup current = trivial();
  for (Elem e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = closure(gens);
  }
  return Subgroup(std::move(elements), std::move(gens), order());
}

Subgroup Group::conjugate(const Subgroup& h, Elem g) const {
  std::vector<Elem> els;
  els.reserve(h.order());
  for (Elem x : h.elements()) els.push_back(conj(g, x));
  std::sort(els.begin(), els.end());
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(conj(g, x));
  return Subgroup(std::move(els), std::move(gens), order());
}

Subgroup Group::intersection(const Subgroup& a, const Subgroup& b) const {
  std::vector<Elem> els;
  for (Elem x : a.elements())
    if (b.contains(x)) els.push_back(x);
  return subgroup_from_elements(std::move(els));
}

bool Group::is_normal(const Subgroup& h) const {
  for (Elem g : generator_ids_)
    for (Elem x : h.generators())
      if (!h.contains(conj(g, x))) return false;
  return true;
}

Subgroup Group::normal_closure(std::span<const Elem> seed, const Subgroup& within) const {
  Subgroup current = closure(seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem g : within.generators()) {
      std::vector<Elem> gens(current.generators().begin(), current.generators().end());
      for (Elem x : gens) {
        Elem y = conj(g, x);
        if (!current.contains(y)) {
          current = closure(current, y);
          grew = true;
        }
      }
    }
  }
  return current;
}

Subgroup Group::derived_subgroup(const Subgroup& h) const {
  std::vector<Elem> commutators;
  for (Elem a : h.generators())
    for (Elem b : h.generators()) {
      Elem c = mul(mul(a, b), mul(inv(a), inv(b)));
      if (c != identity()) commutators.push_back(c);
    }
  return normal_closure(commutators, h);
}

Subgroup Group::centralizer(const Subgroup& h) const {
  std::vector<Elem> els;
  for (Elem g = 0; g < order(); ++g) {
    bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                [&](Elem x) { return mul(g, x) == mul(x, g); });
    if (commutes) els.push_back(g);
  }
  return subgroup_from_elements(std::move(els));
}

Subgroup Group::normalizer(const Subgroup& h) const {
  std::vector<Elem> els;
  for (Elem g = 0; g < order(); ++g) {
    bool fixes = std::all_of(h.generators().begin(), h.generators().end(),
                             [&](Elem x) { return h.contains(conj(g, x)); });
    if (fixes) els.push_back(g);
  }
  return subgroup_from_elements(std::move(els));
}

bool Group::is_cyclic(const Subgroup& h) const {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](Elem x) { return element_order(x) == h.order(); });
}

std::vector<Elem> Group::left_coset_representatives(const Subgroup& h) const {
  std::vector<bool> covered(order(), false);
  std::vector<Elem> reps;
  for (Elem g = 0; g < order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (Elem x : h.elements()) covered[mul(g, x)] = true;
  }
  return reps;
}

// ---------------------------------------------------------------- GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->order())
    throw InvalidHomomorphism("image table does not cover the source group");
  for (Elem e : images_)
    if (e >= target_->order()) throw InvalidHomomorphism("image outside the target group");
}

GroupHom GroupHom::from_generator_images(GroupPtr source, GroupPtr target,
                                         const std::vector<Elem>& images) {
  const Group& s = *source;
  const Group& t = *target;
  if (images.size() != s.generator_ids().size())
    throw InvalidHomomorphism("one image per generator is required");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> table(s.order(), kUnset);
  table[Group::identity()] = Group::identity();
  std::deque<Elem> queue{Group::identity()};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < images.size(); ++k) {
      Elem y = s.mul(x, s.generator_ids()[k]);
      Elem fy = t.mul(table[x], images[k]);
      if (table[y] == kUnset) {
        table[y] = fy;
        queue.push_back(y);
      } else if (table[y] != fy) {
        throw InvalidHomomorphism("generator images do not extend to a homomorphism");
      }
    }
  }
  GroupHom hom(std::move(source), std::move(target), std::move(table));
  if (!hom.is_homomorphism())
    throw InvalidHomomorphism("generator images do not extend to a homomorphism");
  return hom;
}

std::vector<Elem> GroupHom::generator_images() const {
  std::vector<Elem> out;
  for (Elem g : source_->generator_ids()) out.push_back(images_[g]);
  return out;
}

bool GroupHom::is_homomorphism() const {
  const Group& s = *source_;
  const Group& t = *target_;
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b)
      if (images_[s.mul(a, b)] != t.mul(images_[a], images_[b])) return false;
  return true;
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target_->order(), false);
  for (Elem e : images_) hit[e] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> els;
  for (Elem g = 0; g < source_->order(); ++g)
    if (images_[g] == Group::identity()) els.push_back(g);
  return source_->subgroup_from_elements(std::move(els));
}

Subgroup GroupHom::image(const Subgroup& h) const {
  std::vector<Elem> els;
  for (Elem g : h.elements()) els.push_back(images_[g]);
  return target_->subgroup_from_elements(std::move(els));
}

Subgroup GroupHom::preimage(const Subgroup& h) const {
  std::vector<Elem> els;
  for (Elem g = 0; g < source_->order(); ++g)
    if (h.contains(images_[g])) els.push_back(g);
  return source_->subgroup_from_elements(std::move(els));
}

GroupHom GroupHom::compose_after(const GroupHom& first) const {
  if (first.target_ != source_)
    throw InvalidHomomorphism("composing maps whose groups do not match");
  std::vector<Elem> table(first.source_->order());
  for (Elem g = 0; g < table.size(); ++g) table[g] = images_[first.images_[g]];
  return GroupHom(first.source_, target_, std::move(table));
}

// ---------------------------------------------------------------- classes

ClassPartition conjugacy_classes(const Group& g) {
  constexpr std::size_t kNone = ~std::size_t{0};
  ClassPartition out;
  out.class_of.assign(g.order(), kNone);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != kNone) continue;
    ConjugacyClass cls;
    cls.representative = x;
    cls.element_order = g.element_order(x);
    std::size_t idx = out.classes.size();
    out.class_of[x] = idx;
    cls.elements.push_back(x);
    for (std::size_t i = 0; i < cls.elements.size(); ++i) {
      for (Elem s : g.generator_ids()) {
        Elem y = g.conj(s, cls.elements[i]);
        if (out.class_of[y] == kNone) {
          out.class_of[y] = idx;
          cls.elements.push_back(y);
        }
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    cls.size = cls.elements.size();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> p_regular_classes(const ClassPartition& classes, std::uint64_t p) {
  require_prime(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.classes.size(); ++i)
    if (classes.classes[i].element_order % p != 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> p_regular_classes(const Group& g, std::uint64_t p) {
  require_prime(p);
  return p_regular_classes(conjugacy_classes(g), p);
}

// ---------------------------------------------------------------- quotients

Quotient quotient(const GroupPtr& gp, const Subgroup& n) {
  const Group& g = *gp;
  if (!g.is_normal(n)) throw NotNormal("subgroup is not normal");
  std::vector<Elem> reps = g.left_coset_representatives(n);
  std::vector<Point> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (Elem x : n.elements()) coset_of[g.mul(reps[c], x)] = static_cast<Point>(c);

  auto action = [&](Elem x) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = coset_of[g.mul(x, reps[c])];
    return Perm(std::move(images));
  };
  std::vector<Perm> gens;
  for (Elem s : g.generator_ids()) gens.push_back(action(s));
  GroupPtr q = close_group(gens, std::max<std::size_t>(reps.size(), 1));
  std::vector<Elem> table(g.order());
  for (Elem x = 0; x < g.order(); ++x) table[x] = q->index_of(action(x));
  return Quotient{q, GroupHom(gp, q, std::move(table))};
}

SubgroupGroup subgroup_as_group(const GroupPtr& gp, const Subgroup& h) {
  const Group& g = *gp;
  std::vector<Perm> gens;
  for (Elem x : h.generators()) gens.push_back(g.element(x));
  if (gens.empty()) gens.push_back(Perm(g.degree()));
  GroupPtr sub = close_group(gens, h.order());
  std::vector<Elem> table(sub->order());
  for (Elem x = 0; x < sub->order(); ++x) table[x] = g.index_of(sub->element(x));
  return SubgroupGroup{sub, GroupHom(sub, gp, std::move(table))};
}

// ---------------------------------------------------------------- structure

Subgroup o_q(const Group& g, const Subgroup& h, std::uint64_t q) {
  require_prime(q);
  std::vector<Elem> gens;
  for (Elem x : h.elements())
    if (g.element_order(x) % q != 0 && x != Group::identity()) gens.push_back(x);
  return g.closure(gens);
}

Subgroup o_q(const Group& g, std::uint64_t q) { return o_q(g, g.whole(), q); }

bool is_soluble(const Group& g, const Subgroup& h) {
  Subgroup current = h;
  while (!current.is_trivial()) {
    Subgroup next = g.derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

StructuralFlags structural_predicates(const Group& g, const Subgroup& h, std::uint64_t p) {
  require_prime(p);
  StructuralFlags f;
  f.order = h.order();
  f.soluble = is_soluble(g, h);
  f.p_group = is_power_of(h.order(), p);
  f.cyclic = g.is_cyclic(h);
  f.cyclic_p_prime = f.cyclic && h.order() % p != 0;
  for (std::uint64_t q : prime_divisors(h.order())) {
    Subgroup oq = o_q(g, h, q);
    bool qe = g.is_cyclic(oq);
    f.quasi_elementary[q] = qe;
    if (qe) f.cyclic_part_order[q] = oq.order();
  }
  return f;
}

StructuralFlags structural_predicates(const Group& g, std::uint64_t p) {
  return structural_predicates(g, g.whole(), p);
}

bool is_primordial_subgroup(const Group& g, const Subgroup& h, std::uint64_t p) {
  require_prime(p);
  // q not dividing |H| gives O^q(H) = H.
  if (g.is_cyclic(h) && h.order() % p != 0) return true;
  for (std::uint64_t q : prime_divisors(h.order())) {
    Subgroup oq = o_q(g, h, q);
    if (g.is_cyclic(oq) && oq.order() % p != 0) return true;
  }
  return false;
}

}  // namespace brauer
