#include "brauer/burnside.hpp"

#include <sstream>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

// True when x^-1 k x lies in h for every generator k of `sub`.
bool conjugate_into(const Group& g, Elem x, const Subgroup& sub, const Subgroup& h) {
  const Elem xi = g.inv(x);
  for (Elem k : sub.generators())
    if (!h.contains(g.mul(g.mul(xi, k), x))) return false;
  return true;
}

void require_ring(const BurnsideElement& x, const Group* expected, const char* what) {
  if (!x.ring() || &x.ring()->group() != expected) throw GroupMismatch(what);
}

}  // namespace

// ---------------------------------------------------------------- ring

RingPtr BurnsideRing::create(GroupPtr g, std::size_t work_limit) {
  std::shared_ptr<BurnsideRing> r(new BurnsideRing());
  r->group_ = std::move(g);
  const Group& grp = *r->group_;
  r->table_ = subgroup_classes(grp, work_limit);
  r->classes_ = conjugacy_classes(grp);

  const std::size_t n = r->table_.size();
  r->marks_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& h = r->table_[i].representative;
    const std::vector<Elem> reps = grp.left_coset_representatives(h);
    for (std::size_t j = 0; j <= i; ++j) {
      const Subgroup& k = r->table_[j].representative;
      if (h.order() % k.order() != 0) continue;
      std::size_t count = 0;
      for (Elem x : reps)
        if (conjugate_into(grp, x, k, h)) ++count;
      r->marks_(i, j) = static_cast<unsigned long>(count);
    }
  }

  r->cyclic_class_.resize(grp.order());
  for (Elem x = 0; x < grp.order(); ++x)
    r->cyclic_class_[x] = r->table_.class_of(grp.closure(std::vector<Elem>{x}));
  return r;
}

std::size_t BurnsideRing::fixed_points(std::size_t i, Elem g) const {
  const Subgroup& h = table_[i].representative;
  std::size_t count = 0;
  for (Elem x : group_->left_coset_representatives(h))
    if (h.contains(group_->mul(group_->mul(group_->inv(x), g), x))) ++count;
  return count;
}

const IntVector& BurnsideRing::basis_product(std::size_t i, std::size_t j) const {
  std::call_once(products_once_, [this] {
    const std::size_t n = rank();
    products_.assign(n * n, IntVector());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const Subgroup& h = table_[a].representative;
        const Subgroup& k = table_[b].representative;
        IntVector v(n);
        for (Elem x : double_coset_representatives(*group_, h, k))
          v[class_of(group_->intersection(h, group_->conjugate(k, x)))] += 1;
        products_[a * n + b] = v;
        products_[b * n + a] = std::move(v);
      }
    }
  });
  return products_[i * rank() + j];
}

std::vector<Elem> double_coset_representatives(const Group& g, const Subgroup& h,
                                               const Subgroup& k) {
  return double_coset_representatives(g, h, k, g.whole());
}

std::vector<Elem> double_coset_representatives(const Group& g, const Subgroup& h,
                                               const Subgroup& k, const Subgroup& within) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Elem> reps;
  for (Elem x : within.elements()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem a : h.elements()) {
      const Elem ax = g.mul(a, x);
      if (covered[ax]) continue;
      for (Elem b : k.elements()) covered[g.mul(ax, b)] = true;
    }
  }
  return reps;
}

// ---------------------------------------------------------------- elements

BurnsideElement::BurnsideElement(RingPtr ring, IntVector coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw GroupMismatch("element without a ring");
  if (coeffs_.size() != ring_->rank())
    throw DimensionMismatch("coefficient vector does not match the number of subgroup classes");
}

BurnsideElement BurnsideElement::zero(RingPtr ring) {
  const std::size_t n = ring->rank();
  return BurnsideElement(std::move(ring), IntVector(n));
}

BurnsideElement BurnsideElement::basis(RingPtr ring, std::size_t i) {
  IntVector v(ring->rank());
  v.at(i) = 1;
  return BurnsideElement(std::move(ring), std::move(v));
}

BurnsideElement BurnsideElement::one(RingPtr ring) {
  const std::size_t top = ring->top();
  return basis(std::move(ring), top);
}

IntVector BurnsideElement::mark_vector() const { return ring_->marks().apply_left(coeffs_); }

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  if (o.ring_ != ring_) throw GroupMismatch("adding elements of different Burnside rings");
  IntVector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coeffs_[i];
  return BurnsideElement(ring_, std::move(v));
}

BurnsideElement BurnsideElement::operator-() const {
  IntVector v = coeffs_;
  for (auto& c : v) c = -c;
  return BurnsideElement(ring_, std::move(v));
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const { return *this + (-o); }

BurnsideElement operator*(const Integer& k, const BurnsideElement& x) {
  IntVector v = x.coeffs_;
  for (auto& c : v) c *= k;
  return BurnsideElement(x.ring_, std::move(v));
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string BurnsideElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    if (a != 1) os << a;
    os << '[' << ring_->label(i) << ']';
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const BurnsideElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- operations

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
  if (!x.ring() || x.ring() != y.ring())
    throw GroupMismatch("multiplying elements of different Burnside rings");
  const BurnsideRing& r = *x.ring();
  IntVector out(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r.rank(); ++j) {
      if (y[j] == 0) continue;
      const Integer c = x[i] * y[j];
      const IntVector& prod = r.basis_product(i, j);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (prod[k] != 0) out[k] += c * prod[k];
    }
  }
  return BurnsideElement(x.ring(), std::move(out));
}

BurnsideElement induce(const GroupHom& emb, const RingPtr& target, const BurnsideElement& x) {
  require_ring(x, emb.source().get(), "element does not live over the source of the embedding");
  if (&target->group() != emb.target().get())
    throw GroupMismatch("target ring does not match the embedding");
  if (!emb.is_injective()) throw NotASubgroup("induction needs an injective map");
  const BurnsideRing& src = *x.ring();
  IntVector out(target->rank());
  for (std::size_t i = 0; i < src.rank(); ++i) {
    if (x[i] == 0) continue;
    out[target->class_of(emb.image(src.subgroups()[i].representative))] += x[i];
  }
  return BurnsideElement(target, std::move(out));
}

BurnsideElement restrict_to(const GroupHom& emb, const RingPtr& source, const BurnsideElement& x) {
  require_ring(x, emb.target().get(), "element does not live over the target of the embedding");
  if (&source->group() != emb.source().get())
    throw GroupMismatch("source ring does not match the embedding");
  if (!emb.is_injective()) throw NotASubgroup("restriction needs an injective map");
  const BurnsideRing& big = *x.ring();
  const Group& g = big.group();
  const Subgroup k = emb.image(source->group().whole());
  IntVector out(source->rank());
  for (std::size_t i = 0; i < big.rank(); ++i) {
    if (x[i] == 0) continue;
    const Subgroup& h = big.subgroups()[i].representative;
    for (Elem y : double_coset_representatives(g, k, h)) {
      const Subgroup meet = g.intersection(k, g.conjugate(h, y));
      out[source->class_of(emb.preimage(meet))] += x[i];
    }
  }
  return BurnsideElement(source, std::move(out));
}

BurnsideElement inflate(const GroupHom& proj, const RingPtr& source, const BurnsideElement& x) {
  require_ring(x, proj.target().get(), "element does not live over the quotient");
  if (&source->group() != proj.source().get())
    throw GroupMismatch("source ring does not match the projection");
  if (!proj.is_surjective()) throw InvalidProjection("inflation needs a surjective map");
  const BurnsideRing& q = *x.ring();
  IntVector out(source->rank());
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (x[i] == 0) continue;
    out[source->class_of(proj.preimage(q.subgroups()[i].representative))] += x[i];
  }
  return BurnsideElement(source, std::move(out));
}

}  // namespace brauer
