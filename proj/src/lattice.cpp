#include "brauer/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "brauer/errors.hpp"

namespace brauer {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return IntVector(s.begin(), s.end());
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (values.size() != cols_) throw DimensionMismatch("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntVector IntMatrix::apply_left(std::span<const Integer> v) const {
  if (v.size() != rows_) throw DimensionMismatch("vector length does not match row count");
  IntVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * (*this)(r, c);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------- reduction

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row_i -= q * row_r, on columns [from, cols)
void sub_row(IntMatrix& m, std::size_t i, std::size_t r, const Integer& q, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c)
    if (m(r, c) != 0) m(i, c) -= q * m(r, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

RowEchelon row_echelon(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool have_pivot = false;
    while (true) {
      // Smallest nonzero entry as pivot keeps coefficient growth down.
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == a.rows()) break;
      have_pivot = true;
      swap_rows(a, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        sub_row(a, i, r, q, c);
        sub_row(u, i, r, q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q == 0) continue;
      sub_row(a, i, r, q, c);
      sub_row(u, i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out;
  out.rank = r;
  out.pivot_cols = std::move(pivots);
  out.form = IntMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out.form(i, c) = a(i, c);
  out.transform = std::move(u);
  return out;
}

IntMatrix hnf(const IntMatrix& m) { return row_echelon(m).form; }

std::size_t rank(const IntMatrix& m) { return row_echelon(m).rank; }

// ---------------------------------------------------------------- invariants

AbelianInvariants::AbelianInvariants(std::vector<Integer> factors) {
  std::vector<Integer> finite;
  std::size_t zeros = 0;
  for (auto& f : factors) {
    Integer a = abs(f);
    if (a == 0) ++zeros;
    else if (a != 1) finite.push_back(a);
  }
  std::sort(finite.begin(), finite.end());
  factors_ = std::move(finite);
  for (std::size_t i = 0; i < zeros; ++i) factors_.emplace_back(0);
}

std::size_t AbelianInvariants::free_rank() const {
  return std::count_if(factors_.begin(), factors_.end(), [](const Integer& f) { return f == 0; });
}

Integer AbelianInvariants::torsion_order() const {
  Integer n = 1;
  for (const auto& f : factors_)
    if (f != 0) n *= f;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (factors_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    if (factors_[i] == 0) os << "Z";
    else os << "Z/" << factors_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a) {
  return os << a.to_string();
}

AbelianInvariants snf_invariants(std::size_t ambient_dim, const IntMatrix& m) {
  if (m.rows() > 0 && m.cols() != ambient_dim)
    throw DimensionMismatch("matrix width does not match ambient dimension");
  if (m.rows() == 0) return AbelianInvariants(std::vector<Integer>(ambient_dim, 0));

  RowEchelon e = row_echelon(m);
  const std::size_t r = e.rank;
  std::vector<Integer> factors(ambient_dim - r, 0);

  // Column reduction of the rank-r HNF leaves an r x r nonsingular block.
  IntMatrix d = hnf(e.form.transposed());  // r x r
  // Alternate row and column Hermite reductions until diagonal.
  auto is_diagonal = [](const IntMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (i != j && x(i, j) != 0) return false;
    return true;
  };
  while (!is_diagonal(d)) d = hnf(d.transposed());

  std::vector<Integer> diag;
  for (std::size_t i = 0; i < r; ++i) diag.push_back(abs(d(i, i)));
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  diag.insert(diag.end(), factors.begin(), factors.end());
  return AbelianInvariants(std::move(diag));
}

AbelianInvariants snf_invariants(const IntMatrix& m) { return snf_invariants(m.cols(), m); }

// ---------------------------------------------------------------- lattices

IntegerLattice::IntegerLattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

IntegerLattice::IntegerLattice(std::size_t ambient_dim, const IntMatrix& generators)
    : dim_(ambient_dim) {
  if (generators.rows() == 0) {
    basis_ = IntMatrix(0, ambient_dim);
    return;
  }
  if (generators.cols() != ambient_dim)
    throw DimensionMismatch("generator width does not match ambient dimension");
  RowEchelon e = row_echelon(generators);
  basis_ = std::move(e.form);
  pivots_ = std::move(e.pivot_cols);
}

IntegerLattice IntegerLattice::spanned_by(std::size_t ambient_dim,
                                          const std::vector<IntVector>& gens) {
  return IntegerLattice(ambient_dim, IntMatrix::from_rows(ambient_dim, gens));
}

IntegerLattice IntegerLattice::full(std::size_t ambient_dim) {
  return IntegerLattice(ambient_dim, IntMatrix::identity(ambient_dim));
}

std::optional<IntVector> IntegerLattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length does not match lattice dimension");
  IntVector w(v.begin(), v.end());
  IntVector coords(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t c = pivots_[i];
    if (w[c] == 0) continue;
    if (!mpz_divisible_p(w[c].get_mpz_t(), basis_(i, c).get_mpz_t())) return std::nullopt;
    Integer q = w[c] / basis_(i, c);
    coords[i] = q;
    for (std::size_t k = c; k < dim_; ++k)
      if (basis_(i, k) != 0) w[k] -= q * basis_(i, k);
  }
  if (!is_zero(w)) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(const IntegerLattice& sub) const {
  if (sub.dim_ != dim_) throw DimensionMismatch("lattices live in different dimensions");
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis_.row(i))) return false;
  return true;
}

IntVector IntegerLattice::reduce(std::span<const Integer> v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length does not match lattice dimension");
  IntVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t c = pivots_[i];
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), w[c].get_mpz_t(), basis_(i, c).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t k = c; k < dim_; ++k)
      if (basis_(i, k) != 0) w[k] -= q * basis_(i, k);
  }
  return w;
}

IntegerLattice IntegerLattice::operator+(const IntegerLattice& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("lattices live in different dimensions");
  IntMatrix both = basis_;
  for (std::size_t i = 0; i < other.rank(); ++i) both.append_row(other.basis_.row(i));
  return IntegerLattice(dim_, both);
}

IntegerLattice integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntegerLattice::full(n);
  RowEchelon e = row_echelon(m.transposed());
  IntMatrix k(0, n);
  for (std::size_t i = e.rank; i < n; ++i) k.append_row(e.transform.row(i));
  return IntegerLattice(n, k);
}

std::optional<IntVector> membership(const IntegerLattice& lattice, std::span<const Integer> v) {
  return lattice.coordinates(v);
}

IntegerLattice saturation(const IntegerLattice& lattice) {
  if (lattice.rank() == 0) return lattice;
  IntegerLattice complement = integer_kernel(lattice.basis());
  return integer_kernel(complement.basis().rows() ? complement.basis()
                                                  : IntMatrix(0, lattice.ambient_dim()));
}

bool is_saturated(const IntegerLattice& lattice) { return saturation(lattice) == lattice; }

AbelianInvariants quotient_invariants(const IntegerLattice& big, const IntegerLattice& sub) {
  if (big.ambient_dim() != sub.ambient_dim())
    throw DimensionMismatch("lattices live in different dimensions");
  IntMatrix rel(0, big.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto coords = big.coordinates(sub.basis().row(i));
    if (!coords) throw NotASublattice("basis vector of the sublattice is not in the lattice");
    rel.append_row(*coords);
  }
  return snf_invariants(big.rank(), rel);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t n = a.cols();
  if (n == 0) {
    if (is_zero(b)) return IntVector{};
    return std::nullopt;
  }
  // U A^T = [H; 0], so b^T = c H gives x^T = c U_top.
  RowEchelon e = row_echelon(a.transposed());
  IntegerLattice image(a.rows(), e.form);
  auto c = image.coordinates(b);
  if (!c) return std::nullopt;
  IntVector x(n);
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += (*c)[i] * e.transform(i, j);
  return x;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    Rational inv = 1 / aug[r][c];
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug[i][n];
  return x;
}

}  // namespace brauer
