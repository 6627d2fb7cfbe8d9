#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauer/errors.hpp"
#include "brauer/lattice.hpp"

using namespace brauer;

namespace {

Integer det(const IntMatrix& m, const std::vector<std::size_t>& rows,
            const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  Integer sum = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    const Integer term = m(rows[0], cols[j]) * det(m, sub_rows, sub_cols);
    sum += (j % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors of Z^cols / rowspace(m) from gcds of k x k minors.
std::vector<Integer> determinantal_invariants(const IntMatrix& m) {
  std::vector<Integer> d{1};
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        const Integer v = det(m, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  for (std::size_t k = d.size() - 1; k < m.cols(); ++k) out.push_back(0);
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("hermite normal form") {
  CHECK(hnf(IntMatrix{{2, 4}, {1, 3}}) == IntMatrix{{1, 1}, {0, 2}});
  CHECK(hnf(IntMatrix{{-3}}) == IntMatrix{{3}});
  CHECK(hnf(IntMatrix{{2, 0}, {4, 0}}) == IntMatrix{{2, 0}});
  CHECK(hnf(IntMatrix{{0, 0}}).rows() == 0);
  CHECK(hnf(IntMatrix{{1, 5, 7}, {0, 3, 4}, {0, 0, 2}}) == IntMatrix{{1, 2, 1}, {0, 3, 0}, {0, 0, 2}});
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("row echelon transform reproduces the form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, 9);
    const RowEchelon e = row_echelon(m);
    for (std::size_t i = 0; i < e.rank; ++i) {
      IntVector row(m.cols());
      for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] += e.transform(i, k) * m(k, j);
      CHECK(row == e.form.row_vector(i));
    }
    CHECK(hnf(e.form) == e.form);
  }
}

TEST_CASE("smith normal form") {
  CHECK(snf_invariants(IntMatrix{{2, 0}, {0, 3}}).factors() == std::vector<Integer>{6});
  CHECK(snf_invariants(IntMatrix{{2, 0}, {0, 4}}).factors() == std::vector<Integer>{2, 4});
  CHECK(snf_invariants(2, IntMatrix(0, 2)).factors() == std::vector<Integer>{0, 0});
  CHECK(snf_invariants(IntMatrix{{2, 0, 0}}).to_string() == "Z/2 x Z x Z");
  CHECK(AbelianInvariants().to_string() == "trivial");
  CHECK(AbelianInvariants(std::vector<Integer>{0}).to_string() == "Z");
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix m = random_matrix(rng, r, c, 6);
    std::vector<Integer> expected;
    for (const Integer& f : determinantal_invariants(m))
      if (f != 1) expected.push_back(abs(f));
    CAPTURE(trial);
    CHECK(snf_invariants(m) == AbelianInvariants(expected));
  }
}

TEST_CASE("integer kernel") {
  const IntegerLattice k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.rank() == 2);
  CHECK(is_saturated(k));
  CHECK(k.contains(make_vector({1, -1, 0})));
  CHECK_FALSE(k.contains(make_vector({1, 0, 0})));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + trial % 3, 2 + trial % 5, 5);
    const IntegerLattice ker = integer_kernel(m);
    CHECK(ker.rank() == m.cols() - rank(m));
    for (const auto& v : ker.basis_vectors()) CHECK(is_zero(m.apply(v)));
    CHECK(is_saturated(ker));
  }
}

TEST_CASE("saturation and quotients") {
  const IntegerLattice l = IntegerLattice::spanned_by(2, {make_vector({2, 4})});
  CHECK_FALSE(is_saturated(l));
  CHECK(saturation(l) == IntegerLattice::spanned_by(2, {make_vector({1, 2})}));
  CHECK(quotient_invariants(saturation(l), l).factors() == std::vector<Integer>{2});
  CHECK(quotient_invariants(IntegerLattice::full(2), l).to_string() == "Z/2 x Z");
  CHECK_THROWS_AS(quotient_invariants(l, IntegerLattice::full(2)), NotASublattice);
}

TEST_CASE("lattice membership, sums and reduction") {
  const IntegerLattice a = IntegerLattice::spanned_by(2, {make_vector({4, 0})});
  const IntegerLattice b = IntegerLattice::spanned_by(2, {make_vector({6, 0}), make_vector({0, 1})});
  const IntegerLattice s = a + b;
  CHECK(s == IntegerLattice::spanned_by(2, {make_vector({2, 0}), make_vector({0, 1})}));
  CHECK(s.contains(a));
  CHECK(a.reduce(make_vector({9, 3})) == make_vector({1, 3}));
  CHECK(membership(a, make_vector({8, 0})).value() == make_vector({2}));
  CHECK_THROWS_AS(a.coordinates(make_vector({1})), DimensionMismatch);
}

TEST_CASE("linear solving") {
  const IntMatrix a{{2, 0}, {0, 3}};
  CHECK(solve_integer(a, make_vector({4, 9})).value() == make_vector({2, 3}));
  CHECK_FALSE(solve_integer(a, make_vector({1, 0})).has_value());
  const auto q = solve_rational(a, make_vector({1, 1})).value();
  CHECK(q[0] == Rational(1, 2));
  CHECK(q[1] == Rational(1, 3));
  CHECK_FALSE(solve_rational(IntMatrix{{1}, {1}}, make_vector({1, 2})).has_value());
}
