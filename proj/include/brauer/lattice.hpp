#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace brauer {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
bool is_zero(std::span<const Integer> v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;
  std::vector<IntVector> row_vectors() const;

  void append_row(std::span<const Integer> values);
  IntMatrix transposed() const;

  /// M * v
  IntVector apply(std::span<const Integer> v) const;
  /// v^T * M
  IntVector apply_left(std::span<const Integer> v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Result of row reduction with the unimodular transform: transform * input
/// has the Hermite form in its first `rank` rows and zeros below.
struct RowEchelon {
  IntMatrix form;       // canonical HNF, rank rows
  IntMatrix transform;  // square, unimodular, rows(input) x rows(input)
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_echelon(const IntMatrix& m);

/// Canonical row Hermite normal form with zero rows dropped: pivots positive,
/// entries above a pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Invariant factors of a finite abelian group; 0 stands for a free factor Z.
/// Stored as d_1 | d_2 | ... with zeros last and no factor equal to 1.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  explicit AbelianInvariants(std::vector<Integer> factors);

  const std::vector<Integer>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  std::size_t free_rank() const;
  /// Product of the finite factors.
  Integer torsion_order() const;
  bool is_cyclic() const { return factors_.size() <= 1; }
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a);

/// Invariant factors of Z^cols / rowspace(m).
AbelianInvariants snf_invariants(const IntMatrix& m);
/// Same, for a matrix given as rows over an explicit ambient dimension
/// (so an empty matrix still has a meaningful cokernel).
AbelianInvariants snf_invariants(std::size_t ambient_dim, const IntMatrix& m);

/// A sublattice of Z^n, stored by its canonical Hermite basis so that equal
/// lattices compare equal.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim = 0);
  /// Lattice spanned by the rows of `generators`.
  IntegerLattice(std::size_t ambient_dim, const IntMatrix& generators);
  static IntegerLattice spanned_by(std::size_t ambient_dim, const std::vector<IntVector>& gens);
  static IntegerLattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const { return basis_.row_vectors(); }

  /// Coordinates of v in the basis, or nullopt when v is not in the lattice.
  /// Throws DimensionMismatch.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
  bool contains(const IntegerLattice& sub) const;

  /// Reduces v modulo the lattice: each pivot coordinate moves into [0, pivot).
  IntVector reduce(std::span<const Integer> v) const;

  IntegerLattice operator+(const IntegerLattice& other) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// All integer v with M v = 0.
IntegerLattice integer_kernel(const IntMatrix& m);

/// Membership with coordinates; throws DimensionMismatch.
std::optional<IntVector> membership(const IntegerLattice& lattice, std::span<const Integer> v);

/// (L tensor Q) intersected with Z^n.
IntegerLattice saturation(const IntegerLattice& lattice);
bool is_saturated(const IntegerLattice& lattice);

/// Invariant factors of big / sub. Throws NotASublattice.
AbelianInvariants quotient_invariants(const IntegerLattice& big, const IntegerLattice& sub);

/// Some integer x with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b);

/// The unique rational x with A x = b when A has full column rank and the
/// system is consistent.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Integer> b);

}  // namespace brauer
