#pragma once

// Exact integer and rational linear algebra over arbitrary-precision
// integers: normal forms, kernels, saturation, intersections and indices
// of sublattices of Z^n.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp2::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix with zero rows is allowed; it is how an empty lattice basis is
/// represented.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix diagonal(std::span<const long> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix power(const IntMatrix& m, unsigned exponent);
/// Vertical concatenation; both blocks must have the same column count.
IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
Integer dot(const IntVector& a, const IntVector& b);
/// x^T G y
Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y);
IntVector scaled(const IntVector& v, const Integer& s);
IntVector add(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);
IntVector make_vector(std::initializer_list<long> entries);

struct HermiteForm {
  IntMatrix h;  ///< row Hermite normal form
  IntMatrix u;  ///< unimodular transform with h == u * m
};

/// Row Hermite normal form. Pivots are positive, entries above a pivot lie
/// in [0, pivot), zero rows are moved to the bottom.
HermiteForm hnf(const IntMatrix& m);

/// Smith invariants d_1 | d_2 | ... of length min(rows, cols); trailing
/// entries are zero when the matrix is rank deficient.
std::vector<Integer> snf(const IntMatrix& m);

/// Solve A x = b over Q. Returns nullopt when the system is inconsistent;
/// if the solution is not unique, any particular solution is returned.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a,
                                                    const IntVector& b);

/// Integral solution of G x = b for square G invertible over Q.
/// Throws SingularMatrixError when G is singular; nullopt means the unique
/// rational solution is not integral.
std::optional<IntVector> solve_integral(const IntMatrix& g, const IntVector& b);

/// Sublattice of Z^n, stored by an HNF basis (rows). Two lattices compare
/// equal exactly when they are the same subgroup.
class IntLattice {
 public:
  explicit IntLattice(std::size_t ambient_rank);
  /// Lattice generated by the rows of `generators` (they may be dependent).
  static IntLattice span(const IntMatrix& generators);
  static IntLattice span(const std::vector<IntVector>& generators, std::size_t ambient_rank);
  static IntLattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const IntVector& v) const;
  bool contains(const IntLattice& other) const;
  bool is_saturated() const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) = default;

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

/// {x in Z^cols : M x = 0}; always saturated.
IntLattice kernel_basis(const IntMatrix& m);
/// (L tensor Q) intersected with Z^n.
IntLattice saturate(const IntLattice& l);
/// L1 cap L2, through the integer kernel of the concatenated bases.
IntLattice intersect(const IntLattice& l1, const IntLattice& l2);
/// [super : sub] when sub is a finite-index sublattice of super.
std::optional<Integer> index_in(const IntLattice& sub, const IntLattice& super);

}  // namespace dp2::exactalg
