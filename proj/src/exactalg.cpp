#include "dp2/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dp2::exactalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntMatrix IntMatrix::diagonal(std::span<const long> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& v : r.data_) v *= s;
  return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  if (!m.square()) throw std::invalid_argument("power: matrix not square");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
  IntMatrix r(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) r(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) r(top.rows() + i, j) = bottom(i, j);
  return r;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < ncols && prow < a.size(); ++c) {
    std::size_t sel = prow;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[prow], a[sel]);
    Rational inv = 1 / a[prow][c];
    for (auto& v : a[prow]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == prow || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[prow][j];
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

// Row operations on a matrix and its accumulated transform.
void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= f * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= f * m(r, src);
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = to_rational(m);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[sel], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

std::size_t rank(const IntMatrix& m) {
  RationalMatrix a = to_rational(m);
  return rref(a, m.cols()).size();
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y) {
  return dot(x, gram * y);
}

IntVector scaled(const IntVector& v, const Integer& s) {
  IntVector r = v;
  for (auto& e : r) e *= s;
  return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  for (long e : entries) v.emplace_back(e);
  return v;
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t prow = 0;
  for (std::size_t c = 0; c < h.cols() && prow < h.rows(); ++c) {
    // Euclid on column c among rows prow.. until a single nonzero remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = prow; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      swap_rows(h, prow, best);
      swap_rows(u, prow, best);
      bool done = true;
      for (std::size_t i = prow + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(prow, c).get_mpz_t());
        add_row_multiple(h, i, prow, q);
        add_row_multiple(u, i, prow, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(prow, c) == 0) continue;
    if (h(prow, c) < 0) {
      negate_row(h, prow);
      negate_row(u, prow);
    }
    for (std::size_t i = 0; i < prow; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(prow, c).get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(h, i, prow, q);
      add_row_multiple(u, i, prow, q);
    }
    ++prow;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Integer> snf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = a.rows(), pc = a.cols();
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j)
          if (a(i, j) != 0 && (pr == a.rows() || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == a.rows()) {
        divisors.resize(n, 0);
        return divisors;
      }
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col_multiple(a, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      std::size_t bad_row = a.rows();
      for (std::size_t i = t + 1; i < a.rows() && bad_row == a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == a.rows()) break;
      add_row_multiple(a, t, bad_row, Integer(-1));
    }
    divisors.push_back(abs(a(t, t)));
  }
  return divisors;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: shape mismatch");
  RationalMatrix aug = to_rational(a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug[i].push_back(Rational(b[i]));
  auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i][a.cols()] != 0) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][a.cols()];
  return x;
}

std::optional<IntVector> solve_integral(const IntMatrix& g, const IntVector& b) {
  if (!g.square()) throw std::invalid_argument("solve_integral: matrix not square");
  if (rank(g) != g.rows()) throw SingularMatrixError("solve_integral: matrix is singular");
  auto x = solve_rational(g, b);
  if (!x) return std::nullopt;
  IntVector out;
  out.reserve(x->size());
  for (auto& q : *x) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

IntLattice::IntLattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

IntLattice IntLattice::span(const IntMatrix& generators) {
  IntLattice l(generators.cols());
  HermiteForm f = hnf(generators);
  std::size_t r = 0;
  while (r < f.h.rows() && !is_zero(f.h.row(r))) ++r;
  l.basis_ = IntMatrix(r, generators.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) l.basis_(i, j) = f.h(i, j);
  return l;
}

IntLattice IntLattice::span(const std::vector<IntVector>& generators, std::size_t ambient_rank) {
  return span(IntMatrix::from_rows(generators, ambient_rank));
}

IntLattice IntLattice::full(std::size_t ambient_rank) {
  return span(IntMatrix::identity(ambient_rank));
}

bool IntLattice::contains(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("IntLattice::contains: rank mismatch");
  if (rank() == 0) return is_zero(v);
  auto c = solve_rational(basis_.transpose(), v);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](Rational q) {
    q.canonicalize();
    return q.get_den() == 1;
  });
}

bool IntLattice::contains(const IntLattice& other) const {
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

bool IntLattice::is_saturated() const { return saturate(*this) == *this; }

IntLattice kernel_basis(const IntMatrix& m) {
  // U * M^T = H; the rows of U opposite the zero rows of H span the kernel.
  HermiteForm f = hnf(m.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < f.h.rows(); ++i)
    if (is_zero(f.h.row(i))) kernel.push_back(f.u.row(i));
  return IntLattice::span(kernel, m.cols());
}

IntLattice saturate(const IntLattice& l) {
  IntLattice orthogonal = kernel_basis(l.basis());
  return kernel_basis(orthogonal.basis());
}

IntLattice intersect(const IntLattice& l1, const IntLattice& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw std::invalid_argument("intersect: ambient rank mismatch");
  const std::size_t n = l1.ambient_rank();
  const std::size_t k1 = l1.rank(), k2 = l2.rank();
  if (k1 == 0 || k2 == 0) return IntLattice(n);
  // columns: basis vectors of l1, then negated basis vectors of l2
  IntMatrix joined(n, k1 + k2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k1; ++i) joined(j, i) = l1.basis()(i, j);
    for (std::size_t i = 0; i < k2; ++i) joined(j, k1 + i) = -l2.basis()(i, j);
  }
  IntLattice coeffs = kernel_basis(joined);
  std::vector<IntVector> image;
  for (std::size_t r = 0; r < coeffs.rank(); ++r) {
    IntVector v(n);
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += coeffs.basis()(r, i) * l1.basis()(i, j);
    image.push_back(std::move(v));
  }
  return IntLattice::span(image, n);
}

std::optional<Integer> index_in(const IntLattice& sub, const IntLattice& super) {
  if (sub.ambient_rank() != super.ambient_rank())
    throw std::invalid_argument("index_in: ambient rank mismatch");
  if (sub.rank() != super.rank()) return std::nullopt;
  if (sub.rank() == 0) return Integer(1);
  const std::size_t k = sub.rank();
  IntMatrix coords(k, k);
  IntMatrix super_t = super.basis().transpose();
  for (std::size_t r = 0; r < k; ++r) {
    auto c = solve_rational(super_t, sub.basis().row(r));
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
      Rational q = (*c)[j];
      q.canonicalize();
      if (q.get_den() != 1) return std::nullopt;
      coords(r, j) = q.get_num();
    }
  }
  Integer product = 1;
  for (const auto& d : snf(coords)) product *= d;
  return product;
}

}  // namespace dp2::exactalg
