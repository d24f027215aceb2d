#include "dp2/cyclo.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dp2::poly {

CycloElem CycloElem::zeta(int k) {
  k %= 8;
  if (k < 0) k += 8;
  CycloElem r;
  r.c_[k % 4] = k < 4 ? 1 : -1;
  return r;
}

CycloElem CycloElem::sqrt2() { return zeta(1) - zeta(3); }

bool CycloElem::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  std::array<mpq_class, 4> r{};
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      mpq_class p = c_[a] * o.c_[b];
      if (a + b < 4)
        r[a + b] += p;
      else
        r[a + b - 4] -= p;
    }
  }
  c_ = std::move(r);
  return *this;
}

CycloElem operator-(const CycloElem& a) {
  CycloElem r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  for (int k = 0; k < 4; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
  // Solve (multiplication-by-this) * x = e_0 over Q.
  std::vector<std::array<mpq_class, 5>> m(4);
  for (int col = 0; col < 4; ++col) {
    CycloElem prod = *this * zeta(col);
    for (int row = 0; row < 4; ++row) m[row][col] = prod.c_[row];
  }
  m[0][4] = 1;
  for (int c = 0; c < 4; ++c) {
    int sel = c;
    while (m[sel][c] == 0) ++sel;
    std::swap(m[sel], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int j = 0; j < 5; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return CycloElem(m[0][4], m[1][4], m[2][4], m[3][4]);
}

std::string CycloElem::to_string() const {
  static const char* names[4] = {"", "zeta", "i", "zeta^3"};
  std::ostringstream os;
  int nonzero = 0;
  for (int k = 0; k < 4; ++k)
    if (c_[k] != 0) ++nonzero;
  if (nonzero == 0) return "0";
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    mpq_class v = c_[k];
    if (v < 0) {
      os << (first ? "-" : " - ");
      v = -v;
    } else if (!first) {
      os << " + ";
    }
    if (k == 0) {
      os << v;
    } else {
      if (v != 1) os << v << '*';
      os << names[k];
    }
    first = false;
  }
  return nonzero > 1 ? "(" + os.str() + ")" : os.str();
}

}  // namespace dp2::poly
