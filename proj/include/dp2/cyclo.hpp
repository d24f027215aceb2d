#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace dp2::poly {

/// Element of Q(zeta_8), stored as c0 + c1 s + c2 s^2 + c3 s^3 with s^4 = -1.
class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(long v) { c_[0] = v; }  // NOLINT: integers embed implicitly
  explicit CycloElem(const mpq_class& v) { c_[0] = v; }
  CycloElem(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2,
            const mpq_class& c3)
      : c_{c0, c1, c2, c3} {}

  /// zeta_8^k for any integer k.
  static CycloElem zeta(int k);
  static CycloElem i() { return zeta(2); }
  /// zeta + zeta^-1 = zeta - zeta^3
  static CycloElem sqrt2();

  const mpq_class& coeff(int k) const { return c_[k]; }
  bool is_zero() const;
  CycloElem inverse() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator-(const CycloElem& a);
  friend bool operator==(const CycloElem& a, const CycloElem& b);

  /// Renders in the basis 1, zeta, i, zeta^3.
  std::string to_string() const;

 private:
  std::array<mpq_class, 4> c_{};
};

}  // namespace dp2::poly
