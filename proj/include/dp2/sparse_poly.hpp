#pragma once

// Sparse (Laurent) polynomials in a fixed number of named symbols over an
// exact coefficient ring. Exponents may be negative; zero coefficients are
// never stored, so structural equality is ring equality.

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dp2::poly {

template <class Coeff, std::size_t N>
class SparsePoly {
 public:
  using Exponents = std::array<int, N>;
  using Terms = std::map<Exponents, Coeff>;

  SparsePoly() = default;
  SparsePoly(const Coeff& c) { add_term(Exponents{}, c); }  // NOLINT: constants embed
  SparsePoly(long c) : SparsePoly(Coeff(c)) {}               // NOLINT

  static SparsePoly monomial(const Exponents& e, const Coeff& c = Coeff(1)) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }
  static SparsePoly symbol(std::size_t k, int power = 1) {
    Exponents e{};
    e[k] = power;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Exponents& e, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return SparsePoly() - a; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly r(Coeff(1)), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return r;
  }

  /// Inverse of a single term; only monomials are units in the Laurent ring.
  SparsePoly monomial_inverse() const {
    if (!is_monomial()) throw std::domain_error("SparsePoly: inverse of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents neg;
    for (std::size_t k = 0; k < N; ++k) neg[k] = -e[k];
    return monomial(neg, c.inverse());
  }

  /// Substitute symbol k -> unit * symbol k.
  SparsePoly scale_symbol(std::size_t k, const Coeff& unit) const {
    const Coeff unit_inv = unit.inverse();
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      Coeff factor(1);
      const Coeff& base = e[k] >= 0 ? unit : unit_inv;
      for (int j = 0; j < (e[k] >= 0 ? e[k] : -e[k]); ++j) factor *= base;
      r.add_term(e, c * factor);
    }
    return r;
  }

  /// Maximal power of symbol k over all terms.
  int degree_in(std::size_t k) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[k] > d) d = e[k];
      first = false;
    }
    return d;
  }

  std::string to_string(const std::array<const char*, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string();
      bool has_symbols = false;
      std::ostringstream mono;
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        if (has_symbols) mono << '*';
        mono << names[k];
        if (e[k] != 1) mono << '^' << e[k];
        has_symbols = true;
      }
      bool negative = !cs.empty() && cs[0] == '-';
      std::string mag = negative ? cs.substr(1) : cs;
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      if (!has_symbols)
        os << mag;
      else if (mag == "1")
        os << mono.str();
      else
        os << mag << '*' << mono.str();
      first = false;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

}  // namespace dp2::poly
