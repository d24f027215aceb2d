#include "dp2/brauer_residue.hpp"

#include <sstream>

namespace dp2::brauer {

namespace {

using poly::Var;

constexpr std::array<Var, 3> kXYZ{Var::x, Var::y, Var::z};

void require_form(const FpPoly& f, const char* what) {
  if (f.is_zero()) throw ResidueUndefined(std::string(what) + " is zero");
  if (!f.is_homogeneous(kXYZ)) throw std::invalid_argument(std::string(what) + " is not homogeneous in x, y, z");
  for (Var v : {Var::u, Var::v, Var::t, Var::w})
    if (f.involves(v)) throw std::invalid_argument(std::string(what) + " involves u, v, t or w");
}

FpPoly strip(FpPoly f, const FpPoly& center, int times) {
  for (int k = 0; k < times; ++k) f = *poly::divide_exact(f, center);
  return f;
}

}  // namespace

SymbolClass::SymbolClass(FpPoly a_, FpPoly b_) : a(std::move(a_)), b(std::move(b_)) {
  require_form(a, "first entry of the symbol");
  require_form(b, "second entry of the symbol");
  if (a.prime() != b.prime()) throw std::invalid_argument("symbol entries over different fields");
}

SymbolClass operator*(const SymbolClass& s1, const SymbolClass& s2) {
  return SymbolClass(s1.a * s2.a, s1.b * s2.b);
}

std::string SymbolClass::to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

DivisorialValuation::DivisorialValuation(FpPoly center) : center_(center), unit_(center.prime()) {
  if (!poly::is_linear_form(center)) {
    if (!center.is_zero() && center.is_homogeneous(kXYZ) && center.total_degree() > 1)
      throw UnsupportedValuation("only valuations along lines are supported, got " + center.to_string());
    throw std::invalid_argument("center of a valuation must be a nonzero linear form, got " + center.to_string());
  }
  center_ = center.monic();
  const std::uint64_t p = center.prime();
  const FpPoly z = FpPoly::variable(p, Var::z);
  at_infinity_ = poly::proportional(center_, z);
  unit_ = at_infinity_ ? FpPoly::variable(p, Var::x) : z;
}

DivisorialValuation DivisorialValuation::at_infinity(std::uint64_t p) {
  return DivisorialValuation(FpPoly::variable(p, Var::z));
}

int multiplicity(const FpPoly& f, const DivisorialValuation& v) {
  if (f.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
  int k = 0;
  FpPoly g = f;
  while (auto q = poly::divide_exact(g, v.center())) {
    g = std::move(*q);
    ++k;
  }
  return k;
}

int valuation(const FpPoly& f, const DivisorialValuation& v) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  if (!f.is_homogeneous(kXYZ)) throw std::invalid_argument("valuation: form is not homogeneous in x, y, z");
  const int mult = multiplicity(f, v);
  return v.is_infinity() ? mult - f.total_degree() : mult;
}

std::string SquareClass::to_string() const {
  std::ostringstream os;
  os << "[" << representative.to_string() << " on " << center.to_string() << "=0]";
  if (odd_parts.empty() && infinity_multiplicity % 2 == 0) {
    os << " trivial";
  } else {
    os << " odd:";
    for (const auto& f : odd_parts) os << ' ' << f.to_string();
    if (infinity_multiplicity % 2 != 0) os << " inf";
  }
  return os.str();
}

bool square_class_trivial(const SquareClass& c) {
  return c.odd_parts.empty() && c.infinity_multiplicity % 2 == 0;
}

SquareClass square_class_of(const FpPoly& form, const DivisorialValuation& v) {
  require_form(form, "square class representative");
  if (form.total_degree() % 2 != 0)
    throw std::invalid_argument("square class of an odd-degree form is not a function on the line");
  SquareClass c;
  c.center = v.center();
  c.representative = form;
  c.restricted = poly::restrict_to_line(form, v.center());
  if (c.restricted.is_zero())
    throw ResidueUndefined("representative " + form.to_string() + " vanishes on " + v.to_string() +
                           "; multiply an entry by a square coprime to the center");
  c.infinity_multiplicity = c.restricted.multiplicity_at_infinity();
  for (const auto& part : poly::squarefree_decomposition(c.restricted.dehomogenized).parts)
    if (part.exponent % 2 != 0) c.odd_parts.push_back(part.factor);
  return c;
}

ResidueReport residue(const FpPoly& a, const FpPoly& b, const DivisorialValuation& v) {
  require_form(a, "A");
  require_form(b, "B");
  ResidueReport r;
  const int mult_a = multiplicity(a, v), mult_b = multiplicity(b, v);
  r.v_a = valuation(a, v);
  r.v_b = valuation(b, v);
  r.sign = (r.v_a * r.v_b) % 2 == 0 ? 1 : -1;
  // a = pi^v(a) * unit; the unit is A0 / l^deg(A0) with l the coordinate unit
  const FpPoly& l = v.coordinate_unit();
  auto unit_part = [&](const FpPoly& f, int mult) {
    FpPoly f0 = strip(f, v.center(), mult);
    if (f0.total_degree() % 2 != 0) f0 *= l;
    return f0;
  };
  FpPoly rep = FpPoly::constant(a.prime(), 1);
  if (r.v_b % 2 != 0) rep *= unit_part(a, mult_a);
  if (r.v_a % 2 != 0) rep *= unit_part(b, mult_b);
  r.value = square_class_of(rep, v);
  r.trivial = square_class_trivial(r.value);
  return r;
}

ResidueReport residue(const SymbolClass& s, const DivisorialValuation& v) { return residue(s.a, s.b, v); }

std::optional<std::vector<FpPoly>> linear_factorization(const FpPoly& f) {
  if (f.is_zero() || !f.is_homogeneous(kXYZ)) throw std::invalid_argument("linear_factorization: need a nonzero form");
  const std::uint64_t p = f.prime();
  std::vector<FpPoly> factors;
  FpPoly g = f;
  if (g.total_degree() > 2) {
    if (p > 257) return std::nullopt;
    // search the dual plane for linear factors until the cofactor is small
    for (std::uint64_t a = 0; a <= 1 && g.total_degree() > 2; ++a)
      for (std::uint64_t b = 0; b < p && g.total_degree() > 2; ++b) {
        if (a == 0 && b > 1) break;
        for (std::uint64_t c = 0; c < p && g.total_degree() > 2; ++c) {
          if (a == 0 && b == 0 && c != 1) continue;
          const FpPoly l = FpPoly::linear(p, static_cast<long long>(a), static_cast<long long>(b),
                                          static_cast<long long>(c));
          while (g.total_degree() > 2) {
            auto q = poly::divide_exact(g, l);
            if (!q) break;
            factors.push_back(l.monic());
            g = std::move(*q);
          }
        }
      }
    if (g.total_degree() > 2) return std::nullopt;
  }
  auto rest = poly::split_into_linear_forms(g);
  if (!rest) return std::nullopt;
  for (auto& l : *rest) factors.push_back(std::move(l));
  return factors;
}

std::vector<DivisorialValuation> candidate_centers(const SymbolClass& s) {
  std::vector<FpPoly> lines;
  for (const FpPoly* f : {&s.a, &s.b}) {
    auto factors = linear_factorization(*f);
    if (!factors)
      throw UnsupportedValuation(f->to_string() + " is not a product of linear forms over F_" +
                                 std::to_string(f->prime()));
    for (auto& l : *factors) lines.push_back(std::move(l));
  }
  lines.push_back(FpPoly::variable(s.a.prime(), Var::z));
  std::vector<DivisorialValuation> out;
  for (const auto& l : lines) {
    bool seen = false;
    for (const auto& v : out) seen = seen || poly::proportional(v.center(), l);
    if (!seen) out.emplace_back(l);
  }
  return out;
}

std::vector<Ramification> ramification_divisor(const SymbolClass& s, const std::vector<DivisorialValuation>& centers) {
  std::vector<Ramification> out;
  for (const auto& v : centers) {
    auto r = residue(s, v);
    if (!r.trivial) out.push_back({v, std::move(r)});
  }
  return out;
}

std::vector<Ramification> ramification_divisor(const SymbolClass& s) {
  return ramification_divisor(s, candidate_centers(s));
}

}  // namespace dp2::brauer
