#include "dp2/refvar.hpp"

#include <algorithm>
#include <sstream>

namespace dp2::refvar {

namespace {

using poly::Var;

constexpr std::array<Var, 3> kXYZ{Var::x, Var::y, Var::z};

FpPoly var(std::uint64_t p, Var v, int power = 1) { return FpPoly::variable(p, v, power); }

FpPoly product(const std::vector<FpPoly>& factors, std::uint64_t p) {
  FpPoly r = FpPoly::constant(p, 1);
  for (const auto& l : factors) r *= l;
  return r;
}

std::string point_string(const Point& pt) {
  return "[" + std::to_string(pt[0]) + ":" + std::to_string(pt[1]) + ":" + std::to_string(pt[2]) + "]";
}

std::uint64_t det3(const std::array<std::uint64_t, 3>& a, const std::array<std::uint64_t, 3>& b,
                   const std::array<std::uint64_t, 3>& c, std::uint64_t p) {
  auto m = [p](std::uint64_t x, std::uint64_t y) { return x * y % p; };
  const std::uint64_t plus = (m(a[0], m(b[1], c[2])) + m(a[1], m(b[2], c[0])) + m(a[2], m(b[0], c[1]))) % p;
  const std::uint64_t minus = (m(a[2], m(b[1], c[0])) + m(a[0], m(b[2], c[1])) + m(a[1], m(b[0], c[2]))) % p;
  return (plus + p - minus) % p;
}

/// Equal up to a nonzero constant.
bool same_binary_form(const poly::BinaryForm& a, const poly::BinaryForm& b) {
  if (a.degree != b.degree || a.is_zero() != b.is_zero()) return false;
  return a.is_zero() || a.dehomogenized.monic() == b.dehomogenized.monic();
}

std::string z_power(int e) {
  if (e == 0) return "";
  if (e == 1) return "z*";
  return "z^" + std::to_string(e) + "*";
}

std::string group_of(std::size_t i, int n) { return static_cast<int>(i) < n ? "A" : "B"; }

}  // namespace

FpPoly ArrangementConfig::A() const { return product(a_factors, prime); }
FpPoly ArrangementConfig::B() const { return product(b_factors, prime); }

std::vector<FpPoly> ArrangementConfig::lines() const {
  std::vector<FpPoly> out = a_factors;
  out.insert(out.end(), b_factors.begin(), b_factors.end());
  return out;
}

void validate(const ArrangementConfig& cfg) {
  if (cfg.prime == 2 || !poly::is_prime(cfg.prime)) throw ConfigError("prime must be an odd prime");
  if (cfg.g < 1) throw ConfigError("g must be at least 1");
  if (cfg.n % 2 != 0) throw ConfigError("n must be even");
  if (cfg.n < 2) throw ConfigError("n must be at least 2: A needs a linear factor to carry a nonzero residue");
  if (cfg.n >= 2 * cfg.g) throw ConfigError("n must be less than 2g");
  if (cfg.m < 0 || cfg.m % 2 != 0) throw ConfigError("m must be even and non-negative");
  if (cfg.q && cfg.m != 2 * *cfg.q - 8) throw ConfigError("m must equal 2q - 8 when q is given");
  if (static_cast<int>(cfg.a_factors.size()) != cfg.n)
    throw ConfigError("A needs " + std::to_string(cfg.n) + " linear factors, got " +
                      std::to_string(cfg.a_factors.size()));
  if (static_cast<int>(cfg.b_factors.size()) != 2 * cfg.g - cfg.n)
    throw ConfigError("B needs " + std::to_string(2 * cfg.g - cfg.n) + " linear factors, got " +
                      std::to_string(cfg.b_factors.size()));
  for (const auto& l : cfg.lines()) {
    if (l.prime() != cfg.prime) throw ConfigError("factor " + l.to_string() + " is over a different field");
    if (!poly::is_linear_form(l)) throw ConfigError("factor " + l.to_string() + " is not a linear form in x, y, z");
  }
  if (cfg.f.prime() != cfg.prime) throw ConfigError("f is over a different field");
  if (cfg.f.is_zero() || !cfg.f.is_homogeneous(kXYZ) || cfg.f.total_degree() != cfg.g)
    throw ConfigError("f must be a nonzero form of degree g = " + std::to_string(cfg.g));
  for (Var v : {Var::u, Var::v, Var::t, Var::w})
    if (cfg.f.involves(v)) throw ConfigError("f must be a form in x, y, z");
}

std::string Witness::to_string() const {
  std::ostringstream os;
  os << "lines";
  for (std::size_t i : lines) os << " l" << i + 1;
  if (point) os << " at " << point_string(*point);
  if (!note.empty()) os << " (" << note << ")";
  return os.str();
}

bool ConditionReport::passed() const {
  for (const auto& c : conditions)
    if (!c.passed) return false;
  return !conditions.empty();
}

const ConditionResult& ConditionReport::at(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return c;
  throw std::out_of_range("no condition " + id);
}

ConditionReport check_conditions(const ArrangementConfig& cfg) {
  validate(cfg);
  const std::uint64_t p = cfg.prime;
  const auto L = cfg.lines();
  std::vector<std::array<std::uint64_t, 3>> coeff;
  for (const auto& l : L) coeff.push_back(poly::linear_coefficients(l));
  ConditionReport report;

  ConditionResult c1{"i", "the lines are pairwise distinct", true, "", {}};
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (poly::proportional(L[i], L[j])) c1.witnesses.push_back({{i, j}, std::nullopt, "same line"});
  c1.passed = c1.witnesses.empty();
  c1.detail = std::to_string(L.size() * (L.size() - 1) / 2) + " pairs checked";
  report.conditions.push_back(std::move(c1));

  ConditionResult c2{"ii", "no three lines are concurrent", true, "", {}};
  std::size_t triples = 0;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      for (std::size_t k = j + 1; k < L.size(); ++k) {
        ++triples;
        if (det3(coeff[i], coeff[j], coeff[k], p) != 0) continue;
        Witness w{{i, j, k}, std::nullopt, ""};
        const std::string groups = group_of(i, cfg.n) + group_of(j, cfg.n) + group_of(k, cfg.n);
        w.note = groups == "AAA" ? "all in A" : groups == "BBB" ? "all in B" : "mixed";
        for (auto [s, t] : {std::pair{i, j}, std::pair{i, k}, std::pair{j, k}})
          if (!poly::proportional(L[s], L[t])) {
            w.point = poly::intersection_point(L[s], L[t]);
            break;
          }
        c2.witnesses.push_back(std::move(w));
      }
  c2.passed = c2.witnesses.empty();
  c2.detail = std::to_string(triples) + " triples checked, including triples inside A and inside B";
  report.conditions.push_back(std::move(c2));

  ConditionResult c3{"iii", "no line lies in the zero locus of F", true, "", {}};
  for (std::size_t i = 0; i < L.size(); ++i)
    if (poly::divides(L[i], cfg.f)) c3.witnesses.push_back({{i}, std::nullopt, "divides f, hence F = f^2"});
  c3.passed = c3.witnesses.empty();
  c3.detail = "checked l_i does not divide f, equivalently l_i does not divide F = f^2";
  report.conditions.push_back(std::move(c3));

  ConditionResult c4{"iv", "F does not vanish where a line of A meets a line of B", true, "", {}};
  std::size_t points = 0;
  for (std::size_t i = 0; i < cfg.a_factors.size(); ++i)
    for (std::size_t j = cfg.a_factors.size(); j < L.size(); ++j) {
      if (poly::proportional(L[i], L[j])) continue;
      ++points;
      const Point pt = poly::intersection_point(L[i], L[j]);
      if (poly::evaluate(cfg.f, pt) == 0) c4.witnesses.push_back({{i, j}, pt, "f = 0 there"});
    }
  c4.passed = c4.witnesses.empty();
  c4.detail = std::to_string(points) + " intersection points checked";
  report.conditions.push_back(std::move(c4));

  ConditionResult c5{"v", "AB + F is not a square", true, "", {}};
  const FpPoly abf = cfg.A() * cfg.B() + cfg.F();
  if (abf.is_zero()) {
    c5.passed = false;
    c5.witnesses.push_back({{}, std::nullopt, "AB + F = 0"});
  } else if (auto root = poly::square_root_mod_constants(abf)) {
    c5.passed = false;
    c5.witnesses.push_back({{}, std::nullopt, "AB + F = c*(" + root->to_string() + ")^2"});
  } else {
    std::ostringstream os;
    os << "odd exponents in the squarefree decomposition:";
    for (const auto& part : poly::squarefree_decomposition(abf).parts)
      if (part.exponent % 2 != 0) os << " (" << part.factor.to_string() << ")^" << part.exponent;
    c5.detail = os.str();
  }
  report.conditions.push_back(std::move(c5));
  return report;
}

Equation build_equation(const ArrangementConfig& cfg) {
  validate(cfg);
  const std::uint64_t p = cfg.prime;
  const FpPoly A = cfg.A(), B = cfg.B(), F = cfg.F();
  Equation eq;
  eq.e1 = 4 * cfg.g + cfg.m - cfg.n;
  eq.e2 = 2 * cfg.g + cfg.m + cfg.n;
  const FpPoly coeff_u = A * var(p, Var::z, eq.e1);
  const FpPoly coeff_v = B * var(p, Var::z, eq.e2);
  const FpPoly coeff_t = A * B * var(p, Var::z, cfg.m) * (A * B + F);
  eq.rhs = coeff_u * var(p, Var::u, 4) + coeff_v * var(p, Var::v, 4) + coeff_t * var(p, Var::t, 4);
  eq.form = var(p, Var::w, 2) - eq.rhs;

  const int d1 = 4 * cfg.g + cfg.m;
  eq.bidegree = {d1, 4};
  eq.audit.push_back("u^4: deg A + " + std::to_string(eq.e1) + " = " +
                     std::to_string(A.total_degree() + eq.e1));
  eq.audit.push_back("v^4: deg B + " + std::to_string(eq.e2) + " = " +
                     std::to_string(B.total_degree() + eq.e2));
  eq.audit.push_back("t^4: deg AB + " + std::to_string(cfg.m) + " + deg(AB+F) = " +
                     std::to_string(coeff_t.total_degree()));
  eq.audit.push_back("w^2: weight (" + std::to_string(d1) + ", 4)");
  eq.bihomogeneous = coeff_u.total_degree() == d1 && coeff_v.total_degree() == d1 && coeff_t.total_degree() == d1;
  for (const auto& [mono, c] : eq.form.terms()) {
    const int w = mono[static_cast<int>(Var::w)];
    const int xyz = mono[0] + mono[1] + mono[2] + w * d1 / 2;
    const int uvt = mono[3] + mono[4] + mono[5] + 2 * w;
    if (xyz != d1 || uvt != 4) eq.bihomogeneous = false;
  }
  eq.symbolic = "w^2 = A*" + z_power(eq.e1) + "u^4 + B*" + z_power(eq.e2) + "v^4 + A*B*" + z_power(cfg.m) +
                "(A*B+F)*t^4";
  return eq;
}

bool AlphaCertificate::passed() const {
  if (residues.empty() || !abc_nonsquare || !abc_matches_ab_plus_f) return false;
  for (const auto& r : residues)
    if (!r.nontrivial || !r.matches_other_entry) return false;
  return true;
}

AlphaCertificate alpha_certificate(const ArrangementConfig& cfg) {
  validate(cfg);
  const FpPoly A = cfg.A(), B = cfg.B();
  AlphaCertificate cert;
  auto sweep = [&](const std::vector<FpPoly>& own, const FpPoly& other, const char* entry) {
    for (const auto& l : own) {
      const brauer::DivisorialValuation v(l);
      ResidueCertificate rc;
      rc.line = l.to_string();
      rc.entry = entry;
      rc.residue = brauer::residue(A, B, v);
      rc.matches_other_entry = same_binary_form(rc.residue.value.restricted, poly::restrict_to_line(other, l));
      rc.nontrivial = !rc.residue.trivial;
      cert.residues.push_back(std::move(rc));
    }
  };
  sweep(cfg.a_factors, B, "A");
  sweep(cfg.b_factors, A, "B");
  const FpPoly abf = A * B + cfg.F();
  const FpPoly C = A * B * var(cfg.prime, Var::z, cfg.m) * abf;
  const FpPoly abc = A * B * C;
  cert.abc_nonsquare = !abc.is_zero() && !poly::is_square_mod_constants(abc);
  cert.abc_matches_ab_plus_f =
      !abf.is_zero() && poly::is_square_mod_constants(abc) == poly::is_square_mod_constants(abf);
  return cert;
}

bool LocalCertificates::bullet_passed(int bullet) const {
  const std::string tag = std::to_string(bullet);
  bool any = false;
  for (const auto& c : checks)
    if (c.bullet == tag) {
      any = true;
      if (!c.passed) return false;
    }
  return any;
}

bool LocalCertificates::passed() const {
  for (int b = 1; b <= 4; ++b)
    if (!bullet_passed(b)) return false;
  return true;
}

LocalCertificates local_certificates(const ArrangementConfig& cfg) {
  validate(cfg);
  const std::uint64_t p = cfg.prime;
  const FpPoly A = cfg.A(), B = cfg.B(), F = cfg.F();
  const FpPoly abf = A * B + F;
  const auto L = cfg.lines();
  LocalCertificates out;

  // generic points of the lines
  for (const auto& l : L) {
    const auto r_abf = poly::restrict_to_line(abf, l);
    const auto r_F = poly::restrict_to_line(F, l);
    const auto r_f = poly::restrict_to_line(cfg.f, l);
    const bool f_nonzero = !r_f.is_zero();
    const bool equal = r_abf.degree == r_F.degree && r_abf.dehomogenized == r_F.dehomogenized;
    const bool square = r_F.dehomogenized == r_f.dehomogenized * r_f.dehomogenized;
    LocalCheck c{"1", l.to_string() + " = 0", equal && square && f_nonzero, ""};
    c.detail = "(AB+F)| = F| = (f|)^2 with f| = " + r_f.dehomogenized.to_string();
    if (!f_nonzero) c.detail = "f vanishes on the line";
    out.checks.push_back(std::move(c));
  }

  // closed points on only one of {A = 0}, {B = 0}
  auto one_sided = [&](const std::vector<FpPoly>& own, const FpPoly& other, const char* name) {
    for (std::size_t i = 0; i < own.size(); ++i)
      for (std::size_t j = i + 1; j < own.size(); ++j) {
        if (poly::proportional(own[i], own[j])) continue;
        const Point pt = poly::intersection_point(own[i], own[j]);
        const std::uint64_t value = poly::evaluate(other, pt);
        LocalCheck c{"2", point_string(pt), value != 0, ""};
        c.detail = std::string(name) + "(P) = " + std::to_string(value) + (value ? ", a unit" : ", the point lies on both");
        out.checks.push_back(std::move(c));
      }
  };
  one_sided(cfg.a_factors, B, "B");
  one_sided(cfg.b_factors, A, "A");
  if (!std::any_of(out.checks.begin(), out.checks.end(), [](const LocalCheck& c) { return c.bullet == "2"; }))
    out.checks.push_back({"2", "-", true, "no two lines inside A or inside B meet; nothing to sample"});

  // intersections of a line of A with a line of B
  for (const auto& a : cfg.a_factors)
    for (const auto& b : cfg.b_factors) {
      if (poly::proportional(a, b)) continue;
      const Point pt = poly::intersection_point(a, b);
      const std::uint64_t value = poly::evaluate(abf, pt);
      const std::uint64_t fp = poly::evaluate(cfg.f, pt);
      const bool ok = value != 0 && value == fp * fp % p && poly::mod_sqrt(value, p).has_value();
      LocalCheck c{"3", point_string(pt), ok, ""};
      c.detail = "(AB+F)(P) = F(P) = f(P)^2 = " + std::to_string(fp) + "^2 = " + std::to_string(value);
      out.checks.push_back(std::move(c));
    }

  out.checks.push_back(
      {"4", "all other points", true, "A and B are units there; nothing to check (residue field of dimension <= 1)"});
  return out;
}

LocalNormalization normalize_local_form(const ArrangementConfig& cfg) {
  if (cfg.m % 2 != 0) throw ConfigError("m must be even");
  LocalNormalization ln;
  ln.e1 = 4 * cfg.g + cfg.m - cfg.n;
  ln.e2 = 2 * cfg.g + cfg.m + cfg.n;
  const int s = 6 * cfg.g + cfg.m;
  ln.parity_ok = ln.e1 + ln.e2 == 6 * cfg.g + 2 * cfg.m && (ln.e1 + ln.e2) % 2 == 0;
  ln.d_degree = s % 4 == 0 ? 0 : 1;
  ln.d_choice = ln.d_degree == 0 ? "1" : "z";
  ln.fourth_power_ok = (s + 2 * ln.d_degree) % 4 == 0;
  ln.notes.push_back("e1 + e2 = 6g + 2m = " + std::to_string(ln.e1 + ln.e2));
  ln.notes.push_back("6g + m = " + std::to_string(s) + " = " + std::to_string(s % 4) + " mod 4, d = " + ln.d_choice);
  ln.notes.push_back("C / (A'B'd^2) = (AB+F) * z^-" + std::to_string(s + 2 * ln.d_degree) +
                     (ln.fourth_power_ok ? ": a local square times a fourth power" : ": z-exponent not divisible by 4"));
  ln.notes.push_back("the congruence 6k+2m = m (mod 2) is read with k = g; d is fixed by 6g+m mod 4");
  return ln;
}

ArrangementConfig builtin_example() {
  const std::uint64_t p = 13;
  const FpPoly x = var(p, Var::x), y = var(p, Var::y), z = var(p, Var::z);
  ArrangementConfig cfg;
  cfg.prime = p;
  cfg.g = 2;
  cfg.n = 2;
  cfg.m = 0;
  cfg.a_factors = *poly::split_into_linear_forms(x * x + x * z + z * z);
  cfg.b_factors = *poly::split_into_linear_forms(y * y + y * z + z * z);
  cfg.f = (x + y) * (x + y);
  return cfg;
}

ArrangementConfig corollary_family(int q, const ArrangementConfig& seed) {
  if (q < 4) throw ConfigError("q must be at least 4 (m = 2q - 8 would be negative)");
  ArrangementConfig cfg = seed;
  cfg.q = q;
  cfg.m = 2 * q - 8;
  return cfg;
}

bool VerificationReport::passed() const {
  return conditions.passed() && equation && equation->bihomogeneous && alpha && alpha->passed() && local &&
         local->passed() && normalization.parity_ok && normalization.fourth_power_ok;
}

VerificationReport verify(const ArrangementConfig& cfg) {
  VerificationReport r;
  r.conditions = check_conditions(cfg);
  r.equation = build_equation(cfg);
  r.normalization = normalize_local_form(cfg);
  if (r.conditions.passed()) {
    r.alpha = alpha_certificate(cfg);
    r.local = local_certificates(cfg);
  }
  return r;
}

}  // namespace dp2::refvar
