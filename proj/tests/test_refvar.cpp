#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dp2/arrangement_config.hpp"
#include "dp2/poly_parse.hpp"
#include "dp2/refvar.hpp"

using namespace dp2::refvar;
using dp2::poly::parse;
using dp2::poly::PolyDomain;

namespace {

constexpr std::uint64_t kP = 13;

FpPoly P(const std::string& s) { return parse(s, PolyDomain{kP}); }

ArrangementConfig make(const std::vector<std::string>& a, const std::vector<std::string>& b, const std::string& f,
                       int g = 2, int n = 2) {
  ArrangementConfig cfg;
  cfg.prime = kP;
  cfg.g = g;
  cfg.n = n;
  cfg.m = 0;
  for (const auto& s : a) cfg.a_factors.push_back(P(s));
  for (const auto& s : b) cfg.b_factors.push_back(P(s));
  cfg.f = P(f);
  return cfg;
}

std::vector<std::string> failing(const ConditionReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.conditions)
    if (!c.passed) out.push_back(c.id);
  return out;
}

// brute-force helpers over F_p
using Vec = std::array<std::uint64_t, 3>;

Vec coeffs(const FpPoly& l) {
  return {dp2::poly::evaluate(l, {1, 0, 0}), dp2::poly::evaluate(l, {0, 1, 0}), dp2::poly::evaluate(l, {0, 0, 1})};
}

Vec cross(const Vec& a, const Vec& b) {
  auto m = [](std::uint64_t x, std::uint64_t y) { return x * y % kP; };
  return {(m(a[1], b[2]) + kP - m(a[2], b[1])) % kP, (m(a[2], b[0]) + kP - m(a[0], b[2])) % kP,
          (m(a[0], b[1]) + kP - m(a[1], b[0])) % kP};
}

std::uint64_t dot(const Vec& a, const Vec& b) { return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % kP; }

bool is_zero(const Vec& v) { return v == Vec{0, 0, 0}; }

/// All p + 1 points of the line with coefficient vector c.
std::vector<Vec> points_on(const Vec& c) {
  std::vector<Vec> out;
  for (std::uint64_t a = 0; a < kP; ++a)
    for (std::uint64_t b = 0; b < kP; ++b)
      for (const Vec& pt : {Vec{a, b, 1}, Vec{a, 1, 0}, Vec{1, 0, 0}})
        if (dot(pt, c) == 0 && std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
  return out;
}

}  // namespace

TEST(Validate, RejectsBadShapes) {
  auto cfg = builtin_example();
  EXPECT_NO_THROW(validate(cfg));
  auto bad = cfg;
  bad.n = 0;
  bad.a_factors.clear();
  bad.b_factors.push_back(P("x"));
  bad.b_factors.push_back(P("y"));
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.n = 4;
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.m = 1;
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.f = P("x^3");
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.a_factors[0] = P("x^2");
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.a_factors.pop_back();
  EXPECT_THROW(validate(bad), ConfigError);
  bad = cfg;
  bad.prime = 15;
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(Example, FactorsSplitAtThreeAndNine) {
  const auto cfg = builtin_example();
  ASSERT_EQ(cfg.a_factors.size(), 2u);
  ASSERT_EQ(cfg.b_factors.size(), 2u);
  EXPECT_EQ(cfg.A().monic(), P("(x - 3*z)*(x - 9*z)").monic());
  EXPECT_EQ(cfg.B().monic(), P("(y - 3*z)*(y - 9*z)").monic());
  EXPECT_EQ(cfg.F(), P("(x+y)^4"));
}

TEST(Example, PassesAllConditions) {
  const auto r = check_conditions(builtin_example());
  ASSERT_EQ(r.conditions.size(), 5u);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.conditions) EXPECT_TRUE(c.witnesses.empty()) << c.id;
  EXPECT_THROW(r.at("vi"), std::out_of_range);
}

TEST(NegativeControl, ProportionalLines) {
  const auto r = check_conditions(make({"x", "2*x"}, {"y", "y + z"}, "x^2 + y^2 + 2*z^2"));
  EXPECT_FALSE(r.at("i").passed);
  ASSERT_EQ(r.at("i").witnesses.size(), 1u);
  EXPECT_EQ(r.at("i").witnesses[0].lines, (std::vector<std::size_t>{0, 1}));
}

TEST(NegativeControl, ConcurrentTriple) {
  const auto r = check_conditions(make({"x", "y"}, {"x + y", "z - x"}, "x^2 + y^2 + z^2"));
  EXPECT_EQ(failing(r), std::vector<std::string>{"ii"});
  ASSERT_EQ(r.at("ii").witnesses.size(), 1u);
  const auto& w = r.at("ii").witnesses[0];
  EXPECT_EQ(w.lines, (std::vector<std::size_t>{0, 1, 2}));
  ASSERT_TRUE(w.point);
  EXPECT_EQ(*w.point, (Point{0, 0, 1}));
  EXPECT_EQ(w.note, "mixed");
}

TEST(NegativeControl, ConcurrentInsideB) {
  // y, z, y + z all lie in B
  auto cfg = make({"x + 5*z", "x + y + 7*z"}, {"y", "z", "y + z", "x + 2*y + 3*z"}, "x^3 + y^3 + 2*z^3", 3, 2);
  const auto r3 = check_conditions(cfg);
  EXPECT_FALSE(r3.at("ii").passed);
  bool found = false;
  for (const auto& w : r3.at("ii").witnesses)
    if (w.lines == std::vector<std::size_t>{2, 3, 4}) {
      found = true;
      EXPECT_EQ(w.note, "all in B");
      EXPECT_EQ(*w.point, (Point{1, 0, 0}));
    }
  EXPECT_TRUE(found);
}

TEST(NegativeControl, LineInsideF) {
  const auto r = check_conditions(make({"x", "y"}, {"z", "x + y + z"}, "x*(y + 2*z)"));
  EXPECT_FALSE(r.at("iii").passed);
  ASSERT_EQ(r.at("iii").witnesses.size(), 1u);
  EXPECT_EQ(r.at("iii").witnesses[0].lines, std::vector<std::size_t>{0});
}

TEST(NegativeControl, FVanishesAtIntersection) {
  const auto cfg = make({"x", "y"}, {"z", "x + y + z"}, "y^2 + z^2 + x*y");
  const auto r = check_conditions(cfg);
  EXPECT_EQ(failing(r), std::vector<std::string>{"iv"});
  ASSERT_EQ(r.at("iv").witnesses.size(), 1u);
  const auto& w = r.at("iv").witnesses[0];
  EXPECT_EQ(w.lines, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(*w.point, (Point{1, 0, 0}));
  const auto local = local_certificates(cfg);
  EXPECT_FALSE(local.bullet_passed(3));
  EXPECT_TRUE(local.bullet_passed(1));
}

TEST(NegativeControl, SquareAbPlusF) {
  // P = xz, Q = y(x+2y+3z), f = (Q - P)/2: AB + F = ((P + Q)/2)^2
  const std::string f = "7*(y*(x + 2*y + 3*z) - x*z)";
  const auto cfg = make({"x", "y"}, {"z", "x + 2*y + 3*z"}, f);
  EXPECT_EQ(cfg.A() * cfg.B() + cfg.F(), P("7*(y*(x + 2*y + 3*z) + x*z)").pow(2));
  const auto r = check_conditions(cfg);
  EXPECT_FALSE(r.at("v").passed);
  ASSERT_EQ(r.at("v").witnesses.size(), 1u);
  EXPECT_NE(r.at("v").witnesses[0].note.find("AB + F = c*("), std::string::npos);
  // f vanishes where x = z = 0, a point of A and B
  EXPECT_FALSE(r.at("iv").passed);
}

TEST(NegativeControl, ZeroAbPlusF) {
  // -AB is a square when A and B agree up to sign
  auto cfg = make({"x", "y"}, {"x", "y"}, "x*y");
  cfg.b_factors[0] = P("-x");
  const auto r = check_conditions(cfg);
  EXPECT_FALSE(r.at("v").passed);
  EXPECT_EQ(r.at("v").witnesses[0].note, "AB + F = 0");
}

TEST(Equation, ExampleBidegree) {
  const auto eq = build_equation(builtin_example());
  EXPECT_EQ(eq.symbolic, "w^2 = A*z^6*u^4 + B*z^6*v^4 + A*B*(A*B+F)*t^4");
  EXPECT_EQ(eq.bidegree, (std::array<int, 2>{8, 4}));
  EXPECT_EQ(eq.e1, 6);
  EXPECT_EQ(eq.e2, 6);
  EXPECT_TRUE(eq.bihomogeneous);
  EXPECT_EQ(eq.form.total_degree(), 8 + 4);
}

TEST(Equation, BidegreeFollowsM) {
  for (int q = 4; q <= 7; ++q) {
    const auto eq = build_equation(corollary_family(q));
    EXPECT_EQ(eq.bidegree, (std::array<int, 2>{8 + 2 * q - 8, 4}));
    EXPECT_TRUE(eq.bihomogeneous);
  }
}

TEST(Family, Bidegrees) {
  EXPECT_EQ(build_equation(corollary_family(4)).bidegree, (std::array<int, 2>{8, 4}));
  EXPECT_EQ(build_equation(corollary_family(5)).bidegree, (std::array<int, 2>{10, 4}));
  EXPECT_EQ(corollary_family(5).m, 2);
  EXPECT_THROW(corollary_family(3), ConfigError);
}

TEST(Normalization, DChoice) {
  const auto n0 = normalize_local_form(builtin_example());
  EXPECT_EQ(n0.e1, 6);
  EXPECT_EQ(n0.e2, 6);
  EXPECT_EQ(n0.d_choice, "1");
  EXPECT_TRUE(n0.parity_ok);
  EXPECT_TRUE(n0.fourth_power_ok);
  const auto n2 = normalize_local_form(corollary_family(5));
  EXPECT_EQ(n2.d_choice, "z");
  EXPECT_EQ(n2.d_degree, 1);
  EXPECT_TRUE(n2.fourth_power_ok);
  for (int q = 4; q < 12; ++q) {
    const auto cfg = corollary_family(q);
    const auto n = normalize_local_form(cfg);
    EXPECT_EQ((6 * cfg.g + cfg.m + 2 * n.d_degree) % 4, 0) << q;
    EXPECT_TRUE(n.fourth_power_ok);
  }
}

TEST(Alpha, ExampleResiduesNontrivial) {
  const auto cert = alpha_certificate(builtin_example());
  ASSERT_EQ(cert.residues.size(), 4u);
  for (const auto& r : cert.residues) {
    EXPECT_TRUE(r.nontrivial) << r.line;
    EXPECT_TRUE(r.matches_other_entry) << r.line;
  }
  EXPECT_TRUE(cert.abc_nonsquare);
  EXPECT_TRUE(cert.abc_matches_ab_plus_f);
  EXPECT_TRUE(cert.passed());
}

TEST(Alpha, SharedLinesGiveTrivialResidue) {
  const auto cert = alpha_certificate(make({"x", "y"}, {"x", "y"}, "x^2 + y^2 + z^2"));
  EXPECT_FALSE(cert.passed());
  bool any_trivial = false;
  for (const auto& r : cert.residues) any_trivial = any_trivial || !r.nontrivial;
  EXPECT_TRUE(any_trivial);
}

TEST(Local, ExampleAllBullets) {
  const auto local = local_certificates(builtin_example());
  for (int b = 1; b <= 4; ++b) EXPECT_TRUE(local.bullet_passed(b)) << b;
  EXPECT_TRUE(local.passed());
  EXPECT_FALSE(local.bullet_passed(5));
}

TEST(Verify, ExampleEndToEnd) {
  const auto r = verify(builtin_example());
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.alpha);
  ASSERT_TRUE(r.local);
  const auto bad = verify(make({"x", "y"}, {"x + y", "z - x"}, "x^2 + y^2 + z^2"));
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.alpha);
}

// Random arrangements: conditions against direct enumeration, and (i)-(iv)
// passing forces local bullets 1 and 3.
TEST(Property, ConditionsAgreeWithEnumeration) {
  std::mt19937_64 rng(211);
  std::uniform_int_distribution<std::uint64_t> d(0, kP - 1);
  auto random_line = [&] {
    Vec c{0, 0, 0};
    while (is_zero(c)) c = {d(rng), d(rng), d(rng)};
    return FpPoly::linear(kP, c[0], c[1], c[2]);
  };
  int passing = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int g = 2 + trial % 2;
    ArrangementConfig cfg;
    cfg.prime = kP;
    cfg.g = g;
    cfg.n = 2;
    cfg.m = 0;
    for (int k = 0; k < 2; ++k) cfg.a_factors.push_back(random_line());
    for (int k = 0; k < 2 * g - 2; ++k) cfg.b_factors.push_back(random_line());
    cfg.f = FpPoly(kP);
    while (cfg.f.is_zero()) {
      FpPoly f(kP);
      for (int i = 0; i <= g; ++i)
        for (int j = 0; i + j <= g; ++j) {
          FpPoly::Monomial mono{};
          mono[0] = i;
          mono[1] = j;
          mono[2] = g - i - j;
          if (d(rng) < 4) f.add_term(mono, d(rng));
        }
      cfg.f = f;
    }
    // occasionally plant a violation
    if (trial % 5 == 1) cfg.b_factors[0] = cfg.a_factors[1].scaled(3);
    if (trial % 5 == 2) {
      cfg.f = cfg.a_factors[0] * random_line();
      if (g == 3) cfg.f *= random_line();
    }

    const auto L = cfg.lines();
    std::vector<Vec> c;
    for (const auto& l : L) c.push_back(coeffs(l));
    bool want_i = true, want_ii = true, want_iii = true, want_iv = true;
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = i + 1; j < L.size(); ++j) {
        if (is_zero(cross(c[i], c[j]))) want_i = false;
        for (std::size_t k = j + 1; k < L.size(); ++k)
          if (dot(cross(c[i], c[j]), c[k]) == 0) want_ii = false;
      }
    for (std::size_t i = 0; i < L.size(); ++i) {
      bool all_zero = true;
      for (const auto& pt : points_on(c[i])) all_zero = all_zero && dp2::poly::evaluate(cfg.f, pt) == 0;
      if (all_zero) want_iii = false;
    }
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < L.size(); ++j) {
        const Vec pt = cross(c[i], c[j]);
        if (!is_zero(pt) && dp2::poly::evaluate(cfg.f, pt) == 0) want_iv = false;
      }

    const auto r = check_conditions(cfg);
    EXPECT_EQ(r.at("i").passed, want_i) << trial;
    EXPECT_EQ(r.at("ii").passed, want_ii) << trial;
    EXPECT_EQ(r.at("iii").passed, want_iii) << trial;
    EXPECT_EQ(r.at("iv").passed, want_iv) << trial;
    if (want_i && want_ii && want_iii && want_iv) {
      ++passing;
      const auto local = local_certificates(cfg);
      EXPECT_TRUE(local.bullet_passed(1)) << trial;
      EXPECT_TRUE(local.bullet_passed(3)) << trial;
    }
  }
  EXPECT_GT(passing, 10);
}

TEST(Config, ParsesBundledFile) {
  const auto cfg = load_config(std::string(DP2_DATA_DIR) + "/example_p13.conf");
  EXPECT_EQ(cfg.g, 2);
  EXPECT_EQ(cfg.n, 2);
  EXPECT_EQ(cfg.A().monic(), builtin_example().A().monic());
  EXPECT_EQ(cfg.B().monic(), builtin_example().B().monic());
  EXPECT_EQ(cfg.f, builtin_example().f);
}

TEST(Config, RoundTrip) {
  for (int q : {4, 5, 9}) {
    const auto cfg = corollary_family(q);
    const auto back = parse_config(to_config_text(cfg));
    EXPECT_EQ(back.m, cfg.m);
    EXPECT_EQ(back.q, cfg.q);
    EXPECT_EQ(back.A(), cfg.A());
    EXPECT_EQ(back.B(), cfg.B());
    EXPECT_EQ(back.f, cfg.f);
  }
  const auto builtin = parse_config(builtin_example_text());
  EXPECT_EQ(builtin.A().monic(), builtin_example().A().monic());
}

TEST(Config, PrimeOverride) {
  const auto cfg = parse_config(builtin_example_text(), 7);
  EXPECT_EQ(cfg.prime, 7u);
  EXPECT_EQ(cfg.lines().size(), 4u);
  // x^2 + x + 1 has no root mod 5
  EXPECT_THROW(parse_config(builtin_example_text(), 5), ConfigParseError);
}

TEST(Config, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_config(text);
    } catch (const ConfigParseError& e) {
      return e.line();
    }
    return 9999;
  };
  const std::string head = "prime = 13\ng = 2\nn = 2\n";
  const std::string tail = "a_factors = x, y\nb_factors = z, x+y+z\nf = x^2+y^2+z^2\n";
  EXPECT_NO_THROW(parse_config(head + "m = 0\n" + tail));
  EXPECT_EQ(line_of(head + "m = 0\ncolour = red\n" + tail), 5u);
  EXPECT_EQ(line_of(head + "m = 0\ng = 3\n" + tail), 5u);
  EXPECT_EQ(line_of(head + "m = zero\n" + tail), 4u);
  EXPECT_EQ(line_of(head + "m 0\n" + tail), 4u);
  EXPECT_EQ(line_of(head + "m = 0\na_factors = x, 2y\nb_factors = z, x+y+z\nf = x^2\n"), 5u);
  EXPECT_EQ(line_of(head + tail), 0u);
  EXPECT_EQ(line_of(head + "q = 3\n" + tail), 4u);
  EXPECT_EQ(line_of(head + "q = 5\nm = 0\n" + tail), 5u);
  EXPECT_EQ(line_of("[arrangement\n" + head), 1u);
  EXPECT_THROW(load_config("/nonexistent/arrangement.conf"), ConfigError);
}

TEST(Config, ValidationAfterParse) {
  // n = 0 is rejected
  const std::string text = "prime = 13\ng = 2\nn = 0\nm = 0\na_factors = \nb_factors = x, y, z, x+y\nf = x^2\n";
  EXPECT_THROW(validate(parse_config(text)), ConfigError);
}
