#include "dp2/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dp2::poly {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1u) r = r * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return std::min(r, p - r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce_mod(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ull << 31) || !is_prime(p))
    throw std::invalid_argument("FpPoly: characteristic must be an odd prime below 2^31, got " +
                                std::to_string(p));
}

FpPoly FpPoly::constant(std::uint64_t p, long long c) {
  FpPoly f(p);
  f.add_term(Monomial{}, reduce_mod(c, p));
  return f;
}

FpPoly FpPoly::variable(std::uint64_t p, Var v, int power) {
  Monomial m{};
  m[static_cast<int>(v)] = power;
  return monomial(p, m, 1);
}

FpPoly FpPoly::monomial(std::uint64_t p, const Monomial& m, std::uint64_t c) {
  FpPoly f(p);
  f.add_term(m, c % p);
  return f;
}

FpPoly FpPoly::linear(std::uint64_t p, long long a, long long b, long long c) {
  return variable(p, Var::x).scaled(reduce_mod(a, p)) + variable(p, Var::y).scaled(reduce_mod(b, p)) +
         variable(p, Var::z).scaled(reduce_mod(c, p));
}

bool FpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::uint64_t FpPoly::constant_term() const { return coefficient(Monomial{}); }

std::uint64_t FpPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int FpPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int FpPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

bool FpPoly::is_homogeneous(std::span<const Var> vars) const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (Var v : vars) s += m[static_cast<int>(v)];
    if (deg && *deg != s) return false;
    deg = s;
  }
  return true;
}

bool FpPoly::is_homogeneous() const {
  static constexpr std::array<Var, kNumVars> all{Var::x, Var::y, Var::z, Var::u,
                                                Var::v, Var::t, Var::w};
  return is_homogeneous(all);
}

const FpPoly::Monomial& FpPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("FpPoly: zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

std::uint64_t FpPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("FpPoly: zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inv(leading_coefficient(), p_));
}

void FpPoly::add_term(const Monomial& m, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void FpPoly::check_compatible(const FpPoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("FpPoly: mixed characteristics");
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

FpPoly operator-(const FpPoly& a) { return FpPoly(a.p_) - a; }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.check_compatible(b);
  FpPoly r(a.p_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FpPoly::Monomial m;
      for (std::size_t k = 0; k < kNumVars; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb % a.p_);
    }
  return r;
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  FpPoly r(p_);
  c %= p_;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c % p_);
  return r;
}

FpPoly FpPoly::pow(unsigned n) const {
  FpPoly r = constant(p_, 1), base = *this;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return r;
}

std::string FpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c > p_ / 2;
    std::uint64_t mag = negative ? p_ - c : c;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    bool has_vars = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      if (has_vars) mono << '*';
      mono << kVarNames[k];
      if (m[k] != 1) mono << '^' << m[k];
      has_vars = true;
    }
    if (!has_vars)
      os << mag;
    else if (mag == 1)
      os << mono.str();
    else
      os << mag << '*' << mono.str();
    first = false;
  }
  return os.str();
}

FpPoly derivative(const FpPoly& f, Var v) {
  const int k = static_cast<int>(v);
  FpPoly r(f.prime());
  for (const auto& [m, c] : f.terms()) {
    if (m[k] == 0) continue;
    FpPoly::Monomial d = m;
    d[k] -= 1;
    r.add_term(d, c * (static_cast<std::uint64_t>(m[k]) % f.prime()) % f.prime());
  }
  return r;
}

namespace {

bool monomial_divides(const FpPoly::Monomial& a, const FpPoly::Monomial& b) {
  for (std::size_t k = 0; k < kNumVars; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Var first_variable(const FpPoly& f, const FpPoly& g) {
  for (std::size_t k = 0; k < kNumVars; ++k) {
    Var v = static_cast<Var>(k);
    if (f.involves(v) || g.involves(v)) return v;
  }
  throw std::logic_error("first_variable: both polynomials are constant");
}

// lb^e * a mod b with respect to the main variable v.
FpPoly pseudo_remainder(FpPoly a, const FpPoly& b, Var v) {
  const int db = b.degree_in(v);
  const FpPoly lb = coefficients_in(b, v)[db];
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    FpPoly la = coefficients_in(a, v)[da];
    a = lb * a - la * FpPoly::variable(a.prime(), v, da - db) * b;
  }
  return a;
}

FpPoly primitive_part(const FpPoly& f, Var v) {
  if (f.is_zero()) return f;
  return *divide_exact(f, content_in(f, v));
}

FpPoly pth_root(const FpPoly& f) {
  const int p = static_cast<int>(f.prime());
  FpPoly r(f.prime());
  for (const auto& [m, c] : f.terms()) {
    FpPoly::Monomial root;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (m[k] % p != 0) throw std::logic_error("pth_root: not a p-th power");
      root[k] = m[k] / p;
    }
    r.add_term(root, c);  // c^(1/p) = c on F_p
  }
  return r;
}

void merge_part(std::map<int, FpPoly>& parts, int exponent, const FpPoly& factor) {
  auto it = parts.find(exponent);
  if (it == parts.end())
    parts.emplace(exponent, factor);
  else
    it->second *= factor;
}

// f monic and nonconstant.
std::map<int, FpPoly> squarefree_parts(const FpPoly& f) {
  std::map<int, FpPoly> parts;
  std::optional<Var> main;
  FpPoly df(f.prime());
  for (std::size_t k = 0; k < kNumVars && !main; ++k) {
    df = derivative(f, static_cast<Var>(k));
    if (!df.is_zero()) main = static_cast<Var>(k);
  }
  if (!main) {
    // every exponent is a multiple of p: f is a p-th power
    const int p = static_cast<int>(f.prime());
    for (const auto& [e, part] : squarefree_parts(pth_root(f))) merge_part(parts, e * p, part);
    return parts;
  }
  FpPoly c = gcd_multivar(f, df);
  FpPoly w = *divide_exact(f, c);
  int i = 1;
  while (!w.is_constant()) {
    FpPoly y = gcd_multivar(w, c);
    FpPoly fac = *divide_exact(w, y);
    if (!fac.is_constant()) merge_part(parts, i, fac.monic());
    ++i;
    w = y;
    c = *divide_exact(c, y);
  }
  // leftover: factors with multiplicity divisible by p, or constant in `main`
  if (!c.is_constant())
    for (const auto& [e, part] : squarefree_parts(c.monic())) merge_part(parts, e, part);
  return parts;
}

}  // namespace

std::optional<FpPoly> divide_exact(const FpPoly& f, const FpPoly& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (f.prime() != g.prime()) throw std::invalid_argument("divide_exact: mixed characteristics");
  const std::uint64_t p = f.prime();
  const auto& lm = g.leading_monomial();
  const std::uint64_t lc_inv = mod_inv(g.leading_coefficient(), p);
  FpPoly r = f, q(p);
  while (!r.is_zero()) {
    const auto m = r.leading_monomial();
    if (!monomial_divides(lm, m)) return std::nullopt;
    FpPoly::Monomial qm;
    for (std::size_t k = 0; k < kNumVars; ++k) qm[k] = m[k] - lm[k];
    FpPoly term = FpPoly::monomial(p, qm, r.leading_coefficient() * lc_inv % p);
    r -= term * g;
    q += term;
  }
  return q;
}

bool divides(const FpPoly& g, const FpPoly& f) { return divide_exact(f, g).has_value(); }

std::vector<FpPoly> coefficients_in(const FpPoly& f, Var v) {
  const int k = static_cast<int>(v);
  std::vector<FpPoly> out(f.degree_in(v) + 1, FpPoly(f.prime()));
  for (const auto& [m, c] : f.terms()) {
    FpPoly::Monomial rest = m;
    rest[k] = 0;
    out[m[k]].add_term(rest, c);
  }
  return out;
}

FpPoly content_in(const FpPoly& f, Var v) {
  FpPoly c(f.prime());
  for (const auto& coeff : coefficients_in(f, v)) {
    if (coeff.is_zero()) continue;
    c = gcd_multivar(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

FpPoly gcd_multivar(const FpPoly& f, const FpPoly& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("gcd_multivar: mixed characteristics");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return FpPoly::constant(f.prime(), 1);
  const Var v = first_variable(f, g);
  const FpPoly cf = content_in(f, v);
  const FpPoly cg = content_in(g, v);
  const FpPoly c = gcd_multivar(cf, cg);
  FpPoly a = *divide_exact(f, cf);
  FpPoly b = *divide_exact(g, cg);
  if (a.degree_in(v) == 0 || b.degree_in(v) == 0) return c;
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  // primitive polynomial remainder sequence
  while (true) {
    FpPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c;
    a = std::move(b);
    b = primitive_part(r, v);
  }
  return (c * primitive_part(b, v)).monic();
}

FpPoly substitute(const FpPoly& f, const std::array<std::optional<FpPoly>, kNumVars>& images) {
  const std::uint64_t p = f.prime();
  FpPoly r(p);
  for (const auto& [m, c] : f.terms()) {
    FpPoly term = FpPoly::constant(p, static_cast<long long>(c));
    FpPoly::Monomial kept{};
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      if (images[k])
        term *= images[k]->pow(m[k]);
      else
        kept[k] = m[k];
    }
    r += term * FpPoly::monomial(p, kept, 1);
  }
  return r;
}

FpPoly SquarefreeDecomposition::reassemble(std::uint64_t p) const {
  FpPoly r = FpPoly::constant(p, static_cast<long long>(content));
  for (const auto& part : parts) r *= part.factor.pow(part.exponent);
  return r;
}

SquarefreeDecomposition squarefree_decomposition(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition d{f.leading_coefficient(), {}};
  if (f.is_constant()) return d;
  for (auto& [e, part] : squarefree_parts(f.monic())) d.parts.push_back({part.monic(), e});
  return d;
}

bool is_square_mod_constants(const FpPoly& f) {
  const auto d = squarefree_decomposition(f);
  return std::all_of(d.parts.begin(), d.parts.end(),
                     [](const SquarefreePart& p) { return p.exponent % 2 == 0; });
}

std::optional<FpPoly> square_root_mod_constants(const FpPoly& f) {
  const auto d = squarefree_decomposition(f);
  FpPoly h = FpPoly::constant(f.prime(), 1);
  for (const auto& part : d.parts) {
    if (part.exponent % 2 != 0) return std::nullopt;
    h *= part.factor.pow(part.exponent / 2);
  }
  return h;
}

std::array<std::uint64_t, 3> linear_coefficients(const FpPoly& l) {
  std::array<std::uint64_t, 3> c{};
  for (const auto& [m, v] : l.terms()) {
    int deg = 0;
    for (int e : m) deg += e;
    if (deg != 1 || m[3] || m[4] || m[5] || m[6])
      throw std::invalid_argument("not a linear form in x, y, z: " + l.to_string());
    for (int k = 0; k < 3; ++k)
      if (m[k] == 1) c[k] = v;
  }
  return c;
}

bool is_linear_form(const FpPoly& l) {
  if (l.is_zero()) return false;
  try {
    linear_coefficients(l);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

std::array<std::uint64_t, 3> cross(const std::array<std::uint64_t, 3>& a,
                                   const std::array<std::uint64_t, 3>& b, std::uint64_t p) {
  auto sub = [p](std::uint64_t x, std::uint64_t y) { return (x + p - y) % p; };
  return {sub(a[1] * b[2] % p, a[2] * b[1] % p), sub(a[2] * b[0] % p, a[0] * b[2] % p),
          sub(a[0] * b[1] % p, a[1] * b[0] % p)};
}

}  // namespace

std::array<std::uint64_t, 3> intersection_point(const FpPoly& l1, const FpPoly& l2) {
  const std::uint64_t p = l1.prime();
  auto pt = cross(linear_coefficients(l1), linear_coefficients(l2), p);
  // scale so the last nonzero coordinate is 1
  for (int k = 2; k >= 0; --k)
    if (pt[k] != 0) {
      const std::uint64_t inv = mod_inv(pt[k], p);
      for (auto& c : pt) c = c * inv % p;
      break;
    }
  return pt;
}

bool proportional(const FpPoly& l1, const FpPoly& l2) {
  auto c = intersection_point(l1, l2);
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

std::array<std::array<std::uint64_t, 3>, 2> line_basis(const FpPoly& l) {
  const std::uint64_t p = l.prime();
  const auto [a, b, c] = linear_coefficients(l);
  if (c != 0) {
    const std::uint64_t ci = mod_inv(c, p);
    return {{{1, 0, (p - a * ci % p) % p}, {0, 1, (p - b * ci % p) % p}}};
  }
  if (b != 0) {
    const std::uint64_t bi = mod_inv(b, p);
    return {{{1, (p - a * bi % p) % p, 0}, {0, 0, 1}}};
  }
  if (a != 0) return {{{0, 1, 0}, {0, 0, 1}}};
  throw std::invalid_argument("line_basis: zero linear form");
}

BinaryForm restrict_to_line(const FpPoly& f, const FpPoly& l) {
  static constexpr std::array<Var, 3> xyz{Var::x, Var::y, Var::z};
  if (!f.is_homogeneous(xyz)) throw std::invalid_argument("restrict_to_line: form is not homogeneous");
  for (Var v : {Var::u, Var::v, Var::t, Var::w})
    if (f.involves(v)) throw std::invalid_argument("restrict_to_line: form involves u, v, t or w");
  const std::uint64_t p = f.prime();
  const auto basis = line_basis(l);
  const FpPoly s = FpPoly::variable(p, Var::x);
  std::array<std::optional<FpPoly>, kNumVars> images;
  for (int k = 0; k < 3; ++k)
    images[k] = s.scaled(basis[0][k]) + FpPoly::constant(p, static_cast<long long>(basis[1][k]));
  return {substitute(f, images), f.total_degree()};
}

bool is_square_mod_constants(const BinaryForm& g) {
  if (g.is_zero()) throw std::domain_error("is_square_mod_constants: zero binary form");
  if (g.degree % 2 != 0 || g.multiplicity_at_infinity() % 2 != 0) return false;
  return is_square_mod_constants(g.dehomogenized);
}

std::uint64_t evaluate(const FpPoly& f, const std::array<std::uint64_t, 3>& point) {
  const std::uint64_t p = f.prime();
  std::uint64_t sum = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m[3] || m[4] || m[5] || m[6]) throw std::invalid_argument("evaluate: form involves u, v, t or w");
    std::uint64_t term = c;
    for (int k = 0; k < 3; ++k) term = term * mod_pow(point[k], m[k], p) % p;
    sum = (sum + term) % p;
  }
  return sum;
}

std::optional<std::vector<FpPoly>> split_into_linear_forms(const FpPoly& f) {
  static constexpr std::array<Var, 3> xyz{Var::x, Var::y, Var::z};
  if (f.is_zero() || !f.is_homogeneous(xyz))
    throw std::invalid_argument("split_into_linear_forms: need a nonzero form in x, y, z");
  for (Var v : {Var::u, Var::v, Var::t, Var::w})
    if (f.involves(v)) throw std::invalid_argument("split_into_linear_forms: form involves u, v, t or w");
  const int deg = f.total_degree();
  const std::uint64_t p = f.prime();
  if (deg == 0) return std::vector<FpPoly>{};
  if (deg == 1) return std::vector<FpPoly>{f};
  if (deg > 2) throw std::invalid_argument("split_into_linear_forms: degree above 2");

  auto coeff = [&](int i, int j) {
    FpPoly::Monomial m{};
    m[i] += 1;
    m[j] += 1;
    return f.coefficient(m);
  };
  auto var = [&](int i) { return FpPoly::variable(p, static_cast<Var>(i)); };

  for (int main = 0; main < 3; ++main) {
    const std::uint64_t a = coeff(main, main);
    if (a == 0) continue;
    const int j = (main + 1) % 3, k = (main + 2) % 3;
    // f = a X^2 + B X + C with B = bj Y + bk Z, C = cjj Y^2 + cjk Y Z + ckk Z^2
    const std::uint64_t bj = coeff(main, j), bk = coeff(main, k);
    const std::uint64_t cjj = coeff(j, j), cjk = coeff(j, k), ckk = coeff(k, k);
    auto sub = [p](std::uint64_t x, std::uint64_t y) { return (x + p - y % p) % p; };
    // discriminant B^2 - 4 a C as a binary form in Y, Z
    const std::uint64_t djj = sub(bj * bj % p, 4 * a % p * cjj % p);
    const std::uint64_t djk = sub(2 * bj % p * bk % p, 4 * a % p * cjk % p);
    const std::uint64_t dkk = sub(bk * bk % p, 4 * a % p * ckk % p);
    if (djk * djk % p != 4 * djj % p * dkk % p) return std::nullopt;
    std::uint64_t r = 0, s = 0;
    if (djj != 0) {
      auto root = mod_sqrt(djj, p);
      if (!root) return std::nullopt;
      r = *root;
      s = djk * mod_inv(2 * r % p, p) % p;
    } else if (dkk != 0) {
      auto root = mod_sqrt(dkk, p);
      if (!root) return std::nullopt;
      s = *root;
    }
    const FpPoly base = var(main).scaled(2 * a % p) + var(j).scaled(bj) + var(k).scaled(bk);
    const FpPoly root_form = var(j).scaled(r) + var(k).scaled(s);
    return std::vector<FpPoly>{(base - root_form).monic(), (base + root_form).monic()};
  }
  // no square terms: f = cxy xy + cxz xz + cyz yz
  const std::uint64_t cxy = coeff(0, 1), cxz = coeff(0, 2), cyz = coeff(1, 2);
  if (cyz == 0) return std::vector<FpPoly>{var(0), (var(1).scaled(cxy) + var(2).scaled(cxz)).monic()};
  if (cxz == 0) return std::vector<FpPoly>{var(1), (var(0).scaled(cxy) + var(2).scaled(cyz)).monic()};
  if (cxy == 0) return std::vector<FpPoly>{var(2), (var(0).scaled(cxz) + var(1).scaled(cyz)).monic()};
  return std::nullopt;
}

}  // namespace dp2::poly
