#include "dp2/dp2geom.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

namespace dp2::geom {

std::string to_string(SurfaceCase c) {
  return c == SurfaceCase::Nonsquare ? "nonsquare" : "square-d";
}

std::optional<SurfaceCase> parse_surface_case(std::string_view name) {
  if (name == "nonsquare") return SurfaceCase::Nonsquare;
  if (name == "square-d") return SurfaceCase::SquareD;
  return std::nullopt;
}

std::array<const char*, 3> symbol_names(SurfaceCase c) {
  if (c == SurfaceCase::Nonsquare) return {"a", "b", "c"};
  return {"a", "b", "sqrt_d"};
}

CurveLabel CurveLabel::line(Family family, int delta, int sign) {
  if (family == Family::Triple) throw std::invalid_argument("CurveLabel::line: not a line family");
  delta = ((delta % 8) + 8) % 8;
  if (delta % 2 == 0) throw std::invalid_argument("CurveLabel::line: delta must be a primitive 8th root");
  CurveLabel l;
  l.family = family;
  l.delta = delta;
  l.sign = sign >= 0 ? 1 : -1;
  return l;
}

CurveLabel CurveLabel::triple_of(int alpha, int beta, int gamma) {
  auto m4 = [](int k) { return ((k % 4) + 4) % 4; };
  CurveLabel l;
  l.family = Family::Triple;
  l.delta = 0;
  l.sign = 0;
  l.triple = {m4(alpha), m4(beta), m4(gamma)};
  if (l.triple[2] >= 2) l.triple = {m4(alpha + 2), m4(beta + 2), m4(gamma + 2)};
  return l;
}

std::string CurveLabel::to_string() const {
  static const char* units[4] = {"1", "i", "-1", "-i"};
  std::ostringstream os;
  os << "l[";
  if (family == Family::Triple) {
    os << units[triple[0]] << ',' << units[triple[1]] << ',' << units[triple[2]];
  } else {
    os << (family == Family::T ? 't' : family == Family::U ? 'u' : 'v') << ",zeta";
    if (delta != 1) os << '^' << delta;
    os << ',' << (sign > 0 ? '+' : '-');
  }
  os << ']';
  return os.str();
}

SplitScalar QuadraticForm::evaluate(const Point& p) const {
  return coeffs[UU] * p[0] * p[0] + coeffs[VV] * p[1] * p[1] + coeffs[TT] * p[2] * p[2] +
         coeffs[UV] * p[0] * p[1] + coeffs[VT] * p[1] * p[2] + coeffs[UT] * p[0] * p[2];
}

SplitScalar QuadraticForm::polar(const Point& x, const Point& y) const {
  const Point s{x[0] + y[0], x[1] + y[1], x[2] + y[2]};
  return evaluate(s) - evaluate(x) - evaluate(y);
}

QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm r;
  for (std::size_t k = 0; k < 6; ++k) r.coeffs[k] = a.coeffs[k] - b.coeffs[k];
  return r;
}

namespace {

const char* kCoordNames[3] = {"u", "v", "t"};
const char* kQuadNames[6] = {"u^2", "v^2", "t^2", "u*v", "v*t", "u*t"};

SplitScalar sym(std::size_t k, int power = 1) { return SplitScalar::symbol(k, power); }
SplitScalar unit(const CycloElem& c) { return SplitScalar(c); }

// c as a Laurent monomial in the case's symbols
SplitScalar c_root(SurfaceCase sc) {
  return sc == SurfaceCase::Nonsquare ? sym(2) : sym(0) * sym(1) * sym(2);
}

Point cross(const LinearForm& a, const LinearForm& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string term_sum(const std::vector<std::pair<SplitScalar, const char*>>& terms, SurfaceCase sc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [coeff, name] : terms) {
    if (coeff.is_zero()) continue;
    std::string cs = coeff.to_string(symbol_names(sc));
    const bool negative = coeff.is_monomial() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << '-';
    if (cs == "1")
      os << name;
    else if (coeff.is_monomial())
      os << cs << '*' << name;
    else
      os << '(' << cs << ")*" << name;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string ExceptionalCurve::line_string(SurfaceCase sc) const {
  // strip the common monomial factor of the coefficients for display
  std::array<int, 3> common{};
  bool first = true;
  for (const auto& c : line) {
    if (c.is_zero()) continue;
    for (const auto& [e, v] : c.terms())
      for (std::size_t k = 0; k < 3; ++k) common[k] = first ? e[k] : std::min(common[k], e[k]);
    first = false;
  }
  SplitScalar::Exponents neg{};
  for (std::size_t k = 0; k < 3; ++k) neg[k] = -common[k];
  const SplitScalar scale = SplitScalar::monomial(neg);
  std::vector<std::pair<SplitScalar, const char*>> terms;
  for (std::size_t k = 0; k < 3; ++k) terms.emplace_back(line[k] * scale, kCoordNames[k]);
  return term_sum(terms, sc) + " = 0";
}

std::string ExceptionalCurve::w_string(SurfaceCase sc) const {
  std::vector<std::pair<SplitScalar, const char*>> terms;
  for (std::size_t k = 0; k < 6; ++k) terms.emplace_back(w_value.coeffs[k], kQuadNames[k]);
  return "w = " + term_sum(terms, sc);
}

std::vector<ExceptionalCurve> enumerate_curves(SurfaceCase sc) {
  using F = CurveLabel::Family;
  using Q = QuadraticForm;
  const SplitScalar a = sym(0), b = sym(1), c = c_root(sc);
  std::vector<ExceptionalCurve> out;
  out.reserve(56);
  for (F family : {F::T, F::U, F::V}) {
    for (int delta : {1, 3, 5, 7}) {
      const SplitScalar d = unit(CycloElem::zeta(delta));
      for (int sign : {1, -1}) {
        ExceptionalCurve curve;
        curve.label = CurveLabel::line(family, delta, sign);
        const SplitScalar s(sign);
        switch (family) {
          case F::T:
            curve.line = {d * a, b, SplitScalar()};
            curve.w_value.coeffs[Q::TT] = s * c * c;
            break;
          case F::U:
            curve.line = {SplitScalar(), d * b, c};
            curve.w_value.coeffs[Q::UU] = s * a * a;
            break;
          case F::V:
            curve.line = {a, SplitScalar(), d * c};
            curve.w_value.coeffs[Q::VV] = s * b * b;
            break;
          case F::Triple:
            break;
        }
        out.push_back(std::move(curve));
      }
    }
  }
  const SplitScalar root2 = unit(CycloElem::sqrt2());
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int beta = 0; beta < 4; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma) {
        auto ipow = [](int k) { return SplitScalar(CycloElem::zeta(2 * k)); };
        ExceptionalCurve curve;
        curve.label = CurveLabel::triple_of(alpha, beta, gamma);
        curve.line = {ipow(alpha) * a, ipow(beta) * b, ipow(gamma) * c};
        curve.w_value.coeffs[Q::UV] = root2 * ipow(alpha + beta) * a * b;
        curve.w_value.coeffs[Q::VT] = root2 * ipow(beta + gamma) * b * c;
        curve.w_value.coeffs[Q::UT] = root2 * ipow(alpha + gamma) * a * c;
        out.push_back(std::move(curve));
      }
  return out;
}

bool lines_proportional(const LinearForm& l1, const LinearForm& l2) {
  const Point c = cross(l1, l2);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

std::array<SplitScalar, 3> restrict_to_line(const QuadraticForm& q, const LinearForm& l) {
  // eliminate a coordinate whose coefficient is a unit, preferring t, v, u
  std::optional<std::size_t> pivot;
  for (std::size_t j : {2u, 1u, 0u})
    if (!l[j].is_zero() && l[j].is_monomial()) {
      pivot = j;
      break;
    }
  if (!pivot) throw std::domain_error("restrict_to_line: no invertible coefficient in the linear form");
  const std::size_t j = *pivot;
  const SplitScalar inv = l[j].monomial_inverse();
  std::array<Point, 2> spanning{};
  std::size_t slot = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == j) continue;
    Point p{};
    p[k] = SplitScalar(1);
    p[j] = -(l[k] * inv);
    spanning[slot++] = p;
  }
  return {q.evaluate(spanning[0]), q.polar(spanning[0], spanning[1]), q.evaluate(spanning[1])};
}

namespace {

bool restriction_vanishes(const QuadraticForm& q, const LinearForm& l) {
  const auto r = restrict_to_line(q, l);
  return r[0].is_zero() && r[1].is_zero() && r[2].is_zero();
}

}  // namespace

bool same_curve(const ExceptionalCurve& c1, const ExceptionalCurve& c2) {
  return lines_proportional(c1.line, c2.line) && restriction_vanishes(c1.w_value - c2.w_value, c1.line);
}

int intersection_number(const ExceptionalCurve& c1, const ExceptionalCurve& c2) {
  if (lines_proportional(c1.line, c2.line)) {
    // the difference of the w-values cuts a binary quadratic on the line
    return restriction_vanishes(c1.w_value - c2.w_value, c1.line) ? -1 : 2;
  }
  const Point p = cross(c1.line, c2.line);
  const SplitScalar w1 = c1.w_value.evaluate(p);
  const SplitScalar w2 = c2.w_value.evaluate(p);
  if (!(w1 == w2)) return 0;
  if (w1.is_zero())
    throw AmbiguousTangency("intersection of " + c1.label.to_string() + " and " + c2.label.to_string() +
                            " lies on the branch locus");
  return 1;
}

std::string GaloisGenerator::to_string() const {
  switch (name) {
    case Name::IotaA: return "iota_a";
    case Name::IotaB: return "iota_b";
    case Name::IotaC: return "iota_c";
    case Name::IotaSqrtD: return "iota_sqrt_d";
  }
  return "?";
}

bool GaloisGenerator::compatible_with(SurfaceCase c) const {
  if (name == Name::IotaC) return c == SurfaceCase::Nonsquare;
  if (name == Name::IotaSqrtD) return c == SurfaceCase::SquareD;
  return true;
}

std::vector<GaloisGenerator> generators_for(SurfaceCase c) {
  if (c == SurfaceCase::Nonsquare)
    return {GaloisGenerator::iota_a(), GaloisGenerator::iota_b(), GaloisGenerator::iota_c()};
  return {GaloisGenerator::iota_a(), GaloisGenerator::iota_b(), GaloisGenerator::iota_sqrt_d()};
}

ExceptionalCurve apply_to_equations(const GaloisGenerator& g, const ExceptionalCurve& curve) {
  const CycloElem u = CycloElem::zeta(g.zeta_power);
  ExceptionalCurve image = curve;
  for (auto& c : image.line) c = c.scale_symbol(g.symbol, u);
  for (auto& c : image.w_value.coeffs) c = c.scale_symbol(g.symbol, u);
  return image;
}

std::vector<std::vector<CurveLabel>> basis_labels() {
  using F = CurveLabel::Family;
  const CurveLabel iii = CurveLabel::triple_of(1, 1, 1);
  return {{CurveLabel::line(F::U, 1, 1)},  {CurveLabel::line(F::U, 3, -1)},
          {CurveLabel::line(F::V, 1, 1)},  {CurveLabel::line(F::V, 3, -1)},
          {CurveLabel::line(F::T, 1, 1)},  {CurveLabel::line(F::T, 3, -1)},
          {iii},
          {CurveLabel::line(F::T, 7, -1), CurveLabel::line(F::T, 3, -1), iii}};
}

Dp2Surface::Dp2Surface(SurfaceCase c) : case_(c), curves_(enumerate_curves(c)) {
  for (const auto& labels : basis_labels()) {
    std::vector<std::size_t> idx;
    for (const auto& l : labels) idx.push_back(index_of(l));
    basis_.push_back(std::move(idx));
  }
  const std::size_t n = basis_.size();
  gram_ = IntMatrix(n, n);
  IntVector degrees(n);
  for (std::size_t i = 0; i < n; ++i) {
    degrees[i] = static_cast<long>(basis_[i].size());  // -K meets each exceptional curve once
    for (std::size_t j = 0; j < n; ++j) {
      long sum = 0;
      for (std::size_t x : basis_[i])
        for (std::size_t y : basis_[j]) sum += intersection_number(curves_[x], curves_[y]);
      gram_(i, j) = sum;
    }
  }
  auto kappa = exactalg::solve_integral(gram_, degrees);
  if (!kappa) throw std::logic_error("anticanonical class is not integral");
  kappa_ = std::move(*kappa);
  classes_.reserve(curves_.size());
  for (const auto& curve : curves_) classes_.push_back(class_in_basis(curve));
}

std::size_t Dp2Surface::index_of(const CurveLabel& label) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].label == label) return i;
  throw std::out_of_range("no curve labelled " + label.to_string());
}

PicClass Dp2Surface::class_in_basis(const ExceptionalCurve& c) const {
  IntVector rhs(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    long sum = 0;
    for (std::size_t y : basis_[j]) sum += intersection_number(c, curves_[y]);
    rhs[j] = sum;
  }
  auto x = exactalg::solve_integral(gram_, rhs);
  if (!x) throw std::logic_error("class of " + c.label.to_string() + " is not integral");
  return *x;
}

void Dp2Surface::require_compatible(const GaloisGenerator& g) const {
  if (!g.compatible_with(case_))
    throw std::invalid_argument(g.to_string() + " does not act in the " + to_string(case_) + " case");
}

std::size_t Dp2Surface::apply_galois(const GaloisGenerator& g, std::size_t index) const {
  require_compatible(g);
  const ExceptionalCurve image = apply_to_equations(g, curves_[index]);
  for (std::size_t j = 0; j < curves_.size(); ++j)
    if (same_curve(image, curves_[j])) return j;
  throw NoMatchError("image of " + curves_[index].label.to_string() + " under " + g.to_string() +
                     " is not among the 56 curves");
}

const ExceptionalCurve& Dp2Surface::apply_galois(const GaloisGenerator& g, const ExceptionalCurve& c) const {
  return curves_[apply_galois(g, index_of(c.label))];
}

std::vector<std::size_t> Dp2Surface::galois_permutation(const GaloisGenerator& g) const {
  std::vector<std::size_t> perm(curves_.size());
  for (std::size_t i = 0; i < curves_.size(); ++i) perm[i] = apply_galois(g, i);
  return perm;
}

IntMatrix Dp2Surface::galois_matrix(const GaloisGenerator& g) const {
  std::vector<IntVector> columns;
  for (const auto& summands : basis_) {
    IntVector col(basis_.size());
    for (std::size_t idx : summands) col = exactalg::add(col, classes_[apply_galois(g, idx)]);
    columns.push_back(std::move(col));
  }
  return IntMatrix::from_columns(columns, basis_.size());
}

std::vector<std::vector<int>> Dp2Surface::intersection_matrix(unsigned threads) const {
  const std::size_t n = curves_.size();
  if (threads == 0) threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads)
          for (std::size_t j = 0; j < n; ++j) m[i][j] = intersection_number(curves_[i], curves_[j]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return m;
}

IntMatrix gram_basis(SurfaceCase c) { return Dp2Surface(c).gram(); }

PicClass anticanonical_class(SurfaceCase c) { return Dp2Surface(c).anticanonical_class(); }

IntMatrix galois_matrix(const GaloisGenerator& g, SurfaceCase c) { return Dp2Surface(c).galois_matrix(g); }

}  // namespace dp2::geom
