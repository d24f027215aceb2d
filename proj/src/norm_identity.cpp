#include "dp2/norm_identity.hpp"

namespace dp2::geom {

namespace {

enum Sym { kA, kB, kD, kSA, kU, kV, kT, kW };
const std::array<const char*, 8> kNames = {"A", "B", "d", "sA", "u", "v", "t", "w"};

NormPoly s(Sym k, int power = 1) { return NormPoly::symbol(k, power); }

NormPoly w_squared(long b_coefficient) {
  return s(kA) * s(kU, 4) + NormPoly(b_coefficient) * s(kB) * s(kV, 4) + s(kA) * s(kB) * s(kD, 2) * s(kT, 4);
}

}  // namespace

bool NormIdentityReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return !checks.empty();
}

NormPoly reduce_norm_relations(const NormPoly& p, long b_coefficient) {
  const NormPoly w2 = w_squared(b_coefficient);
  NormPoly out;
  for (const auto& [e, c] : p.terms()) {
    auto rest = e;
    rest[kSA] = e[kSA] % 2;
    rest[kW] = e[kW] % 2;
    rest[kA] += e[kSA] / 2;
    NormPoly term = NormPoly::monomial(rest, c);
    term *= w2.pow(static_cast<unsigned>(e[kW] / 2));
    out += term;
  }
  return out;
}

NormIdentityReport verify_norm_identity(long b_coefficient) {
  NormIdentityReport report;
  auto record = [&](std::string name, const NormPoly& lhs, const NormPoly& rhs) {
    const NormPoly l = reduce_norm_relations(lhs, b_coefficient);
    const NormPoly r = reduce_norm_relations(rhs, b_coefficient);
    report.checks.push_back({std::move(name), l.to_string(kNames), r.to_string(kNames), l == r});
  };

  const NormPoly i(poly::CycloElem::i());
  const NormPoly norm_target = s(kV, 4) + s(kA) * s(kD, 2) * s(kT, 4);
  const NormPoly beta = s(kV, 2) + i * s(kSA) * s(kD) * s(kT, 2);
  const NormPoly beta_conj = s(kV, 2) - i * s(kSA) * s(kD) * s(kT, 2);

  record("w^2 - A*u^4 = B*(v^4 + A*d^2*t^4)", s(kW, 2) - s(kA) * s(kU, 4), s(kB) * norm_target);
  record("(v^2 + i*sA*d*t^2)*(v^2 - i*sA*d*t^2) = v^4 + A*d^2*t^4", beta * beta_conj, norm_target);
  record("w^2 - A*u^4 = B*N(v^2 + i*sA*d*t^2)", s(kW, 2) - s(kA) * s(kU, 4), s(kB) * beta * beta_conj);
  return report;
}

}  // namespace dp2::geom
