#include "dp2/galois_lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace dp2::lattice {

namespace {

std::vector<Integer> entries(const IntMatrix& m) {
  std::vector<Integer> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  const Integer d = exactalg::determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

bool MatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!(generators[i] * generators[j] == generators[j] * generators[i])) return false;
  return true;
}

bool MatrixGroup::preserves(const IntMatrix& gram) const {
  for (const auto& m : elements)
    if (!(m.transpose() * gram * m == gram)) return false;
  return true;
}

MatrixGroup group_closure(const std::vector<IntMatrix>& generators, std::size_t bound) {
  if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || !is_unimodular(g))
      throw std::invalid_argument("group_closure: generators must be unimodular of the same size");

  MatrixGroup group;
  group.generators = generators;
  std::map<std::vector<Integer>, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto insert = [&](IntMatrix m) {
    auto key = entries(m);
    if (seen.count(key)) return;
    if (group.elements.size() >= bound)
      throw NotFiniteError("group closure exceeds " + std::to_string(bound) + " elements");
    seen.emplace(std::move(key), group.elements.size());
    queue.push_back(group.elements.size());
    group.elements.push_back(std::move(m));
  };
  insert(IntMatrix::identity(n));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) insert(group.elements[i] * g);
  }
  return group;
}

IntLattice invariant_sublattice(const IntMatrix& m) {
  return exactalg::kernel_basis(m - IntMatrix::identity(m.rows()));
}

IntLattice invariant_sublattice(const MatrixGroup& g) {
  const std::size_t n = g.generators.front().rows();
  IntMatrix stacked(0, n);
  for (const auto& m : g.generators) stacked = exactalg::stack(stacked, m - IntMatrix::identity(n));
  return exactalg::kernel_basis(stacked);
}

std::vector<Orbit> orbits(const std::vector<Permutation>& generators, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : generators) {
    if (p.size() != n) throw std::invalid_argument("orbits: permutation of the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = find(i), b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, Orbit> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<Orbit> out;
  for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.front() < b.front(); });
  return out;
}

IntLattice saturated_span(const std::vector<std::vector<exactalg::Rational>>& vectors, std::size_t n) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("saturated_span: vector of wrong length");
    Integer den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntVector row;
    for (const auto& q : v) row.push_back(Integer(q.get_num() * (den / q.get_den())));
    rows.push_back(row);
  }
  return exactalg::saturate(IntLattice::span(rows, n));
}

IntVector class_sum(const Orbit& orbit, const std::vector<IntVector>& classes) {
  IntVector sum(classes.at(orbit.front()).size());
  for (std::size_t i : orbit) sum = exactalg::add(sum, classes.at(i));
  return sum;
}

IntLattice orbit_sum_sublattice(const std::vector<Orbit>& orbits, const std::vector<IntVector>& classes,
                                const IntVector& kappa) {
  std::vector<IntVector> gens{kappa};
  for (const auto& o : orbits) gens.push_back(class_sum(o, classes));
  return IntLattice::span(gens, kappa.size());
}

std::optional<IntMatrix> matrix_from_permutation(const std::vector<IntVector>& classes, const Permutation& perm) {
  if (classes.empty() || perm.size() != classes.size()) return std::nullopt;
  const std::size_t n = classes.front().size();
  // greedily pick classes spanning Q^n
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < classes.size() && chosen.size() < n; ++i) {
    std::vector<IntVector> rows;
    for (std::size_t j : chosen) rows.push_back(classes[j]);
    rows.push_back(classes[i]);
    if (exactalg::rank(IntMatrix::from_rows(rows, n)) == rows.size()) chosen.push_back(i);
  }
  if (chosen.size() < n) return std::nullopt;
  // M P = P' with P the chosen classes as columns, i.e. P^T M^T = P'^T
  std::vector<IntVector> p_rows, image_rows;
  for (std::size_t j : chosen) {
    p_rows.push_back(classes[j]);
    image_rows.push_back(classes[perm[j]]);
  }
  const IntMatrix pt = IntMatrix::from_rows(p_rows, n);
  const IntMatrix image_t = IntMatrix::from_rows(image_rows, n);
  std::vector<IntVector> m_rows;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = exactalg::solve_integral(pt, image_t.column(r));
    if (!row) return std::nullopt;
    m_rows.push_back(std::move(*row));
  }
  IntMatrix m = IntMatrix::from_rows(m_rows, n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (m * classes[i] != classes[perm[i]]) return std::nullopt;
  return m;
}

InvariantReport invariant_report(const geom::Dp2Surface& surface, std::size_t closure_bound) {
  InvariantReport report;
  report.surface_case = surface.surface_case();
  std::vector<Permutation> perms;
  for (const auto& g : geom::generators_for(report.surface_case)) {
    report.generator_names.push_back(g.to_string());
    report.generator_matrices.push_back(surface.galois_matrix(g));
    perms.push_back(surface.galois_permutation(g));
  }
  const MatrixGroup group = group_closure(report.generator_matrices, closure_bound);
  report.group_order = group.order();
  report.invariants = invariant_sublattice(group);
  report.kappa = surface.anticanonical_class();

  if (report.invariants.rank() == 2) {
    const IntVector standard = exactalg::make_vector({0, 0, 0, 0, 0, 0, -1, 1});
    const IntLattice candidate = IntLattice::span(std::vector<IntVector>{report.kappa, standard}, 8);
    const auto idx = exactalg::index_in(candidate, report.invariants);
    if (report.invariants.contains(standard) && idx && *idx == 1) {
      report.mu = standard;
      report.mu_is_standard = true;
    } else {
      // complete kappa to a basis b1, b2 of the invariants
      const IntVector b1 = report.invariants.basis().row(0), b2 = report.invariants.basis().row(1);
      const auto coords = exactalg::solve_rational(report.invariants.basis().transpose(), report.kappa);
      if (coords && (*coords)[0].get_den() == 1 && (*coords)[1].get_den() == 1) {
        Integer c1 = (*coords)[0].get_num(), c2 = (*coords)[1].get_num(), g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
        if (g == 1) report.mu = exactalg::add(exactalg::scaled(b1, -t), exactalg::scaled(b2, s));
      }
      report.warnings.push_back("-v7 + v8 does not complete -K to a basis of the invariants; reporting another complement");
    }
  }
  {
    std::vector<IntVector> gens{report.kappa};
    if (report.mu) gens.push_back(*report.mu);
    const auto idx = exactalg::index_in(IntLattice::span(gens, 8), report.invariants);
    report.distinguished_classes_are_basis = idx && *idx == 1;
  }

  std::vector<IntVector> classes;
  for (std::size_t i = 0; i < surface.curves().size(); ++i) classes.push_back(surface.class_of(i));
  report.orbits = orbits(perms, classes.size());
  for (const auto& o : report.orbits) report.orbit_labels_first.push_back(surface.curves()[o.front()].label.to_string());
  report.orbit_sums = orbit_sum_sublattice(report.orbits, classes, report.kappa);
  report.orbit_sum_index = exactalg::index_in(report.orbit_sums, report.invariants);
  return report;
}

InvariantReport invariant_report(SurfaceCase c, std::size_t closure_bound) {
  return invariant_report(geom::Dp2Surface(c), closure_bound);
}

}  // namespace dp2::lattice
