#include "dp2/cli_commands.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "dp2/arrangement_config.hpp"
#include "dp2/brauer_residue.hpp"
#include "dp2/galois_lattice.hpp"
#include "dp2/poly_parse.hpp"
#include "dp2/reference_data.hpp"
#include "dp2/refvar.hpp"

namespace dp2::cli {

namespace {

using nlohmann::json;
using exactalg::IntMatrix;
using exactalg::IntVector;
using exactalg::Integer;

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

json to_json(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

json to_json(const refvar::Point& p) { return json::array({p[0], p[1], p[2]}); }

std::string indent(const std::string& block, const std::string& pad = "  ") {
  std::istringstream in(block);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << pad << line << '\n';
  return out.str();
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

class Builder {
 public:
  Builder(std::string command, std::string surface_case = "")
      : command_(std::move(command)), case_(std::move(surface_case)) {}

  std::ostringstream& text() { return text_; }

  json& record(const std::string& kind) {
    json j;
    j["command"] = command_;
    if (!case_.empty()) j["case"] = case_;
    j["kind"] = kind;
    records_.push_back(std::move(j));
    return records_.back();
  }

  Report finish(bool verified, json extra = json::object()) {
    json& v = record("verdict");
    v["verdict"] = verified ? "pass" : "fail";
    for (auto& [k, val] : extra.items()) v[k] = val;
    text_ << "verdict: " << (verified ? "pass" : "fail") << '\n';
    return {verified ? kExitVerified : kExitFailed, text_.str(), std::move(records_)};
  }

  Report error(int code, const std::string& message) {
    json& v = record("error");
    v["verdict"] = code == kExitUsage ? "usage-error" : "fail";
    v["message"] = message;
    text_ << "error: " << message << '\n';
    return {code, text_.str(), std::move(records_)};
  }

 private:
  std::string command_;
  std::string case_;
  std::ostringstream text_;
  std::vector<json> records_;
};

std::string rule_text(const reference::ActionRule& rule) {
  static const char* fam[3] = {"t", "u", "v"};
  static const char* unit[4] = {"1", "i", "-1", "-i"};
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    os << "l[" << fam[k] << ",d,s] -> l[" << fam[k] << ",";
    if (rule.line_zeta_shift[k] % 8 == 0)
      os << "d";
    else
      os << unit[(rule.line_zeta_shift[k] / 2) % 4] << "*d";
    os << "," << (rule.line_flip[k] ? "-s" : "s") << "]   ";
  }
  os << "l[al,be,ga] -> l[";
  static const char* greek[3] = {"al", "be", "ga"};
  for (int k = 0; k < 3; ++k) {
    const int sh = rule.triple_i_shift[k] % 4;
    os << (k ? "," : "") << (sh == 0 ? "" : std::string(unit[sh]) + "*") << greek[k];
  }
  os << "]";
  return os.str();
}

std::vector<geom::GaloisGenerator> by_name(geom::SurfaceCase c) { return geom::generators_for(c); }

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::Text) return text;
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

Report cmd_lines(geom::SurfaceCase c, unsigned threads) {
  const std::string cs = geom::to_string(c);
  Builder b("lines", cs);
  auto& os = b.text();
  try {
    const geom::Dp2Surface s(c);
    const auto& curves = s.curves();
    os << "case " << cs << ": " << curves.size() << " exceptional curves\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
      os << std::setw(3) << i + 1 << "  " << std::left << std::setw(16) << curves[i].label.to_string() << std::right
         << curves[i].line_string(c) << ",  " << curves[i].w_string(c) << '\n';
      json& r = b.record("curve");
      r["index"] = i + 1;
      r["label"] = curves[i].label.to_string();
      r["line"] = curves[i].line_string(c);
      r["w"] = curves[i].w_string(c);
      r["vectors"] = {{"class", to_json(s.class_of(i))}};
    }

    const auto im = s.intersection_matrix(threads);
    os << "intersection matrix (rows and columns in the order above):\n";
    for (const auto& row : im) {
      for (int v : row) os << std::setw(3) << v;
      os << '\n';
    }
    b.record("intersection")["matrices"] = {{"intersection", im}};

    const IntMatrix& G = s.gram();
    const Integer det = exactalg::determinant(G);
    const Integer abs_det = abs(det);
    const IntVector& kappa = s.anticanonical_class();
    const Integer k2 = exactalg::bilinear(G, kappa, kappa);
    std::size_t path_mismatch = 0, bad_classes = 0, geiser_bad = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const auto& ci = s.class_of(i);
      if (exactalg::bilinear(G, ci, ci) != -1 || exactalg::bilinear(G, ci, kappa) != 1) ++bad_classes;
      std::size_t partners = 0;
      for (std::size_t j = 0; j < curves.size(); ++j) {
        if (exactalg::bilinear(G, ci, s.class_of(j)) != im[i][j]) ++path_mismatch;
        if (im[i][j] == 2) {
          ++partners;
          if (exactalg::add(ci, s.class_of(j)) != kappa) ++geiser_bad;
        }
      }
      if (partners != 1) ++geiser_bad;
    }
    const geom::SurfaceCase other = c == geom::SurfaceCase::Nonsquare ? geom::SurfaceCase::SquareD
                                                                      : geom::SurfaceCase::Nonsquare;
    const bool same_gram = geom::gram_basis(other) == G;
    std::set<std::vector<Integer>> distinct;
    for (std::size_t i = 0; i < curves.size(); ++i) distinct.insert(s.class_of(i));

    os << "Gram matrix of v1..v8:\n" << indent(G.to_string()) << "|det G| = " << abs_det.get_str() << '\n';
    os << "-K = " << exactalg::to_string(kappa) << ", (-K)^2 = " << k2.get_str() << '\n';
    os << "Gram matrix identical in the other case: " << (same_gram ? "yes" : "no") << '\n';
    os << "distinct classes: " << distinct.size() << '\n';
    os << "classes with E^2 = -1 and -K.E = 1: " << curves.size() - bad_classes << "/" << curves.size() << '\n';
    os << "pairings from classes agreeing with intersection numbers: " << curves.size() * curves.size() - path_mismatch
       << "/" << curves.size() * curves.size() << '\n';
    os << "Geiser pairs (one partner with E.E' = 2, E + E' = -K): " << (geiser_bad == 0 ? "all" : "broken") << '\n';
    json& g = b.record("gram");
    g["matrices"] = {{"gram", to_json(G)}};
    g["vectors"] = {{"kappa", to_json(kappa)}};
    g["abs_det"] = to_json(abs_det);
    g["kappa_square"] = to_json(k2);
    g["gram_same_in_other_case"] = same_gram;
    g["distinct_classes"] = distinct.size();
    g["bad_classes"] = bad_classes;
    g["pairing_mismatches"] = path_mismatch;
    g["geiser_failures"] = geiser_bad;
    const bool ok = curves.size() == 56 && distinct.size() == 56 && abs_det == 1 && k2 == 2 && bad_classes == 0 &&
                    path_mismatch == 0 && geiser_bad == 0 && same_gram;
    return b.finish(ok);
  } catch (const geom::AmbiguousTangency& e) {
    return b.error(kExitFailed, std::string("ambiguous tangency: ") + e.what());
  } catch (const std::exception& e) {
    return b.error(kExitFailed, e.what());
  }
}

Report cmd_galois(geom::SurfaceCase c) {
  const std::string cs = geom::to_string(c);
  Builder b("galois", cs);
  auto& os = b.text();
  try {
    const geom::Dp2Surface s(c);
    const IntMatrix& G = s.gram();
    const IntVector& kappa = s.anticanonical_class();
    bool ok = true;
    std::vector<std::pair<geom::GaloisGenerator, IntMatrix>> mats;

    os << "action tables (case " << cs << ")\n";
    for (const auto& g : by_name(c)) {
      const auto& rule = reference::action_rule(c, g.name);
      const auto perm = s.galois_permutation(g);
      json& r = b.record("action");
      r["generator"] = g.to_string();
      r["rule"] = rule_text(rule);
      json images = json::object();
      json mismatches = json::array();
      for (std::size_t i = 0; i < perm.size(); ++i) {
        const auto& label = s.curves()[i].label;
        const auto& image = s.curves()[perm[i]].label;
        images[label.to_string()] = image.to_string();
        const auto predicted = reference::apply_rule(rule, label);
        if (!(predicted == image))
          mismatches.push_back({{"curve", label.to_string()}, {"computed", image.to_string()},
                                {"table", predicted.to_string()}});
      }
      r["images"] = images;
      r["witnesses"] = mismatches;
      os << "  " << std::left << std::setw(12) << g.to_string() << std::right << rule_text(rule) << '\n';
      os << "  " << std::setw(12) << "" << perm.size() - mismatches.size() << "/" << perm.size()
         << " images agree with the table\n";
      for (const auto& m : mismatches)
        os << "    mismatch: " << m["curve"].get<std::string>() << " -> " << m["computed"].get<std::string>()
           << ", table says " << m["table"].get<std::string>() << '\n';
      ok = ok && mismatches.empty();
      mats.emplace_back(g, s.galois_matrix(g));
    }

    os << "matrices (column j = class of the image of v_j)\n";
    for (const auto& [g, M] : mats) {
      os << g.to_string() << " =\n" << indent(M.to_string());
      json& r = b.record("matrix");
      r["generator"] = g.to_string();
      r["matrices"] = {{g.to_string(), to_json(M)}};
      const auto& published = reference::published_matrices();
      auto it = std::find_if(published.begin(), published.end(),
                             [&](const auto& p) { return p.surface_case == c && p.generator == g.name; });
      if (it == published.end()) {
        os << "  no published matrix for this generator\n";
        r["golden"] = "none";
        continue;
      }
      json diff = json::array();
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
          if (M(i, j) != it->matrix(i, j))
            diff.push_back({{"row", i + 1}, {"col", j + 1}, {"computed", to_json(M(i, j))},
                            {"published", to_json(it->matrix(i, j))}});
      const bool transpose_match = M.transpose() == it->matrix;
      r["golden"] = diff.empty() ? "match" : "differs";
      r["transpose_matches_golden"] = transpose_match;
      r["witnesses"] = diff;
      if (diff.empty()) {
        os << "  matches the published matrix entry for entry\n";
      } else {
        os << "  differs from the published matrix in " << diff.size() << " cells"
           << (transpose_match ? " (the transpose matches)" : "") << '\n';
        for (const auto& d : diff)
          os << "    (" << d["row"] << "," << d["col"] << "): computed " << d["computed"] << ", published "
             << d["published"] << '\n';
        ok = false;
      }
    }

    os << "relations\n";
    json& rel = b.record("relations");
    for (const auto& [g, M] : mats) {
      const bool isometry = M.transpose() * G * M == G;
      const bool fixes = M * kappa == kappa;
      const unsigned order = g.name == geom::GaloisGenerator::Name::IotaSqrtD ? 2 : 4;
      const bool power_ok = exactalg::power(M, order) == IntMatrix::identity(8);
      os << "  " << std::left << std::setw(12) << g.to_string() << std::right << "M^T G M = G: " << pass_fail(isometry)
         << "   M(-K) = -K: " << pass_fail(fixes) << "   M^" << order << " = I: " << pass_fail(power_ok) << '\n';
      rel[g.to_string()] = {{"isometry", isometry}, {"fixes_kappa", fixes}, {"order_divides", order},
                            {"power_is_identity", power_ok}};
      ok = ok && isometry && fixes && power_ok;
    }
    bool commute = true;
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j)
        commute = commute && mats[i].second * mats[j].second == mats[j].second * mats[i].second;
    os << "  generators commute: " << pass_fail(commute) << '\n';
    rel["commute"] = commute;
    ok = ok && commute;
    if (c == geom::SurfaceCase::SquareD) {
      const IntMatrix& a = mats[0].second;
      const IntMatrix& bb = mats[1].second;
      const bool identity = mats[2].second == a * a * bb * bb;
      os << "  iota_sqrt_d = iota_a^2 iota_b^2: " << pass_fail(identity) << '\n';
      rel["sqrt_d_is_a2_b2"] = identity;
      ok = ok && identity;
    }
    return b.finish(ok);
  } catch (const std::exception& e) {
    return b.error(kExitFailed, e.what());
  }
}

Report cmd_invariants(geom::SurfaceCase c, std::size_t closure_bound) {
  const std::string cs = geom::to_string(c);
  Builder b("invariants", cs);
  auto& os = b.text();
  try {
    const geom::Dp2Surface s(c);
    const auto rep = lattice::invariant_report(s, closure_bound);
    const auto group = lattice::group_closure(rep.generator_matrices, closure_bound);

    std::vector<IntVector> reported{rep.kappa};
    if (rep.mu) reported.push_back(*rep.mu);
    for (const auto& row : rep.invariants.basis().row_vectors()) reported.push_back(row);
    bool fixed = true;
    for (const auto& m : group.elements)
      for (const auto& v : reported) fixed = fixed && m * v == v;

    os << "case " << cs << ": group of order " << rep.group_order << " generated by";
    for (const auto& n : rep.generator_names) os << ' ' << n;
    os << "\ninvariant lattice, rank " << rep.rank() << ", basis:\n";
    for (const auto& row : rep.invariants.basis().row_vectors()) os << "  " << exactalg::to_string(row) << '\n';
    os << "-K = " << exactalg::to_string(rep.kappa) << '\n';
    if (rep.mu) os << "mu = " << exactalg::to_string(*rep.mu) << (rep.mu_is_standard ? " (= -v7 + v8)" : "") << '\n';
    for (const auto& w : rep.warnings) os << "warning: " << w << '\n';
    os << "-K" << (rep.mu ? " and mu" : "") << " form a Z-basis of the invariants: "
       << (rep.distinguished_classes_are_basis ? "yes" : "no") << '\n';
    os << "reported classes fixed by every group element: " << (fixed ? "yes" : "no") << '\n';
    os << rep.orbits.size() << " orbits on the 56 curves:\n";
    json orbit_json = json::array();
    for (const auto& o : rep.orbits) {
      std::vector<IntVector> cls;
      for (std::size_t i = 0; i < s.curves().size(); ++i) cls.push_back(s.class_of(i));
      const IntVector sum = lattice::class_sum(o, cls);
      os << "  {";
      json labels = json::array();
      for (std::size_t k = 0; k < o.size(); ++k) {
        os << (k ? ", " : "") << s.curves()[o[k]].label.to_string();
        labels.push_back(s.curves()[o[k]].label.to_string());
      }
      os << "}  sum " << exactalg::to_string(sum) << '\n';
      orbit_json.push_back({{"curves", labels}, {"class_sum", to_json(sum)}});
    }
    os << "orbit-sum sublattice (with -K), basis:\n";
    for (const auto& row : rep.orbit_sums.basis().row_vectors()) os << "  " << exactalg::to_string(row) << '\n';
    os << "index in the invariants: " << (rep.orbit_sum_index ? rep.orbit_sum_index->get_str() : "infinite") << '\n';

    bool ok = fixed && rep.distinguished_classes_are_basis && rep.invariants.contains(rep.kappa);
    json checks = json::object();
    if (c == geom::SurfaceCase::SquareD) {
      const bool mu_ok = rep.mu_is_standard && rep.rank() == 2;
      const bool idx_ok = rep.orbit_sum_index && *rep.orbit_sum_index == 2;
      const bool mu_out = rep.mu && !rep.orbit_sums.contains(*rep.mu);
      const bool two_mu_in = rep.mu && rep.orbit_sums.contains(exactalg::scaled(*rep.mu, 2));
      // fixed spaces of the single generators and of the group, against the listed vectors
      const auto& gm = rep.generator_matrices;
      const bool span_a = lattice::invariant_sublattice(gm[0]) == lattice::saturated_span(reference::invariant_space_iota_a(), 8);
      const bool span_b = lattice::invariant_sublattice(gm[1]) == lattice::saturated_span(reference::invariant_space_iota_b(), 8);
      const bool span_g = rep.invariants == lattice::saturated_span(reference::invariant_space_intersection(), 8);
      const bool spans_ok = span_a && span_b && span_g;
      os << "rank 2 with mu = -v7 + v8: " << pass_fail(mu_ok) << "\norbit-sum index 2: " << pass_fail(idx_ok)
         << "\n2 mu in the orbit-sum lattice, mu not: " << pass_fail(mu_out && two_mu_in)
         << "\nfixed spaces of iota_a, iota_b and the group equal the listed spans: " << pass_fail(spans_ok) << '\n';
      checks = {{"rank2_standard_mu", mu_ok}, {"index_two", idx_ok}, {"mu_outside", mu_out},
                {"two_mu_inside", two_mu_in}, {"published_spans", spans_ok}};
      ok = ok && mu_ok && idx_ok && mu_out && two_mu_in && spans_ok;
    } else {
      const bool rank_ok = rep.rank() == 1 && rep.invariants == exactalg::IntLattice::span({rep.kappa}, 8);
      const bool idx_ok = rep.orbit_sum_index && *rep.orbit_sum_index == 1;
      os << "invariants = Z(-K): " << pass_fail(rank_ok) << "\norbit-sum index 1: " << pass_fail(idx_ok) << '\n';
      checks = {{"invariants_are_kappa", rank_ok}, {"index_one", idx_ok}};
      ok = ok && rank_ok && idx_ok;
    }

    json& r = b.record("invariants");
    r["group_order"] = rep.group_order;
    r["rank"] = rep.rank();
    r["matrices"] = {{"invariant_basis", to_json(rep.invariants.basis())},
                     {"orbit_sum_basis", to_json(rep.orbit_sums.basis())}};
    r["vectors"] = {{"kappa", to_json(rep.kappa)}};
    if (rep.mu) r["vectors"]["mu"] = to_json(*rep.mu);
    r["orbits"] = orbit_json;
    r["orbit_sum_index"] = rep.orbit_sum_index ? to_json(*rep.orbit_sum_index) : json(nullptr);
    r["checks"] = checks;
    r["warnings"] = rep.warnings;
    return b.finish(ok);
  } catch (const lattice::NotFiniteError& e) {
    return b.error(kExitFailed, e.what());
  } catch (const std::exception& e) {
    return b.error(kExitFailed, e.what());
  }
}

Report cmd_verify(const VerifyOptions& opts) {
  Builder b("verify");
  auto& os = b.text();
  refvar::ArrangementConfig cfg;
  try {
    cfg = opts.config_path ? refvar::load_config(*opts.config_path, opts.prime)
                           : refvar::parse_config(refvar::builtin_example_text(), opts.prime);
    if (opts.family_q) cfg = refvar::corollary_family(*opts.family_q, cfg);
    refvar::validate(cfg);
  } catch (const std::exception& e) {
    return b.error(kExitUsage, e.what());
  }
  try {
    const auto lines = cfg.lines();
    os << "arrangement over F_" << cfg.prime << ": g = " << cfg.g << ", n = " << cfg.n << ", m = " << cfg.m;
    if (cfg.q) os << " (q = " << *cfg.q << ")";
    os << '\n';
    json& arr = b.record("arrangement");
    arr["prime"] = cfg.prime;
    arr["g"] = cfg.g;
    arr["n"] = cfg.n;
    arr["m"] = cfg.m;
    if (cfg.q) arr["q"] = *cfg.q;
    json jl = json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      os << "  l" << i + 1 << " = " << lines[i].to_string() << (static_cast<int>(i) < cfg.n ? "  (A)" : "  (B)") << '\n';
      jl.push_back(lines[i].to_string());
    }
    arr["lines"] = jl;
    arr["f"] = cfg.f.to_string();
    os << "  f = " << cfg.f.to_string() << '\n';

    const auto report = refvar::verify(cfg);
    os << "conditions\n";
    for (const auto& c : report.conditions.conditions) {
      os << "  (" << c.id << ") " << c.statement << ": " << pass_fail(c.passed);
      if (!c.detail.empty()) os << "  [" << c.detail << "]";
      os << '\n';
      json w = json::array();
      for (const auto& wit : c.witnesses) {
        os << "      witness: " << wit.to_string() << '\n';
        json jw = {{"lines", wit.lines}, {"note", wit.note}};
        for (auto& idx : jw["lines"]) idx = idx.get<std::size_t>() + 1;
        if (wit.point) jw["point"] = to_json(*wit.point);
        w.push_back(jw);
      }
      json& r = b.record("condition");
      r["id"] = c.id;
      r["statement"] = c.statement;
      r["passed"] = c.passed;
      r["detail"] = c.detail;
      r["witnesses"] = w;
    }

    const auto& eq = *report.equation;
    os << "equation\n  " << eq.symbolic << "\n  bidegree (" << eq.bidegree[0] << ", " << eq.bidegree[1]
       << "), bihomogeneous: " << (eq.bihomogeneous ? "yes" : "no") << '\n';
    for (const auto& a : eq.audit) os << "    " << a << '\n';
    os << "  expanded: w^2 = " << eq.rhs.to_string() << '\n';
    json& je = b.record("equation");
    je["symbolic"] = eq.symbolic;
    je["expanded_rhs"] = eq.rhs.to_string();
    je["e1"] = eq.e1;
    je["e2"] = eq.e2;
    je["bidegree"] = eq.bidegree;
    je["bihomogeneous"] = eq.bihomogeneous;
    je["audit"] = eq.audit;

    if (report.alpha) {
      os << "residues of (A, B)\n";
      json res = json::array();
      for (const auto& rc : report.alpha->residues) {
        os << "  along " << rc.line << " (factor of " << rc.entry << "): v(A) = " << rc.residue.v_a
           << ", v(B) = " << rc.residue.v_b << ", sign " << rc.residue.sign << ", class "
           << rc.residue.value.to_string() << ", equals the restriction of " << (rc.entry == "A" ? "B" : "A") << ": "
           << (rc.matches_other_entry ? "yes" : "no") << ", " << (rc.nontrivial ? "nontrivial" : "TRIVIAL") << '\n';
        res.push_back({{"line", rc.line}, {"entry", rc.entry}, {"v_a", rc.residue.v_a}, {"v_b", rc.residue.v_b},
                       {"sign", rc.residue.sign}, {"representative", rc.residue.value.representative.to_string()},
                       {"restricted", rc.residue.value.restricted.dehomogenized.to_string()},
                       {"matches_other_entry", rc.matches_other_entry}, {"nontrivial", rc.nontrivial}});
      }
      os << "  ABC not a square (C = AB z^m (AB+F)): " << pass_fail(report.alpha->abc_nonsquare)
         << ", same square class as AB+F: " << pass_fail(report.alpha->abc_matches_ab_plus_f) << '\n';
      json& ja = b.record("alpha");
      ja["residues"] = res;
      ja["abc_nonsquare"] = report.alpha->abc_nonsquare;
      ja["abc_matches_ab_plus_f"] = report.alpha->abc_matches_ab_plus_f;
      ja["passed"] = report.alpha->passed();
    }
    if (report.local) {
      os << "local certificates\n";
      json lc = json::array();
      for (const auto& c : report.local->checks) {
        os << "  [" << c.bullet << "] " << c.where << ": " << pass_fail(c.passed) << "  " << c.detail << '\n';
        lc.push_back({{"bullet", c.bullet}, {"where", c.where}, {"passed", c.passed}, {"detail", c.detail}});
      }
      json& jc = b.record("local");
      jc["checks"] = lc;
      jc["passed"] = report.local->passed();
    }
    if (!report.conditions.passed()) os << "residue and local certificates skipped: conditions fail\n";

    const auto& ln = report.normalization;
    os << "local normal form: e1 = " << ln.e1 << ", e2 = " << ln.e2 << ", d = " << ln.d_choice << '\n';
    for (const auto& n : ln.notes) os << "  " << n << '\n';
    json& jn = b.record("normalization");
    jn["e1"] = ln.e1;
    jn["e2"] = ln.e2;
    jn["d"] = ln.d_choice;
    jn["parity_ok"] = ln.parity_ok;
    jn["fourth_power_ok"] = ln.fourth_power_ok;
    jn["notes"] = ln.notes;

    json failed = json::array();
    for (const auto& c : report.conditions.conditions)
      if (!c.passed) failed.push_back(c.id);
    return b.finish(report.passed(), {{"failed_conditions", failed}});
  } catch (const std::exception& e) {
    return b.error(kExitFailed, e.what());
  }
}

Report cmd_residue(const ResidueOptions& opts) {
  Builder b("residue");
  auto& os = b.text();
  poly::FpPoly A, B, at;
  std::optional<brauer::DivisorialValuation> v;
  try {
    const poly::PolyDomain dom{opts.prime, "xyz"};
    A = poly::parse(opts.a, dom);
    B = poly::parse(opts.b, dom);
    at = poly::parse(opts.at, dom);
    v.emplace(at);
  } catch (const std::exception& e) {
    return b.error(kExitUsage, e.what());
  }
  try {
    const auto r = brauer::residue(A, B, *v);
    const bool trivial = r.trivial;
    os << "symbol (" << A.to_string() << ", " << B.to_string() << ") over F_" << opts.prime << '\n';
    os << "valuation along " << v->to_string() << " = 0" << (v->is_infinity() ? " (line at infinity)" : "") << '\n';
    os << "v(A) = " << r.v_a << ", v(B) = " << r.v_b << ", sign (-1)^(v(A)v(B)) = " << r.sign
       << " (a constant; absorbed)\n";
    os << "residue representative: " << r.value.representative.to_string() << '\n';
    os << "restricted to the line: " << r.value.restricted.dehomogenized.to_string() << " (degree "
       << r.value.restricted.degree << ", multiplicity at infinity " << r.value.infinity_multiplicity << ")\n";
    os << "odd-exponent parts:";
    json odd = json::array();
    for (const auto& f : r.value.odd_parts) {
      os << ' ' << f.to_string();
      odd.push_back(f.to_string());
    }
    if (r.value.odd_parts.empty()) os << " none";
    os << "\nresidue is " << (trivial ? "trivial" : "nontrivial") << " modulo constants and squares\n";
    json& j = b.record("residue");
    j["A"] = A.to_string();
    j["B"] = B.to_string();
    j["at"] = v->to_string();
    j["prime"] = opts.prime;
    j["v_a"] = r.v_a;
    j["v_b"] = r.v_b;
    j["sign"] = r.sign;
    j["representative"] = r.value.representative.to_string();
    j["restricted"] = r.value.restricted.dehomogenized.to_string();
    j["restricted_degree"] = r.value.restricted.degree;
    j["infinity_multiplicity"] = r.value.infinity_multiplicity;
    j["witnesses"] = odd;
    j["trivial"] = trivial;
    const bool ok = !opts.expect_trivial || *opts.expect_trivial == trivial;
    if (!ok) os << "expected " << (*opts.expect_trivial ? "trivial" : "nontrivial") << '\n';
    return b.finish(ok, {{"trivial", trivial}});
  } catch (const brauer::ResidueUndefined& e) {
    return b.error(kExitFailed, std::string("residue undefined: ") + e.what() +
                                    "; replace A or B by a representative times a square coprime to the center");
  } catch (const std::exception& e) {
    return b.error(kExitUsage, e.what());
  }
}

}  // namespace dp2::cli
