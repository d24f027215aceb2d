#include "dp2/arrangement_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dp2/poly_parse.hpp"

namespace dp2::refvar {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long parse_integer(const Entry& e, const std::string& key) {
  long long v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigParseError(key + " must be an integer, got '" + e.value + "'", e.line);
  return v;
}

FpPoly parse_poly(const std::string& text, std::uint64_t p, std::size_t line, const std::string& key) {
  try {
    return poly::parse(text, poly::PolyDomain{p, "xyz"});
  } catch (const poly::ParseError& err) {
    throw ConfigParseError(key + ": " + err.what(), line);
  }
}

std::vector<FpPoly> parse_factor_list(const Entry& e, std::uint64_t p, const std::string& key) {
  std::vector<FpPoly> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigParseError(key + ": empty list entry", e.line);
    const FpPoly f = parse_poly(item, p, e.line, key);
    if (f.is_zero() || !f.is_homogeneous()) throw ConfigParseError(key + ": '" + item + "' is not a nonzero form", e.line);
    const int deg = f.total_degree();
    if (deg == 1) {
      out.push_back(f);
    } else if (deg == 2) {
      auto split = poly::split_into_linear_forms(f);
      if (!split)
        throw ConfigParseError(key + ": '" + item + "' does not split into linear forms over F_" + std::to_string(p) +
                                   "; try a different prime",
                               e.line);
      for (auto& l : *split) out.push_back(std::move(l));
    } else {
      throw ConfigParseError(key + ": '" + item + "' has degree " + std::to_string(deg) +
                                 "; list linear factors or quadratics",
                             e.line);
    }
  }
  return out;
}

}  // namespace

ArrangementConfig parse_config(std::string_view text, std::optional<std::uint64_t> prime_override) {
  static const std::vector<std::string> kKeys = {"prime", "g", "n", "m", "q", "a_factors", "b_factors", "f"};
  std::map<std::string, Entry> entries;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ConfigParseError("malformed section header", lineno);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigParseError("expected key = value", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigParseError("unknown key '" + key + "'", lineno);
    if (value.empty()) throw ConfigParseError("empty value for '" + key + "'", lineno);
    if (!entries.emplace(key, Entry{value, lineno}).second) throw ConfigParseError("duplicate key '" + key + "'", lineno);
  }
  for (const char* key : {"g", "n", "a_factors", "b_factors", "f"})
    if (!entries.count(key)) throw ConfigParseError(std::string("missing key '") + key + "'", 0);
  if (!entries.count("m") && !entries.count("q")) throw ConfigParseError("one of 'm' or 'q' is required", 0);
  if (!prime_override && !entries.count("prime")) throw ConfigParseError("missing key 'prime'", 0);

  ArrangementConfig cfg;
  if (prime_override) {
    cfg.prime = *prime_override;
  } else {
    const Entry& e = entries.at("prime");
    const long long p = parse_integer(e, "prime");
    if (p < 3 || p % 2 == 0 || !poly::is_prime(static_cast<std::uint64_t>(p)))
      throw ConfigParseError("prime must be an odd prime", e.line);
    cfg.prime = static_cast<std::uint64_t>(p);
  }
  cfg.g = static_cast<int>(parse_integer(entries.at("g"), "g"));
  cfg.n = static_cast<int>(parse_integer(entries.at("n"), "n"));
  if (entries.count("q")) {
    cfg.q = static_cast<int>(parse_integer(entries.at("q"), "q"));
    if (*cfg.q < 4) throw ConfigParseError("q must be at least 4", entries.at("q").line);
    cfg.m = 2 * *cfg.q - 8;
    if (entries.count("m") && parse_integer(entries.at("m"), "m") != cfg.m)
      throw ConfigParseError("m disagrees with q (m = 2q - 8)", entries.at("m").line);
  } else {
    cfg.m = static_cast<int>(parse_integer(entries.at("m"), "m"));
  }
  cfg.a_factors = parse_factor_list(entries.at("a_factors"), cfg.prime, "a_factors");
  cfg.b_factors = parse_factor_list(entries.at("b_factors"), cfg.prime, "b_factors");
  const Entry& fe = entries.at("f");
  cfg.f = parse_poly(fe.value, cfg.prime, fe.line, "f");
  return cfg;
}

ArrangementConfig load_config(const std::string& path, std::optional<std::uint64_t> prime_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), prime_override);
}

std::string builtin_example_text() {
  return "[arrangement]\n"
         "prime = 13\n"
         "g = 2\n"
         "n = 2\n"
         "m = 0\n"
         "a_factors = x^2+x*z+z^2\n"
         "b_factors = y^2+y*z+z^2\n"
         "f = (x+y)^2\n";
}

std::string to_config_text(const ArrangementConfig& cfg) {
  std::ostringstream os;
  auto list = [](const std::vector<FpPoly>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + fs[i].to_string();
    return s;
  };
  os << "[arrangement]\n";
  os << "prime = " << cfg.prime << "\n";
  os << "g = " << cfg.g << "\n";
  os << "n = " << cfg.n << "\n";
  if (cfg.q)
    os << "q = " << *cfg.q << "\n";
  else
    os << "m = " << cfg.m << "\n";
  os << "a_factors = " << list(cfg.a_factors) << "\n";
  os << "b_factors = " << list(cfg.b_factors) << "\n";
  os << "f = " << cfg.f.to_string() << "\n";
  return os.str();
}

}  // namespace dp2::refvar
