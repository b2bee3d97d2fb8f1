#include "lgl/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lgl/error.hpp"

namespace lgl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_int(const std::string& key, const std::string& value, int line) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || x < 0) {
    throw ConfigError("line " + std::to_string(line) + ": '" + key + "' needs a non-negative integer, got '" +
                      value + "'");
  }
  return x;
}

}  // namespace

Vec parse_digits(int p, const std::string& digits) {
  Vec v(p, static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[i])));
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
    if (d < 0 || d >= p) throw ConfigError("'" + digits + "' is not a row of base-" + std::to_string(p) + " digits");
    v.set(static_cast<int>(i), d);
  }
  return v;
}

InstanceConfig parse_config(const std::string& text) {
  InstanceConfig cfg;
  cfg.cap = default_enumeration_cap();
  cfg.rank_cap = default_rank_cap();
  std::optional<long> p, n, r;
  std::vector<std::string> rows;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key == "p") {
      p = parse_int(key, value, line);
    } else if (key == "n") {
      n = parse_int(key, value, line);
    } else if (key == "r") {
      r = parse_int(key, value, line);
    } else if (key == "u") {
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ',')) {
        part = trim(part);
        if (!part.empty()) rows.push_back(part);
      }
    } else if (key == "cap") {
      cfg.cap = static_cast<std::size_t>(parse_int(key, value, line));
    } else if (key == "rank_cap") {
      cfg.rank_cap = static_cast<std::size_t>(parse_int(key, value, line));
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!p || !n) throw ConfigError("instance needs both p and n");
  if (*n < 1 || *n > kMaxDim) throw ConfigError("n must be in [1, " + std::to_string(kMaxDim) + "]");
  cfg.p = static_cast<int>(*p);
  cfg.n = static_cast<int>(*n);
  check_prime(cfg.p);
  for (const auto& row : rows) {
    Vec v = parse_digits(cfg.p, row);
    if (v.n() != cfg.n) throw ConfigError("basis row '" + row + "' does not have n digits");
    cfg.u_basis.push_back(v);
  }
  if (!rows.empty()) {
    const int dim = rref_canonical(cfg.p, cfg.n, cfg.u_basis).dim();
    if (r && *r != dim) {
      throw ConfigError("r = " + std::to_string(*r) + " but the u rows span dimension " + std::to_string(dim));
    }
    cfg.r = dim;
  } else {
    if (!r) throw ConfigError("instance needs r or u rows");
    cfg.r = static_cast<int>(*r);
  }
  if (cfg.r >= cfg.n) throw ConfigError("U must be proper: r < n");
  if (cfg.cap == 0 || cfg.rank_cap == 0) throw ConfigError("caps must be positive");
  return cfg;
}

InstanceConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open instance file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

Instance InstanceConfig::instance() const {
  if (u_basis.empty()) return Instance::standard(p, n, r);
  return Instance(p, n, rref_canonical(p, n, u_basis));
}

std::string InstanceConfig::describe() const {
  std::ostringstream os;
  os << "(p=" << p << ", n=" << n << ", r=" << r << ", U=" << instance().u().str() << ")";
  return os.str();
}

}  // namespace lgl
