#pragma once

// Instance files: one `key = value` per line, `#` starts a comment.
//
//   p = 2
//   n = 3
//   r = 1          # optional when u is given
//   u = 110        # basis row of U as base-p digits (0-9, then a-c); repeatable
//   cap = 4096     # enumeration cap
//   rank_cap = 4   # largest generating-set size searched
//
// Without `u` lines, U is spanned by the first r standard vectors.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lgl/gf.hpp"
#include "lgl/instance.hpp"

namespace lgl {

struct InstanceConfig {
  int p = 2;
  int n = 1;
  int r = 0;
  std::vector<Vec> u_basis;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t rank_cap = 4;

  Instance instance() const;
  std::string describe() const;
};

// Parses and validates; throws ConfigError with the offending line.
// Caps start from default_enumeration_cap() / default_rank_cap(), which
// honour LGL_CAP and LGL_RANK_CAP, and are replaced by keys in the text.
InstanceConfig parse_config(const std::string& text);
InstanceConfig load_config(const std::string& path);

Vec parse_digits(int p, const std::string& digits);

}  // namespace lgl
