#include "lgl/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "lgl/error.hpp"
#include "lgl/kernels.hpp"

namespace lgl {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || x == 0) {
    throw ConfigError(std::string(name) + " must be a positive integer, got '" + v + "'");
  }
  return static_cast<std::size_t>(x);
}

// All ordered bases of u, each extending the previous prefix by a vector
// outside its span, in lexicographic order of the tuples.
void ordered_bases(const std::vector<Vec>& uvecs, int r, std::vector<Vec>& prefix,
                   std::vector<std::vector<Vec>>& out) {
  if (static_cast<int>(prefix.size()) == r) {
    out.push_back(prefix);
    return;
  }
  const int p = uvecs.front().p();
  const int n = uvecs.front().n();
  Subspace span = rref_canonical(p, n, prefix);
  for (const Vec& v : uvecs) {
    if (span.contains(v)) continue;
    prefix.push_back(v);
    ordered_bases(uvecs, r, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Instance::Instance(int p, int n, const Subspace& u) : p_(p), n_(n), u_(u) {
  check_prime(p);
  if (n < 1 || n > kMaxDim) {
    throw ConfigError("n must be in [1, " + std::to_string(kMaxDim) + "]");
  }
  if (u.p() != p || u.n() != n) throw ConfigError("U does not live in GF(p)^n");
  if (u.dim() >= n) throw ConfigError("U must be a proper subspace (r < n)");
  u_ = rref_canonical(p, n, u.basis());
}

Instance Instance::standard(int p, int n, int r) {
  check_prime(p);
  if (n < 1 || n > kMaxDim) {
    throw ConfigError("n must be in [1, " + std::to_string(kMaxDim) + "]");
  }
  if (r < 0 || r >= n) throw ConfigError("r must satisfy 0 <= r < n");
  std::vector<Vec> rows;
  for (int i = 0; i < r; ++i) rows.push_back(Vec::unit(p, n, i));
  return Instance(p, n, rref_canonical(p, n, rows));
}

Subspace Instance::default_complement() const {
  auto w = u_.dim() == 0 ? full().basis() : extend_basis(u_.basis(), full());
  return rref_canonical(p_, n_, w);
}

std::uint64_t gl_order(int p, int k) {
  std::uint64_t r = 1;
  const std::uint64_t pk = sat_pow(static_cast<std::uint64_t>(p), k);
  for (int i = 0; i < k; ++i) r = sat_mul(r, pk - sat_pow(static_cast<std::uint64_t>(p), i));
  return r;
}

std::uint64_t predicted_order(const Instance& inst) {
  return sat_mul(gl_order(inst.p(), inst.r()),
                 sat_pow(static_cast<std::uint64_t>(inst.p()), inst.n() * inst.top()));
}

bool is_member(const Instance& inst, const Mat& m) {
  if (m.p() != inst.p() || m.n() != inst.n()) return false;
  return map_subspace(inst.u(), m) == inst.u();
}

int codim(const Instance& inst, const Mat& m) { return rank(m) - inst.r(); }

Element make_element(const Instance& inst, const Mat& m) {
  if (!is_member(inst, m)) throw PreconditionError(m.str() + " does not restrict to GL(U)");
  return {m, codim(inst, m)};
}

std::size_t default_enumeration_cap() { return env_size("LGL_CAP", kDefaultEnumerationCap); }

std::size_t default_rank_cap() { return env_size("LGL_RANK_CAP", 4); }

std::vector<Mat> enumerate_members(const Instance& inst, std::size_t cap) {
  const std::uint64_t order = predicted_order(inst);
  if (order > cap) {
    throw CapacityError("instance order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(cap),
                        order);
  }
  const int p = inst.p();
  const int n = inst.n();
  const int r = inst.r();
  std::vector<Vec> basis = inst.default_complement().basis();
  const int m = static_cast<int>(basis.size());
  basis.insert(basis.end(), inst.u().basis().begin(), inst.u().basis().end());

  std::vector<std::vector<Vec>> u_images;
  if (r == 0) {
    u_images.emplace_back();
  } else {
    std::vector<Vec> prefix;
    ordered_bases(inst.u().vectors(), r, prefix, u_images);
  }

  const std::uint64_t free_count = sat_pow(static_cast<std::uint64_t>(p), n * m);
  std::vector<Mat> out;
  out.reserve(order);
  std::vector<Vec> images(n);
  for (const auto& ui : u_images) {
    for (int i = 0; i < r; ++i) images[m + i] = ui[i];
    for (std::uint64_t idx = 0; idx < free_count; ++idx) {
      std::uint64_t rest = idx;
      for (int j = m - 1; j >= 0; --j) {
        images[j] = Vec::from_index(p, n, rest % sat_pow(static_cast<std::uint64_t>(p), n));
        rest /= sat_pow(static_cast<std::uint64_t>(p), n);
      }
      out.push_back(map_from_basis(basis, images));
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() != order) {
    throw InternalInconsistency("enumeration produced " + std::to_string(out.size()) +
                                " members, expected " + std::to_string(order));
  }
  return out;
}

std::vector<Mat> brute_force_members(const Instance& inst) {
  return kernels::omp::filter_matrices(inst.p(), inst.n(),
                                       [&inst](const Mat& m) { return is_member(inst, m); });
}

Semigroup::Semigroup(Instance inst, std::size_t cap) : inst_(std::move(inst)) {
  elements_ = enumerate_members(inst_, cap);
  index_.reserve(elements_.size());
  codims_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<Index>(i));
    codims_.push_back(lgl::codim(inst_, elements_[i]));
  }
  auto mul = kernels::omp::cayley_table(elements_, index_);
  table_ = SemigroupTable(elements_.size(), std::move(mul),
                          index_.at(Mat::identity(inst_.p(), inst_.n())));
}

std::optional<Index> Semigroup::find(const Mat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Semigroup::index_of(const Mat& m) const {
  auto i = find(m);
  if (!i) throw PreconditionError(m.str() + " is not an element of this semigroup");
  return *i;
}

IndexSet Semigroup::to_indices(const std::vector<Mat>& mats) const {
  IndexSet out;
  out.reserve(mats.size());
  for (const Mat& m : mats) out.push_back(index_of(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mat> Semigroup::to_mats(const IndexSet& set) const {
  std::vector<Mat> out;
  out.reserve(set.size());
  for (Index i : set) out.push_back(elements_[i]);
  return out;
}

}  // namespace lgl
