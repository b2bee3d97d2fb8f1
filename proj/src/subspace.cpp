#include "lgl/subspace.hpp"

#include <algorithm>
#include <sstream>

#include <boost/container/small_vector.hpp>

#include "lgl/error.hpp"

namespace lgl {

namespace {

// Wide enough for an n x n block plus n tracking columns.
using Row = boost::container::small_vector<int, 2 * kMaxDim>;

// Reduced row echelon form, pivoting only within the first `pivot_cols`
// columns. Trailing columns ride along (used to track row combinations).
struct Echelon {
  std::vector<Row> rows;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon reduce(std::vector<Row> rows, int p, int pivot_cols) {
  Echelon e;
  int rank = 0;
  const int m = static_cast<int>(rows.size());
  for (int col = 0; col < pivot_cols && rank < m; ++col) {
    int sel = -1;
    for (int r = rank; r < m; ++r) {
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    const int inv = inverse_mod(rows[rank][col], p);
    for (int& x : rows[rank]) x = x * inv % p;
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        rows[r][j] = mod(rows[r][j] - f * rows[rank][j], p);
      }
    }
    e.pivots.push_back(col);
    ++rank;
  }
  e.rows = std::move(rows);
  return e;
}

Row to_row(const Vec& v) {
  Row r(v.n());
  for (int i = 0; i < v.n(); ++i) r[i] = v[i];
  return r;
}

Vec to_vec(int p, const Row& r, int begin, int len) {
  Vec v(p, len);
  for (int i = 0; i < len; ++i) v.set(i, r[begin + i]);
  return v;
}

// Solution structure of sum_i c_i rows[i] = target over coefficient vectors c.
struct Combination {
  std::vector<Row> kernel;        // basis of {c : sum c_i rows[i] = 0}
  std::optional<Row> particular;  // lexicographically least solution
};

Combination solve(int p, int n, std::span<const Vec> rows, const std::optional<Vec>& target) {
  const int k = static_cast<int>(rows.size());
  std::vector<Row> aug;
  aug.reserve(k);
  for (int i = 0; i < k; ++i) {
    Row r = to_row(rows[i]);
    r.resize(n + k, 0);
    r[n + i] = 1;
    aug.push_back(std::move(r));
  }
  Echelon e = reduce(std::move(aug), p, n);
  Combination out;
  for (int i = e.rank(); i < k; ++i) {
    out.kernel.emplace_back(e.rows[i].begin() + n, e.rows[i].end());
  }
  // Canonicalize the kernel so the particular solution can be reduced
  // against its pivots.
  Echelon ke = reduce(out.kernel, p, k);
  out.kernel.assign(ke.rows.begin(), ke.rows.begin() + ke.rank());
  if (!target) return out;

  Row residual = to_row(*target);
  Row combo(k, 0);
  for (int j = 0; j < e.rank(); ++j) {
    const int c = residual[e.pivots[j]];
    if (c == 0) continue;
    for (int col = 0; col < n; ++col) residual[col] = mod(residual[col] - c * e.rows[j][col], p);
    for (int i = 0; i < k; ++i) combo[i] = mod(combo[i] + c * e.rows[j][n + i], p);
  }
  if (std::any_of(residual.begin(), residual.end(), [](int x) { return x != 0; })) {
    return out;
  }
  // Zeroing the kernel pivot coordinates gives the lexicographically least
  // point of combo + kernel.
  for (int j = 0; j < ke.rank(); ++j) {
    const int c = combo[ke.pivots[j]];
    if (c == 0) continue;
    for (int i = 0; i < k; ++i) combo[i] = mod(combo[i] - c * out.kernel[j][i], p);
  }
  out.particular = std::move(combo);
  return out;
}

std::vector<Vec> mat_rows(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.n());
  for (int i = 0; i < m.n(); ++i) rows.push_back(m.row(i));
  return rows;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Subspace::Subspace(int p, int n) : p_(p), n_(n) {
  check_prime(p);
  if (n < 0 || n > kMaxDim) throw ConfigError("subspace ambient dimension out of range");
}

Subspace Subspace::full(int p, int n) {
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Vec::unit(p, n, i));
  return rref_canonical(p, n, rows);
}

Subspace rref_canonical(int p, int n, std::span<const Vec> rows) {
  Subspace s(p, n);
  std::vector<Row> data;
  data.reserve(rows.size());
  for (const Vec& v : rows) {
    if (v.p() != p || v.n() != n) throw ConfigError("row modulus or length mismatch");
    data.push_back(to_row(v));
  }
  Echelon e = reduce(std::move(data), p, n);
  for (int i = 0; i < e.rank(); ++i) s.basis_.push_back(to_vec(p, e.rows[i], 0, n));
  s.pivots_ = e.pivots;
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.p() != p_ || v.n() != n_) throw ConfigError("vector does not live in this space");
  Vec r = v;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const int c = r[pivots_[j]];
    if (c != 0) r = r - basis_[j].scaled(c);
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& s) const {
  return std::all_of(s.basis().begin(), s.basis().end(),
                     [this](const Vec& v) { return contains(v); });
}

std::vector<Vec> Subspace::vectors() const {
  // With an RREF basis, coefficient order and vector order coincide.
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(p_), dim());
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec coeff = Vec::from_index(p_, dim(), idx);
    Vec v(p_, n_);
    for (int i = 0; i < dim(); ++i) {
      if (coeff[i] != 0) v = v + basis_[i].scaled(coeff[i]);
    }
    out.push_back(v);
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return rref_canonical(p_, n_, rows);
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = p_ <=> o.p_; c != 0) return c;
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  return basis_ <=> o.basis_;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < basis_.size(); ++i) os << (i ? "," : "") << basis_[i];
  os << '>';
  return os.str();
}

Subspace image(const Mat& m) {
  auto rows = mat_rows(m);
  return rref_canonical(m.p(), m.n(), rows);
}

Subspace kernel(const Mat& m) {
  auto rows = mat_rows(m);
  Combination c = solve(m.p(), m.n(), rows, std::nullopt);
  std::vector<Vec> kv;
  for (const Row& r : c.kernel) kv.push_back(to_vec(m.p(), r, 0, m.n()));
  Subspace k = rref_canonical(m.p(), m.n(), kv);
  if (k.dim() + image(m).dim() != m.n()) {
    throw InternalInconsistency("rank-nullity violated for " + m.str());
  }
  return k;
}

Subspace map_subspace(const Subspace& s, const Mat& m) {
  std::vector<Vec> rows;
  for (const Vec& v : s.basis()) rows.push_back(v * m);
  return rref_canonical(m.p(), m.n(), rows);
}

bool is_complement(const Subspace& w, const Subspace& u) {
  if (w.p() != u.p() || w.n() != u.n()) return false;
  return w.dim() + u.dim() == u.n() && (w + u).dim() == u.n();
}

std::vector<Vec> extend_basis(std::span<const Vec> partial, const Subspace& within) {
  for (const Vec& v : partial) {
    if (!within.contains(v)) throw PreconditionError("extend_basis: vector outside the target subspace");
  }
  if (!independent(partial)) throw PreconditionError("extend_basis: dependent input");
  if (partial.empty()) return within.basis();

  std::vector<Vec> span(partial.begin(), partial.end());
  Subspace cur = rref_canonical(within.p(), within.n(), span);
  std::vector<Vec> appended;
  if (cur.dim() == within.dim()) return appended;
  for (const Vec& v : within.vectors()) {
    if (cur.contains(v)) continue;
    appended.push_back(v);
    span.push_back(v);
    cur = rref_canonical(within.p(), within.n(), span);
    if (cur.dim() == within.dim()) break;
  }
  return appended;
}

Vec preimage_vector(const Mat& m, const Vec& target) {
  auto rows = mat_rows(m);
  Combination c = solve(m.p(), m.n(), rows, target);
  if (!c.particular) {
    throw NoPreimageError("no preimage of " + target.str() + " under " + m.str());
  }
  return to_vec(m.p(), *c.particular, 0, m.n());
}

std::optional<std::vector<int>> coordinates(const Vec& v, std::span<const Vec> rows) {
  Combination c = solve(v.p(), v.n(), rows, v);
  if (!c.particular) return std::nullopt;
  return std::vector<int>(c.particular->begin(), c.particular->end());
}

bool independent(std::span<const Vec> rows) {
  if (rows.empty()) return true;
  return rref_canonical(rows[0].p(), rows[0].n(), rows).dim() == static_cast<int>(rows.size());
}

Mat map_from_basis(std::span<const Vec> basis, std::span<const Vec> images) {
  if (basis.empty() || basis.size() != images.size()) {
    throw PreconditionError("map_from_basis: basis and images must have equal, non-zero length");
  }
  const int p = basis[0].p();
  const int n = basis[0].n();
  if (static_cast<int>(basis.size()) != n || !independent(basis)) {
    throw PreconditionError("map_from_basis: rows do not form a basis");
  }
  // Row i of B^{-1} holds the coordinates of e_i in the basis.
  Mat binv(p, n);
  for (int i = 0; i < n; ++i) {
    auto c = coordinates(Vec::unit(p, n, i), basis);
    for (int j = 0; j < n; ++j) binv.set(i, j, (*c)[j]);
  }
  return binv * Mat::from_rows(p, n, images);
}

std::optional<Mat> inverse(const Mat& m) {
  auto rows = mat_rows(m);
  if (!independent(rows)) return std::nullopt;
  std::vector<Vec> units;
  for (int i = 0; i < m.n(); ++i) units.push_back(Vec::unit(m.p(), m.n(), i));
  return map_from_basis(rows, units);
}

int rank(const Mat& m) { return image(m).dim(); }

std::vector<Subspace> enumerate_complements(const Subspace& u) {
  const int p = u.p();
  const int n = u.n();
  const int k = u.dim();
  Subspace full = Subspace::full(p, n);
  if (k == n) return {Subspace(p, n)};
  std::vector<Vec> w = k == 0 ? full.basis() : extend_basis(u.basis(), full);
  std::vector<Vec> uvecs = u.vectors();
  const std::uint64_t per = uvecs.size();
  const int m = n - k;
  const std::uint64_t total = ipow(per, m);
  std::vector<Subspace> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Vec> rows(m);
    std::uint64_t rest = idx;
    for (int i = m - 1; i >= 0; --i) {
      rows[i] = w[i] + uvecs[rest % per];
      rest /= per;
    }
    out.push_back(rref_canonical(p, n, rows));
  }
  return out;
}

}  // namespace lgl
