#include "lgl/gf.hpp"

#include <ostream>
#include <sstream>

#include "lgl/error.hpp"

namespace lgl {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime) {
    throw ConfigError("modulus must be a prime in [2, " +
                      std::to_string(kMaxPrime) + "], got " +
                      std::to_string(p));
  }
}

int inverse_mod(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw PreconditionError("zero has no multiplicative inverse");
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw ConfigError("modulus is not prime: " + std::to_string(p));
}

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw ConfigError("dimension must be in [0, " + std::to_string(kMaxDim) +
                      "], got " + std::to_string(n));
  }
}

}  // namespace

Vec::Vec(int p, int n) : p_(static_cast<std::uint8_t>(p)), n_(static_cast<std::uint8_t>(n)) {
  check_prime(p);
  check_dim(n);
}

Vec::Vec(int p, std::initializer_list<int> coords)
    : Vec(p, static_cast<int>(coords.size())) {
  int i = 0;
  for (int c : coords) set(i++, c);
}

Vec Vec::unit(int p, int n, int i) {
  Vec v(p, n);
  v.set(i, 1);
  return v;
}

Vec Vec::from_index(int p, int n, std::uint64_t idx) {
  Vec v(p, n);
  for (int i = n - 1; i >= 0; --i) {
    v.set(i, static_cast<int>(idx % static_cast<std::uint64_t>(p)));
    idx /= static_cast<std::uint64_t>(p);
  }
  return v;
}

bool Vec::is_zero() const {
  for (int i = 0; i < n_; ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void Vec::check_same(const Vec& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    throw ConfigError("vector modulus or length mismatch");
  }
}

Vec Vec::operator+(const Vec& o) const {
  check_same(o);
  Vec r = *this;
  for (int i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint8_t>((c_[i] + o.c_[i]) % p_);
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  check_same(o);
  Vec r = *this;
  for (int i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint8_t>((c_[i] + p_ - o.c_[i]) % p_);
  return r;
}

Vec Vec::operator-() const { return scaled(-1); }

Vec Vec::scaled(int c) const {
  Vec r = *this;
  c = mod(c, p_);
  for (int i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint8_t>(c_[i] * c % p_);
  return r;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << int(c_[i]);
  os << ')';
  return os.str();
}

Mat::Mat(int p, int n) : p_(static_cast<std::uint8_t>(p)), n_(static_cast<std::uint8_t>(n)) {
  check_prime(p);
  check_dim(n);
}

Mat::Mat(int p, std::initializer_list<std::initializer_list<int>> rows)
    : Mat(p, static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw ConfigError("matrix literal is not square");
    }
    int j = 0;
    for (int v : row) set(i, j++, v);
    ++i;
  }
}

Mat Mat::identity(int p, int n) {
  Mat m(p, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(int p, int n, std::span<const Vec> rows) {
  if (static_cast<int>(rows.size()) != n) {
    throw ConfigError("from_rows needs exactly n rows");
  }
  Mat m(p, n);
  for (int i = 0; i < n; ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_index(int p, int n, std::uint64_t idx) {
  Mat m(p, n);
  for (int k = n * n - 1; k >= 0; --k) {
    m.set(k / n, k % n, static_cast<int>(idx % static_cast<std::uint64_t>(p)));
    idx /= static_cast<std::uint64_t>(p);
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec v(p_, n_);
  for (int j = 0; j < n_; ++j) v.set(j, at(i, j));
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  if (v.p() != p_ || v.n() != n_) throw ConfigError("row modulus or length mismatch");
  for (int j = 0; j < n_; ++j) set(i, j, v[j]);
}

bool Mat::is_zero() const {
  for (auto x : a_) {
    if (x != 0) return false;
  }
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t Mat::hash() const noexcept {
  // FNV-1a over the used entries.
  std::size_t h = 1469598103934665603ULL ^ p_;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      h ^= a_[i * kMaxDim + j];
      h *= 1099511628211ULL;
    }
  }
  return h;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.p() != b.p() || a.n() != b.n()) {
    throw ConfigError("matrix modulus or dimension mismatch");
  }
  const int n = a.n();
  const int p = a.p();
  Mat c(p, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      c.set(i, j, s);
    }
  }
  return c;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Vec operator*(const Vec& v, const Mat& m) {
  if (v.p() != m.p() || v.n() != m.n()) {
    throw ConfigError("vector/matrix modulus or dimension mismatch");
  }
  Vec r(v.p(), v.n());
  for (int j = 0; j < m.n(); ++j) {
    int s = 0;
    for (int k = 0; k < m.n(); ++k) s += v[k] * m.at(k, j);
    r.set(j, s);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

}  // namespace lgl
