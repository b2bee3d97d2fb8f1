#pragma once

// Scalars, row vectors and square matrices over a prime field GF(p).
//
// Matrices act on row vectors from the right: row i of a matrix is the image
// of the standard basis vector e_i, so applying `a` then `b` is the product
// a * b.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

namespace lgl {

inline constexpr int kMaxDim = 6;
inline constexpr int kMaxPrime = 13;

bool is_prime(int p);

// Throws ConfigError unless p is a prime in [2, kMaxPrime].
void check_prime(int p);

inline int mod(int a, int p) {
  int r = a % p;
  return r < 0 ? r + p : r;
}

// Multiplicative inverse of a non-zero residue.
int inverse_mod(int a, int p);

class Vec {
 public:
  Vec() = default;
  Vec(int p, int n);
  Vec(int p, std::initializer_list<int> coords);

  static Vec unit(int p, int n, int i);
  // Vector whose coordinates are the base-p digits of idx, first coordinate
  // most significant; increasing idx is increasing lexicographic order.
  static Vec from_index(int p, int n, std::uint64_t idx);

  int p() const { return p_; }
  int n() const { return n_; }
  int operator[](int i) const { return c_[i]; }
  void set(int i, int v) { c_[i] = static_cast<std::uint8_t>(mod(v, p_)); }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(int c) const;

  // Lexicographic in coordinates when p and n agree.
  auto operator<=>(const Vec&) const = default;
  bool operator==(const Vec&) const = default;

  std::string str() const;

 private:
  void check_same(const Vec& o) const;

  std::uint8_t p_ = 2;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDim> c_{};
};

class Mat {
 public:
  Mat() = default;
  Mat(int p, int n);
  Mat(int p, std::initializer_list<std::initializer_list<int>> rows);

  static Mat identity(int p, int n);
  static Mat from_rows(int p, int n, std::span<const Vec> rows);
  // Row-major digits, first entry most significant.
  static Mat from_index(int p, int n, std::uint64_t idx);

  int p() const { return p_; }
  int n() const { return n_; }
  int at(int i, int j) const { return a_[i * kMaxDim + j]; }
  void set(int i, int j, int v) {
    a_[i * kMaxDim + j] = static_cast<std::uint8_t>(mod(v, p_));
  }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);

  bool is_zero() const;

  auto operator<=>(const Mat&) const = default;
  bool operator==(const Mat&) const = default;

  // [[a,b],[c,d]]
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  std::uint8_t p_ = 2;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a_{};
};

// Composition: apply a, then b. Throws ConfigError on modulus or size mismatch.
Mat operator*(const Mat& a, const Mat& b);

// v applied to m, i.e. the image of v.
Vec operator*(const Vec& v, const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace lgl

template <>
struct std::hash<lgl::Mat> {
  std::size_t operator()(const lgl::Mat& m) const noexcept { return m.hash(); }
};
