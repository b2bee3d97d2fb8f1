#pragma once

// Brute-force reference computations for tests. None of these call the
// library's elimination code.

#include <cstdint>
#include <set>
#include <vector>

#include "lgl/gf.hpp"
#include "lgl/semigroup.hpp"

namespace oracle {

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t x = 1;
  while (e-- > 0) x *= b;
  return x;
}

inline std::vector<lgl::Vec> all_vectors(int p, int n) {
  std::vector<lgl::Vec> out;
  for (std::uint64_t i = 0; i < ipow(p, n); ++i) out.push_back(lgl::Vec::from_index(p, n, i));
  return out;
}

inline lgl::Mat mul(const lgl::Mat& a, const lgl::Mat& b) {
  const int p = a.p(), n = a.n();
  lgl::Mat c(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      c.set(i, j, s % p);
    }
  return c;
}

inline lgl::Vec apply(const lgl::Vec& v, const lgl::Mat& m) {
  lgl::Vec out(m.p(), m.n());
  for (int j = 0; j < m.n(); ++j) {
    int s = 0;
    for (int i = 0; i < m.n(); ++i) s += v[i] * m.at(i, j);
    out.set(j, s % m.p());
  }
  return out;
}

// Every linear combination of rows.
inline std::set<lgl::Vec> span(int p, int n, const std::vector<lgl::Vec>& rows) {
  std::set<lgl::Vec> out{lgl::Vec(p, n)};
  for (const auto& r : rows) {
    std::set<lgl::Vec> next;
    for (const auto& v : out)
      for (int c = 0; c < p; ++c) next.insert(v + r.scaled(c));
    out = std::move(next);
  }
  return out;
}

inline std::set<lgl::Vec> image(const lgl::Mat& m) {
  std::set<lgl::Vec> out;
  for (const auto& v : all_vectors(m.p(), m.n())) out.insert(apply(v, m));
  return out;
}

inline std::set<lgl::Vec> kernel(const lgl::Mat& m) {
  std::set<lgl::Vec> out;
  for (const auto& v : all_vectors(m.p(), m.n()))
    if (apply(v, m).is_zero()) out.insert(v);
  return out;
}

// Every subspace of GF(p)^n, each as its vector set.
inline std::set<std::set<lgl::Vec>> all_subspaces(int p, int n) {
  std::set<std::set<lgl::Vec>> out{{lgl::Vec(p, n)}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : std::set<std::set<lgl::Vec>>(out)) {
      for (const auto& v : all_vectors(p, n)) {
        if (s.count(v)) continue;
        std::set<lgl::Vec> t;
        for (const auto& x : s)
          for (int c = 0; c < p; ++c) t.insert(x + v.scaled(c));
        grew |= out.insert(t).second;
      }
    }
  }
  return out;
}

inline int dim_of(int p, std::size_t size) {
  int d = 0;
  for (std::size_t x = 1; x < size; x *= static_cast<std::size_t>(p)) ++d;
  return d;
}

// Green's relations straight from the definitions: a L b iff S^1 a = S^1 b.
inline std::set<lgl::Index> left_ideal(const lgl::SemigroupTable& s, lgl::Index a) {
  std::set<lgl::Index> out{a};
  for (lgl::Index x = 0; x < s.size(); ++x) out.insert(s.product(x, a));
  return out;
}
inline std::set<lgl::Index> right_ideal(const lgl::SemigroupTable& s, lgl::Index a) {
  std::set<lgl::Index> out{a};
  for (lgl::Index x = 0; x < s.size(); ++x) out.insert(s.product(a, x));
  return out;
}
inline std::set<lgl::Index> two_ideal(const lgl::SemigroupTable& s, lgl::Index a) {
  std::set<lgl::Index> out;
  for (lgl::Index l : left_ideal(s, a)) {
    auto r = right_ideal(s, l);
    out.insert(r.begin(), r.end());
  }
  return out;
}

}  // namespace oracle
