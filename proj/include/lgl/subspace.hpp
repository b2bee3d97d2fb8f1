#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgl/gf.hpp"

namespace lgl {

// A subspace of GF(p)^n held as its reduced row echelon basis. The basis is
// unique per subspace, so == is subspace equality.
class Subspace {
 public:
  Subspace() = default;
  // The zero subspace.
  Subspace(int p, int n);

  static Subspace full(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;

  // Every vector of the subspace, in increasing lexicographic order.
  std::vector<Vec> vectors() const;

  Subspace operator+(const Subspace& o) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_ && p_ == o.p_ && n_ == o.n_; }
  std::strong_ordering operator<=>(const Subspace& o) const;

  std::string str() const;

 private:
  friend Subspace rref_canonical(int p, int n, std::span<const Vec> rows);

  int p_ = 2;
  int n_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

Subspace rref_canonical(int p, int n, std::span<const Vec> rows);

// Row space of m, i.e. the range of the map v -> v m.
Subspace image(const Mat& m);

// {v : v m = 0}.
Subspace kernel(const Mat& m);

// S m = {v m : v in S}.
Subspace map_subspace(const Subspace& s, const Mat& m);

// w + u = V and w meets u trivially.
bool is_complement(const Subspace& w, const Subspace& u);

// All complements of u, via translates: for the default complement basis
// w_1..w_m of u and each tuple (t_1..t_m) in u^m, span(w_i + t_i) is a
// complement, and each complement arises once.
std::vector<Subspace> enumerate_complements(const Subspace& u);

// The vectors of `within` to append to `partial` to make a basis of `within`.
// Candidates are the vectors of `within` in lexicographic order; an empty
// `partial` yields the canonical basis of `within`. Throws PreconditionError
// if `partial` is dependent or leaves `within`.
std::vector<Vec> extend_basis(std::span<const Vec> partial, const Subspace& within);

// Lexicographically least v with v m = target. Throws NoPreimageError.
Vec preimage_vector(const Mat& m, const Vec& target);

// Coefficients c with v = sum c_i rows[i]; rows must be independent.
std::optional<std::vector<int>> coordinates(const Vec& v, std::span<const Vec> rows);

// The map sending basis[i] to images[i]. Throws PreconditionError unless
// basis is a basis of GF(p)^n.
Mat map_from_basis(std::span<const Vec> basis, std::span<const Vec> images);

std::optional<Mat> inverse(const Mat& m);

int rank(const Mat& m);

bool independent(std::span<const Vec> rows);

}  // namespace lgl
