#pragma once

// The semigroup of linear maps on V = GF(p)^n that restrict to an
// automorphism of a fixed subspace U, and its explicit enumeration.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lgl/gf.hpp"
#include "lgl/semigroup.hpp"
#include "lgl/subspace.hpp"

namespace lgl {

class Instance {
 public:
  // U must be a proper subspace of GF(p)^n given in any spanning form.
  Instance(int p, int n, const Subspace& u);

  // U spanned by the first r standard basis vectors.
  static Instance standard(int p, int n, int r);

  int p() const { return p_; }
  int n() const { return n_; }
  int r() const { return u_.dim(); }
  // n - r, the largest codimension.
  int top() const { return n_ - u_.dim(); }
  const Subspace& u() const { return u_; }
  Subspace full() const { return Subspace::full(p_, n_); }

  // span of extend_basis(basis(U), V): the lexicographically chosen complement.
  Subspace default_complement() const;

  bool operator==(const Instance&) const = default;

 private:
  int p_;
  int n_;
  Subspace u_;
};

// |GL_k(p)| = prod_{i<k} (p^k - p^i); saturates at UINT64_MAX.
std::uint64_t gl_order(int p, int k);

// |GL_r(p)| * p^{n(n-r)}; saturates at UINT64_MAX.
std::uint64_t predicted_order(const Instance& inst);

// U m = U.
bool is_member(const Instance& inst, const Mat& m);

// dim(V m / U) for a member.
int codim(const Instance& inst, const Mat& m);

struct Element {
  Mat mat;
  int codim = 0;
  bool operator==(const Element& o) const { return mat == o.mat; }
};

// Throws PreconditionError if m is not a member.
Element make_element(const Instance& inst, const Mat& m);

inline constexpr std::size_t kDefaultEnumerationCap = 4096;

// Environment overrides: LGL_CAP and LGL_RANK_CAP. A value that is not a
// positive integer raises ConfigError.
std::size_t default_enumeration_cap();
std::size_t default_rank_cap();

// All members in lexicographic order, generated from an adapted basis
// (images of U's basis ranging over bases of U, images of the complement
// basis arbitrary). Throws CapacityError with the predicted order if it
// exceeds cap.
std::vector<Mat> enumerate_members(const Instance& inst, std::size_t cap);

// Members found by testing every n x n matrix; the independent check on
// enumerate_members.
std::vector<Mat> brute_force_members(const Instance& inst);

// An enumerated instance: elements in lexicographic order with their
// multiplication table.
class Semigroup {
 public:
  explicit Semigroup(Instance inst, std::size_t cap = default_enumeration_cap());

  const Instance& instance() const { return inst_; }
  const SemigroupTable& table() const { return table_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& at(Index i) const { return elements_[i]; }
  Element element(Index i) const { return {elements_[i], codims_[i]}; }
  int codim(Index i) const { return codims_[i]; }

  std::optional<Index> find(const Mat& m) const;
  // Throws PreconditionError for non-members.
  Index index_of(const Mat& m) const;

  IndexSet to_indices(const std::vector<Mat>& mats) const;
  std::vector<Mat> to_mats(const IndexSet& set) const;

 private:
  Instance inst_;
  std::vector<Mat> elements_;
  std::vector<int> codims_;
  std::unordered_map<Mat, Index> index_;
  SemigroupTable table_;
};

inline Semigroup enumerate(const Instance& inst, std::size_t cap = default_enumeration_cap()) {
  return Semigroup(inst, cap);
}

}  // namespace lgl
