#pragma once

// Data-parallel inner loops. Each kernel exists twice: `serial` is the
// reference implementation kept for testing, `omp` is the OpenMP version the
// library uses. Both return identical results for identical input.

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lgl/bitset.hpp"
#include "lgl/gf.hpp"
#include "lgl/semigroup.hpp"

namespace lgl::kernels {

using MatPredicate = std::function<bool(const Mat&)>;
using MatIndex = std::unordered_map<Mat, Index>;

#define LGL_DECLARE_KERNELS                                                            \
  /* Every n x n matrix over GF(p) accepted by pred, in lexicographic order. */        \
  std::vector<Mat> filter_matrices(int p, int n, const MatPredicate& pred);            \
  /* Row-major product table; throws InternalInconsistency if a product leaves */     \
  /* the element list. */                                                              \
  std::vector<Index> cayley_table(std::span<const Mat> elements, const MatIndex& index); \
  /* S^1 a for every a. */                                                             \
  std::vector<Bitset> left_ideals(const SemigroupTable& s);                            \
  /* a S^1 for every a. */                                                             \
  std::vector<Bitset> right_ideals(const SemigroupTable& s);                           \
  /* S^1 a S^1 for every a, as the union of the right ideals over S^1 a. */            \
  std::vector<Bitset> two_sided_ideals(const SemigroupTable& s,                        \
                                       const std::vector<Bitset>& left,                \
                                       const std::vector<Bitset>& right);              \
  /* Position of the first subset (in the given order) generating s. */                \
  std::ptrdiff_t first_generating(const SemigroupTable& s,                             \
                                  const std::vector<IndexSet>& subsets);

namespace serial {
LGL_DECLARE_KERNELS
}  // namespace serial

namespace omp {
LGL_DECLARE_KERNELS
}  // namespace omp

#undef LGL_DECLARE_KERNELS

// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace lgl::kernels
