#include <algorithm>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgl/error.hpp"
#include "lgl/kernels.hpp"

namespace lgl::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {

namespace {

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

int num_threads() {
#ifdef _OPENMP
  return omp_get_num_threads();
#else
  return 1;
#endif
}

}  // namespace

std::vector<Mat> filter_matrices(int p, int n, const MatPredicate& pred) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(p);
  // Contiguous block per thread, concatenated by thread id, keeps the
  // output in index order.
  std::vector<std::vector<Mat>> parts(static_cast<std::size_t>(max_threads()));
#pragma omp parallel
  {
    const auto tid = static_cast<std::uint64_t>(thread_id());
    const auto nt = static_cast<std::uint64_t>(num_threads());
    const std::uint64_t begin = total * tid / nt;
    const std::uint64_t end = total * (tid + 1) / nt;
    auto& local = parts[tid];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Mat m = Mat::from_index(p, n, idx);
      if (pred(m)) local.push_back(m);
    }
  }
  std::vector<Mat> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<Index> cayley_table(std::span<const Mat> elements, const MatIndex& index) {
  const auto size = static_cast<std::ptrdiff_t>(elements.size());
  std::vector<Index> mul(elements.size() * elements.size());
  bool escaped = false;
#pragma omp parallel for schedule(static) reduction(|| : escaped)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    for (std::ptrdiff_t j = 0; j < size; ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end()) {
        escaped = true;
        continue;
      }
      mul[static_cast<std::size_t>(i * size + j)] = it->second;
    }
  }
  if (escaped) throw InternalInconsistency("a product leaves the element set");
  return mul;
}

std::vector<Bitset> left_ideals(const SemigroupTable& s) {
  const auto size = static_cast<std::ptrdiff_t>(s.size());
  std::vector<Bitset> out(s.size(), Bitset(s.size()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    const auto ia = static_cast<Index>(a);
    out[a].set(ia);
    for (Index x = 0; x < static_cast<Index>(size); ++x) out[a].set(s.product(x, ia));
  }
  return out;
}

std::vector<Bitset> right_ideals(const SemigroupTable& s) {
  const auto size = static_cast<std::ptrdiff_t>(s.size());
  std::vector<Bitset> out(s.size(), Bitset(s.size()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    out[a].set(static_cast<std::size_t>(a));
    for (Index x : s.row(static_cast<Index>(a))) out[a].set(x);
  }
  return out;
}

std::vector<Bitset> two_sided_ideals(const SemigroupTable& s, const std::vector<Bitset>& left,
                                     const std::vector<Bitset>& right) {
  const auto size = static_cast<std::ptrdiff_t>(s.size());
  std::vector<Bitset> out(s.size(), Bitset(s.size()));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    left[a].for_each([&](std::size_t b) { out[a] |= right[b]; });
  }
  return out;
}

std::ptrdiff_t first_generating(const SemigroupTable& s, const std::vector<IndexSet>& subsets) {
  const auto count = static_cast<std::ptrdiff_t>(subsets.size());
  std::ptrdiff_t best = std::numeric_limits<std::ptrdiff_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (i > best) continue;
    if (close_bits(s, subsets[i]).count() == s.size()) best = std::min(best, i);
  }
  return best == std::numeric_limits<std::ptrdiff_t>::max() ? -1 : best;
}

}  // namespace omp
}  // namespace lgl::kernels
