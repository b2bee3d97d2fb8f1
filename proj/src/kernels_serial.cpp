#include <string>

#include "lgl/error.hpp"
#include "lgl/kernels.hpp"

namespace lgl::kernels::serial {

std::vector<Mat> filter_matrices(int p, int n, const MatPredicate& pred) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(p);
  std::vector<Mat> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat m = Mat::from_index(p, n, idx);
    if (pred(m)) out.push_back(m);
  }
  return out;
}

std::vector<Index> cayley_table(std::span<const Mat> elements, const MatIndex& index) {
  const std::size_t size = elements.size();
  std::vector<Index> mul(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end()) {
        throw InternalInconsistency("product " + elements[i].str() + " * " + elements[j].str() +
                                    " leaves the element set");
      }
      mul[i * size + j] = it->second;
    }
  }
  return mul;
}

std::vector<Bitset> left_ideals(const SemigroupTable& s) {
  const auto size = static_cast<Index>(s.size());
  std::vector<Bitset> out(size, Bitset(size));
  for (Index a = 0; a < size; ++a) {
    out[a].set(a);
    for (Index x = 0; x < size; ++x) out[a].set(s.product(x, a));
  }
  return out;
}

std::vector<Bitset> right_ideals(const SemigroupTable& s) {
  const auto size = static_cast<Index>(s.size());
  std::vector<Bitset> out(size, Bitset(size));
  for (Index a = 0; a < size; ++a) {
    out[a].set(a);
    for (Index x : s.row(a)) out[a].set(x);
  }
  return out;
}

std::vector<Bitset> two_sided_ideals(const SemigroupTable& s, const std::vector<Bitset>& left,
                                     const std::vector<Bitset>& right) {
  const auto size = static_cast<Index>(s.size());
  std::vector<Bitset> out(size, Bitset(size));
  for (Index a = 0; a < size; ++a) {
    left[a].for_each([&](std::size_t b) { out[a] |= right[b]; });
  }
  return out;
}

std::ptrdiff_t first_generating(const SemigroupTable& s, const std::vector<IndexSet>& subsets) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (close_bits(s, subsets[i]).count() == s.size()) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace lgl::kernels::serial
