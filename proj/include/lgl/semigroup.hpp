#pragma once

// Finite semigroups given by an explicit multiplication table on indices
// 0..size-1, with definition-level computations used as oracles: closure,
// Green's relations from principal ideals, idempotents and their natural
// order, ideals and generating-set search.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "lgl/bitset.hpp"
#include "lgl/error.hpp"

namespace lgl {

using Index = std::uint32_t;
// Sorted ascending, no duplicates.
using IndexSet = std::vector<Index>;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

class SemigroupTable {
 public:
  SemigroupTable() = default;
  // mul is row-major: mul[i * size + j] is the index of i*j. Throws
  // ConfigError if an entry is out of range or the identity is not neutral.
  SemigroupTable(std::size_t size, std::vector<Index> mul,
                 std::optional<Index> identity = std::nullopt);

  std::size_t size() const { return size_; }
  Index product(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
  const std::optional<Index>& identity() const { return identity_; }
  std::span<const Index> row(Index a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * size_, size_};
  }

  // Restriction to a product-closed subset, re-indexed in subset order.
  SemigroupTable restrict_to(const IndexSet& subset) const;

 private:
  std::size_t size_ = 0;
  std::vector<Index> mul_;
  std::optional<Index> identity_;
};

// Exhaustive for size <= exhaustive_limit, otherwise `samples` random triples.
bool is_associative(const SemigroupTable& s, std::size_t exhaustive_limit = 200,
                    std::size_t samples = 200'000, std::uint64_t seed = 1);

struct Partition {
  // Class id per element; ids are numbered by first occurrence.
  std::vector<Index> class_of;
  std::size_t num_classes = 0;

  bool related(Index a, Index b) const { return class_of[a] == class_of[b]; }
  std::vector<IndexSet> classes() const;
  // Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;

  static Partition from_keys(std::span<const std::size_t> keys);
};

struct GreenPartitions {
  Partition L, R, H, D, J;
};

// Closure of a generator set under a binary product, in breadth-first order
// starting from the generators as given.
template <typename T, typename Mul, typename Hash = std::hash<T>>
std::vector<T> close_under_product(std::span<const T> generators, Mul&& mul,
                                   std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw PreconditionError("closure of an empty generator set");
  std::vector<T> gens;
  std::unordered_set<T, Hash> seen;
  for (const T& g : generators) {
    if (seen.insert(g).second) gens.push_back(g);
  }
  std::vector<T> out = gens;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const T& g : gens) {
      T x = mul(out[i], g);
      if (seen.insert(x).second) {
        if (out.size() >= cap) {
          throw CapacityError("closure exceeds cap of " + std::to_string(cap), out.size() + 1);
        }
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

// Subsemigroup generated by `generators` inside the table.
IndexSet close_indices(const SemigroupTable& s, std::span<const Index> generators);
Bitset close_bits(const SemigroupTable& s, std::span<const Index> generators);

GreenPartitions green_oracle(const SemigroupTable& s);

IndexSet idempotents(const SemigroupTable& s);

// e <= f iff e = ef = fe. Throws PreconditionError unless both are idempotent.
bool natural_leq(const SemigroupTable& s, Index e, Index f);

IndexSet minimal_idempotents_oracle(const SemigroupTable& s);

// S^1 a S^1.
IndexSet principal_ideal(const SemigroupTable& s, Index a);

// S^1 a S^1 for every a at once.
std::vector<Bitset> all_principal_ideals(const SemigroupTable& s);

// Closed under multiplication on both sides by every element.
bool verify_ideal(const SemigroupTable& s, const IndexSet& subset);

enum class RankStatus { Found, NotFound, NotComputed };

struct RankResult {
  RankStatus status = RankStatus::NotComputed;
  std::size_t size = 0;
  // Lexicographically least generating subset of the minimal size.
  IndexSet witness;
};

// Smallest k <= cap such that some k-subset of candidates generates s.
// Subsets are tried size by size in lexicographic order; once more than
// `budget` subsets have been examined the search stops with NotComputed.
RankResult rank_search(const SemigroupTable& s, const IndexSet& candidates, std::size_t cap,
                       std::uint64_t budget = 5'000'000);

IndexSet all_indices(std::size_t n);

}  // namespace lgl
