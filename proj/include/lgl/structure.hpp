#pragma once

// Green's relations, ideals, idempotents and generation described through
// images, kernels and the codimension dim(V a / U).

#include <optional>
#include <vector>

#include "lgl/instance.hpp"
#include "lgl/semigroup.hpp"

namespace lgl {

enum class Relation { L, R, H, D, J };

const char* to_string(Relation rel);

// Members with codimension k, 0 <= k <= n - r.
IndexSet j_class(const Semigroup& s, int k);

// Members with codimension < k, 1 <= k <= n - r: the proper ideals.
IndexSet q_ideal(const Semigroup& s, int k);

// L: equal images. R: equal kernels. H: both. D and J: equal codimension.
bool green_char(const Instance& inst, const Element& a, const Element& b, Relation rel);

// The partition green_char induces on s, from per-element image, kernel and
// codimension keys; numbered like the oracle partitions so the two compare
// with ==.
Partition green_char_partition(const Semigroup& s, Relation rel);

// Members that are idempotent with image U.
IndexSet minimal_idempotents_char(const Semigroup& s);

// True iff a fixes every vector of its image.
bool idempotent_char(const Instance& inst, const Element& a);

// The units together with the lexicographically least element of
// codimension n - r - 1.
IndexSet generating_set(const Semigroup& s);

struct RankValue {
  RankStatus status = RankStatus::NotComputed;
  // rank of the unit group plus one
  std::size_t value = 0;
  std::size_t unit_rank = 0;
  IndexSet unit_witness;
  // Independent search over the whole semigroup, run only when the order is
  // at most direct_limit.
  std::optional<std::size_t> direct;
  IndexSet direct_witness;
};

RankValue rank_value(const Semigroup& s, std::size_t cap = default_rank_cap(),
                     std::uint64_t budget = 5'000'000, std::size_t direct_limit = 128);

}  // namespace lgl
