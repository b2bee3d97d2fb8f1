#include "lgl/semigroup.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "lgl/kernels.hpp"

namespace lgl {

SemigroupTable::SemigroupTable(std::size_t size, std::vector<Index> mul,
                               std::optional<Index> identity)
    : size_(size), mul_(std::move(mul)), identity_(identity) {
  if (mul_.size() != size_ * size_) throw ConfigError("multiplication table has the wrong shape");
  for (Index x : mul_) {
    if (x >= size_) throw ConfigError("multiplication table entry out of range");
  }
  if (identity_) {
    const Index e = *identity_;
    if (e >= size_) throw ConfigError("identity index out of range");
    for (Index a = 0; a < size_; ++a) {
      if (product(e, a) != a || product(a, e) != a) {
        throw ConfigError("declared identity is not two-sided neutral");
      }
    }
  }
}

SemigroupTable SemigroupTable::restrict_to(const IndexSet& subset) const {
  std::vector<std::int64_t> pos(size_, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<std::int64_t>(i);
  const std::size_t m = subset.size();
  std::vector<Index> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t k = pos[product(subset[i], subset[j])];
      if (k < 0) throw PreconditionError("restrict_to: subset is not product-closed");
      mul[i * m + j] = static_cast<Index>(k);
    }
  }
  std::optional<Index> id;
  for (Index i = 0; i < m && !id; ++i) {
    bool neutral = true;
    for (Index j = 0; j < m && neutral; ++j) {
      neutral = mul[i * m + j] == j && mul[j * m + i] == j;
    }
    if (neutral) id = i;
  }
  return SemigroupTable(m, std::move(mul), id);
}

bool is_associative(const SemigroupTable& s, std::size_t exhaustive_limit, std::size_t samples,
                    std::uint64_t seed) {
  const auto n = static_cast<Index>(s.size());
  auto ok = [&](Index a, Index b, Index c) {
    return s.product(s.product(a, b), c) == s.product(a, s.product(b, c));
  };
  if (s.size() <= exhaustive_limit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!ok(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!ok(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

Partition Partition::from_keys(std::span<const std::size_t> keys) {
  Partition p;
  p.class_of.resize(keys.size());
  std::unordered_map<std::size_t, Index> ids;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = ids.try_emplace(keys[i], static_cast<Index>(ids.size()));
    p.class_of[i] = it->second;
  }
  p.num_classes = ids.size();
  return p;
}

std::vector<IndexSet> Partition::classes() const {
  std::vector<IndexSet> out(num_classes);
  for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(static_cast<Index>(i));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  std::vector<std::int64_t> target(num_classes, -1);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto& t = target[class_of[i]];
    if (t < 0) {
      t = coarser.class_of[i];
    } else if (t != static_cast<std::int64_t>(coarser.class_of[i])) {
      return false;
    }
  }
  return true;
}

namespace {

Partition partition_by_sets(const std::vector<Bitset>& sets) {
  std::unordered_map<Bitset, std::size_t> first;
  std::vector<std::size_t> keys(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) keys[i] = first.try_emplace(sets[i], i).first->second;
  return Partition::from_keys(keys);
}

IndexSet to_index_set(const Bitset& b) {
  IndexSet out;
  out.reserve(b.count());
  b.for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
  return out;
}

// a (X o Y) b iff some c has a X c and c Y b.
std::vector<Bitset> compose(const Partition& x, const Partition& y) {
  std::vector<Bitset> reach(x.num_classes, Bitset(y.num_classes));
  for (std::size_t c = 0; c < x.class_of.size(); ++c) reach[x.class_of[c]].set(y.class_of[c]);
  return reach;
}

}  // namespace

IndexSet all_indices(std::size_t n) {
  IndexSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Index>(i);
  return out;
}

Bitset close_bits(const SemigroupTable& s, std::span<const Index> generators) {
  Bitset seen(s.size());
  std::vector<Index> gens;
  for (Index g : generators) {
    if (!seen.test(g)) {
      seen.set(g);
      gens.push_back(g);
    }
  }
  std::vector<Index> queue = gens;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Index g : gens) {
      const Index y = s.product(queue[i], g);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

IndexSet close_indices(const SemigroupTable& s, std::span<const Index> generators) {
  if (generators.empty()) throw PreconditionError("closure of an empty generator set");
  return to_index_set(close_bits(s, generators));
}

GreenPartitions green_oracle(const SemigroupTable& s) {
  const auto left = kernels::omp::left_ideals(s);
  const auto right = kernels::omp::right_ideals(s);
  const auto two = kernels::omp::two_sided_ideals(s, left, right);

  GreenPartitions g;
  g.L = partition_by_sets(left);
  g.R = partition_by_sets(right);
  g.J = partition_by_sets(two);

  const std::size_t n = s.size();
  std::vector<std::size_t> hkeys(n);
  for (std::size_t i = 0; i < n; ++i) hkeys[i] = g.L.class_of[i] * (n + 1) + g.R.class_of[i];
  g.H = Partition::from_keys(hkeys);

  const auto lr = compose(g.L, g.R);
  const auto rl = compose(g.R, g.L);
  std::vector<std::size_t> dkeys(n);
  std::vector<std::size_t> rep(g.L.num_classes, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t first = n;
    for (std::size_t b = 0; b < n; ++b) {
      const bool lr_ab = lr[g.L.class_of[a]].test(g.R.class_of[b]);
      const bool rl_ab = rl[g.R.class_of[a]].test(g.L.class_of[b]);
      if (lr_ab != rl_ab) {
        throw InternalInconsistency("L o R differs from R o L on a pair");
      }
      if (lr_ab && first == n) first = b;
    }
    dkeys[a] = first;
  }
  g.D = Partition::from_keys(dkeys);
  // The relation must coincide with the partition it induced.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (lr[g.L.class_of[a]].test(g.R.class_of[b]) != g.D.related(static_cast<Index>(a), static_cast<Index>(b))) {
        throw InternalInconsistency("L o R is not an equivalence");
      }
    }
  }
  return g;
}

IndexSet idempotents(const SemigroupTable& s) {
  IndexSet out;
  for (Index e = 0; e < s.size(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

bool natural_leq(const SemigroupTable& s, Index e, Index f) {
  if (s.product(e, e) != e || s.product(f, f) != f) {
    throw PreconditionError("natural_leq is defined on idempotents only");
  }
  return s.product(e, f) == e && s.product(f, e) == e;
}

IndexSet minimal_idempotents_oracle(const SemigroupTable& s) {
  const IndexSet es = idempotents(s);
  IndexSet out;
  for (Index e : es) {
    const bool minimal = std::none_of(es.begin(), es.end(), [&](Index f) {
      return f != e && natural_leq(s, f, e);
    });
    if (minimal) out.push_back(e);
  }
  return out;
}

IndexSet principal_ideal(const SemigroupTable& s, Index a) {
  Bitset left(s.size());
  left.set(a);
  for (Index x = 0; x < s.size(); ++x) left.set(s.product(x, a));
  Bitset both = left;
  left.for_each([&](std::size_t b) {
    for (Index y : s.row(static_cast<Index>(b))) both.set(y);
  });
  return to_index_set(both);
}

std::vector<Bitset> all_principal_ideals(const SemigroupTable& s) {
  return kernels::omp::two_sided_ideals(s, kernels::omp::left_ideals(s), kernels::omp::right_ideals(s));
}

bool verify_ideal(const SemigroupTable& s, const IndexSet& subset) {
  if (subset.empty()) throw PreconditionError("verify_ideal on an empty subset");
  Bitset in(s.size());
  for (Index i : subset) in.set(i);
  for (Index x : subset) {
    for (Index y = 0; y < s.size(); ++y) {
      if (!in.test(s.product(x, y)) || !in.test(s.product(y, x))) return false;
    }
  }
  return true;
}

RankResult rank_search(const SemigroupTable& s, const IndexSet& candidates, std::size_t cap,
                       std::uint64_t budget) {
  if (cap < 1) throw PreconditionError("rank_search cap must be at least 1");
  constexpr std::size_t kChunk = 4096;
  const std::size_t m = candidates.size();
  std::uint64_t examined = 0;
  for (std::size_t k = 1; k <= std::min(cap, m); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    bool more = true;
    while (more) {
      std::vector<IndexSet> chunk;
      chunk.reserve(kChunk);
      while (more && chunk.size() < kChunk) {
        IndexSet subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = candidates[pick[i]];
        chunk.push_back(std::move(subset));
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) {
          more = false;
        } else {
          ++pick[i - 1];
          for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
      examined += chunk.size();
      if (examined > budget) return {RankStatus::NotComputed, 0, {}};
      const std::ptrdiff_t hit = kernels::omp::first_generating(s, chunk);
      if (hit >= 0) return {RankStatus::Found, k, chunk[static_cast<std::size_t>(hit)]};
    }
  }
  return {RankStatus::NotFound, 0, {}};
}

}  // namespace lgl
