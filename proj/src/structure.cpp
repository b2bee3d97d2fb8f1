#include "lgl/structure.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lgl/error.hpp"

namespace lgl {

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::L: return "L";
    case Relation::R: return "R";
    case Relation::H: return "H";
    case Relation::D: return "D";
    case Relation::J: return "J";
  }
  return "?";
}

IndexSet j_class(const Semigroup& s, int k) {
  if (k < 0 || k > s.instance().top()) {
    throw PreconditionError("j_class: k = " + std::to_string(k) + " outside [0, n-r]");
  }
  IndexSet out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s.codim(i) == k) out.push_back(i);
  }
  return out;
}

IndexSet q_ideal(const Semigroup& s, int k) {
  if (k < 1 || k > s.instance().top()) {
    throw PreconditionError("q_ideal: k = " + std::to_string(k) + " outside [1, n-r]");
  }
  IndexSet out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s.codim(i) < k) out.push_back(i);
  }
  return out;
}

namespace {

Mat transpose(const Mat& m) {
  Mat t(m.p(), m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) t.set(j, i, m.at(i, j));
  return t;
}

// ker a is the annihilator of the column space of a, so kernels agree
// exactly when the transposes have the same row space.
bool same_kernel(const Mat& a, const Mat& b) { return image(transpose(a)) == image(transpose(b)); }

}  // namespace

bool green_char(const Instance& inst, const Element& a, const Element& b, Relation rel) {
  (void)inst;
  switch (rel) {
    case Relation::L: return image(a.mat) == image(b.mat);
    case Relation::R: return same_kernel(a.mat, b.mat);
    case Relation::H: return image(a.mat) == image(b.mat) && same_kernel(a.mat, b.mat);
    case Relation::D:
    case Relation::J: return a.codim == b.codim;
  }
  return false;
}

Partition green_char_partition(const Semigroup& s, Relation rel) {
  std::map<Subspace, std::size_t> images;
  std::map<Subspace, std::size_t> kernels;
  std::vector<std::size_t> keys(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    const std::size_t im = images.try_emplace(image(s.at(i)), images.size()).first->second;
    const std::size_t ker = kernels.try_emplace(kernel(s.at(i)), kernels.size()).first->second;
    switch (rel) {
      case Relation::L: keys[i] = im; break;
      case Relation::R: keys[i] = ker; break;
      case Relation::H: keys[i] = im * (s.size() + 1) + ker; break;
      case Relation::D:
      case Relation::J: keys[i] = static_cast<std::size_t>(s.codim(i)); break;
    }
  }
  return Partition::from_keys(keys);
}

IndexSet minimal_idempotents_char(const Semigroup& s) {
  IndexSet out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s.codim(i) == 0 && idempotent_char(s.instance(), s.element(i))) out.push_back(i);
  }
  return out;
}

bool idempotent_char(const Instance& inst, const Element& a) {
  (void)inst;
  const Subspace im = image(a.mat);
  for (const Vec& v : im.basis()) {
    if (v * a.mat != v) return false;
  }
  return true;
}

IndexSet generating_set(const Semigroup& s) {
  const int top = s.instance().top();
  IndexSet out = j_class(s, top);
  if (top >= 1) {
    // Elements are stored in lexicographic order, so the first hit is least.
    const IndexSet below = j_class(s, top - 1);
    out.push_back(below.front());
    std::sort(out.begin(), out.end());
  }
  return out;
}

RankValue rank_value(const Semigroup& s, std::size_t cap, std::uint64_t budget,
                     std::size_t direct_limit) {
  RankValue out;
  const IndexSet units = j_class(s, s.instance().top());
  const SemigroupTable unit_table = s.table().restrict_to(units);
  const RankResult ur = rank_search(unit_table, all_indices(units.size()), cap, budget);
  out.status = ur.status;
  if (ur.status != RankStatus::Found) return out;
  out.unit_rank = ur.size;
  for (Index i : ur.witness) out.unit_witness.push_back(units[i]);
  out.value = ur.size + 1;
  if (s.size() > direct_limit) return out;

  const RankResult direct = rank_search(s.table(), all_indices(s.size()), cap, budget);
  if (direct.status == RankStatus::Found) {
    out.direct = direct.size;
    out.direct_witness = direct.witness;
  } else if (direct.status == RankStatus::NotFound && out.value <= cap) {
    // Every subset up to the predicted rank failed.
    throw InternalInconsistency("no generating set of the predicted rank exists");
  }
  return out;
}

}  // namespace lgl
