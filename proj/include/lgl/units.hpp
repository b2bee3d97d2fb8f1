#pragma once

// The unit group J(n-r) = {invertible members} and its subgroups relative to
// a complement W of U:
//   Fix(X) = units restricting to the identity on X,
//   G(W)   = elements of Fix(U) mapping W onto W,
//   N(W)   = elements of Fix(U) sending each w in W to w + (something in U).
// J(n-r) = Fix(W) Fix(U) with Fix(U) normal, and Fix(U) = G(W) N(W) with
// N(W) normal.

#include <string>
#include <vector>

#include "lgl/instance.hpp"

namespace lgl {

enum class SubgroupTag { FixU, FixW, GW, NW };

const char* to_string(SubgroupTag tag);

struct SubgroupKind {
  SubgroupTag tag;
  // A complement of U; ignored for FixU.
  Subspace w;
};

// Membership of a single matrix; checks preconditions like special_subgroup.
bool in_subgroup(const Instance& inst, const SubgroupKind& kind, const Mat& m);

// The subgroup as a set of indices into s. Requires r >= 1 and, for tags
// using W, that W is a complement of U. The result is checked to contain the
// identity and to be product-closed.
IndexSet special_subgroup(const Semigroup& s, const SubgroupKind& kind);

// The unique offsets t_i in U with span(w_i + t_i) = target, for a complement
// `target` of U and a basis w of another complement.
std::vector<Vec> translate_offsets(const std::vector<Vec>& w_basis, const Subspace& target,
                                   const Subspace& u);

struct UnitSplit {
  Element first;   // in Fix(W) for decompose_unit, in G(W) for decompose_fixU
  Element second;  // in Fix(U) for decompose_unit, in N(W) for decompose_fixU
};

// a = a' a'' with a' in Fix(W), a'' in Fix(U).
UnitSplit decompose_unit(const Instance& inst, const Element& a, const Subspace& w);

// a = b g with b in G(W), g in N(W), for a in Fix(U).
UnitSplit decompose_fixU(const Instance& inst, const Element& a, const Subspace& w);

// Checks that the natural map of the subgroup is a bijective homomorphism:
//   Fix(W) -> GL(U)        by restriction to U,
//   G(W)   -> GL(W)        by restriction to W,
//   N(W)   -> U^(n-r)      by w_i -> w_i + t_i  |->  (t_1, ..., t_{n-r}),
// the last into the additive group. Returns true, or throws
// InternalInconsistency naming the failed property. FixU has no such map
// and raises PreconditionError.
bool subgroup_iso_check(const Semigroup& s, const SubgroupKind& kind);

enum class NonNormalCase {
  // n = 3, r = 2: Fix(W) is not normal in the unit group.
  FixWInUnits,
  // n = 3, r = 1: G(W) is not normal in Fix(U).
  GWInFixU,
};

struct NonNormalityReport {
  int p = 2;
  NonNormalCase which = NonNormalCase::FixWInUnits;
  Mat alpha;
  Mat beta;
  Mat conjugate;  // alpha * beta * alpha^{-1}
  Subspace w;
  Subspace conjugated_w;
  std::vector<Vec> w_images;  // images of W's basis under the conjugate
  std::vector<Vec> expected;  // predicted images
  bool alpha_in_parent = false;
  bool beta_in_subgroup = false;
  bool conjugate_in_subgroup = true;
  bool conjugate_in_parent = false;

  bool reproduced() const {
    return alpha_in_parent && beta_in_subgroup && conjugate_in_parent && !conjugate_in_subgroup &&
           conjugated_w != w && w_images == expected;
  }
  std::string summary() const;
};

// Builds the witnessing pair for the chosen case over GF(p), with U spanned
// by the first r standard vectors and W by the rest, and conjugates.
NonNormalityReport nonnormality_examples(int p, NonNormalCase which);

}  // namespace lgl
