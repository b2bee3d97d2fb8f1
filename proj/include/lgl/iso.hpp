#pragma once

// Isomorphisms between two instances over the same field. Two instances are
// isomorphic exactly when some linear isomorphism phi: V1 -> V2 carries U1
// onto U2, i.e. when n and r agree; a -> phi^{-1} a phi is then an
// isomorphism of the semigroups.

#include <optional>
#include <vector>

#include "lgl/instance.hpp"

namespace lgl {

struct IsoWitness {
  Mat phi;
  Mat phi_inv;
  // psi[i] = index in the target semigroup of the transport of element i of
  // the source; filled by attach_index_map.
  std::vector<Index> psi;
};

// Throws UnsupportedComparison when the fields differ. phi maps the adapted
// basis (default complement basis, then U basis) of V1 onto that of V2.
std::optional<IsoWitness> decide_isomorphic(const Instance& i1, const Instance& i2);

// phi^{-1} a phi.
Mat transport(const IsoWitness& w, const Mat& a);
Element transport(const IsoWitness& w, const Instance& target, const Element& a);

// Fills w.psi; throws InternalInconsistency if a transported element leaves
// the target.
void attach_index_map(IsoWitness& w, const Semigroup& source, const Semigroup& target);

// psi is a bijection and psi(ab) = psi(a) psi(b) on every pair.
bool verify_witness(const IsoWitness& w, const Semigroup& source, const Semigroup& target);

}  // namespace lgl
