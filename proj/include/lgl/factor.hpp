#pragma once

// Explicit witnesses for the existence statements about L_GL(U)(V). Every
// free basis choice is made by extend_basis / preimage_vector, so each
// function is deterministic. Results are checked by recomposition before
// they are returned; a failed check raises InternalInconsistency.

#include "lgl/instance.hpp"

namespace lgl {

struct Factorization {
  Element left;
  Element right;
};

// gamma with image(gamma) = image(a) and kernel(gamma) = kernel(b), so that
// a L gamma R b. Requires codim(a) == codim(b).
Element dclass_witness(const Instance& inst, const Element& a, const Element& b);

// (lambda, mu) with a = lambda * b * mu. Throws InfeasibleError when
// codim(a) > codim(b), where no such pair exists.
Factorization factor_through(const Instance& inst, const Element& a, const Element& b);

// beta with a beta a = a and beta a beta = beta. Units map to their inverse,
// idempotents to themselves.
Element regular_witness(const Instance& inst, const Element& a);

// (lambda, mu), both of codimension codim(a) + 1, with a = lambda * mu.
// Requires codim(a) <= n - r - 2.
Factorization raise_factor(const Instance& inst, const Element& a);

// Units (lambda, mu) with lambda * a * mu = target, for a and target both of
// codimension n - r - 1.
Factorization sandwich_factor(const Instance& inst, const Element& target, const Element& a);

}  // namespace lgl
