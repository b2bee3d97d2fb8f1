#include "lgl/factor.hpp"

#include <string>

#include "lgl/error.hpp"

namespace lgl {

namespace {

std::vector<Vec> concat(std::initializer_list<const std::vector<Vec>*> parts) {
  std::vector<Vec> out;
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  return out;
}

std::vector<Vec> zeros(int p, int n, std::size_t count) { return std::vector<Vec>(count, Vec(p, n)); }

std::vector<Vec> apply(const std::vector<Vec>& vs, const Mat& m) {
  std::vector<Vec> out;
  out.reserve(vs.size());
  for (const Vec& v : vs) out.push_back(v * m);
  return out;
}

std::vector<Vec> preimages(const Mat& m, const std::vector<Vec>& targets) {
  std::vector<Vec> out;
  out.reserve(targets.size());
  for (const Vec& t : targets) out.push_back(preimage_vector(m, t));
  return out;
}

// Vectors y_1..y_c of image(a) with image(a) = span(y) + U.
std::vector<Vec> image_transversal(const Instance& inst, const Mat& a) {
  return extend_basis(inst.u().basis(), image(a));
}

std::vector<Vec> complete(const Instance& inst, const std::vector<Vec>& partial) {
  return extend_basis(partial, inst.full());
}

Element build(const Instance& inst, const std::vector<Vec>& basis, const std::vector<Vec>& images,
              const char* what) {
  const Mat m = map_from_basis(basis, images);
  if (!is_member(inst, m)) {
    throw InternalInconsistency(std::string(what) + ": constructed map " + m.str() +
                                " does not restrict to GL(U)");
  }
  return {m, codim(inst, m)};
}

void check_member(const Instance& inst, const Element& a, const char* what) {
  if (!is_member(inst, a.mat)) throw PreconditionError(std::string(what) + ": argument is not a member");
}

}  // namespace

Element dclass_witness(const Instance& inst, const Element& a, const Element& b) {
  check_member(inst, a, "dclass_witness");
  check_member(inst, b, "dclass_witness");
  if (a.codim != b.codim) throw PreconditionError("dclass_witness: codimensions differ");
  const int p = inst.p();
  const int n = inst.n();
  const auto& ub = inst.u().basis();
  const auto kb = kernel(b.mat).basis();
  const auto lifted = complete(inst, concat({&kb, &ub}));
  const auto y = image_transversal(inst, a.mat);
  const auto ua = apply(ub, a.mat);
  const auto zero = zeros(p, n, kb.size());
  Element g = build(inst, concat({&kb, &lifted, &ub}), concat({&zero, &y, &ua}), "dclass_witness");
  if (image(g.mat) != image(a.mat) || kernel(g.mat) != kernel(b.mat)) {
    throw InternalInconsistency("dclass_witness: image or kernel mismatch");
  }
  return g;
}

Factorization factor_through(const Instance& inst, const Element& a, const Element& b) {
  check_member(inst, a, "factor_through");
  check_member(inst, b, "factor_through");
  if (a.codim > b.codim) {
    throw InfeasibleError("factor_through: codim " + std::to_string(a.codim) + " > " +
                          std::to_string(b.codim));
  }
  const int p = inst.p();
  const int n = inst.n();
  const auto& ub = inst.u().basis();

  const auto ka = kernel(a.mat).basis();
  const auto y = image_transversal(inst, a.mat);
  const auto w = preimages(a.mat, y);
  auto z = image_transversal(inst, b.mat);
  z.resize(y.size());
  const auto wp = preimages(b.mat, z);

  const auto ka_zero = zeros(p, n, ka.size());
  Element lambda = build(inst, concat({&ka, &w, &ub}), concat({&ka_zero, &wp, &ub}), "factor_through");

  const auto ubb = apply(ub, b.mat);
  const auto uba = apply(ub, a.mat);
  const auto rest = complete(inst, concat({&z, &ubb}));
  const auto rest_zero = zeros(p, n, rest.size());
  Element mu = build(inst, concat({&z, &ubb, &rest}), concat({&y, &uba, &rest_zero}), "factor_through");

  if (lambda.mat * b.mat * mu.mat != a.mat) {
    throw InternalInconsistency("factor_through: recomposition failed");
  }
  return {lambda, mu};
}

Element regular_witness(const Instance& inst, const Element& a) {
  check_member(inst, a, "regular_witness");
  if (auto inv = inverse(a.mat)) return {*inv, a.codim};
  if (a.mat * a.mat == a.mat) return a;

  const int p = inst.p();
  const int n = inst.n();
  const auto& ub = inst.u().basis();
  const auto y = image_transversal(inst, a.mat);
  const auto w = preimages(a.mat, y);
  const auto ua = apply(ub, a.mat);
  const auto rest = complete(inst, concat({&y, &ua}));
  const auto rest_zero = zeros(p, n, rest.size());
  Element beta = build(inst, concat({&y, &ua, &rest}), concat({&w, &ub, &rest_zero}), "regular_witness");
  if (a.mat * beta.mat * a.mat != a.mat || beta.mat * a.mat * beta.mat != beta.mat) {
    throw InternalInconsistency("regular_witness: not an inverse of " + a.mat.str());
  }
  return beta;
}

Factorization raise_factor(const Instance& inst, const Element& a) {
  check_member(inst, a, "raise_factor");
  const int k = a.codim;
  if (k > inst.top() - 2) {
    throw PreconditionError("raise_factor: needs codim <= n - r - 2, got " + std::to_string(k));
  }
  const int p = inst.p();
  const int n = inst.n();
  const auto& ub = inst.u().basis();
  const auto y = image_transversal(inst, a.mat);
  const auto v = preimages(a.mat, y);
  const auto kb = kernel(a.mat).basis();
  const auto w = complete(inst, concat({&y, &ub}));
  // kernel(a) and w both have dimension n - r - k >= 2.

  auto lam_kernel_images = zeros(p, n, kb.size());
  lam_kernel_images[0] = w[0];
  const auto ua = apply(ub, a.mat);
  Element lambda = build(inst, concat({&v, &kb, &ub}), concat({&y, &lam_kernel_images, &ua}), "raise_factor");

  auto mu_w_images = zeros(p, n, w.size());
  mu_w_images[1] = w[1];
  Element mu = build(inst, concat({&y, &w, &ub}), concat({&y, &mu_w_images, &ub}), "raise_factor");

  if (lambda.mat * mu.mat != a.mat || lambda.codim != k + 1 || mu.codim != k + 1) {
    throw InternalInconsistency("raise_factor: recomposition failed");
  }
  return {lambda, mu};
}

Factorization sandwich_factor(const Instance& inst, const Element& target, const Element& a) {
  check_member(inst, a, "sandwich_factor");
  check_member(inst, target, "sandwich_factor");
  const int c = inst.top() - 1;
  if (a.codim != c || target.codim != c) {
    throw PreconditionError("sandwich_factor: both arguments need codimension n - r - 1");
  }
  const auto& ub = inst.u().basis();

  const auto y = image_transversal(inst, a.mat);
  const auto v = preimages(a.mat, y);
  const auto ka = kernel(a.mat).basis();
  const auto w = complete(inst, concat({&y, &ub}));

  const auto z = image_transversal(inst, target.mat);
  const auto vt = preimages(target.mat, z);
  const auto kt = kernel(target.mat).basis();
  const auto wt = complete(inst, concat({&z, &ub}));

  Element lambda = build(inst, concat({&vt, &kt, &ub}), concat({&v, &ka, &ub}), "sandwich_factor");
  const auto ua = apply(ub, a.mat);
  const auto ut = apply(ub, target.mat);
  Element mu = build(inst, concat({&y, &w, &ua}), concat({&z, &wt, &ut}), "sandwich_factor");

  if (lambda.mat * a.mat * mu.mat != target.mat || lambda.codim != inst.top() ||
      mu.codim != inst.top()) {
    throw InternalInconsistency("sandwich_factor: recomposition failed");
  }
  return {lambda, mu};
}

}  // namespace lgl
