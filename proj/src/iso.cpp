#include "lgl/iso.hpp"

#include "lgl/error.hpp"

namespace lgl {

namespace {

std::vector<Vec> adapted_basis(const Instance& inst) {
  std::vector<Vec> b = inst.default_complement().basis();
  b.insert(b.end(), inst.u().basis().begin(), inst.u().basis().end());
  return b;
}

}  // namespace

std::optional<IsoWitness> decide_isomorphic(const Instance& i1, const Instance& i2) {
  if (i1.p() != i2.p()) throw UnsupportedComparison("isomorphism across different fields is not decided");
  if (i1.n() != i2.n() || i1.r() != i2.r()) return std::nullopt;
  IsoWitness w;
  w.phi = map_from_basis(adapted_basis(i1), adapted_basis(i2));
  w.phi_inv = *inverse(w.phi);
  if (map_subspace(i1.u(), w.phi) != i2.u()) {
    throw InternalInconsistency("isomorphism does not carry U1 onto U2");
  }
  return w;
}

Mat transport(const IsoWitness& w, const Mat& a) { return w.phi_inv * a * w.phi; }

Element transport(const IsoWitness& w, const Instance& target, const Element& a) {
  return make_element(target, transport(w, a.mat));
}

void attach_index_map(IsoWitness& w, const Semigroup& source, const Semigroup& target) {
  w.psi.clear();
  w.psi.reserve(source.size());
  for (const Mat& a : source.elements()) {
    auto j = target.find(transport(w, a));
    if (!j) throw InternalInconsistency("transport of " + a.str() + " leaves the target");
    w.psi.push_back(*j);
  }
}

bool verify_witness(const IsoWitness& w, const Semigroup& source, const Semigroup& target) {
  if (w.psi.size() != source.size() || source.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (Index j : w.psi) {
    if (hit[j]) return false;
    hit[j] = true;
  }
  if (map_subspace(source.instance().u(), w.phi) != target.instance().u()) return false;
  const auto& st = source.table();
  const auto& tt = target.table();
  for (Index a = 0; a < source.size(); ++a) {
    for (Index b = 0; b < source.size(); ++b) {
      if (w.psi[st.product(a, b)] != tt.product(w.psi[a], w.psi[b])) return false;
    }
  }
  return true;
}

}  // namespace lgl
