#include "lgl/units.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lgl/error.hpp"
#include "lgl/kernels.hpp"

namespace lgl {

const char* to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::FixU: return "Fix(U)";
    case SubgroupTag::FixW: return "Fix(W)";
    case SubgroupTag::GW: return "G(W)";
    case SubgroupTag::NW: return "N(W)";
  }
  return "?";
}

namespace {

bool fixes(const Subspace& x, const Mat& m) {
  return std::all_of(x.basis().begin(), x.basis().end(), [&](const Vec& v) { return v * m == v; });
}

bool is_unit_member(const Instance& inst, const Mat& m) {
  return is_member(inst, m) && rank(m) == inst.n();
}

void check_kind(const Instance& inst, const SubgroupKind& kind) {
  if (inst.r() == 0) throw PreconditionError("unit subgroups need dim U >= 1");
  if (kind.tag != SubgroupTag::FixU && !is_complement(kind.w, inst.u())) {
    throw PreconditionError(std::string(to_string(kind.tag)) + ": W is not a complement of U");
  }
}

bool in_subgroup_unchecked(const Instance& inst, const SubgroupKind& kind, const Mat& m) {
  if (!is_unit_member(inst, m)) return false;
  switch (kind.tag) {
    case SubgroupTag::FixU: return fixes(inst.u(), m);
    case SubgroupTag::FixW: return fixes(kind.w, m);
    case SubgroupTag::GW: return fixes(inst.u(), m) && map_subspace(kind.w, m) == kind.w;
    case SubgroupTag::NW:
      return fixes(inst.u(), m) &&
             std::all_of(kind.w.basis().begin(), kind.w.basis().end(),
                         [&](const Vec& v) { return inst.u().contains(v * m - v); });
  }
  return false;
}

std::vector<Vec> images_under(const std::vector<Vec>& vs, const Mat& m) {
  std::vector<Vec> out;
  for (const Vec& v : vs) out.push_back(v * m);
  return out;
}

std::vector<Vec> cat(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Matrix of v -> v m restricted to span(basis), in basis coordinates.
Mat restriction(const std::vector<Vec>& basis, const Mat& m) {
  const int k = static_cast<int>(basis.size());
  Mat out(m.p(), k);
  for (int i = 0; i < k; ++i) {
    auto c = coordinates(basis[i] * m, basis);
    if (!c) throw InternalInconsistency("restriction: subspace is not invariant");
    for (int j = 0; j < k; ++j) out.set(i, j, (*c)[j]);
  }
  return out;
}

}  // namespace

bool in_subgroup(const Instance& inst, const SubgroupKind& kind, const Mat& m) {
  check_kind(inst, kind);
  return in_subgroup_unchecked(inst, kind, m);
}

IndexSet special_subgroup(const Semigroup& s, const SubgroupKind& kind) {
  const Instance& inst = s.instance();
  check_kind(inst, kind);
  IndexSet out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s.codim(i) == inst.top() && in_subgroup_unchecked(inst, kind, s.at(i))) out.push_back(i);
  }
  const Index id = *s.table().identity();
  if (!std::binary_search(out.begin(), out.end(), id)) {
    throw InternalInconsistency(std::string(to_string(kind.tag)) + " misses the identity");
  }
  for (Index a : out) {
    for (Index b : out) {
      if (!std::binary_search(out.begin(), out.end(), s.table().product(a, b))) {
        throw InternalInconsistency(std::string(to_string(kind.tag)) + " is not product-closed");
      }
    }
  }
  return out;
}

std::vector<Vec> translate_offsets(const std::vector<Vec>& w_basis, const Subspace& target,
                                   const Subspace& u) {
  const std::vector<Vec> basis = cat(target.basis(), u.basis());
  const std::size_t m = target.basis().size();
  std::vector<Vec> out;
  for (const Vec& w : w_basis) {
    auto c = coordinates(w, basis);
    if (!c) throw PreconditionError("translate_offsets: target is not a complement of U");
    Vec along_u(w.p(), w.n());
    for (std::size_t j = 0; j < u.basis().size(); ++j) {
      along_u = along_u + u.basis()[j].scaled((*c)[m + j]);
    }
    // w - along_u lies in target.
    out.push_back(-along_u);
  }
  return out;
}

UnitSplit decompose_unit(const Instance& inst, const Element& a, const Subspace& w) {
  if (!is_unit_member(inst, a.mat)) throw PreconditionError("decompose_unit: argument is not a unit");
  if (!is_complement(w, inst.u())) throw PreconditionError("decompose_unit: W is not a complement of U");
  const auto& wb = w.basis();
  const auto& ub = inst.u().basis();
  const auto ua = images_under(ub, a.mat);
  const auto wa = images_under(wb, a.mat);
  const Mat first = map_from_basis(cat(wb, ub), cat(wb, ua));
  const Mat second = map_from_basis(cat(wb, ua), cat(wa, ua));
  const SubgroupKind fix_w{SubgroupTag::FixW, w};
  const SubgroupKind fix_u{SubgroupTag::FixU, w};
  if (first * second != a.mat || !in_subgroup_unchecked(inst, fix_w, first) ||
      !in_subgroup_unchecked(inst, fix_u, second)) {
    throw InternalInconsistency("decompose_unit failed for " + a.mat.str());
  }
  return {{first, inst.top()}, {second, inst.top()}};
}

UnitSplit decompose_fixU(const Instance& inst, const Element& a, const Subspace& w) {
  if (!is_complement(w, inst.u())) throw PreconditionError("decompose_fixU: W is not a complement of U");
  const SubgroupKind fix_u{SubgroupTag::FixU, w};
  if (!in_subgroup_unchecked(inst, fix_u, a.mat)) {
    throw PreconditionError("decompose_fixU: argument is not in Fix(U)");
  }
  const auto& wb = w.basis();
  const auto& ub = inst.u().basis();
  const Subspace moved = map_subspace(w, a.mat);
  const auto offsets = translate_offsets(wb, moved, inst.u());
  std::vector<Vec> translated;
  for (std::size_t i = 0; i < wb.size(); ++i) translated.push_back(wb[i] + offsets[i]);
  std::vector<Vec> lifted;
  for (const Vec& t : translated) lifted.push_back(preimage_vector(a.mat, t));

  const Mat g_part = map_from_basis(cat(lifted, ub), cat(wb, ub));
  const Mat n_part = map_from_basis(cat(wb, ub), cat(translated, ub));
  const SubgroupKind gw{SubgroupTag::GW, w};
  const SubgroupKind nw{SubgroupTag::NW, w};
  if (g_part * n_part != a.mat || !in_subgroup_unchecked(inst, gw, g_part) ||
      !in_subgroup_unchecked(inst, nw, n_part)) {
    throw InternalInconsistency("decompose_fixU failed for " + a.mat.str());
  }
  return {{g_part, inst.top()}, {n_part, inst.top()}};
}

bool subgroup_iso_check(const Semigroup& s, const SubgroupKind& kind) {
  const Instance& inst = s.instance();
  if (kind.tag == SubgroupTag::FixU) {
    throw PreconditionError("subgroup_iso_check: no natural isomorphism for Fix(U)");
  }
  const IndexSet sub = special_subgroup(s, kind);
  const auto fail = [&](const std::string& what) -> bool {
    throw InternalInconsistency(std::string(to_string(kind.tag)) + ": " + what);
  };
  const int p = inst.p();

  if (kind.tag == SubgroupTag::NW) {
    const auto& wb = kind.w.basis();
    const auto& ub = inst.u().basis();
    auto phi = [&](Index i) {
      std::vector<int> tuple;
      for (const Vec& w : wb) {
        auto c = coordinates(w * s.at(i) - w, ub);
        tuple.insert(tuple.end(), c->begin(), c->end());
      }
      return tuple;
    };
    std::vector<std::vector<int>> images;
    for (Index i : sub) images.push_back(phi(i));
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < wb.size() * ub.size(); ++i) expected *= static_cast<std::uint64_t>(p);
    if (std::set<std::vector<int>>(images.begin(), images.end()).size() != sub.size() ||
        sub.size() != expected) {
      return fail("translate map is not a bijection onto U^(n-r)");
    }
    for (std::size_t x = 0; x < sub.size(); ++x) {
      for (std::size_t y = 0; y < sub.size(); ++y) {
        auto sum = images[x];
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = (sum[k] + images[y][k]) % p;
        if (phi(s.table().product(sub[x], sub[y])) != sum) return fail("translate map is not additive");
      }
    }
    return true;
  }

  const std::vector<Vec>& basis = kind.tag == SubgroupTag::FixW ? inst.u().basis() : kind.w.basis();
  const int k = static_cast<int>(basis.size());
  std::vector<Mat> images;
  for (Index i : sub) images.push_back(restriction(basis, s.at(i)));
  const auto gl = kernels::omp::filter_matrices(p, k, [](const Mat& m) { return rank(m) == m.n(); });
  std::vector<Mat> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return fail("restriction is not injective");
  }
  if (sorted != gl) return fail("restriction is not onto the general linear group");
  for (std::size_t x = 0; x < sub.size(); ++x) {
    for (std::size_t y = 0; y < sub.size(); ++y) {
      const Index xy = s.table().product(sub[x], sub[y]);
      if (restriction(basis, s.at(xy)) != images[x] * images[y]) {
        return fail("restriction is not multiplicative");
      }
    }
  }
  return true;
}

NonNormalityReport nonnormality_examples(int p, NonNormalCase which) {
  NonNormalityReport rep;
  rep.p = p;
  rep.which = which;
  const int n = 3;
  const Vec e1 = Vec::unit(p, n, 0);
  const Vec e2 = Vec::unit(p, n, 1);
  const Vec e3 = Vec::unit(p, n, 2);
  const std::vector<Vec> std_basis{e1, e2, e3};

  if (which == NonNormalCase::FixWInUnits) {
    // U = <u1, u2> = <e1, e2>, W = <w> = <e3>.
    const Instance inst = Instance::standard(p, n, 2);
    const Vec &u1 = e1, &u2 = e2, &w = e3;
    rep.w = rref_canonical(p, n, std::vector<Vec>{w});
    rep.alpha = map_from_basis(std_basis, std::vector<Vec>{u1, u2, w + u1});
    rep.beta = map_from_basis(std_basis, std::vector<Vec>{u2, u1, w});
    rep.conjugate = rep.alpha * rep.beta * *inverse(rep.alpha);
    rep.expected = {w - u1 + u2};
    const SubgroupKind fix_w{SubgroupTag::FixW, rep.w};
    rep.alpha_in_parent = is_unit_member(inst, rep.alpha);
    rep.beta_in_subgroup = in_subgroup(inst, fix_w, rep.beta);
    rep.conjugate_in_parent = is_unit_member(inst, rep.conjugate);
    rep.conjugate_in_subgroup = in_subgroup(inst, fix_w, rep.conjugate);
  } else {
    // U = <u> = <e1>, W = <w1, w2> = <e2, e3>.
    const Instance inst = Instance::standard(p, n, 1);
    const Vec &u = e1, &w1 = e2, &w2 = e3;
    rep.w = rref_canonical(p, n, std::vector<Vec>{w1, w2});
    rep.alpha = map_from_basis(std_basis, std::vector<Vec>{u, w1 + u, w2});
    rep.beta = map_from_basis(std_basis, std::vector<Vec>{u, w2, w1});
    rep.conjugate = rep.alpha * rep.beta * *inverse(rep.alpha);
    rep.expected = {w2 + u, w1 - u};
    const SubgroupKind fix_u{SubgroupTag::FixU, rep.w};
    const SubgroupKind gw{SubgroupTag::GW, rep.w};
    rep.alpha_in_parent = in_subgroup(inst, fix_u, rep.alpha);
    rep.beta_in_subgroup = in_subgroup(inst, gw, rep.beta);
    rep.conjugate_in_parent = in_subgroup(inst, fix_u, rep.conjugate);
    rep.conjugate_in_subgroup = in_subgroup(inst, gw, rep.conjugate);
  }
  rep.w_images = images_under(rep.w.basis(), rep.conjugate);
  rep.conjugated_w = map_subspace(rep.w, rep.conjugate);
  return rep;
}

std::string NonNormalityReport::summary() const {
  std::ostringstream os;
  os << (which == NonNormalCase::FixWInUnits ? "Fix(W) in J(n-r)" : "G(W) in Fix(U)") << " over GF("
     << p << "): W = " << w.str() << ", W^conj = " << conjugated_w.str() << ", images";
  for (const Vec& v : w_images) os << ' ' << v;
  os << (reproduced() ? " -> not normal" : " -> NOT reproduced");
  return os.str();
}

}  // namespace lgl
