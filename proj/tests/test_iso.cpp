#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgl/iso.hpp"
#include "lgl/structure.hpp"
#include "oracles.hpp"

using namespace lgl;

namespace {

Instance with_u(int p, int n, std::vector<Vec> rows) { return Instance(p, n, rref_canonical(p, n, rows)); }

}  // namespace

TEST_CASE("same instance gives the identity witness") {
  const Instance inst = Instance::standard(2, 3, 1);
  const auto w = decide_isomorphic(inst, inst);
  REQUIRE(w.has_value());
  CHECK(w->phi == Mat::identity(2, 3));
  CHECK(transport(*w, Mat::identity(2, 3)) == Mat::identity(2, 3));
}

TEST_CASE("sheared subspace is isomorphic on every product") {
  const Instance a = Instance::standard(2, 3, 1);
  const Instance b = with_u(2, 3, {Vec(2, {1, 1, 0})});
  auto w = decide_isomorphic(a, b);
  REQUIRE(w.has_value());
  CHECK(map_subspace(a.u(), w->phi) == b.u());
  CHECK(w->phi * w->phi_inv == Mat::identity(2, 3));
  const Semigroup sa(a), sb(b);
  attach_index_map(*w, sa, sb);
  CHECK(verify_witness(*w, sa, sb));
  // Direct check of psi(xy) = psi(x) psi(y) on all 64^2 pairs via matrices.
  for (Index x = 0; x < sa.size(); ++x)
    for (Index y = 0; y < sa.size(); ++y) {
      CHECK(transport(*w, sa.at(x) * sa.at(y)) == transport(*w, sa.at(x)) * transport(*w, sa.at(y)));
    }
  // Codimension and minimal idempotents are carried over.
  std::set<Mat> moved_min;
  for (Index e : minimal_idempotents_char(sa)) moved_min.insert(transport(*w, sa.at(e)));
  const auto target_min = sb.to_mats(minimal_idempotents_char(sb));
  CHECK(moved_min == std::set<Mat>(target_min.begin(), target_min.end()));
  for (Index x = 0; x < sa.size(); ++x) CHECK(transport(*w, b, sa.element(x)).codim == sa.codim(x));
}

TEST_CASE("a corrupted index map is rejected") {
  const Instance a = Instance::standard(2, 2, 1);
  auto w = decide_isomorphic(a, a);
  const Semigroup s(a);
  attach_index_map(*w, s, s);
  CHECK(verify_witness(*w, s, s));
  std::swap(w->psi[0], w->psi[1]);
  CHECK_FALSE(verify_witness(*w, s, s));
}

TEST_CASE("non-isomorphic and unsupported pairs") {
  CHECK_FALSE(decide_isomorphic(Instance::standard(2, 3, 1), Instance::standard(2, 3, 2)).has_value());
  CHECK_FALSE(decide_isomorphic(Instance::standard(2, 3, 1), Instance::standard(2, 2, 1)).has_value());
  CHECK(Semigroup(Instance::standard(2, 3, 1)).size() != Semigroup(Instance::standard(2, 3, 2)).size());
  CHECK_THROWS_AS(decide_isomorphic(Instance::standard(2, 2, 1), Instance::standard(3, 2, 1)), UnsupportedComparison);
}

TEST_CASE("decision matches a search over every invertible phi") {
  const int p = 2, n = 3;
  std::vector<Mat> gl;
  for (std::uint64_t i = 0; i < oracle::ipow(p, n * n); ++i) {
    const Mat m = Mat::from_index(p, n, i);
    if (oracle::kernel(m).size() == 1) gl.push_back(m);
  }
  REQUIRE(gl.size() == 168);
  std::vector<Instance> instances;
  for (const auto& s : oracle::all_subspaces(p, n)) {
    if (s.size() == oracle::ipow(p, n)) continue;
    instances.emplace_back(p, n, rref_canonical(p, n, std::vector<Vec>(s.begin(), s.end())));
  }
  REQUIRE(instances.size() == 15);
  for (const auto& a : instances)
    for (const auto& b : instances) {
      const bool exists = std::any_of(gl.begin(), gl.end(), [&](const Mat& phi) {
        return map_subspace(a.u(), phi) == b.u();
      });
      const auto w = decide_isomorphic(a, b);
      CHECK(w.has_value() == exists);
      if (w) CHECK(map_subspace(a.u(), w->phi) == b.u());
    }
}
