// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Every comparison is exact (integer counts, set and matrix equality); no
// floating-point tolerance is involved anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "lgl/factor.hpp"
#include "lgl/iso.hpp"
#include "lgl/output.hpp"
#include "lgl/structure.hpp"
#include "lgl/units.hpp"
#include "oracles.hpp"

using namespace lgl;

namespace {

using Triple = std::tuple<int, int, int>;
const std::vector<Triple> kFive{{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {2, 4, 2}};

struct Result {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << "FAILED: " << what;
    }
  }
};

std::string label(const Triple& t) {
  return "(" + std::to_string(std::get<0>(t)) + "," + std::to_string(std::get<1>(t)) + "," +
         std::to_string(std::get<2>(t)) + ")";
}

// Enumerated once and shared by the criteria.
const Semigroup& sg(const Triple& t) {
  static std::map<Triple, Semigroup> cache;
  auto it = cache.find(t);
  if (it == cache.end()) {
    const auto [p, n, r] = t;
    it = cache.emplace(t, Semigroup(Instance::standard(p, n, r))).first;
  }
  return it->second;
}

Bitset bits(std::size_t n, const IndexSet& s) {
  Bitset b(n);
  for (Index i : s) b.set(i);
  return b;
}

// Membership by the definition, with U's vector set from the span oracle.
bool member_oracle(const Instance& inst, const Mat& m) {
  const auto u = oracle::span(inst.p(), inst.n(), inst.u().basis());
  std::set<Vec> image;
  for (const Vec& v : u) image.insert(oracle::apply(v, m));
  return image == u;
}

void c1_order(Result& r) {
  for (const auto& t : kFive) {
    const auto [p, n, k] = t;
    const Semigroup& s = sg(t);
    const Instance& inst = s.instance();
    std::vector<Mat> brute;
    for (std::uint64_t i = 0; i < oracle::ipow(p, n * n); ++i) {
      const Mat m = Mat::from_index(p, n, i);
      if (member_oracle(inst, m)) brute.push_back(m);
    }
    const std::uint64_t formula = gl_order(p, k) * oracle::ipow(p, n * (n - k));
    r.require(s.size() == formula && brute == s.elements(), "order mismatch on " + label(t));
    r.note << label(t) << "=" << s.size() << " ";
  }
}

void c2_complements(Result& r) {
  for (const auto& t : kFive) {
    const auto [p, n, k] = t;
    const Subspace& u = sg(t).instance().u();
    const auto uset = oracle::span(p, n, u.basis());
    std::set<std::set<Vec>> expected;
    for (const auto& w : oracle::all_subspaces(p, n)) {
      std::vector<Vec> both(w.begin(), w.end());
      both.insert(both.end(), uset.begin(), uset.end());
      std::size_t meet = 0;
      for (const Vec& v : w) meet += uset.count(v);
      if (meet == 1 && oracle::span(p, n, both).size() == oracle::ipow(p, n)) expected.insert(w);
    }
    std::set<std::set<Vec>> got;
    const auto comps = enumerate_complements(u);
    for (const auto& w : comps) {
      const auto vs = w.vectors();
      got.insert({vs.begin(), vs.end()});
    }
    r.require(comps.size() == oracle::ipow(p, k * (n - k)) && got == expected && got.size() == comps.size(),
              "complements differ on " + label(t));
    r.note << label(t) << "=" << comps.size() << " ";
  }
}

void c3_green(Result& r) {
  for (const auto& t : kFive) {
    const Semigroup& s = sg(t);
    const auto g = green_oracle(s.table());
    const std::pair<Relation, const Partition*> rels[] = {
        {Relation::L, &g.L}, {Relation::R, &g.R}, {Relation::H, &g.H}, {Relation::D, &g.D}, {Relation::J, &g.J}};
    std::vector<Element> el;
    for (Index a = 0; a < s.size(); ++a) el.push_back(s.element(a));
    std::uint64_t mismatches = 0;
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b)
        for (const auto& [rel, part] : rels) {
          mismatches += green_char(s.instance(), el[a], el[b], rel) != part->related(a, b);
        }
    r.require(mismatches == 0 && g.D == g.J, "green mismatch on " + label(t));
    r.note << label(t) << ":" << s.size() * s.size() << " pairs ";
  }
  r.note << "0 mismatches";
}

void c4_ideals(Result& r) {
  for (const auto& t : kFive) {
    const Semigroup& s = sg(t);
    const auto& tab = s.table();
    const int top = s.instance().top();
    for (int k = 1; k <= top; ++k) r.require(verify_ideal(tab, q_ideal(s, k)), "Q(k) not an ideal on " + label(t));
    const auto principal = all_principal_ideals(tab);
    for (Index a = 0; a < s.size(); ++a) {
      if (s.codim(a) == top) continue;
      r.require(principal[a] == bits(s.size(), q_ideal(s, s.codim(a) + 1)),
                "principal ideal differs from Q(codim+1) on " + label(t));
    }
    // The minimal ideal lies in every ideal; it is J(0) = Q(1).
    const IndexSet j0 = j_class(s, 0);
    r.require(j0 == q_ideal(s, 1), "Q(1) != J(0) on " + label(t));
    for (const auto& p : principal) r.require(bits(s.size(), j0).is_subset_of(p), "J(0) not minimal on " + label(t));
    for (Index a : j0) {
      r.require(is_complement(kernel(s.at(a)), s.instance().u()), "ker + U != V in J(0) on " + label(t));
    }
  }
  r.note << "Q(k) ideals, S^1aS^1 = Q(codim+1), Q(1) = J(0) on all five";
}

void c5_minimal(Result& r) {
  for (const auto& t : kFive) {
    const auto [p, n, k] = t;
    const Semigroup& s = sg(t);
    const IndexSet m = minimal_idempotents_char(s);
    r.require(m == minimal_idempotents_oracle(s.table()) && m.size() == oracle::ipow(p, k * (n - k)),
              "minimal idempotents differ on " + label(t));
    r.note << label(t) << "=" << m.size() << " ";
  }
}

void c6_regular(Result& r) {
  std::uint64_t total = 0;
  for (const auto& t : kFive) {
    const Semigroup& s = sg(t);
    for (Index a = 0; a < s.size(); ++a) {
      const Mat& m = s.at(a);
      const Mat b = regular_witness(s.instance(), s.element(a)).mat;
      r.require(is_member(s.instance(), b) && oracle::mul(oracle::mul(m, b), m) == m,
                "no regular witness for " + m.str());
      ++total;
    }
  }
  r.note << total << "/" << total << " members";
}

void c7_factor(Result& r) {
  std::uint64_t n_through = 0, n_infeasible = 0, n_dclass = 0, n_raise = 0, n_sandwich = 0;
  for (const auto& t : std::vector<Triple>{{2, 3, 1}, {2, 3, 2}}) {
    const Semigroup& s = sg(t);
    const Instance& inst = s.instance();
    const int top = inst.top();
    const auto g = green_oracle(s.table());
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b) {
        const Element ea = s.element(a), eb = s.element(b);
        if (ea.codim > eb.codim) {
          bool threw = false;
          try {
            factor_through(inst, ea, eb);
          } catch (const InfeasibleError&) {
            threw = true;
          }
          r.require(threw, "factor_through accepted an infeasible pair");
          ++n_infeasible;
          continue;
        }
        const auto f = factor_through(inst, ea, eb);
        r.require(is_member(inst, f.left.mat) && is_member(inst, f.right.mat) &&
                      oracle::mul(oracle::mul(f.left.mat, eb.mat), f.right.mat) == ea.mat,
                  "factor_through does not recompose");
        ++n_through;
        if (ea.codim != eb.codim) continue;
        const Index gi = s.index_of(dclass_witness(inst, ea, eb).mat);
        r.require(g.L.related(a, gi) && g.R.related(gi, b), "dclass_witness lands in the wrong classes");
        ++n_dclass;
        if (ea.codim == top - 1) {
          const auto w = sandwich_factor(inst, ea, eb);
          r.require(w.left.codim == top && w.right.codim == top &&
                        oracle::mul(oracle::mul(w.left.mat, eb.mat), w.right.mat) == ea.mat,
                    "sandwich_factor does not recompose with units");
          ++n_sandwich;
        }
      }
    for (Index a = 0; a < s.size(); ++a) {
      if (s.codim(a) > top - 2) continue;
      const auto f = raise_factor(inst, s.element(a));
      r.require(f.left.codim == s.codim(a) + 1 && f.right.codim == s.codim(a) + 1 &&
                    oracle::mul(f.left.mat, f.right.mat) == s.at(a),
                "raise_factor does not recompose");
      ++n_raise;
    }
  }
  r.note << n_through << " factor_through, " << n_infeasible << " infeasible, " << n_dclass << " dclass, "
         << n_raise << " raise, " << n_sandwich << " sandwich";
}

void c8_generation(Result& r) {
  for (const auto& t : std::vector<Triple>{{2, 3, 1}, {2, 3, 2}, {3, 2, 1}}) {
    const Semigroup& s = sg(t);
    auto mul = [](const Mat& a, const Mat& b) { return oracle::mul(a, b); };
    const auto gens = s.to_mats(generating_set(s));
    const auto closed = close_under_product<Mat>(gens, mul);
    r.require(std::set<Mat>(closed.begin(), closed.end()) ==
                  std::set<Mat>(s.elements().begin(), s.elements().end()),
              "generating set does not generate " + label(t));
    for (int k = 0; k < s.instance().top(); ++k) {
      r.require(close_indices(s.table(), j_class(s, k)) == q_ideal(s, k + 1), "<J(k)> != Q(k+1) on " + label(t));
    }
    r.note << label(t) << " ";
  }
}

void c9_rank(Result& r) {
  for (const auto& t : std::vector<Triple>{{2, 2, 1}, {3, 2, 1}}) {
    const Semigroup& s = sg(t);
    const auto whole = rank_search(s.table(), all_indices(s.size()), s.size());
    const IndexSet units = j_class(s, s.instance().top());
    const auto group = rank_search(s.table().restrict_to(units), all_indices(units.size()), units.size());
    r.require(whole.status == RankStatus::Found && group.status == RankStatus::Found &&
                  whole.size == group.size + 1,
              "rank identity fails on " + label(t));
    if (t == Triple{2, 2, 1}) r.require(whole.size == 2, "rank of (2,2,1) is not 2");
    r.note << label(t) << ": " << whole.size << " = " << group.size << "+1 ";
  }
}

void c10_units(Result& r) {
  std::uint64_t decompositions = 0;
  for (const auto& t : std::vector<Triple>{{2, 3, 1}, {2, 3, 2}}) {
    const Semigroup& s = sg(t);
    const Instance& inst = s.instance();
    const auto& tab = s.table();
    const IndexSet units = j_class(s, inst.top());
    const IndexSet fix_u = special_subgroup(s, {SubgroupTag::FixU, inst.u()});
    const Bitset fu = bits(s.size(), fix_u);
    const Index id = s.index_of(Mat::identity(inst.p(), inst.n()));
    for (Index g : units) {
      const Index gi = s.index_of(*inverse(s.at(g)));
      for (Index x : fix_u) r.require(fu.test(tab.product(tab.product(g, x), gi)), "Fix(U) not normal");
    }
    for (const Subspace& w : enumerate_complements(inst.u())) {
      const IndexSet fix_w = special_subgroup(s, {SubgroupTag::FixW, w});
      const Bitset fw = bits(s.size(), fix_w);
      r.require(units.size() == fix_w.size() * fix_u.size(), "|J| != |Fix(W)||Fix(U)|");
      for (Index x : fix_w) r.require(x == id || !fu.test(x), "Fix(W) meets Fix(U) nontrivially");
      for (Index a : units) {
        const auto sp = decompose_unit(inst, s.element(a), w);
        const Index x = s.index_of(sp.first.mat), y = s.index_of(sp.second.mat);
        int ways = 0;
        for (Index p : fix_w)
          for (Index q : fix_u) ways += tab.product(p, q) == a;
        r.require(fw.test(x) && fu.test(y) && tab.product(x, y) == a && ways == 1, "decompose_unit fails");
        ++decompositions;
      }
      const IndexSet gw = special_subgroup(s, {SubgroupTag::GW, w});
      const IndexSet nw = special_subgroup(s, {SubgroupTag::NW, w});
      const Bitset gb = bits(s.size(), gw), nb = bits(s.size(), nw);
      for (Index a : fix_u) {
        const auto sp = decompose_fixU(inst, s.element(a), w);
        const Index x = s.index_of(sp.first.mat), y = s.index_of(sp.second.mat);
        int ways = 0;
        for (Index p : gw)
          for (Index q : nw) ways += tab.product(p, q) == a;
        r.require(gb.test(x) && nb.test(y) && tab.product(x, y) == a && ways == 1, "decompose_fixU fails");
        ++decompositions;
      }
    }
  }
  r.note << decompositions << " unique decompositions; Fix(U) normal";
}

void c11_groups(Result& r) {
  std::uint64_t checks = 0;
  for (const auto& t : std::vector<Triple>{{2, 3, 1}, {2, 3, 2}, {3, 2, 1}}) {
    const Semigroup& s = sg(t);
    for (const Subspace& w : enumerate_complements(s.instance().u())) {
      for (SubgroupTag tag : {SubgroupTag::FixW, SubgroupTag::GW, SubgroupTag::NW}) {
        r.require(subgroup_iso_check(s, {tag, w}), "subgroup_iso_check failed");
        ++checks;
      }
    }
  }
  r.note << checks << " subgroup maps bijective and homomorphic";
}

void c12_counterexamples(Result& r) {
  for (int p : {3, 2}) {
    const Vec u1(p, {1, 0, 0}), u2(p, {0, 1, 0}), w(p, {0, 0, 1});
    const auto a = nonnormality_examples(p, NonNormalCase::FixWInUnits);
    r.require(a.reproduced() && a.w_images == std::vector<Vec>{w - u1 + u2} && oracle::apply(w, a.conjugate) != w,
              "Fix(W) example not reproduced over GF(" + std::to_string(p) + ")");
    const Vec u(p, {1, 0, 0}), w1(p, {0, 1, 0}), w2(p, {0, 0, 1});
    const auto b = nonnormality_examples(p, NonNormalCase::GWInFixU);
    const Subspace want = rref_canonical(p, 3, std::vector<Vec>{w1 - u, w2 + u});
    r.require(b.reproduced() && b.conjugated_w == want && want != b.w &&
                  !in_subgroup(Instance::standard(p, 3, 1), {SubgroupTag::GW, b.w}, b.conjugate),
              "G(W) example not reproduced over GF(" + std::to_string(p) + ")");
    r.note << "GF(" << p << "): " << a.conjugated_w.str() << ", " << b.conjugated_w.str() << "  ";
  }
}

void c13_iso(Result& r) {
  const Instance a = Instance::standard(2, 3, 1);
  const Instance b(2, 3, rref_canonical(2, 3, std::vector<Vec>{Vec(2, {1, 1, 0})}));
  auto w = decide_isomorphic(a, b);
  r.require(w.has_value(), "no witness for <e1> vs <e1+e2>");
  if (!w) return;
  const Semigroup& sa = sg({2, 3, 1});
  const Semigroup sb(b);
  attach_index_map(*w, sa, sb);
  std::uint64_t pairs = 0;
  for (Index x = 0; x < sa.size(); ++x)
    for (Index y = 0; y < sa.size(); ++y) {
      r.require(transport(*w, oracle::mul(sa.at(x), sa.at(y))) ==
                    oracle::mul(transport(*w, sa.at(x)), transport(*w, sa.at(y))),
                "psi not multiplicative");
      ++pairs;
    }
  r.require(verify_witness(*w, sa, sb), "witness rejected");
  r.require(!decide_isomorphic(a, Instance::standard(2, 3, 2)).has_value(), "(2,3,1) ~ (2,3,2) claimed");
  r.note << "psi multiplicative on " << pairs << " pairs; (2,3,1) vs (2,3,2): not isomorphic";
}

void c14_jcount(Result& r) {
  for (const auto& t : std::vector<Triple>{{2, 2, 1}, {2, 3, 1}}) {
    const auto [p, n, k] = t;
    const std::size_t observed = green_oracle(sg(t).table()).J.num_classes;
    const auto claimed = static_cast<std::size_t>(n - k);
    InstanceConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.r = k;
    const auto rep = structured_report(cfg);
    const bool flagged = rep["j_class_count"]["flagged"].get<bool>();
    r.require(rep["j_class_count"]["observed"].get<std::size_t>() == observed, "reported count differs");
    r.require(flagged == (observed != claimed), "flag does not fire iff the counts differ");
    r.require(observed == claimed + 1, "observed J-class count is not n-r+1");
    r.note << label(t) << ": observed " << observed << " vs dim(V/U) " << claimed << (flagged ? " flagged " : " ");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria{
      {"order law", c1_order},
      {"complement count", c2_complements},
      {"Green oracle equivalence", c3_green},
      {"ideal structure", c4_ideals},
      {"minimal idempotents", c5_minimal},
      {"regularity", c6_regular},
      {"constructive factorizations", c7_factor},
      {"generation", c8_generation},
      {"rank identity", c9_rank},
      {"unit-group decomposition", c10_units},
      {"group isomorphisms", c11_groups},
      {"counterexample reproduction", c12_counterexamples},
      {"isomorphism theorem", c13_iso},
      {"J-class count report", c14_jcount},
  };
  int failed = 0;
  int number = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.note.str("");
      r.note << "FAILED: exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.ok;
    std::printf("criterion %2d %-28s %s  [exact, %.2fs]  %s\n", ++number, name, r.ok ? "PASS" : "FAIL", secs,
                r.note.str().c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.1fs\n", number - failed, number, total);
  return failed == 0 ? 0 : 1;
}
