#include "lgl/output.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "lgl/structure.hpp"
#include "lgl/units.hpp"

namespace lgl {

namespace {

std::string html_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Elements are listed inside cells only for small semigroups.
constexpr std::size_t kListElementsUpTo = 64;

}  // namespace

std::string eggbox_dot(const Semigroup& s) {
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (Index i = 0; i < s.size(); ++i) {
    labels.push_back(s.at(i).str());
    grades.push_back(s.codim(i));
  }
  return eggbox_dot(s.table(), labels, grades);
}

std::string eggbox_dot(const SemigroupTable& t, const std::vector<std::string>& labels,
                       const std::vector<int>& grades) {
  if (labels.size() != t.size() || (!grades.empty() && grades.size() != t.size())) {
    throw PreconditionError("eggbox_dot: one label and grade per element");
  }
  const auto g = green_oracle(t);
  const IndexSet minimal = minimal_idempotents_oracle(t);
  std::vector<bool> is_min(t.size(), false);
  for (Index e : minimal) is_min[e] = true;

  // D-classes keyed by grade, or by principal ideal size, both constant on
  // each class.
  const auto ideals = grades.empty() ? all_principal_ideals(t) : std::vector<Bitset>{};
  std::map<std::pair<std::size_t, Index>, IndexSet> dclasses;
  for (const auto& cls : g.D.classes()) {
    const Index a = cls.front();
    const std::size_t key = grades.empty() ? ideals[a].count() : static_cast<std::size_t>(grades[a]);
    dclasses[{key, g.D.class_of[a]}] = cls;
  }

  std::ostringstream os;
  os << "digraph eggbox {\n  rankdir=BT;\n  node [shape=plaintext, fontname=\"monospace\"];\n";
  int id = 0;
  for (const auto& [key, members] : dclasses) {
    std::vector<Index> rows, cols;  // R- and L-class ids in first-occurrence order
    std::map<std::pair<Index, Index>, IndexSet> cells;
    for (Index a : members) {
      const Index rc = g.R.class_of[a], lc = g.L.class_of[a];
      if (std::find(rows.begin(), rows.end(), rc) == rows.end()) rows.push_back(rc);
      if (std::find(cols.begin(), cols.end(), lc) == cols.end()) cols.push_back(lc);
      cells[{rc, lc}].push_back(a);
    }
    os << "  subgraph cluster_d" << id << " {\n    label=\"";
    if (grades.empty()) {
      os << "D-class " << id;
    } else {
      os << "J(" << key.first << ")";
    }
    os << ": " << members.size() << " elements, " << rows.size() << " R x " << cols.size() << " L\";\n";
    os << "    d" << id << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">\n";
    for (Index rc : rows) {
      os << "      <TR>";
      for (Index lc : cols) {
        const IndexSet& h = cells[{rc, lc}];
        std::string mark;
        for (Index a : h) {
          if (t.product(a, a) == a) mark = is_min[a] ? "**" : "*";
        }
        os << "<TD>" << mark;
        if (t.size() <= kListElementsUpTo) {
          for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "<BR/>" : "") << html_escape(labels[h[i]]);
        } else {
          os << "|H| = " << h.size();
        }
        os << "</TD>";
      }
      os << "</TR>\n";
    }
    os << "    </TABLE>>];\n  }\n";
    ++id;
  }
  // The ideal chain, smallest class first.
  for (int i = 1; i < id; ++i) os << "  d" << i - 1 << " -> d" << i << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json structured_report(const InstanceConfig& cfg) {
  using nlohmann::json;
  const Instance inst = cfg.instance();
  json j;
  json skipped = json::array();
  std::vector<std::string> u_rows;
  for (const Vec& v : inst.u().basis()) u_rows.push_back(v.str());
  j["instance"] = {{"p", inst.p()}, {"n", inst.n()}, {"r", inst.r()}, {"u", u_rows}};
  j["predicted_order"] = predicted_order(inst);
  j["iso_invariants"] = {{"p", inst.p()}, {"dim_v", inst.n()}, {"dim_u", inst.r()}};

  std::optional<Semigroup> sg;
  try {
    sg.emplace(inst, cfg.cap);
  } catch (const CapacityError& e) {
    skipped.push_back("enumeration: order " + std::to_string(e.requested()) + " exceeds cap " +
                      std::to_string(cfg.cap));
  }
  if (!sg) {
    for (const char* key : {"order", "j_classes", "ideals", "minimal_idempotents", "unit_group", "rank", "green",
                            "j_class_count"}) {
      j[key] = nullptr;
    }
    j["skipped"] = skipped;
    return j;
  }
  const Semigroup& s = *sg;
  j["order"] = s.size();

  json jc = json::array();
  for (int k = 0; k <= inst.top(); ++k) jc.push_back({{"k", k}, {"size", j_class(s, k).size()}});
  j["j_classes"] = jc;
  json ideals = json::array();
  for (int k = 1; k <= inst.top(); ++k) ideals.push_back({{"k", k}, {"size", q_ideal(s, k).size()}});
  j["ideals"] = ideals;

  const IndexSet minimal = minimal_idempotents_char(s);
  json mins = json::array();
  for (Index e : minimal) mins.push_back(s.at(e).str());
  j["minimal_idempotents"] = {{"count", minimal.size()},
                              {"complement_count", enumerate_complements(inst.u()).size()},
                              {"elements", mins}};

  json ug = {{"order", j_class(s, inst.top()).size()}};
  if (inst.r() >= 1) {
    const Subspace w = inst.default_complement();
    ug["w"] = w.str();
    ug["fix_u"] = special_subgroup(s, {SubgroupTag::FixU, w}).size();
    ug["fix_w"] = special_subgroup(s, {SubgroupTag::FixW, w}).size();
    ug["g_w"] = special_subgroup(s, {SubgroupTag::GW, w}).size();
    ug["n_w"] = special_subgroup(s, {SubgroupTag::NW, w}).size();
  } else {
    skipped.push_back("unit_group subgroups: r = 0");
  }
  j["unit_group"] = ug;

  const auto rv = rank_value(s, cfg.rank_cap);
  json rank;
  if (rv.status == RankStatus::Found) {
    rank = {{"status", "computed"}, {"semigroup", rv.value}, {"units", rv.unit_rank}};
  } else {
    rank = {{"status", "not computed"}, {"semigroup", nullptr}, {"units", nullptr}};
    skipped.push_back("rank: beyond rank cap " + std::to_string(cfg.rank_cap) + " or search budget");
  }
  rank["direct"] = rv.direct ? json(*rv.direct) : json(nullptr);
  j["rank"] = rank;

  const auto g = green_oracle(s.table());
  j["green"] = {{"L", g.L.num_classes}, {"R", g.R.num_classes}, {"H", g.H.num_classes},
                {"D", g.D.num_classes}, {"J", g.J.num_classes}};
  j["j_class_count"] = {{"observed", g.J.num_classes},
                        {"claimed_dim_v_over_u", inst.top()},
                        {"flagged", g.J.num_classes != static_cast<std::size_t>(inst.top())}};
  j["skipped"] = skipped;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed for " + path);
}

}  // namespace lgl
