#include "morsecob/reeb.hpp"

#include <algorithm>
#include <sstream>

#include "morsecob/decision.hpp"

namespace morsecob {
namespace {

bool contains(const std::vector<ComponentId>& ids, ComponentId id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string set_names(const ReebGraph::Edge& e) {
  const char* suffix = e.side == ReebGraph::Side::Lower ? "_low" : "_up";
  std::string out;
  if (e.in_a) {
    out += std::string("A") + suffix;
  }
  if (e.in_b) {
    out += out.empty() ? "" : ",";
    out += std::string("B") + suffix;
  }
  return out;
}

}  // namespace

ReebGraph build_reeb(const Surface& fa, const Surface& fb) {
  const auto sets = edge_sets(fa, fb);
  ReebGraph g;
  for (ComponentId i = 0; i < fa.size(); ++i) {
    g.vertices.push_back({"a" + std::to_string(i), ReebGraph::Side::Lower});
  }
  g.singular = g.vertices.size();
  g.vertices.push_back({"s", ReebGraph::Side::Singular});
  const auto upper_offset = g.vertices.size();
  for (ComponentId j = 0; j < fb.size(); ++j) {
    g.vertices.push_back({"b" + std::to_string(j), ReebGraph::Side::Upper});
  }

  auto edge = [](ReebGraph::Side side, ComponentId id, const SurfaceComponent& c) {
    ReebGraph::Edge e;
    e.side = side;
    e.component = id;
    e.level = c;
    e.r = r_label(c);
    e.r_prime = r_prime_label(c);
    return e;
  };
  for (ComponentId i = 0; i < fa.size(); ++i) {
    auto e = edge(ReebGraph::Side::Lower, i, fa.component(i));
    e.from = i;
    e.to = g.singular;
    e.in_a = contains(sets.a_low, i);
    e.in_b = contains(sets.b_low, i);
    g.edges.push_back(e);
  }
  for (ComponentId j = 0; j < fb.size(); ++j) {
    auto e = edge(ReebGraph::Side::Upper, j, fb.component(j));
    e.from = g.singular;
    e.to = upper_offset + j;
    e.in_a = contains(sets.a_up, j);
    e.in_b = contains(sets.b_up, j);
    g.edges.push_back(e);
  }
  return g;
}

ReebGraph build_reeb(const Witness& w) { return build_reeb(w.start, w.end); }

std::string to_dot(const ReebGraph& g) {
  std::ostringstream out;
  out << "digraph reeb {\n";
  out << "  rankdir=BT;\n";
  for (const auto& v : g.vertices) {
    if (v.side == ReebGraph::Side::Singular) {
      out << "  " << v.name << " [shape=doublecircle, label=\"s\"];\n";
    } else {
      out << "  " << v.name << " [shape=point, xlabel=\"" << v.name << "\"];\n";
    }
  }
  for (const auto& e : g.edges) {
    const auto level = e.level.to_string();
    const auto sets = set_names(e);
    out << "  " << g.vertices[e.from].name << " -> " << g.vertices[e.to].name << " [label=\""
        << level << " r=" << e.r << " r'=" << e.r_prime << (sets.empty() ? "" : " ") << sets
        << "\", surface=\"" << level << "\", r=\"" << e.r << "\", r_prime=\"" << e.r_prime
        << "\", sets=\"" << sets << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace morsecob
