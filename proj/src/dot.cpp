#include "opetope/dot.hpp"

#include <algorithm>
#include <sstream>

namespace opetope {

namespace {

std::string q(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void tree_body(std::ostringstream& os, const SubdividedTree& t, const std::string& pfx) {
  const auto& b = t.base;
  for (const auto& x : b.nodes) os << "  " << q(pfx + x) << " [label=" << q(x) << ", shape=circle, style=filled];\n";
  std::map<CellId, CellId> source;
  for (const auto& [x, e] : b.node_target) source[e] = x;
  for (const auto& e : b.edges) {
    std::string from;
    if (auto it = source.find(e); it != source.end()) {
      from = pfx + it->second;
    } else {
      from = pfx + "leaf:" + e;
      os << "  " << q(from) << " [shape=point, style=invis];\n";
    }
    std::string to;
    if (auto it = b.edge_target.find(e); it != b.edge_target.end()) {
      to = pfx + it->second;
    } else {
      to = pfx + "root:" + e;
      os << "  " << q(to) << " [shape=point, style=invis];\n";
    }
    std::vector<std::string> chain{to};
    if (auto w = t.W.find(e); w != t.W.end())
      for (const auto& d : w->second) {
        os << "  " << q(pfx + d) << " [label=" << q(d) << ", shape=circle];\n";
        chain.push_back(pfx + d);
      }
    chain.push_back(from);
    for (std::size_t i = chain.size() - 1; i > 0; --i)
      os << "  " << q(chain[i]) << " -> " << q(chain[i - 1]) << " [label=" << q(e) << "];\n";
  }
}

}  // namespace

std::string export_dot(const RawDfc& raw) {
  std::ostringstream os;
  os << "digraph dfc {\n  rankdir=BT;\n";
  std::map<CellId, std::pair<std::vector<CellId>, std::vector<CellId>>> facets;
  for (const auto& c : raw.cells) {
    os << "  " << q(c.id) << " [label=" << q(c.id + " (" + std::to_string(c.dim) + ")") << "];\n";
    facets[c.id] = {c.delta, c.gamma};
  }
  for (const auto& c : raw.cells) {
    std::vector<std::pair<CellId, std::string>> edges;
    for (const auto& y : c.delta) {
      bool loop = std::find(c.gamma.begin(), c.gamma.end(), y) != c.gamma.end();
      edges.push_back({y, loop ? "o" : "-"});
    }
    for (const auto& g : c.gamma)
      if (std::find(c.delta.begin(), c.delta.end(), g) == c.delta.end()) edges.push_back({g, "+"});
    for (const auto& [y, s] : edges) os << "  " << q(y) << " -> " << q(c.id) << " [label=" << q(s) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const SubdividedTree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << q(name) << " {\n  rankdir=BT;\n";
  tree_body(os, t, "");
  os << "}\n";
  return os.str();
}

std::string export_dot(const Opetope& y) {
  std::ostringstream os;
  os << "digraph opetope {\n  rankdir=BT;\n";
  for (int i = 0; i <= y.dim(); ++i) {
    os << " subgraph " << q("cluster_T" + std::to_string(i)) << " {\n  label=" << q("T" + std::to_string(i)) << ";\n";
    SubdividedTree t = i < y.dim() ? y.subdivided(i) : SubdividedTree{y.tree(i), {}};
    tree_body(os, t, "T" + std::to_string(i) + ":");
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace opetope
