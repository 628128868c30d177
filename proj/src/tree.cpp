#include "opetope/tree.hpp"

#include <algorithm>

namespace opetope {

namespace {

const CellId kNoId;
const std::vector<CellId> kNoIds;

Diagnostic tdiag(DiagCode code, std::vector<CellId> cells, std::string message) {
  return Diagnostic{code, std::move(cells), "tree", std::move(message)};
}

}  // namespace

std::vector<Diagnostic> tree_validate(const RootedTree& t) {
  std::vector<Diagnostic> out;
  std::set<CellId> nodes, edges;
  for (const auto& x : t.nodes)
    if (!nodes.insert(x).second) out.push_back(tdiag(DiagCode::DuplicateId, {x}, "node listed twice"));
  for (const auto& e : t.edges) {
    if (!edges.insert(e).second) out.push_back(tdiag(DiagCode::DuplicateId, {e}, "edge listed twice"));
    if (nodes.count(e)) out.push_back(tdiag(DiagCode::DuplicateId, {e}, "id is both a node and an edge"));
  }

  std::map<CellId, std::vector<CellId>> sources;
  for (const auto& x : nodes) {
    auto it = t.node_target.find(x);
    if (it == t.node_target.end()) {
      out.push_back(tdiag(DiagCode::NodeWithoutTarget, {x}, "node has no output edge"));
      continue;
    }
    if (!edges.count(it->second)) {
      out.push_back(tdiag(DiagCode::DanglingId, {x, it->second}, "output edge is not an edge of the tree"));
      continue;
    }
    sources[it->second].push_back(x);
  }
  for (const auto& [x, e] : t.node_target)
    if (!nodes.count(x)) out.push_back(tdiag(DiagCode::DanglingId, {x}, "node_target key is not a node"));
  for (const auto& [e, x] : t.edge_target) {
    if (!edges.count(e)) out.push_back(tdiag(DiagCode::DanglingId, {e}, "edge_target key is not an edge"));
    if (!nodes.count(x)) out.push_back(tdiag(DiagCode::DanglingId, {e, x}, "edge_target value is not a node"));
  }
  for (const auto& [e, xs] : sources)
    if (xs.size() > 1) {
      std::vector<CellId> cells{e};
      cells.insert(cells.end(), xs.begin(), xs.end());
      out.push_back(tdiag(DiagCode::EdgeMultipleSources, cells, "edge is the output of several nodes"));
    }

  std::vector<CellId> roots;
  for (const auto& e : edges)
    if (!t.edge_target.count(e)) roots.push_back(e);
  if (roots.empty()) {
    out.push_back(tdiag(DiagCode::NoRoot, {t.root.empty() ? CellId("<root>") : t.root},
                        "every edge has a target"));
  } else if (roots.size() > 1) {
    out.push_back(tdiag(DiagCode::MultipleRoots, roots, "several edges without a target"));
  }
  if (roots.size() == 1 && roots.front() != t.root)
    out.push_back(tdiag(DiagCode::RootMismatch, {roots.front(), t.root}, "declared root is not the targetless edge"));

  if (out.empty()) {
    for (const auto& e : t.edges) {
      std::set<CellId> seen;
      CellId cur = e;
      bool cyclic = false;
      while (true) {
        if (!seen.insert(cur).second) {
          cyclic = true;
          break;
        }
        auto it = t.edge_target.find(cur);
        if (it == t.edge_target.end()) break;
        cur = t.node_target.at(it->second);
      }
      if (cyclic) {
        out.push_back(tdiag(DiagCode::Cycle, {e}, "descending from this edge never reaches a root"));
      } else if (cur != t.root) {
        out.push_back(tdiag(DiagCode::UnreachableEdge, {e, cur}, "edge descends to a non-root edge"));
      }
    }
  }
  normalize(out);
  return out;
}

RootedTree unit_tree(const CellId& edge) {
  RootedTree t;
  t.edges = {edge};
  t.root = edge;
  return t;
}

RootedTree corolla(const CellId& node, const std::vector<CellId>& leaves, const CellId& root) {
  RootedTree t;
  t.nodes = {node};
  t.edges = leaves;
  t.edges.push_back(root);
  t.node_target[node] = root;
  for (const auto& l : leaves) t.edge_target[l] = node;
  t.root = root;
  return t;
}

TreeIndex::TreeIndex(const RootedTree& t) : t_(&t) {
  node_set_.insert(t.nodes.begin(), t.nodes.end());
  edge_set_.insert(t.edges.begin(), t.edges.end());
  for (const auto& [x, e] : t.node_target) source_[e] = x;
  for (const auto& x : t.nodes) inputs_[x];
  for (const auto& e : t.edges) {
    auto it = t.edge_target.find(e);
    if (it != t.edge_target.end()) inputs_[it->second].push_back(e);
  }
}

const CellId& TreeIndex::source(const CellId& edge) const {
  auto it = source_.find(edge);
  return it == source_.end() ? kNoId : it->second;
}

const std::vector<CellId>& TreeIndex::inputs(const CellId& node) const {
  auto it = inputs_.find(node);
  return it == inputs_.end() ? kNoIds : it->second;
}

std::vector<CellId> TreeIndex::leaves() const {
  std::vector<CellId> out;
  for (const auto& e : t_->edges)
    if (!source_.count(e)) out.push_back(e);
  return out;
}

std::vector<CellId> TreeIndex::nulldots() const {
  std::vector<CellId> out;
  for (const auto& x : t_->nodes)
    if (inputs(x).empty()) out.push_back(x);
  return out;
}

std::vector<CellId> leaves(const RootedTree& t) { return TreeIndex(t).leaves(); }
std::vector<CellId> nulldots(const RootedTree& t) { return TreeIndex(t).nulldots(); }

bool is_linear(const RootedTree& t) {
  TreeIndex ix(t);
  for (const auto& x : t.nodes)
    if (ix.inputs(x).size() != 1) return false;
  return true;
}

std::set<CellId> descendant_dots(const RootedTree& t, const CellId& x) {
  TreeIndex ix(t);
  std::set<CellId> out;
  std::vector<CellId> stack{x};
  while (!stack.empty()) {
    CellId cur = stack.back();
    stack.pop_back();
    if (ix.is_edge(cur)) {
      const CellId& s = ix.source(cur);
      if (s.empty()) out.insert(cur);
      else stack.push_back(s);
    } else if (ix.is_node(cur)) {
      const auto& in = ix.inputs(cur);
      if (in.empty()) out.insert(cur);
      for (const auto& e : in) stack.push_back(e);
    }
  }
  return out;
}

std::vector<Diagnostic> subdivision_validate(const SubdividedTree& t) {
  std::vector<Diagnostic> out;
  std::set<CellId> used(t.base.nodes.begin(), t.base.nodes.end());
  used.insert(t.base.edges.begin(), t.base.edges.end());
  std::set<CellId> edges(t.base.edges.begin(), t.base.edges.end());
  for (const auto& [e, ws] : t.W) {
    if (!edges.count(e)) {
      out.push_back(Diagnostic{DiagCode::BadSubdivision, {e}, "subdivision", "subdivided edge is not in the tree"});
      continue;
    }
    for (const auto& w : ws) {
      if (w.empty() || !used.insert(w).second)
        out.push_back(Diagnostic{DiagCode::BadSubdivision, {e, w}, "subdivision",
                                 "whitedot id is empty or already used"});
    }
  }
  normalize(out);
  return out;
}

std::vector<CellId> whitedots(const SubdividedTree& t) {
  std::vector<CellId> out;
  for (const auto& e : t.base.edges) {
    auto it = t.W.find(e);
    if (it != t.W.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

int Expansion::dot(const CellId& id) const {
  auto it = dot_index.find(id);
  return it == dot_index.end() ? -1 : it->second;
}

Expansion expand(const SubdividedTree& t) {
  Expansion ex;
  auto add_dot = [&](const CellId& id, bool white) {
    ex.dot_index[id] = static_cast<int>(ex.dot_id.size());
    ex.dot_id.push_back(id);
    ex.white.push_back(white);
  };
  for (const auto& x : t.base.nodes) add_dot(x, false);
  for (const auto& w : whitedots(t)) add_dot(w, true);
  ex.out_segment.assign(ex.dot_id.size(), -1);
  ex.in_segments.assign(ex.dot_id.size(), {});

  std::map<CellId, CellId> source;
  for (const auto& [x, e] : t.base.node_target) source[e] = x;

  for (const auto& e : t.base.edges) {
    auto wit = t.W.find(e);
    const std::vector<CellId>& ws = wit == t.W.end() ? kNoIds : wit->second;
    const int p = static_cast<int>(ws.size());
    auto tit = t.base.edge_target.find(e);
    auto sit = source.find(e);
    for (int i = 0; i <= p; ++i) {
      Expansion::Segment s;
      s.edge = e;
      s.index = i;
      if (i == 0) s.lower = tit == t.base.edge_target.end() ? -1 : ex.dot(tit->second);
      else s.lower = ex.dot(ws[i - 1]);
      if (i == p) s.upper = sit == source.end() ? -1 : ex.dot(sit->second);
      else s.upper = ex.dot(ws[i]);
      int sid = static_cast<int>(ex.segments.size());
      ex.segments.push_back(s);
      if (s.upper >= 0) ex.out_segment[s.upper] = sid;
      if (s.lower >= 0) ex.in_segments[s.lower].push_back(sid);
    }
  }
  return ex;
}

std::string segment_id(const CellId& edge, int index) { return edge + "@" + std::to_string(index); }

RootedTree subdivided_as_tree(const SubdividedTree& t) {
  Expansion ex = expand(t);
  RootedTree out;
  out.nodes = ex.dot_id;
  for (const auto& s : ex.segments) {
    CellId sid = segment_id(s.edge, s.index);
    out.edges.push_back(sid);
    if (s.lower >= 0) out.edge_target[sid] = ex.dot_id[s.lower];
    else out.root = sid;
    if (s.upper >= 0) out.node_target[ex.dot_id[s.upper]] = sid;
  }
  return out;
}

std::vector<std::vector<int>> components(const Expansion& ex, const std::set<int>& dots) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int d : dots) {
    if (seen.count(d)) continue;
    std::vector<int> comp, stack{d};
    seen.insert(d);
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      comp.push_back(cur);
      std::vector<int> nbrs;
      if (ex.out_segment[cur] >= 0) nbrs.push_back(ex.segments[ex.out_segment[cur]].lower);
      for (int s : ex.in_segments[cur]) nbrs.push_back(ex.segments[s].upper);
      for (int nb : nbrs)
        if (nb >= 0 && dots.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace opetope
