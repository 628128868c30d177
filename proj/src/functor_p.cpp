#include "opetope/functor_p.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace opetope {

namespace {

std::set<CellId> all_ids(const Opetope& y) {
  std::set<CellId> ids;
  for (int i = 0; i <= y.dim(); ++i) {
    ids.insert(y.tree(i).nodes.begin(), y.tree(i).nodes.end());
    ids.insert(y.tree(i).edges.begin(), y.tree(i).edges.end());
  }
  for (int i = 0; i < y.dim(); ++i)
    for (const auto& w : whitedots(y.subdivided(i))) ids.insert(w);
  return ids;
}

CellId fresh(const std::set<CellId>& used, std::string base) {
  while (used.count(base)) base += "_";
  return base;
}

int level_of_edge(const ExtendedZoom& ez, const CellId& x) {
  for (int j = 2; j <= ez.n + 2; ++j) {
    const auto& es = ez.S[j].edges;
    if (std::find(es.begin(), es.end(), x) != es.end()) return j;
  }
  throw InternalError("cell " + x + " is not an edge of the extension");
}

}  // namespace

ExtendedZoom extend(const Opetope& y) {
  ExtendedZoom ez;
  const int n = y.dim();
  ez.n = n;
  for (int i = 0; i <= n; ++i) ez.S.push_back(y.tree(i));
  for (int i = 0; i < n; ++i) ez.V.push_back(y.subdivision(i));
  auto used = all_ids(y);
  ez.top = fresh(used, "__top");
  used.insert(ez.top);
  ez.top_root = fresh(used, "__top_root");

  const RootedTree& last = y.tree(n);
  ez.S.push_back(corolla(ez.top, last.nodes, ez.top_root));
  Subdivision vn;
  // The top node must be a nulldot exactly when S_n has no node; it then
  // sits as the only whitedot on the root of S_n.
  if (last.nodes.empty()) vn[last.root] = {ez.top};
  ez.V.push_back(vn);
  ez.S.push_back(unit_tree(ez.top));
  ez.V.push_back({});
  ez.bottom = n >= 1 ? y.tree(1).root : ez.top_root;

  for (int i = n; i <= n + 1; ++i) {
    RawConstellation c{ez.V[i], std::nullopt, std::nullopt, {}};
    auto d = constellation_validate(ez.S[i], c, ez.S[i + 1]);
    if (!d.empty()) throw InternalError("extension constellation " + std::to_string(i) + " is invalid: " + d[0].message);
  }
  return ez;
}

NestingSubtree nesting_subtree(const ExtendedZoom& ez, int k, const CellId& x) {
  if (k < 0 || k > ez.n) throw InternalError("nesting_subtree: k out of range");
  NestingSubtree ns;
  ns.owner = x;
  const auto dots = descendant_dots(ez.S[k + 2], x);
  Expansion ex = expand(ez.subdivided(k + 1));
  std::set<int> D;
  for (const auto& d : dots) {
    int i = ex.dot(d);
    if (i < 0) throw InternalError("DisconnectedNesting: " + d + " is not a dot below " + x);
    D.insert(i);
    ns.dots.push_back(d);
  }
  if (D.empty() || components(ex, D).size() != 1)
    throw InternalError("DisconnectedNesting: region of " + x + " is not connected");

  ns.all_white = true;
  int roots = 0;
  std::set<CellId> seen;
  for (int d : D) {
    ns.all_white = ns.all_white && ex.white[d];
    const auto& out = ex.segments[ex.out_segment[d]];
    if (out.lower < 0 || !D.count(out.lower)) {
      ++roots;
      ns.root_edge = out.edge;
    }
    for (int s : ex.in_segments[d]) {
      const auto& seg = ex.segments[s];
      if (seg.upper >= 0 && D.count(seg.upper)) continue;
      if (!seen.insert(seg.edge).second)
        throw InternalError("nesting of " + x + " has two boundary segments on " + seg.edge);
      ns.leaf_edges.push_back(seg.edge);
    }
  }
  if (roots != 1) throw InternalError("DisconnectedNesting: region of " + x + " has " + std::to_string(roots) + " exits");
  if (k == 0) ns.leaf_edges.clear();
  return ns;
}

RawDfc p_of_raw(const ExtendedZoom& ez) {
  RawDfc raw;
  raw.cells.push_back(RawCell{ez.bottom, -1, {}, {}, {}});
  std::map<CellId, std::pair<std::vector<CellId>, CellId>> facets;
  std::vector<std::pair<CellId, int>> order;
  for (int j = 2; j <= ez.n + 2; ++j) {
    const int k = j - 2;
    for (const auto& x : ez.S[j].edges) {
      RawCell c{x, k, {}, {}, {}};
      if (k == 0) {
        c.gamma = {ez.bottom};
      } else {
        auto ns = nesting_subtree(ez, k, x);
        c.delta = ns.leaf_edges;
        c.gamma = {ns.root_edge};
      }
      facets[x] = {c.delta, c.gamma[0]};
      order.emplace_back(x, k);
      raw.cells.push_back(std::move(c));
    }
  }

  std::set<CellId> gamma_plus;
  for (const auto& [x, f] : facets)
    if (std::find(f.first.begin(), f.first.end(), f.second) == f.first.end()) gamma_plus.insert(f.second);
  auto is_loop = [&](const CellId& y) {
    const auto& f = facets.at(y);
    return f.first.size() == 1 && f.first[0] == f.second;
  };

  for (const auto& [x, k] : order) {
    if (k < 2 || gamma_plus.count(x)) continue;
    const auto& [delta, gamma] = facets.at(x);
    std::map<CellId, std::vector<CellId>> groups;
    for (const auto& y : delta)
      if (y != gamma && is_loop(y)) groups[facets.at(y).second].push_back(y);
    for (auto& [z, ys] : groups) {
      if (ys.size() < 2) continue;
      const auto& ws = ez.V[k].at(z);
      auto key = [&](const CellId& y) {
        int best = static_cast<int>(ws.size());
        for (const auto& d : nesting_subtree(ez, k - 1, y).dots) {
          auto it = std::find(ws.begin(), ws.end(), d);
          if (it != ws.end()) best = std::min(best, static_cast<int>(it - ws.begin()));
        }
        return best;
      };
      std::map<CellId, int> keys;
      for (const auto& y : ys) keys[y] = key(y);
      std::sort(ys.begin(), ys.end(), [&](const CellId& a, const CellId& b) { return keys[a] < keys[b]; });
      raw.local_orders.push_back(RawLocalOrder{x, z, ys, {}});
    }
  }
  return raw;
}

Checked<Dfc> p_of(const Opetope& y) {
  ExtendedZoom ez = extend(y);
  DfcOptions opts;
  opts.allow_point = y.dim() == 0;
  return dfc_validate(p_of_raw(ez), opts);
}

RootedTree sigma_tree(const ExtendedZoom& ez, const CellId& x) {
  const int k = level_of_edge(ez, x) - 2;
  if (k < 2) throw InternalError("sigma_tree needs dimension >= 2");
  auto top = nesting_subtree(ez, k, x);
  if (top.all_white) throw InternalError("LoopCell: " + x + " is a loop");
  RootedTree t;
  t.root = nesting_subtree(ez, k - 1, top.root_edge).root_edge;
  t.edges.push_back(t.root);
  auto add_edge = [&](const CellId& e) {
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end()) t.edges.push_back(e);
  };
  for (const auto& y : top.leaf_edges) {
    auto ns = nesting_subtree(ez, k - 1, y);
    if (ns.all_white) continue;
    t.nodes.push_back(y);
    t.node_target[y] = ns.root_edge;
    add_edge(ns.root_edge);
    for (const auto& z : ns.leaf_edges) {
      add_edge(z);
      t.edge_target[z] = y;
    }
  }
  return t;
}

MapResult<DfcIso> p_map(const Opetope& y, const Opetope& y2, const OpetopeIso& f) {
  MapResult<DfcIso> out;
  const int n = y.dim();
  if (y2.dim() != n) {
    out.error = "NotAnIsomorphism: dimensions differ";
    return out;
  }
  ExtendedZoom ez = extend(y), ez2 = extend(y2);
  DfcIso g;
  auto take = [&](const std::map<CellId, CellId>& m, const CellId& x) {
    auto it = m.find(x);
    if (it == m.end()) throw std::out_of_range(x);
    g.forward[x] = it->second;
  };
  try {
    if (n >= 1) take(f.edges[1], ez.bottom);
    else g.forward[ez.bottom] = ez2.bottom;
    for (int j = 2; j <= n; ++j)
      for (const auto& e : ez.S[j].edges) take(f.edges[j], e);
    if (n >= 1) {
      for (const auto& x : y.tree(n).nodes) take(f.nodes[n], x);
      g.forward[ez.top_root] = ez2.top_root;
    }
    g.forward[ez.top] = ez2.top;
  } catch (const std::out_of_range& e) {
    out.error = std::string("NotAnIsomorphism: map is undefined on ") + e.what();
    return out;
  }
  auto a = p_of(y), b = p_of(y2);
  if (!a.ok() || !b.ok()) {
    out.error = "p_of failed";
    return out;
  }
  if (auto e = verify_dfc_iso(a->mop(), b->mop(), g.forward)) {
    out.error = "NotAnIsomorphism: " + *e;
    return out;
  }
  out.value = std::move(g);
  return out;
}

}  // namespace opetope
