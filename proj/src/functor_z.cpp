#include "opetope/functor_z.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace opetope {

namespace {

int need(const ManyToOnePoset& mop, const CellId& id) {
  int i = mop.index_of(id);
  if (i < 0) throw InternalError("unknown cell " + id);
  return i;
}

CellId fresh(const ManyToOnePoset& mop, std::string base) {
  while (mop.index_of(base) >= 0) base += "_";
  return base;
}

}  // namespace

RootedTree level_tree(const Dfc& c, int k) {
  const auto& mop = c.mop();
  if (k < 2 || k > c.dim() + 2) throw InternalError("level_tree: k out of range");
  RootedTree t;
  for (int x : mop.cells_of_dim(k - 1)) {
    if (!mop.in_lambda(x)) continue;
    t.nodes.push_back(mop.id(x));
    t.node_target[mop.id(x)] = mop.id(mop.gamma(x));
  }
  for (int y : mop.cells_of_dim(k - 2)) {
    t.edges.push_back(mop.id(y));
    int a = c.lambda_coface(y);
    if (a >= 0) t.edge_target[mop.id(y)] = mop.id(a);
  }
  t.root = mop.id(c.iterated(k - 2));
  return t;
}

std::vector<ZigzagChain> zigzag(const Dfc& c, const CellId& base_id) {
  const auto& mop = c.mop();
  const int base = need(mop, base_id);
  std::vector<ZigzagChain> chains;
  for (int b : mop.cofaces(base)) {
    Sign beta = *mop.sign(base, b);
    if (beta == Sign::loop) continue;
    for (int a : mop.cofaces(b)) {
      Sign alpha = *mop.sign(b, a);
      if (alpha == Sign::loop || !mop.in_lambda(a)) continue;
      chains.push_back({mop.id(b), mop.id(a), beta, alpha});
    }
  }
  if (chains.empty()) return chains;

  std::map<CellId, std::vector<int>> by_b, by_a;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    by_b[chains[i].b].push_back(i);
    by_a[chains[i].a].push_back(i);
  }
  for (const auto& [a, cs] : by_a)
    if (cs.size() != 2) throw InternalError("zigzag: " + a + " meets the base in " + std::to_string(cs.size()) + " chains");

  int start = -1;
  for (const auto& [b, cs] : by_b)
    if (cs.size() == 1 && chains[cs[0]].alpha * chains[cs[0]].beta == Sign::plus) {
      if (start >= 0) throw InternalError("zigzag over " + base_id + " is not a single path");
      start = cs[0];
    }
  if (start < 0) throw InternalError("zigzag over " + base_id + " has no starting end");

  std::vector<ZigzagChain> out;
  std::set<int> used;
  int cur = start;
  while (cur >= 0) {
    used.insert(cur);
    out.push_back(chains[cur]);
    const auto& pair = by_a[chains[cur].a];
    int mate = pair[0] == cur ? pair[1] : pair[0];
    used.insert(mate);
    out.push_back(chains[mate]);
    cur = -1;
    for (int nxt : by_b[chains[mate].b])
      if (!used.count(nxt)) cur = nxt;
  }
  if (used.size() != chains.size()) throw InternalError("zigzag over " + base_id + " is disconnected");
  return out;
}

LoopPath loop_path(const Dfc& c, const CellId& base_id, const CellId& b_id) {
  const auto& mop = c.mop();
  const int base = need(mop, base_id);
  int cur = need(mop, b_id);
  LoopPath p;
  p.base = base_id;
  p.loops.push_back(b_id);
  for (int steps = 0; steps <= mop.size(); ++steps) {
    int a = c.lambda_coface(cur);
    if (a < 0) {
      if (cur != c.iterated(mop.dim(cur))) throw InternalError("loop path from " + b_id + " is stuck at " + mop.id(cur));
      p.end = LoopPath::End::root;
      return p;
    }
    p.cofaces.push_back(mop.id(a));
    int g = mop.gamma(a);
    if (mop.is_loop(g) && mop.gamma(g) == base) {
      cur = g;
      p.loops.push_back(mop.id(g));
      continue;
    }
    p.end = LoopPath::End::zigzag;
    return p;
  }
  throw InternalError("loop path from " + b_id + " does not terminate");
}

LoopCmp compare_loops(const Dfc& c, const CellId& base_id, const CellId& b, const CellId& b2) {
  const auto& mop = c.mop();
  if (b == b2) throw InternalError("compare_loops: equal loops");
  LoopPath p = loop_path(c, base_id, b);
  LoopPath q = loop_path(c, base_id, b2);
  for (size_t i = 0; i < p.cofaces.size(); ++i) {
    auto it = std::find(q.cofaces.begin(), q.cofaces.end(), p.cofaces[i]);
    if (it == q.cofaces.end()) continue;
    size_t j = static_cast<size_t>(it - q.cofaces.begin());
    const CellId& lp = p.loops[i];
    const CellId& lq = q.loops[j];
    if (lp == lq) throw InternalError("IncomparableLoops: paths merge through the same loop");
    const auto* order = mop.local_order(need(mop, p.cofaces[i]), need(mop, base_id));
    if (!order) throw InternalError("IncomparableLoops: no local order at (" + p.cofaces[i] + ", " + base_id + ")");
    int ip = -1, iq = -1;
    for (int k = 0; k < static_cast<int>(order->size()); ++k) {
      if (mop.id((*order)[k]) == lp) ip = k;
      if (mop.id((*order)[k]) == lq) iq = k;
    }
    if (ip < 0 || iq < 0) throw InternalError("IncomparableLoops: local order misses a loop");
    return ip < iq ? LoopCmp::below : LoopCmp::above;
  }
  if (p.end != LoopPath::End::zigzag || q.end != LoopPath::End::zigzag)
    throw InternalError("IncomparableLoops: separate paths without zigzag ends");
  auto chains = zigzag(c, base_id);
  auto position = [&](const CellId& a) {
    for (size_t k = 0; k < chains.size(); ++k)
      if (chains[k].a == a) return static_cast<int>(k);
    throw InternalError("IncomparableLoops: " + a + " is not on the zigzag");
  };
  return position(p.cofaces.back()) < position(q.cofaces.back()) ? LoopCmp::below : LoopCmp::above;
}

std::vector<CellId> whitedot_order(const Dfc& c, int k, const CellId& y) {
  const auto& mop = c.mop();
  const int yi = need(mop, y);
  std::vector<int> ws;
  for (int w : mop.cells_of_dim(k)) {
    if (!mop.in_lambda(w) || !mop.is_null(w)) continue;
    int g = mop.gamma(w);
    if (g >= 0 && mop.gamma(g) == yi) ws.push_back(w);
  }
  const int m = static_cast<int>(ws.size());
  std::vector<int> rank(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && compare_loops(c, y, mop.id(mop.gamma(ws[j])), mop.id(mop.gamma(ws[i]))) == LoopCmp::below)
        ++rank[i];
  std::vector<CellId> out(m);
  std::vector<bool> filled(m, false);
  for (int i = 0; i < m; ++i) {
    if (filled[rank[i]]) throw InternalError("whitedot order over " + y + " is not total");
    filled[rank[i]] = true;
    out[rank[i]] = mop.id(ws[i]);
  }
  return out;
}

AugmentationNames augmentation_names(const ManyToOnePoset& mop) {
  return {fresh(mop, "__t0_node"), fresh(mop, "__t0_leaf"), fresh(mop, "__t0_root")};
}

Checked<Opetope> z_of(const Dfc& c) {
  const auto& mop = c.mop();
  const int n = c.dim();
  auto names = augmentation_names(mop);

  RawOpetope raw;
  raw.dim = n;
  raw.trees.push_back(corolla(names.t0_node, {names.t0_leaf}, names.t0_root));
  if (n == 0) return opetope_validate(raw);
  std::vector<int> lambda0;
  for (int x : mop.cells_of_dim(0))
    if (mop.in_lambda(x)) lambda0.push_back(x);
  if (lambda0.size() != 1) throw InternalError("Lambda_0 is not a single cell");
  raw.trees.push_back(corolla(mop.id(lambda0[0]), {names.t0_node}, mop.id(mop.bottom())));
  for (int k = 2; k <= n; ++k) raw.trees.push_back(level_tree(c, k));

  raw.constellations.resize(n);
  for (int k = 2; k <= n - 1; ++k) {
    for (const auto& y : raw.trees[k].edges) {
      auto ws = whitedot_order(c, k, y);
      if (!ws.empty()) raw.constellations[k].subdivision[y] = ws;
    }
  }
  return opetope_validate(raw);
}

MapResult<OpetopeIso> z_map(const Dfc& c, const Dfc& d, const DfcIso& f) {
  MapResult<OpetopeIso> out;
  if (auto e = verify_dfc_iso(c.mop(), d.mop(), f.forward)) {
    out.error = "NotAnIsomorphism: " + *e;
    return out;
  }
  auto zc = z_of(c), zd = z_of(d);
  if (!zc.ok() || !zd.ok()) {
    out.error = "z_of failed";
    return out;
  }
  const int n = c.dim();
  auto nc = augmentation_names(c.mop()), nd = augmentation_names(d.mop());
  OpetopeIso g;
  g.nodes.resize(n + 1);
  g.edges.resize(n + 1);
  g.whites.resize(n);
  g.nodes[0][nc.t0_node] = nd.t0_node;
  g.edges[0][nc.t0_leaf] = nd.t0_leaf;
  g.edges[0][nc.t0_root] = nd.t0_root;
  g.edges[1][nc.t0_node] = nd.t0_node;
  for (int i = 1; i <= n; ++i) {
    for (const auto& x : zc->tree(i).nodes) g.nodes[i][x] = f.forward.at(x);
    for (const auto& e : zc->tree(i).edges)
      if (!(i == 1 && e == nc.t0_node)) g.edges[i][e] = f.forward.at(e);
  }
  for (int i = 0; i < n; ++i)
    for (const auto& w : whitedots(zc->subdivided(i))) g.whites[i][w] = f.forward.at(w);
  if (auto e = verify_opetope_iso(*zc, *zd, g)) {
    out.error = "NotAnIsomorphism: " + *e;
    return out;
  }
  out.value = std::move(g);
  return out;
}

}  // namespace opetope
