#include "opetope/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "opetope/functor_p.hpp"
#include "opetope/functor_z.hpp"

namespace opetope {

namespace {

// A labelled structure for the matcher: each element has a kind, an ordered
// list of ports (other elements, or -1) and an unordered member list.
struct PortGraph {
  std::vector<int> kind;
  std::vector<std::vector<int>> ports;
  std::vector<std::vector<int>> multi;
  std::vector<CellId> name;

  int add(int k, CellId n) {
    kind.push_back(k);
    ports.emplace_back();
    multi.emplace_back();
    name.push_back(std::move(n));
    return static_cast<int>(kind.size()) - 1;
  }
  int size() const { return static_cast<int>(kind.size()); }
};

using Signature = std::tuple<int, std::vector<bool>, std::size_t, std::size_t, std::size_t>;

struct Prepared {
  const PortGraph* g;
  std::vector<std::vector<std::pair<int, int>>> port_parents;
  std::vector<std::vector<int>> multi_parents;
  std::vector<Signature> sig;
  std::vector<int> rank;  // position in lexicographic name order

  explicit Prepared(const PortGraph& graph) : g(&graph) {
    const int n = graph.size();
    port_parents.resize(n);
    multi_parents.resize(n);
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < static_cast<int>(graph.ports[x].size()); ++i)
        if (graph.ports[x][i] >= 0) port_parents[graph.ports[x][i]].push_back({x, i});
      for (int y : graph.multi[x]) multi_parents[y].push_back(x);
    }
    for (int x = 0; x < n; ++x) {
      std::vector<bool> shape;
      for (int p : graph.ports[x]) shape.push_back(p >= 0);
      sig.emplace_back(graph.kind[x], shape, graph.multi[x].size(), port_parents[x].size(), multi_parents[x].size());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return graph.name[a] < graph.name[b]; });
    rank.resize(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
  }
};

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

class Matcher {
 public:
  using Accept = std::function<bool(const std::vector<int>&)>;

  Matcher(const PortGraph& a, const PortGraph& b, const SearchOptions& opts)
      : A_(a), B_(b), opts_(opts), m_(a.size(), -1), inv_(b.size(), -1) {}

  // Returns found / none / exhausted; accepted complete maps go to `hits`.
  SearchStatus run(const std::vector<std::pair<int, int>>& seeds, const Accept& accept,
                   std::vector<std::vector<int>>& hits) {
    if (A_.g->size() != B_.g->size()) return SearchStatus::none;
    {
      auto sa = A_.sig, sb = B_.sig;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return SearchStatus::none;
    }
    for (auto [a, b] : seeds)
      if (!assign(a, b)) return SearchStatus::none;
    accept_ = &accept;
    hits_ = &hits;
    search();
    if (!hits.empty() && (!exhausted_ || !opts_.all)) return SearchStatus::found;
    return exhausted_ ? SearchStatus::exhausted : SearchStatus::none;
  }

  std::int64_t expansions() const { return expansions_; }

 private:
  bool assign(int a0, int b0) {
    std::vector<std::pair<int, int>> queue{{a0, b0}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (m_[a] == b) continue;
      if (m_[a] >= 0 || inv_[b] >= 0 || A_.sig[a] != B_.sig[b]) return false;
      m_[a] = b;
      inv_[b] = a;
      trail_.push_back(a);
      const auto& pa = A_.g->ports[a];
      const auto& pb = B_.g->ports[b];
      for (std::size_t i = 0; i < pa.size(); ++i)
        if (pa[i] >= 0) queue.push_back({pa[i], pb[i]});
      for (auto [p, i] : A_.port_parents[a])
        if (m_[p] >= 0 && B_.g->ports[m_[p]][i] != b) return false;
      for (auto [q, i] : B_.port_parents[b])
        if (inv_[q] >= 0 && A_.g->ports[inv_[q]][i] != a) return false;
      for (int p : A_.multi_parents[a])
        if (m_[p] >= 0 && !contains(B_.g->multi[m_[p]], b)) return false;
      for (int q : B_.multi_parents[b])
        if (inv_[q] >= 0 && !contains(A_.g->multi[inv_[q]], a)) return false;
      for (int c : A_.g->multi[a])
        if (m_[c] >= 0 && !contains(B_.g->multi[b], m_[c])) return false;
      for (int d : B_.g->multi[b])
        if (inv_[d] >= 0 && !contains(A_.g->multi[a], inv_[d])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      inv_[m_[a]] = -1;
      m_[a] = -1;
    }
  }

  bool done() const {
    return exhausted_ || (!opts_.all && !hits_->empty()) || hits_->size() >= opts_.max_witnesses;
  }

  void search() {
    int pick = -1;
    std::vector<int> cands;
    for (int a = 0; a < A_.g->size() && pick < 0; ++a) {
      if (m_[a] < 0) continue;
      for (int c : A_.g->multi[a]) {
        if (m_[c] >= 0) continue;
        pick = c;
        for (int d : B_.g->multi[m_[a]])
          if (inv_[d] < 0 && B_.sig[d] == A_.sig[c]) cands.push_back(d);
        break;
      }
    }
    if (pick < 0) {
      for (int a = 0; a < A_.g->size(); ++a)
        if (m_[a] < 0) {
          pick = a;
          break;
        }
      if (pick < 0) {
        if ((*accept_)(m_)) hits_->push_back(m_);
        return;
      }
      for (int b = 0; b < B_.g->size(); ++b)
        if (inv_[b] < 0 && B_.sig[b] == A_.sig[pick]) cands.push_back(b);
    }
    std::sort(cands.begin(), cands.end(), [&](int x, int y) { return B_.rank[x] < B_.rank[y]; });
    for (int b : cands) {
      if (opts_.budget > 0 && expansions_ >= opts_.budget) {
        exhausted_ = true;
        return;
      }
      ++expansions_;
      const std::size_t mark = trail_.size();
      if (assign(pick, b)) search();
      undo(mark);
      if (done()) return;
    }
  }

  Prepared A_, B_;
  SearchOptions opts_;
  std::vector<int> m_, inv_;
  std::vector<int> trail_;
  std::int64_t expansions_ = 0;
  bool exhausted_ = false;
  const Accept* accept_ = nullptr;
  std::vector<std::vector<int>>* hits_ = nullptr;
};

PortGraph dfc_graph(const ManyToOnePoset& mop) {
  PortGraph g;
  for (int x = 0; x < mop.size(); ++x) g.add(mop.dim(x) + 1, mop.id(x));
  for (int x = 0; x < mop.size(); ++x) {
    g.ports[x] = {mop.gamma(x)};
    g.multi[x] = mop.delta(x);
  }
  return g;
}

struct OpetopeGraph {
  PortGraph g;
  // Element -> (level, type, id) with type 0 node, 1 edge, 2 whitedot.
  std::vector<std::tuple<int, int, CellId>> what;
  std::vector<std::map<CellId, int>> node, edge, white;
  std::vector<int> roots;
};

OpetopeGraph opetope_graph(const Opetope& y) {
  OpetopeGraph og;
  const int n = y.dim();
  og.node.resize(n + 1);
  og.edge.resize(n + 1);
  og.white.resize(n + 1);
  auto add = [&](int level, int type, const CellId& id) {
    int e = og.g.add(3 * level + type, std::to_string(level) + ":" + std::to_string(type) + ":" + id);
    og.what.emplace_back(level, type, id);
    return e;
  };
  std::vector<SubdividedTree> subs;
  for (int i = 0; i <= n; ++i) {
    const auto& t = y.tree(i);
    for (const auto& x : t.nodes) og.node[i][x] = add(i, 0, x);
    for (const auto& e : t.edges) og.edge[i][e] = add(i, 1, e);
    if (i < n) {
      subs.push_back(y.subdivided(i));
      for (const auto& w : whitedots(subs.back())) og.white[i][w] = add(i, 2, w);
    }
  }
  auto find = [](const std::map<CellId, int>& m, const CellId& id) {
    auto it = m.find(id);
    return it == m.end() ? -1 : it->second;
  };
  for (int i = 0; i <= n; ++i) {
    const auto& t = y.tree(i);
    TreeIndex idx(t);
    for (const auto& e : t.edges) {
      int el = og.edge[i][e];
      auto& ports = og.g.ports[el];
      const CellId& src = idx.source(e);
      ports.push_back(src.empty() ? -1 : og.node[i][src]);
      auto tgt = t.edge_target.find(e);
      ports.push_back(tgt == t.edge_target.end() ? -1 : og.node[i][tgt->second]);
      ports.push_back(i >= 1 && src.empty() ? find(og.node[i - 1], e) : -1);
      if (i < n)
        if (auto it = subs[i].W.find(e); it != subs[i].W.end())
          for (const auto& w : it->second) ports.push_back(og.white[i][w]);
    }
    for (const auto& x : t.nodes) {
      int el = og.node[i][x];
      auto& ports = og.g.ports[el];
      ports.push_back(og.edge[i][t.node_target.at(x)]);
      ports.push_back(i < n ? find(og.edge[i + 1], x) : -1);
      ports.push_back(i >= 1 && idx.inputs(x).empty() ? find(og.white[i - 1], x) : -1);
      for (const auto& e : idx.inputs(x)) og.g.multi[el].push_back(og.edge[i][e]);
    }
    if (i < n)
      for (const auto& [e, ws] : subs[i].W)
        for (const auto& w : ws) og.g.ports[og.white[i][w]] = {og.edge[i][e], find(og.node[i + 1], w)};
    og.roots.push_back(og.edge[i][t.root]);
  }
  return og;
}

}  // namespace

SearchResult<DfcIso> dfc_iso_search(const Dfc& c, const Dfc& d, const SearchOptions& opts) {
  SearchResult<DfcIso> out;
  const auto& a = c.mop();
  const auto& b = d.mop();
  if (c.dim() != d.dim() || a.size() != b.size()) return out;
  PortGraph ga = dfc_graph(a), gb = dfc_graph(b);
  Matcher matcher(ga, gb, opts);
  std::vector<std::vector<int>> hits;
  auto to_iso = [&](const std::vector<int>& m) {
    DfcIso f;
    for (int x = 0; x < a.size(); ++x) f.forward[a.id(x)] = b.id(m[x]);
    return f;
  };
  auto accept = [&](const std::vector<int>& m) { return !verify_dfc_iso(a, b, to_iso(m).forward).has_value(); };
  out.status = matcher.run({{c.omega(), d.omega()}, {a.bottom(), b.bottom()}}, accept, hits);
  out.expansions = matcher.expansions();
  for (const auto& m : hits) out.witnesses.push_back(to_iso(m));
  return out;
}

SearchResult<OpetopeIso> opetope_iso_search(const Opetope& y, const Opetope& z, const SearchOptions& opts) {
  SearchResult<OpetopeIso> out;
  if (y.dim() != z.dim()) return out;
  OpetopeGraph ga = opetope_graph(y), gb = opetope_graph(z);
  const int n = y.dim();
  auto to_iso = [&](const std::vector<int>& m) {
    OpetopeIso f;
    f.nodes.resize(n + 1);
    f.edges.resize(n + 1);
    f.whites.resize(n);
    for (int x = 0; x < ga.g.size(); ++x) {
      const auto& [level, type, id] = ga.what[x];
      const CellId& image = std::get<2>(gb.what[m[x]]);
      if (type == 0) f.nodes[level][id] = image;
      if (type == 1) f.edges[level][id] = image;
      if (type == 2) f.whites[level][id] = image;
    }
    return f;
  };
  auto accept = [&](const std::vector<int>& m) { return !verify_opetope_iso(y, z, to_iso(m)).has_value(); };
  std::vector<std::pair<int, int>> seeds;
  for (int i = 0; i <= n; ++i) seeds.push_back({ga.roots[i], gb.roots[i]});
  Matcher matcher(ga.g, gb.g, opts);
  std::vector<std::vector<int>> hits;
  out.status = matcher.run(seeds, accept, hits);
  out.expansions = matcher.expansions();
  for (const auto& m : hits) out.witnesses.push_back(to_iso(m));
  return out;
}

MapResult<DfcIso> theta(const Dfc& c) {
  MapResult<DfcIso> out;
  auto z = z_of(c);
  if (!z.ok()) {
    out.error = "RoundTripBroken: z_of rejected its own output";
    return out;
  }
  auto p = p_of(*z);
  if (!p.ok()) {
    out.error = "RoundTripBroken: p_of(z_of(C)) is not a DFC";
    return out;
  }
  ExtendedZoom ez = extend(*z);
  const auto& mop = c.mop();
  const int g = mop.gamma(c.omega());
  DfcIso f;
  for (int x = 0; x < mop.size(); ++x) {
    if (x == c.omega())
      f.forward[mop.id(x)] = ez.top;
    else if (x == g)
      f.forward[mop.id(x)] = g == mop.bottom() ? ez.bottom : ez.top_root;
    else
      f.forward[mop.id(x)] = mop.id(x);
  }
  if (auto e = verify_dfc_iso(mop, p->mop(), f.forward)) {
    out.error = "RoundTripBroken: " + *e;
    return out;
  }
  out.value = std::move(f);
  return out;
}

MapResult<OpetopeIso> tau(const Opetope& y) {
  MapResult<OpetopeIso> out;
  auto p = p_of(y);
  if (!p.ok()) {
    out.error = "RoundTripBroken: p_of(Y) is not a DFC";
    return out;
  }
  auto z = z_of(*p);
  if (!z.ok()) {
    out.error = "RoundTripBroken: z_of(p_of(Y)) is not an opetope";
    return out;
  }
  const int n = y.dim();
  OpetopeIso f = identity_iso(y);
  // T_0 and T_1 have a single forced shape; match their elements by role.
  for (int i = 0; i <= std::min(n, 1); ++i) {
    const auto& a = y.tree(i);
    const auto& b = z->tree(i);
    f.nodes[i].clear();
    f.edges[i].clear();
    if (a.nodes.size() != 1 || b.nodes.size() != 1) {
      out.error = "RoundTripBroken: T" + std::to_string(i) + " is not a corolla";
      return out;
    }
    f.nodes[i][a.nodes[0]] = b.nodes[0];
    f.edges[i][a.root] = b.root;
    auto la = leaves(a), lb = leaves(b);
    for (std::size_t j = 0; j < la.size() && j < lb.size(); ++j) f.edges[i][la[j]] = lb[j];
  }
  if (auto e = verify_opetope_iso(y, *z, f)) {
    out.error = "RoundTripBroken: " + *e;
    return out;
  }
  out.value = std::move(f);
  return out;
}

namespace {

CellId rn(const std::map<CellId, CellId>& r, const CellId& x) {
  auto it = r.find(x);
  return it == r.end() ? x : it->second;
}

std::vector<CellId> rn(const std::map<CellId, CellId>& r, const std::vector<CellId>& xs) {
  std::vector<CellId> out;
  for (const auto& x : xs) out.push_back(rn(r, x));
  return out;
}

std::map<CellId, CellId> rn_map(const std::map<CellId, CellId>& r, const std::map<CellId, CellId>& m) {
  std::map<CellId, CellId> out;
  for (const auto& [k, v] : m) out[rn(r, k)] = rn(r, v);
  return out;
}

}  // namespace

RawDfc relabel(const RawDfc& raw, const std::map<CellId, CellId>& rename) {
  RawDfc out = raw;
  for (auto& c : out.cells) {
    c.id = rn(rename, c.id);
    c.delta = rn(rename, c.delta);
    c.gamma = rn(rename, c.gamma);
  }
  for (auto& lo : out.local_orders) {
    lo.x = rn(rename, lo.x);
    lo.z = rn(rename, lo.z);
    lo.order = rn(rename, lo.order);
  }
  return out;
}

RawOpetope relabel(const RawOpetope& raw, const std::map<CellId, CellId>& rename) {
  RawOpetope out = raw;
  for (auto& t : out.trees) {
    t.nodes = rn(rename, t.nodes);
    t.edges = rn(rename, t.edges);
    t.node_target = rn_map(rename, t.node_target);
    t.edge_target = rn_map(rename, t.edge_target);
    t.root = rn(rename, t.root);
  }
  for (auto& c : out.constellations) {
    Subdivision s;
    for (const auto& [e, ws] : c.subdivision) s[rn(rename, e)] = rn(rename, ws);
    c.subdivision = std::move(s);
    if (c.sigma_black) c.sigma_black = rn_map(rename, *c.sigma_black);
    if (c.sigma_white) c.sigma_white = rn_map(rename, *c.sigma_white);
  }
  return out;
}

OpetopeIso relabel_iso(const Opetope& y, const std::map<CellId, CellId>& rename) {
  OpetopeIso f = identity_iso(y);
  for (auto* level : {&f.nodes, &f.edges, &f.whites})
    for (auto& m : *level)
      for (auto& [k, v] : m) v = rn(rename, k);
  return f;
}

}  // namespace opetope
