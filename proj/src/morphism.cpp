#include "opetope/morphism.hpp"

#include <algorithm>
#include <set>

namespace opetope {

namespace {

std::optional<CellId> lookup(const std::map<CellId, CellId>& m, const CellId& k) {
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// f must send `from` bijectively onto `to`.
std::optional<std::string> check_bijection(const std::map<CellId, CellId>& f, const std::vector<CellId>& from,
                                           const std::vector<CellId>& to, const std::string& what) {
  if (from.size() != to.size() || f.size() != from.size())
    return what + ": sizes differ";
  std::set<CellId> target(to.begin(), to.end()), image;
  for (const auto& x : from) {
    auto y = lookup(f, x);
    if (!y) return what + ": " + x + " is unmapped";
    if (!target.count(*y)) return what + ": " + x + " lands outside the target";
    if (!image.insert(*y).second) return what + ": " + *y + " is hit twice";
  }
  return std::nullopt;
}

CellId image_of(const std::map<CellId, CellId>& f, const CellId& x) {
  auto it = f.find(x);
  return it == f.end() ? CellId() : it->second;
}

}  // namespace

std::map<CellId, CellId> DfcIso::backward() const {
  std::map<CellId, CellId> out;
  for (const auto& [k, v] : forward) out[v] = k;
  return out;
}

std::optional<std::string> verify_dfc_iso(const ManyToOnePoset& a, const ManyToOnePoset& b,
                                          const std::map<CellId, CellId>& f) {
  std::vector<CellId> ida, idb;
  for (int i = 0; i < a.size(); ++i) ida.push_back(a.id(i));
  for (int i = 0; i < b.size(); ++i) idb.push_back(b.id(i));
  if (auto e = check_bijection(f, ida, idb, "cells")) return e;
  for (int x = 0; x < a.size(); ++x) {
    int fx = b.index_of(f.at(a.id(x)));
    if (a.dim(x) != b.dim(fx)) return "dimension of " + a.id(x) + " is not preserved";
    int g = a.gamma(x), g2 = b.gamma(fx);
    if ((g < 0) != (g2 < 0) || (g >= 0 && f.at(a.id(g)) != b.id(g2)))
      return "target of " + a.id(x) + " is not preserved";
    std::set<CellId> da, db;
    for (int y : a.delta(x)) da.insert(f.at(a.id(y)));
    for (int y : b.delta(fx)) db.insert(b.id(y));
    if (da != db) return "sources of " + a.id(x) + " are not preserved";
  }
  if (a.local_orders().size() != b.local_orders().size()) return "local order count differs";
  for (const auto& [key, order] : a.local_orders()) {
    int fx = b.index_of(f.at(a.id(key.first))), fz = b.index_of(f.at(a.id(key.second)));
    const auto* other = b.local_order(fx, fz);
    if (!other || other->size() != order.size())
      return "local order at (" + a.id(key.first) + ", " + a.id(key.second) + ") is not preserved";
    for (size_t i = 0; i < order.size(); ++i)
      if (f.at(a.id(order[i])) != b.id((*other)[i]))
        return "local order at (" + a.id(key.first) + ", " + a.id(key.second) + ") is reordered";
  }
  return std::nullopt;
}

std::optional<std::string> verify_opetope_iso(const Opetope& a, const Opetope& b, const OpetopeIso& f) {
  const int n = a.dim();
  if (b.dim() != n) return "dimensions differ";
  if (static_cast<int>(f.nodes.size()) != n + 1 || static_cast<int>(f.edges.size()) != n + 1 ||
      static_cast<int>(f.whites.size()) != n)
    return "map has the wrong number of levels";
  for (int i = 0; i <= n; ++i) {
    const auto& ta = a.tree(i);
    const auto& tb = b.tree(i);
    const std::string lvl = "T" + std::to_string(i);
    if (auto e = check_bijection(f.nodes[i], ta.nodes, tb.nodes, lvl + " nodes")) return e;
    if (auto e = check_bijection(f.edges[i], ta.edges, tb.edges, lvl + " edges")) return e;
    if (image_of(f.edges[i], ta.root) != tb.root) return lvl + ": root is not preserved";
    for (const auto& [x, e] : ta.node_target)
      if (image_of(f.edges[i], e) != tb.node_target.at(image_of(f.nodes[i], x)))
        return lvl + ": output edge of " + x + " is not preserved";
    for (const auto& e : ta.edges) {
      auto ea = lookup(ta.edge_target, e);
      auto eb = lookup(tb.edge_target, image_of(f.edges[i], e));
      if (ea.has_value() != eb.has_value() || (ea && image_of(f.nodes[i], *ea) != *eb))
        return lvl + ": target of edge " + e + " is not preserved";
    }
  }
  for (int i = 0; i < n; ++i) {
    const std::string lvl = "T" + std::to_string(i) + "'";
    auto sa = a.subdivided(i), sb = b.subdivided(i);
    if (auto e = check_bijection(f.whites[i], whitedots(sa), whitedots(sb), lvl + " whitedots")) return e;
    for (const auto& e : sa.base.edges) {
      std::vector<CellId> wa, wb;
      if (auto it = sa.W.find(e); it != sa.W.end())
        for (const auto& w : it->second) wa.push_back(image_of(f.whites[i], w));
      if (auto it = sb.W.find(image_of(f.edges[i], e)); it != sb.W.end()) wb = it->second;
      if (wa != wb) return lvl + ": subdivision of " + e + " is not preserved";
    }
    const auto& ca = a.raw().constellations[i];
    const auto& cb = b.raw().constellations[i];
    auto sigma = [](const std::optional<std::map<CellId, CellId>>& m, const CellId& x) {
      if (!m) return x;
      auto it = m->find(x);
      return it == m->end() ? CellId() : it->second;
    };
    for (const auto& x : sa.base.nodes)
      if (sigma(cb.sigma_black, image_of(f.nodes[i], x)) != image_of(f.edges[i + 1], sigma(ca.sigma_black, x)))
        return lvl + ": blackdot correspondence of " + x + " is not preserved";
    for (const auto& w : whitedots(sa))
      if (sigma(cb.sigma_white, image_of(f.whites[i], w)) != image_of(f.nodes[i + 1], sigma(ca.sigma_white, w)))
        return lvl + ": whitedot correspondence of " + w + " is not preserved";
  }
  return std::nullopt;
}

DfcIso compose(const DfcIso& g, const DfcIso& f) {
  DfcIso out;
  for (const auto& [x, y] : f.forward) out.forward[x] = image_of(g.forward, y);
  return out;
}

OpetopeIso compose(const OpetopeIso& g, const OpetopeIso& f) {
  auto comp = [](const std::vector<std::map<CellId, CellId>>& gs, const std::vector<std::map<CellId, CellId>>& fs) {
    std::vector<std::map<CellId, CellId>> out(fs.size());
    for (size_t i = 0; i < fs.size() && i < gs.size(); ++i)
      for (const auto& [x, y] : fs[i]) out[i][x] = image_of(gs[i], y);
    return out;
  };
  return OpetopeIso{comp(g.nodes, f.nodes), comp(g.edges, f.edges), comp(g.whites, f.whites)};
}

OpetopeIso identity_iso(const Opetope& y) {
  OpetopeIso f;
  for (int i = 0; i <= y.dim(); ++i) {
    f.nodes.emplace_back();
    f.edges.emplace_back();
    for (const auto& x : y.tree(i).nodes) f.nodes.back()[x] = x;
    for (const auto& e : y.tree(i).edges) f.edges.back()[e] = e;
  }
  for (int i = 0; i < y.dim(); ++i) {
    f.whites.emplace_back();
    for (const auto& w : whitedots(y.subdivided(i))) f.whites.back()[w] = w;
  }
  return f;
}

}  // namespace opetope
