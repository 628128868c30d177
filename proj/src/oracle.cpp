#include "opetope/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "opetope/functor_p.hpp"
#include "opetope/functor_z.hpp"

namespace opetope {

namespace {

struct View {
  std::vector<CellId> ids;
  std::map<CellId, int> dim;
  std::map<CellId, std::set<CellId>> delta;
  std::map<CellId, CellId> gamma;  // absent for the bottom
  std::map<std::pair<CellId, CellId>, std::vector<CellId>> orders;

  explicit View(const RawDfc& raw) {
    for (const auto& c : raw.cells) {
      ids.push_back(c.id);
      dim[c.id] = c.dim;
      delta[c.id] = std::set<CellId>(c.delta.begin(), c.delta.end());
      if (!c.gamma.empty()) gamma[c.id] = c.gamma.front();
    }
    for (const auto& lo : raw.local_orders) orders[{lo.x, lo.z}] = lo.order;
  }

  std::optional<Sign> sign(const CellId& y, const CellId& x) const {
    bool in_delta = delta.at(x).count(y) > 0;
    auto g = gamma.find(x);
    bool is_gamma = g != gamma.end() && g->second == y;
    if (in_delta && is_gamma) return Sign::loop;
    if (in_delta) return Sign::minus;
    if (is_gamma) return Sign::plus;
    return std::nullopt;
  }

  std::vector<CellId> of_dim(int k) const {
    std::vector<CellId> out;
    for (const auto& id : ids)
      if (dim.at(id) == k) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<CellId> facets(const CellId& x) const {
    std::vector<CellId> out;
    for (const auto& y : ids)
      if (sign(y, x)) out.push_back(y);
    return out;
  }
};

bool oriented(std::optional<Sign> s) { return s && *s != Sign::loop; }

std::string chain_text(const CellId& z, const CellId& y, const CellId& x) { return z + " < " + y + " < " + x; }

}  // namespace

std::vector<OracleCompletion> oracle_lozenge(const RawDfc& raw, const CellId& z, const CellId& y, const CellId& x) {
  View v(raw);
  std::vector<OracleCompletion> out;
  for (const auto& y2 : v.ids) {
    if (y2 == y || v.dim.at(y2) != v.dim.at(y)) continue;
    auto beta = v.sign(z, y2);
    auto alpha = v.sign(y2, x);
    if (alpha && beta) out.push_back({y2, *alpha, *beta});
  }
  return out;
}

std::vector<OracleChain> oracle_thinness(const RawDfc& raw) {
  View v(raw);
  std::vector<OracleChain> out;
  for (const auto& x : v.ids) {
    for (const auto& y : v.facets(x)) {
      Sign alpha = *v.sign(y, x);
      for (const auto& z : v.facets(y)) {
        Sign beta = *v.sign(z, y);
        OracleChain ch{z, y, x, false, true, {}};
        if (alpha != Sign::loop && beta != Sign::loop) {
          std::vector<OracleCompletion> good;
          for (const auto& c : oracle_lozenge(raw, z, y, x))
            if (c.alpha != Sign::loop && c.beta != Sign::loop) good.push_back(c);
          for (const auto& c : good) ch.completions.push_back(c.y);
          ch.ok = good.size() == 1 && alpha * beta == -(good[0].alpha * good[0].beta);
        } else if (beta == Sign::loop && alpha == Sign::minus) {
          ch.loop_chain = true;
          for (const auto& c : oracle_lozenge(raw, z, y, x))
            if (!(c.alpha == Sign::minus && c.beta == Sign::loop)) ch.completions.push_back(c.y);
          ch.ok = !ch.completions.empty();
        } else {
          continue;
        }
        out.push_back(std::move(ch));
      }
    }
  }
  return out;
}

OracleOrder oracle_strictness(const RawDfc& raw, int k, Sign sign) {
  View v(raw);
  OracleOrder out;
  out.cells = v.of_dim(k);
  const std::size_t m = out.cells.size();
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
  const auto upper = v.of_dim(k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const CellId& x = out.cells[i];
    for (std::size_t j = 0; j < m; ++j) {
      const CellId& x2 = out.cells[j];
      if (sign == Sign::minus) {
        auto g = v.gamma.find(x);
        r[i][j] = g != v.gamma.end() && v.sign(g->second, x2) == Sign::minus;
      } else {
        for (const auto& w : upper)
          if (v.sign(x, w) == Sign::minus && v.sign(x2, w) == Sign::plus) r[i][j] = true;
      }
    }
  }
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < m; ++i)
      if (r[i][t])
        for (std::size_t j = 0; j < m; ++j)
          if (r[t][j]) r[i][j] = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (r[i][j]) out.closure.insert({out.cells[i], out.cells[j]});
  for (std::size_t i = 0; i < m; ++i)
    if (r[i][i]) {
      out.strict = false;
      out.on_cycle = out.cells[i];
      break;
    }
  return out;
}

KernelVerdict oracle_kernel(const RootedTree& domain, const RawConstellation& c, const RootedTree& codomain) {
  KernelVerdict out;
  // Dot graph of the subdivided domain.
  std::map<CellId, std::set<CellId>> adj;
  std::vector<CellId> dots = domain.nodes;
  for (const auto& [e, ws] : c.subdivision) dots.insert(dots.end(), ws.begin(), ws.end());
  for (const auto& d : dots) adj[d];
  for (const auto& e : domain.edges) {
    std::vector<CellId> line;
    if (auto t = domain.edge_target.find(e); t != domain.edge_target.end()) line.push_back(t->second);
    if (auto w = c.subdivision.find(e); w != c.subdivision.end()) line.insert(line.end(), w->second.begin(), w->second.end());
    for (const auto& [y, out_edge] : domain.node_target)
      if (out_edge == e) line.push_back(y);
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      adj[line[i]].insert(line[i + 1]);
      adj[line[i + 1]].insert(line[i]);
    }
  }

  auto image = [&](const std::optional<std::map<CellId, CellId>>& sigma, const CellId& d) {
    if (!sigma) return d;
    auto it = sigma->find(d);
    return it == sigma->end() ? CellId() : it->second;
  };
  std::map<CellId, CellId> preimage;
  for (const auto& x : domain.nodes) preimage[image(c.sigma_black, x)] = x;
  for (const auto& [e, ws] : c.subdivision)
    for (const auto& w : ws) preimage[image(c.sigma_white, w)] = w;

  // Walk each leaf and each nulldot of the codomain down to the root.
  std::map<CellId, std::set<CellId>> under;
  std::set<CellId> has_input, produced;
  for (const auto& [e, y] : codomain.edge_target) has_input.insert(y);
  for (const auto& [y, e] : codomain.node_target) produced.insert(e);
  auto walk = [&](const CellId& start, bool start_is_edge) {
    auto it = preimage.find(start);
    if (it == preimage.end()) return;
    CellId cur = start;
    bool is_edge = start_is_edge;
    for (std::size_t guard = 0; guard <= codomain.nodes.size() + codomain.edges.size(); ++guard) {
      under[cur].insert(it->second);
      if (is_edge) {
        auto t = codomain.edge_target.find(cur);
        if (t == codomain.edge_target.end()) return;
        cur = t->second;
      } else {
        cur = codomain.node_target.at(cur);
      }
      is_edge = !is_edge;
    }
  };
  for (const auto& e : codomain.edges)
    if (!produced.count(e)) walk(e, true);
  for (const auto& y : codomain.nodes)
    if (!has_input.count(y)) walk(y, false);

  std::vector<CellId> elements = codomain.nodes;
  elements.insert(elements.end(), codomain.edges.begin(), codomain.edges.end());
  for (const auto& u : elements) {
    const auto& set = under[u];
    if (set.empty()) continue;
    std::set<CellId> seen{*set.begin()};
    std::deque<CellId> queue{*set.begin()};
    while (!queue.empty()) {
      CellId d = queue.front();
      queue.pop_front();
      for (const auto& n : adj[d])
        if (set.count(n) && seen.insert(n).second) queue.push_back(n);
    }
    if (seen.size() != set.size()) {
      out.ok = false;
      out.witness = u;
      out.dots.assign(set.begin(), set.end());
      return out;
    }
  }
  return out;
}

HexagonVerdict oracle_hexagon(const RawDfc& raw) {
  View v(raw);
  HexagonVerdict out;
  for (const auto& b : v.ids) {
    if (v.dim.at(b) < 2) continue;
    std::vector<CellId> nodes;
    for (const auto& c : v.delta.at(b))
      if (!(v.delta.at(c).size() == 1 && v.delta.at(c).count(v.gamma.at(c))))
        nodes.push_back(c);
    // Edges of the source tree: c feeds c2 through d = gamma(c) when d <- c2.
    struct Step {
      CellId to, d;
      bool down;
    };
    std::map<CellId, std::vector<Step>> steps;
    for (const auto& c : nodes)
      for (const auto& c2 : nodes) {
        if (c == c2) continue;
        const CellId& d = v.gamma.at(c);
        if (v.sign(d, c2) == Sign::minus) {
          steps[c].push_back({c2, d, true});
          steps[c2].push_back({c, d, false});
        }
      }
    auto bottoms = [&](const CellId& c) {
      std::set<CellId> es;
      for (const auto& d : v.facets(c)) {
        if (!oriented(v.sign(d, c))) continue;
        for (const auto& e : v.facets(d))
          if (oriented(v.sign(e, d))) es.insert(e);
      }
      return es;
    };
    std::map<CellId, std::set<CellId>> reach;
    for (const auto& c : nodes) reach[c] = bottoms(c);

    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const CellId& c = nodes[i];
        const CellId& c2 = nodes[j];
        // Path search from c to c2.
        std::map<CellId, std::pair<CellId, Step>> prev;
        std::deque<CellId> queue{c};
        std::set<CellId> seen{c};
        while (!queue.empty()) {
          CellId u = queue.front();
          queue.pop_front();
          for (const auto& s : steps[u])
            if (seen.insert(s.to).second) {
              prev[s.to] = {u, s};
              queue.push_back(s.to);
            }
        }
        std::vector<Step> path;
        if (seen.count(c2))
          for (CellId u = c2; u != c; u = prev.at(u).first) path.push_back(prev.at(u).second);
        std::reverse(path.begin(), path.end());

        for (const auto& e : reach[c]) {
          if (!reach[c2].count(e)) continue;
          ++out.configurations;
          std::string where = "b=" + b + " c=" + c + " c'=" + c2 + " e=" + e;
          if (path.empty()) {
            out.ok = false;
            out.counterexample = where + ": no path in the source tree";
            return out;
          }
          std::optional<Sign> down_sign, up_sign;
          bool fine = true;
          for (const auto& s : path) {
            auto sg = v.sign(e, s.d);
            if (!oriented(sg)) {
              fine = false;
              break;
            }
            auto& slot = s.down ? down_sign : up_sign;
            if (slot && *slot != *sg) fine = false;
            slot = sg;
          }
          if (fine && down_sign && up_sign && *down_sign != -*up_sign) fine = false;
          if (!fine) {
            out.ok = false;
            out.counterexample = where + ": zig-zag signs do not match";
            return out;
          }
        }
      }
  }
  return out;
}

std::optional<std::vector<std::map<CellId, CellId>>> oracle_iso(const RawDfc& ra, const RawDfc& rb, int max_per_dim) {
  View a(ra), b(rb);
  std::vector<std::map<CellId, CellId>> out;
  int top = -1;
  for (const auto& [id, d] : a.dim) top = std::max(top, d);
  for (const auto& [id, d] : b.dim) top = std::max(top, d);
  std::vector<std::vector<CellId>> la, lb;
  for (int k = top; k >= -1; --k) {
    la.push_back(a.of_dim(k));
    lb.push_back(b.of_dim(k));
    if (static_cast<int>(la.back().size()) > max_per_dim || static_cast<int>(lb.back().size()) > max_per_dim)
      return std::nullopt;
  }
  for (std::size_t i = 0; i < la.size(); ++i)
    if (la[i].size() != lb[i].size()) return out;

  std::map<CellId, CellId> f;
  std::set<CellId> used;
  auto compatible = [&](const CellId& x, const CellId& y) {
    for (const auto& [w, fw] : f) {
      if (a.dim.at(w) != a.dim.at(x) + 1) continue;
      if (a.delta.at(w).count(x) != b.delta.at(fw).count(y)) return false;
      auto gw = a.gamma.find(w);
      auto gfw = b.gamma.find(fw);
      bool is_g = gw != a.gamma.end() && gw->second == x;
      bool is_g2 = gfw != b.gamma.end() && gfw->second == y;
      if (is_g != is_g2) return false;
    }
    return true;
  };
  auto orders_match = [&]() {
    if (a.orders.size() != b.orders.size()) return false;
    for (const auto& [key, seq] : a.orders) {
      auto it = b.orders.find({f.at(key.first), f.at(key.second)});
      if (it == b.orders.end() || it->second.size() != seq.size()) return false;
      for (std::size_t i = 0; i < seq.size(); ++i)
        if (f.at(seq[i]) != it->second[i]) return false;
    }
    return true;
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t level, std::size_t pos) {
    if (level == la.size()) {
      if (orders_match()) out.push_back(f);
      return;
    }
    if (pos == la[level].size()) {
      rec(level + 1, 0);
      return;
    }
    const CellId& x = la[level][pos];
    for (const auto& y : lb[level]) {
      if (used.count(y) || !compatible(x, y)) continue;
      f[x] = y;
      used.insert(y);
      rec(level, pos + 1);
      used.erase(y);
      f.erase(x);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<LemmaResult> lemma_suite(const Dfc& c) {
  View v(c.mop().raw());
  const int n = c.dim();
  std::vector<LemmaResult> out;

  std::set<CellId> gamma_plus;
  for (const auto& w : v.ids)
    if (auto g = v.gamma.find(w); g != v.gamma.end() && v.sign(g->second, w) == Sign::plus) gamma_plus.insert(g->second);
  auto is_loop = [&](const CellId& y) {
    auto g = v.gamma.find(y);
    return g != v.gamma.end() && v.delta.at(y).size() == 1 && v.delta.at(y).count(g->second);
  };
  std::vector<CellId> chain(n + 1);
  {
    CellId cur = c.omega_id();
    for (int j = n; j >= 0; --j) {
      chain[j] = cur;
      if (j > 0) cur = v.gamma.at(cur);
    }
  }

  LemmaResult confinement{"confinement"}, dichotomy{"loop lozenge dichotomy"};
  for (const auto& x : v.ids)
    for (const auto& y : v.facets(x))
      for (const auto& z : v.facets(y)) {
        Sign a = *v.sign(y, x), b = *v.sign(z, y);
        if (b == Sign::loop && a == Sign::plus) {
          ++confinement.checked;
          for (const auto& y2 : v.delta.at(x))
            if (v.sign(z, y2) != Sign::loop) confinement.counterexamples.push_back(chain_text(z, y, x) + " vs " + y2);
        }
        if (b == Sign::loop && a == Sign::minus) {
          ++dichotomy.checked;
          int oriented_count = 0;
          bool loop_plus = false;
          for (const auto& cpl : oracle_lozenge(c.mop().raw(), z, y, x)) {
            if (cpl.alpha != Sign::loop && cpl.beta != Sign::loop) ++oriented_count;
            if (cpl.beta == Sign::loop && cpl.alpha == Sign::plus) loop_plus = true;
          }
          if ((oriented_count >= 2) == loop_plus) dichotomy.counterexamples.push_back(chain_text(z, y, x));
        }
      }
  out.push_back(confinement);
  out.push_back(dichotomy);

  LemmaResult lambda{"Lambda_k = delta(gamma^(k+1) omega)"}, sources{"C_k minus delta-(C_k+1) = {gamma^(k) omega}"};
  for (int k = 0; k < n; ++k) {
    ++lambda.checked;
    std::set<CellId> lk;
    for (const auto& x : v.of_dim(k))
      if (!gamma_plus.count(x)) lk.insert(x);
    if (lk != v.delta.at(chain[k + 1])) lambda.counterexamples.push_back("k=" + std::to_string(k));
    ++sources.checked;
    std::set<CellId> rest;
    for (const auto& x : v.of_dim(k)) {
      bool minus_face = false;
      for (const auto& w : v.of_dim(k + 1))
        if (v.sign(x, w) == Sign::minus) minus_face = true;
      if (!minus_face) rest.insert(x);
    }
    if (rest != std::set<CellId>{chain[k]}) sources.counterexamples.push_back("k=" + std::to_string(k));
  }
  out.push_back(lambda);
  out.push_back(sources);

  LemmaResult nulls{"gamma(N_>=2) in Omega"};
  for (const auto& x : v.ids)
    if (v.dim.at(x) >= 2 && v.delta.at(x).empty()) {
      ++nulls.checked;
      if (!is_loop(v.gamma.at(x))) nulls.counterexamples.push_back(x);
    }
  out.push_back(nulls);

  LemmaResult black{"blackdots = leaves"}, white{"whitedots = nulldots"}, linear{"T_2 linear"};
  if (n >= 1) {
    auto z = z_of(c);
    if (!z.ok()) {
      black.counterexamples.push_back("z_of failed");
    } else {
      ExtendedZoom ez = extend(*z);
      for (int k = 2; k < n + 2; ++k) {
        ++black.checked;
        ++white.checked;
        const auto& s = ez.S[k];
        std::set<CellId> b(s.nodes.begin(), s.nodes.end());
        auto lv = leaves(ez.S[k + 1]);
        if (b != std::set<CellId>(lv.begin(), lv.end())) black.counterexamples.push_back("k=" + std::to_string(k));
        auto ws = whitedots(ez.subdivided(k));
        auto nd = nulldots(ez.S[k + 1]);
        if (std::set<CellId>(ws.begin(), ws.end()) != std::set<CellId>(nd.begin(), nd.end()))
          white.counterexamples.push_back("k=" + std::to_string(k));
      }
      if (n >= 2) {
        ++linear.checked;
        if (!is_linear(z->tree(2))) linear.counterexamples.push_back("T_2");
      }
    }
  }
  out.push_back(black);
  out.push_back(white);
  out.push_back(linear);

  LemmaResult pencil{"pencil linearity"};
  for (int k = 1; k <= n; ++k) {
    auto order = oracle_strictness(c.mop().raw(), k, Sign::plus);
    for (const auto& e : v.of_dim(k - 1))
      for (Sign beta : {Sign::minus, Sign::plus}) {
        ++pencil.checked;
        std::vector<CellId> ds;
        for (const auto& d : v.of_dim(k))
          if (v.sign(e, d) == beta) ds.push_back(d);
        for (std::size_t i = 0; i < ds.size(); ++i)
          for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (!order.closure.count({ds[i], ds[j]}) && !order.closure.count({ds[j], ds[i]}))
              pencil.counterexamples.push_back(e + " " + std::string(sign_symbol(beta)) + ": " + ds[i] + ", " + ds[j]);
      }
  }
  out.push_back(pencil);

  LemmaResult hex{"hexagon"};
  auto h = oracle_hexagon(c.mop().raw());
  hex.checked = h.configurations;
  if (!h.ok) hex.counterexamples.push_back(h.counterexample);
  out.push_back(hex);
  return out;
}

}  // namespace opetope
