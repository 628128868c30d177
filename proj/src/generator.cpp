#include "opetope/generator.hpp"

#include <algorithm>
#include <set>

namespace opetope {

namespace {

// Bounded draws written out by hand so that a seed yields the same document
// with every standard library.
int pick(Rng& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

RootedTree linear_tree(int m) {
  RootedTree t;
  for (int i = 0; i <= m; ++i) t.edges.push_back("e2_" + std::to_string(i));
  t.root = t.edges[0];
  for (int i = 1; i <= m; ++i) {
    CellId n = "n2_" + std::to_string(i);
    t.nodes.push_back(n);
    t.node_target[n] = t.edges[i - 1];
    t.edge_target[t.edges[i]] = n;
  }
  return t;
}

class Nester {
 public:
  Nester(Rng& rng, const SubdividedTree& t, const std::string& prefix, const GenParams& params, double child_prob)
      : rng_(rng), ex_(expand(t)), prefix_(prefix), params_(params), child_prob_(child_prob) {
    adj_.resize(ex_.dot_count());
    for (const auto& s : ex_.segments)
      if (s.lower >= 0 && s.upper >= 0) {
        adj_[s.lower].push_back(s.upper);
        adj_[s.upper].push_back(s.lower);
      }
  }

  RootedTree build() {
    std::set<int> all;
    for (int d = 0; d < ex_.dot_count(); ++d) all.insert(d);
    u_.root = circle(all, 0);
    return u_;
  }

 private:
  CellId fresh(char kind) { return prefix_ + kind + std::to_string(counter_++); }

  CellId white_circle(int w) {
    CellId node = ex_.dot_id[w];
    CellId out = fresh('e');
    u_.nodes.push_back(node);
    u_.edges.push_back(out);
    u_.node_target[node] = out;
    return out;
  }

  std::set<int> grow(const std::set<int>& pool, int size) {
    std::vector<int> members(pool.begin(), pool.end());
    int seed = members[pick(rng_, 0, static_cast<int>(members.size()) - 1)];
    std::set<int> region{seed};
    std::vector<int> frontier;
    for (int n : adj_[seed])
      if (pool.count(n)) frontier.push_back(n);
    while (static_cast<int>(region.size()) < size && !frontier.empty()) {
      int i = pick(rng_, 0, static_cast<int>(frontier.size()) - 1);
      int d = frontier[i];
      frontier.erase(frontier.begin() + i);
      if (!region.insert(d).second) continue;
      for (int n : adj_[d])
        if (pool.count(n) && !region.count(n)) frontier.push_back(n);
    }
    return region;
  }

  CellId circle(const std::set<int>& dots, int depth) {
    CellId node = fresh('n');
    CellId out = fresh('e');
    u_.nodes.push_back(node);
    u_.edges.push_back(out);
    u_.node_target[node] = out;

    std::set<int> rest = dots;
    std::vector<CellId> inputs;
    const int n = static_cast<int>(dots.size());
    while (depth < params_.max_depth && n >= 2 && !rest.empty() && coin(rng_, child_prob_)) {
      int size = pick(rng_, 1, std::min(static_cast<int>(rest.size()), n - 1));
      auto region = grow(rest, size);
      for (int d : region) rest.erase(d);
      inputs.push_back(circle(region, depth + 1));
    }
    for (int d : rest) {
      if (ex_.white[d]) {
        inputs.push_back(white_circle(d));
      } else {
        u_.edges.push_back(ex_.dot_id[d]);
        inputs.push_back(ex_.dot_id[d]);
      }
    }
    for (const auto& e : inputs) u_.edge_target[e] = node;
    return out;
  }

  Rng& rng_;
  Expansion ex_;
  std::string prefix_;
  GenParams params_;
  double child_prob_;
  std::vector<std::vector<int>> adj_;
  RootedTree u_;
  int counter_ = 0;
};

}  // namespace

BaseZoom gen_base(Rng& rng, int max_linear_nodes) {
  BaseZoom b;
  const int m = pick(rng, 0, std::max(0, max_linear_nodes));
  RootedTree t2 = linear_tree(m);
  b.trees.push_back(corolla("g0_n", {"g0_l"}, "g0_r"));
  b.trees.push_back(corolla(t2.edges.back(), {"g0_n"}, "g1_r"));
  b.trees.push_back(std::move(t2));
  b.constellations.resize(2);
  return b;
}

SubdividedTree gen_subdivision(Rng& rng, const RootedTree& t, int max_whitedots, const std::string& prefix,
                               int max_total) {
  SubdividedTree s{t, {}};
  int count = 0;
  for (const auto& e : t.edges) {
    int k = std::min(pick(rng, 0, std::max(0, max_whitedots)), max_total - count);
    for (int i = 0; i < k; ++i) s.W[e].push_back(prefix + "w" + std::to_string(count++));
  }
  if (t.nodes.empty() && count == 0) s.W[t.root].push_back(prefix + "w" + std::to_string(count++));
  return s;
}

std::pair<RootedTree, RawConstellation> gen_nesting(Rng& rng, const SubdividedTree& t, const std::string& prefix,
                                                    const GenParams& params) {
  RawConstellation c{t.W, std::nullopt, std::nullopt, {}};
  const auto ws = whitedots(t);
  const std::size_t dots = t.base.nodes.size() + ws.size();
  if (dots == 0) throw InternalError("gen_nesting: the subdivided tree has no dots");
  if (dots == 1 && ws.empty() && coin(rng, 0.5)) return {unit_tree(t.base.nodes[0]), c};

  for (int attempt = 0; attempt < 8; ++attempt) {
    RootedTree u = Nester(rng, t, prefix, params, params.child_prob).build();
    if (static_cast<int>(u.nodes.size()) <= params.max_dots) return {u, c};
  }
  return {Nester(rng, t, prefix, params, 0.0).build(), c};
}

RawOpetope gen_opetope_raw(Rng& rng, const GenParams& params) {
  RawOpetope raw;
  raw.dim = params.dim;
  if (params.dim <= 1) {
    raw.trees.push_back(corolla("g0_n", {"g0_l"}, "g0_r"));
    if (params.dim == 1) {
      raw.trees.push_back(corolla("g1_n", {"g0_n"}, "g1_r"));
      raw.constellations.resize(1);
    }
    return raw;
  }
  BaseZoom base = gen_base(rng, params.max_linear_nodes);
  raw.trees = base.trees;
  raw.constellations = base.constellations;
  for (int k = 2; k < params.dim; ++k) {
    const RootedTree& t = raw.trees[k];
    int budget = std::min(params.max_dots - static_cast<int>(t.nodes.size()), params.max_dots - 1);
    auto sub = gen_subdivision(rng, t, params.max_whitedots, "L" + std::to_string(k) + "_", std::max(budget, 0));
    auto [u, c] = gen_nesting(rng, sub, "L" + std::to_string(k + 1) + "_", params);
    raw.trees.push_back(std::move(u));
    raw.constellations.push_back(std::move(c));
  }
  return raw;
}

Opetope gen_opetope(Rng& rng, const GenParams& params) {
  auto checked = opetope_validate(gen_opetope_raw(rng, params));
  if (!checked.ok())
    throw InternalError("generated opetope is invalid: " + checked.diagnostics.front().message);
  return *checked;
}

Opetope gen_opetope(std::uint64_t seed, const GenParams& params) {
  Rng rng(seed);
  return gen_opetope(rng, params);
}

}  // namespace opetope
