#include "opetope/dfc.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace opetope {

namespace {

Diagnostic ddiag(DiagCode code, std::vector<CellId> cells, std::string axiom, std::string message) {
  return Diagnostic{code, std::move(cells), std::move(axiom), std::move(message)};
}

std::vector<CellId> names(const ManyToOnePoset& mop, const std::vector<int>& xs) {
  std::vector<CellId> out;
  for (int x : xs) out.push_back(mop.id(x));
  return out;
}

void check_greatest(const ManyToOnePoset& mop, const DfcOptions& opts, std::vector<Diagnostic>& out,
                    bool& degenerate) {
  const int top_dim = mop.max_dim();
  const auto& tops = mop.cells_of_dim(top_dim);
  if (top_dim <= 0) {
    if (opts.allow_point && top_dim == 0 && tops.size() == 1 && mop.size() == 2) {
      degenerate = true;
      return;
    }
    out.push_back(ddiag(DiagCode::NoGreatestElement, names(mop, tops.empty() ? std::vector<int>{0} : tops),
                        "dfc.greatest", "no greatest element of positive dimension"));
    return;
  }
  if (tops.size() > 1) {
    out.push_back(ddiag(DiagCode::NoGreatestElement, names(mop, tops), "dfc.greatest",
                        "several cells of top dimension"));
    return;
  }
  std::vector<bool> seen(mop.size(), false);
  std::vector<int> stack{tops.front()};
  seen[tops.front()] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : mop.faces(x))
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::vector<CellId> missed;
  for (int i = 0; i < mop.size(); ++i)
    if (!seen[i]) missed.push_back(mop.id(i));
  if (!missed.empty()) {
    std::sort(missed.begin(), missed.end());
    out.push_back(ddiag(DiagCode::NoGreatestElement, missed, "dfc.greatest",
                        "cells not below the top cell " + mop.id(tops.front())));
  }
}

void check_loops(const ManyToOnePoset& mop, std::vector<Diagnostic>& out) {
  for (int y = 0; y < mop.size(); ++y) {
    if (!mop.is_loop(y)) continue;
    bool found = false;
    for (int x : mop.cofaces(y)) found = found || mop.sign(y, x) == Sign::plus;
    if (!found)
      out.push_back(ddiag(DiagCode::LoopWithoutPlusCoface, {mop.id(y)}, "dfc.loops",
                          "loop is the target of no cell"));
  }
}

void check_acyclic(const ManyToOnePoset& mop, std::vector<Diagnostic>& out) {
  for (int x = 0; x < mop.size(); ++x) {
    if (mop.dim(x) < 1) continue;
    const auto& F = mop.faces(x);
    const int m = static_cast<int>(F.size());
    std::vector<std::vector<int>> succ(m);
    for (int i = 0; i < m; ++i) {
      int g = mop.gamma(F[i]);
      for (int j = 0; j < m; ++j)
        if (g >= 0 && mop.sign(g, F[j]) == Sign::minus) succ[i].push_back(j);
    }
    std::vector<int> color(m, 0), parent(m, -1);
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int u) {
      color[u] = 1;
      for (int v : succ[u]) {
        if (color[v] == 1) {
          for (int w = u; w != v; w = parent[w]) cycle.push_back(F[w]);
          cycle.push_back(F[v]);
          std::reverse(cycle.begin(), cycle.end());
          return true;
        }
        if (color[v] == 0) {
          parent[v] = u;
          if (dfs(v)) return true;
        }
      }
      color[u] = 2;
      return false;
    };
    for (int i = 0; i < m && cycle.empty(); ++i)
      if (color[i] == 0) dfs(i);
    if (!cycle.empty()) {
      std::vector<CellId> cells{mop.id(x)};
      for (int c : cycle) cells.push_back(mop.id(c));
      out.push_back(ddiag(DiagCode::AcyclicityCycle, cells, "dfc.acyclicity",
                          "facets of the first cell form a directed cycle"));
    }
  }
}

}  // namespace

std::vector<Completion> lozenge_completions(const ManyToOnePoset& mop, int z, int y, int x) {
  std::vector<Completion> out;
  for (int y2 : mop.faces(x)) {
    if (y2 == y) continue;
    auto beta = mop.sign(z, y2);
    if (!beta) continue;
    out.push_back(Completion{y2, *mop.sign(y2, x), *beta});
  }
  std::sort(out.begin(), out.end(), [](const Completion& a, const Completion& b) { return a.y < b.y; });
  return out;
}

std::vector<ChainVerdict> thinness_report(const ManyToOnePoset& mop) {
  std::vector<ChainVerdict> out;
  for (int x = 0; x < mop.size(); ++x) {
    for (int y : mop.faces(x)) {
      Sign alpha = *mop.sign(y, x);
      for (int z : mop.faces(y)) {
        Sign beta = *mop.sign(z, y);
        ChainVerdict v{z, y, x, beta, alpha, ChainKind::oriented, {}, std::nullopt};
        if (alpha != Sign::loop && beta != Sign::loop) {
          for (const auto& c : lozenge_completions(mop, z, y, x))
            if (c.alpha != Sign::loop && c.beta != Sign::loop) v.completions.push_back(c);
          if (v.completions.empty()) v.failure = DiagCode::ThinnessMissingCompletion;
          else if (v.completions.size() > 1) v.failure = DiagCode::ThinnessNonUnique;
          else if (alpha * beta != -(v.completions[0].alpha * v.completions[0].beta))
            v.failure = DiagCode::SignRuleViolated;
        } else if (beta == Sign::loop && alpha == Sign::minus) {
          v.kind = ChainKind::loop;
          for (const auto& c : lozenge_completions(mop, z, y, x))
            if (!(c.alpha == Sign::minus && c.beta == Sign::loop)) v.completions.push_back(c);
          if (v.completions.empty()) v.failure = DiagCode::LoopChainNoCompletion;
        } else {
          continue;
        }
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

Checked<Dfc> dfc_validate(const ManyToOnePoset& mop, DfcOptions opts) {
  Checked<Dfc> result;
  auto& diags = result.diagnostics;
  bool degenerate = false;
  check_greatest(mop, opts, diags, degenerate);
  check_loops(mop, diags);
  for (const auto& v : thinness_report(mop)) {
    if (!v.failure) continue;
    std::string msg = v.kind == ChainKind::loop ? "loop chain has no admissible completion"
                      : *v.failure == DiagCode::SignRuleViolated ? "completion breaks the sign rule"
                      : *v.failure == DiagCode::ThinnessNonUnique ? "chain has several completions"
                                                                 : "chain has no completion";
    diags.push_back(ddiag(*v.failure, {mop.id(v.z), mop.id(v.y), mop.id(v.x)}, "dfc.thinness", msg));
  }
  check_acyclic(mop, diags);
  if (!diags.empty()) {
    normalize(diags);
    return result;
  }

  Dfc d;
  d.mop_ = mop;
  d.degenerate_ = degenerate;
  d.dim_ = mop.max_dim();
  d.omega_ = mop.cells_of_dim(d.dim_).front();
  d.iterated_.assign(d.dim_ + 1, -1);
  int cur = d.omega_;
  for (int j = d.dim_; j >= 0; --j) {
    d.iterated_[j] = cur;
    cur = mop.gamma(cur);
  }
  d.lambda_coface_.assign(mop.size(), -1);
  for (int y = 0; y < mop.size(); ++y)
    for (int x : mop.cofaces(y))
      if (mop.in_lambda(x) && mop.sign(y, x) == Sign::minus && d.lambda_coface_[y] < 0)
        d.lambda_coface_[y] = x;
  result.value = std::move(d);
  return result;
}

Checked<Dfc> dfc_validate(const RawDfc& raw, DfcOptions opts) {
  auto mop = mop_validate(raw);
  if (!mop.ok()) return Checked<Dfc>{std::nullopt, mop.diagnostics};
  return dfc_validate(*mop, opts);
}

CellId iterated_target(const Dfc& c, int j) { return c.mop().id(c.iterated(j)); }

Strata strata(const Dfc& c) {
  const auto& mop = c.mop();
  Strata s;
  s.lambda.resize(c.dim() + 1);
  s.loops.resize(c.dim() + 1);
  s.nulls.resize(c.dim() + 1);
  for (int k = 0; k <= c.dim(); ++k) {
    for (int x : mop.cells_of_dim(k)) {
      if (mop.in_lambda(x)) s.lambda[k].push_back(mop.id(x));
      if (mop.is_loop(x)) s.loops[k].push_back(mop.id(x));
      if (mop.is_null(x)) s.nulls[k].push_back(mop.id(x));
    }
    std::sort(s.lambda[k].begin(), s.lambda[k].end());
    std::sort(s.loops[k].begin(), s.loops[k].end());
    std::sort(s.nulls[k].begin(), s.nulls[k].end());
  }
  return s;
}

PathOrder path_order(const ManyToOnePoset& mop, int k, Sign sign) {
  PathOrder po;
  po.k = k;
  po.sign = sign;
  std::vector<int> cells = mop.cells_of_dim(k);
  std::sort(cells.begin(), cells.end(), [&](int a, int b) { return mop.id(a) < mop.id(b); });
  const int m = static_cast<int>(cells.size());
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) {
    pos[cells[i]] = i;
    po.cells.push_back(mop.id(cells[i]));
  }

  std::vector<std::vector<int>> succ(m);
  for (int i = 0; i < m; ++i) {
    int x = cells[i];
    if (sign == Sign::minus) {
      int g = mop.gamma(x);
      if (g < 0) continue;
      for (int w : mop.cofaces(g))
        if (mop.dim(w) == k && mop.sign(g, w) == Sign::minus) succ[i].push_back(pos[w]);
    } else {
      for (int w : mop.cofaces(x)) {
        if (mop.sign(x, w) != Sign::minus) continue;
        int t = mop.gamma(w);
        if (t >= 0 && !mop.has_delta(w, t)) succ[i].push_back(pos[t]);
      }
    }
  }

  for (int i = 0; i < m; ++i) {
    std::vector<int> parent(m, -2), stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : succ[u]) {
        if (parent[v] != -2) continue;
        parent[v] = u;
        po.relation.insert({po.cells[i], po.cells[v]});
        stack.push_back(v);
      }
    }
    if (parent[i] != -2 && po.strict) {
      po.strict = false;
      std::vector<CellId> cyc;
      int u = i;
      do {
        cyc.push_back(po.cells[u]);
        u = parent[u];
      } while (u != i);
      std::reverse(cyc.begin(), cyc.end());
      po.cycle = cyc;
    }
  }
  return po;
}

PathOrder path_order(const Dfc& c, int k, Sign sign) { return path_order(c.mop(), k, sign); }

RootedTree delta_tree(const Dfc& c, const CellId& a_id) {
  const auto& mop = c.mop();
  int a = mop.index_of(a_id);
  if (a < 0 || mop.dim(a) < 1) throw InternalError("delta_tree needs a cell of dimension >= 1");
  RootedTree t;
  int root = mop.gamma(mop.gamma(a));
  t.root = mop.id(root);
  t.edges.push_back(t.root);
  std::vector<int> nodes;
  for (int y : mop.delta(a))
    if (!mop.is_loop(y)) nodes.push_back(y);
  for (int y : nodes) {
    t.nodes.push_back(mop.id(y));
    for (int b : mop.faces(y)) {
      const CellId& bid = mop.id(b);
      if (std::find(t.edges.begin(), t.edges.end(), bid) == t.edges.end()) t.edges.push_back(bid);
    }
    t.node_target[mop.id(y)] = mop.id(mop.gamma(y));
  }
  for (int y : nodes)
    for (int b : mop.delta(y))
      if (mop.sign(b, y) == Sign::minus) t.edge_target[mop.id(b)] = mop.id(y);
  return t;
}

}  // namespace opetope
