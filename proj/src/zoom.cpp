#include "opetope/zoom.hpp"

#include <algorithm>

namespace opetope {

namespace {

Diagnostic zdiag(DiagCode code, std::vector<CellId> cells, std::string axiom, std::string message) {
  return Diagnostic{code, std::move(cells), std::move(axiom), std::move(message)};
}

std::string level(int i) { return "T" + std::to_string(i); }

bool identity_on(const std::optional<std::map<CellId, CellId>>& m) {
  if (!m) return true;
  for (const auto& [k, v] : *m)
    if (k != v) return false;
  return true;
}

// Checks that m (or the identity when absent) is a bijection from `from`
// onto `to`; fills `inverse`.
bool check_bijection(const std::optional<std::map<CellId, CellId>>& m, const std::vector<CellId>& from,
                     const std::vector<CellId>& to, std::map<CellId, CellId>& inverse,
                     std::vector<CellId>& offenders) {
  std::set<CellId> target(to.begin(), to.end());
  std::set<CellId> domain(from.begin(), from.end());
  if (m)
    for (const auto& [k, v] : *m)
      if (!domain.count(k)) offenders.push_back(k);
  for (const auto& x : from) {
    CellId y = x;
    if (m) {
      auto it = m->find(x);
      if (it == m->end()) {
        offenders.push_back(x);
        continue;
      }
      y = it->second;
    }
    if (!target.count(y) || inverse.count(y)) {
      offenders.push_back(x);
      continue;
    }
    inverse[y] = x;
  }
  for (const auto& y : to)
    if (!inverse.count(y)) offenders.push_back(y);
  return offenders.empty();
}

}  // namespace

bool is_exact(const RawConstellation& c) { return identity_on(c.sigma_black) && identity_on(c.sigma_white); }

std::vector<Diagnostic> constellation_validate(const RootedTree& domain, const RawConstellation& c,
                                               const RootedTree& codomain) {
  std::vector<Diagnostic> out;
  SubdividedTree sub{domain, c.subdivision};
  out = subdivision_validate(sub);
  if (!out.empty()) return out;

  TreeIndex u(codomain);
  std::map<CellId, CellId> inverse;
  std::vector<CellId> bad_black, bad_white;
  bool black_ok = check_bijection(c.sigma_black, domain.nodes, u.leaves(), inverse, bad_black);
  bool white_ok = check_bijection(c.sigma_white, whitedots(sub), u.nulldots(), inverse, bad_white);
  if (!black_ok)
    out.push_back(zdiag(DiagCode::SigmaNotBijective, bad_black, "constellation.sigma",
                        "blackdots do not correspond one to one with leaves"));
  if (!white_ok)
    out.push_back(zdiag(DiagCode::SigmaNotBijective, bad_white, "constellation.sigma",
                        "whitedots do not correspond one to one with nulldots"));
  if (!out.empty()) {
    normalize(out);
    return out;
  }

  Expansion ex = expand(sub);
  auto check = [&](const CellId& x) {
    std::set<int> pre;
    for (const auto& d : descendant_dots(codomain, x)) pre.insert(ex.dot(inverse.at(d)));
    auto comps = components(ex, pre);
    if (comps.size() > 1) {
      std::vector<CellId> cells{x};
      for (const auto& comp : comps) cells.push_back(ex.dot_id[comp.front()]);
      out.push_back(zdiag(DiagCode::KernelRuleViolated, cells, "constellation.kernel",
                          "preimage of the region above this element is split into " +
                              std::to_string(comps.size()) + " pieces"));
    }
  };
  for (const auto& x : codomain.nodes) check(x);
  for (const auto& e : codomain.edges) check(e);
  normalize(out);
  return out;
}

SubdividedTree Opetope::subdivided(int i) const {
  return SubdividedTree{raw_.trees[i], raw_.constellations[i].subdivision};
}

bool Opetope::degenerate() const { return raw_.dim >= 2 && raw_.trees[2].nodes.empty(); }

Checked<Opetope> opetope_validate(const RawOpetope& raw) {
  Checked<Opetope> result;
  auto& out = result.diagnostics;
  const int n = raw.dim;
  if (n < 0 || static_cast<int>(raw.trees.size()) != n + 1 ||
      static_cast<int>(raw.constellations.size()) != n) {
    out.push_back(zdiag(DiagCode::ArityMismatch, {"dim=" + std::to_string(n)}, "zoom.arity",
                        "need dim+1 trees and dim constellations"));
    return result;
  }

  std::vector<bool> tree_ok(n + 1, true);
  for (int i = 0; i <= n; ++i) {
    for (auto d : tree_validate(raw.trees[i])) {
      d.message = level(i) + ": " + d.message;
      out.push_back(std::move(d));
      tree_ok[i] = false;
    }
  }

  auto base_shape = [&](int i) {
    if (!tree_ok[i]) return;
    const auto& t = raw.trees[i];
    if (t.nodes.size() != 1 || leaves(t).size() != 1 || t.edges.size() != 2)
      out.push_back(zdiag(DiagCode::BadBaseTree, {level(i)}, "opetope.base",
                          level(i) + " must have one node, one leaf and one root"));
  };
  base_shape(0);
  if (n >= 1) base_shape(1);
  if (n >= 2 && tree_ok[2] && !is_linear(raw.trees[2]))
    out.push_back(zdiag(DiagCode::NonLinearT2, {level(2)}, "opetope.base", "T2 is not linear"));

  for (int i = 0; i < n; ++i) {
    const auto& c = raw.constellations[i];
    if (!is_exact(c))
      out.push_back(zdiag(DiagCode::NonExactConstellation, {level(i)}, "opetope.exact",
                          "constellation out of " + level(i) + " is not the identity on dots"));
    if (!tree_ok[i] || !tree_ok[i + 1]) continue;
    for (auto d : constellation_validate(raw.trees[i], c, raw.trees[i + 1])) {
      d.message = level(i) + "->" + level(i + 1) + ": " + d.message;
      out.push_back(std::move(d));
    }
  }

  // Cells of the poset form are the edges of T_2 ... T_n plus the root of T_1;
  // they must not share ids across levels.
  std::map<CellId, int> owner;
  auto claim = [&](const CellId& id, int lvl) {
    auto [it, fresh] = owner.emplace(id, lvl);
    if (!fresh && it->second != lvl)
      out.push_back(zdiag(DiagCode::IdCollision, {id}, "opetope.ids",
                          "id used in " + level(it->second) + " and " + level(lvl)));
  };
  if (n >= 1) claim(raw.trees[1].root, 1);
  for (int k = 2; k <= n; ++k)
    for (const auto& e : raw.trees[k].edges) claim(e, k);

  if (!out.empty()) {
    normalize(out);
    return result;
  }
  Opetope o;
  o.raw_ = raw;
  result.value = std::move(o);
  return result;
}

}  // namespace opetope
