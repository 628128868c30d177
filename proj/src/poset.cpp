#include "opetope/poset.hpp"

#include <algorithm>
#include <set>

namespace opetope {

namespace {

const std::vector<int> kEmpty;

Diagnostic diag(DiagCode code, std::vector<CellId> cells, std::string axiom, std::string message) {
  return Diagnostic{code, std::move(cells), std::move(axiom), std::move(message)};
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

int ManyToOnePoset::index_of(const CellId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& ManyToOnePoset::cells_of_dim(int k) const {
  if (k + 1 < 0 || k + 1 >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[k + 1];
}

bool ManyToOnePoset::is_loop(int i) const {
  return dim_[i] >= 0 && delta_[i].size() == 1 && delta_[i][0] == gamma_[i];
}

bool ManyToOnePoset::has_delta(int x, int y) const { return contains(delta_[x], y); }

std::optional<Sign> ManyToOnePoset::sign(int y, int x) const {
  bool in_d = contains(delta_[x], y);
  bool in_g = gamma_[x] == y;
  if (in_d && in_g) return Sign::loop;
  if (in_d) return Sign::minus;
  if (in_g) return Sign::plus;
  return std::nullopt;
}

std::vector<int> ManyToOnePoset::loop_sources(int x, int z) const {
  std::vector<int> out;
  for (int y : delta_[x]) {
    if (gamma_[x] == y) continue;
    if (is_loop(y) && gamma_[y] == z) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<int>* ManyToOnePoset::local_order(int x, int z) const {
  auto it = orders_.find({x, z});
  return it == orders_.end() ? nullptr : &it->second;
}

Checked<ManyToOnePoset> mop_validate(const RawDfc& raw) {
  Checked<ManyToOnePoset> result;
  auto& diags = result.diagnostics;
  ManyToOnePoset p;
  p.raw_ = raw;

  const int n = static_cast<int>(raw.cells.size());
  std::vector<bool> primary(n, false);
  for (int i = 0; i < n; ++i) {
    const auto& c = raw.cells[i];
    if (c.id.empty()) {
      diags.push_back(diag(DiagCode::DanglingId, {"<empty>"}, "mop.ids", "cell with an empty id"));
      continue;
    }
    if (p.index_.count(c.id)) {
      diags.push_back(diag(DiagCode::DuplicateId, {c.id}, "mop.ids", "cell id declared twice"));
      continue;
    }
    p.index_[c.id] = static_cast<int>(p.ids_.size());
    p.ids_.push_back(c.id);
    primary[i] = true;
  }
  const int m = static_cast<int>(p.ids_.size());
  p.dim_.assign(m, 0);
  p.delta_.assign(m, {});
  p.gamma_.assign(m, -1);
  p.faces_.assign(m, {});
  p.cofaces_.assign(m, {});
  p.lambda_.assign(m, true);

  std::vector<const RawCell*> src(m, nullptr);
  for (int i = 0; i < n; ++i)
    if (primary[i]) src[p.index_[raw.cells[i].id]] = &raw.cells[i];

  std::vector<int> bottoms;
  for (int i = 0; i < m; ++i) {
    p.dim_[i] = src[i]->dim;
    if (p.dim_[i] < -1) {
      diags.push_back(diag(DiagCode::FacetDimensionMismatch, {p.ids_[i]}, "mop.grading",
                           "dimension below -1"));
      p.dim_[i] = -1;
    }
    if (p.dim_[i] == -1) bottoms.push_back(i);
    p.max_dim_ = std::max(p.max_dim_, p.dim_[i]);
  }
  if (bottoms.empty()) {
    diags.push_back(diag(DiagCode::NoBottom, {m ? p.ids_[0] : CellId("*")}, "mop.bottom",
                         "no cell of dimension -1"));
  } else if (bottoms.size() > 1) {
    std::vector<CellId> ids;
    for (int b : bottoms) ids.push_back(p.ids_[b]);
    diags.push_back(diag(DiagCode::MultipleBottoms, ids, "mop.bottom", "several cells of dimension -1"));
  }
  p.bottom_ = bottoms.empty() ? -1 : bottoms.front();

  bool resolved = true;
  auto resolve = [&](int x, const std::vector<CellId>& refs, const char* field) {
    std::vector<int> out;
    for (const auto& r : refs) {
      int j = p.index_of(r);
      if (j < 0) {
        diags.push_back(diag(DiagCode::DanglingId, {p.ids_[x], r}, "mop.ids",
                             std::string(field) + " names an unknown cell"));
        resolved = false;
        continue;
      }
      if (contains(out, j)) {
        diags.push_back(diag(DiagCode::DuplicateId, {p.ids_[x], r}, "mop.ids",
                             std::string(field) + " lists a cell twice"));
        continue;
      }
      if (p.dim_[j] != p.dim_[x] - 1) {
        diags.push_back(diag(DiagCode::FacetDimensionMismatch, {p.ids_[x], r}, "mop.grading",
                             std::string(field) + " member is not of dimension dim(x)-1"));
      }
      out.push_back(j);
    }
    return out;
  };

  for (int i = 0; i < m; ++i) {
    p.delta_[i] = resolve(i, src[i]->delta, "delta");
    std::vector<int> g = resolve(i, src[i]->gamma, "gamma");
    const auto& id = p.ids_[i];
    if (p.dim_[i] == -1) {
      if (!p.delta_[i].empty() || !g.empty() || !src[i]->gamma.empty())
        diags.push_back(diag(DiagCode::BottomShape, {id}, "mop.bottom", "bottom cell has facets"));
      continue;
    }
    if (src[i]->gamma.size() != 1) {
      diags.push_back(diag(DiagCode::GammaNotSingleton, {id}, "mop.gamma-singleton",
                           "target set has " + std::to_string(src[i]->gamma.size()) + " elements"));
    }
    if (!g.empty()) p.gamma_[i] = g.front();
    bool meets = false;
    for (int y : g) meets = meets || contains(p.delta_[i], y);
    if (meets && !(p.delta_[i].size() == 1 && g.size() == 1 && p.delta_[i][0] == g[0])) {
      diags.push_back(diag(DiagCode::LoopAxiomViolated, {id}, "mop.loop",
                           "sources meet targets but differ from them"));
    }
    if (p.dim_[i] == 0) {
      bool ok = p.delta_[i].empty() && src[i]->delta.empty() && g.size() == 1 && g[0] == p.bottom_;
      if (!ok)
        diags.push_back(diag(DiagCode::ZeroCellShape, {id}, "mop.zero-cell",
                             "0-cells need empty sources and the bottom cell as target"));
    }
  }

  p.by_dim_.assign(std::max(p.max_dim_ + 2, 1), {});
  for (int i = 0; i < m; ++i) {
    p.by_dim_[p.dim_[i] + 1].push_back(i);
    for (int y : p.delta_[i]) p.faces_[i].push_back(y);
    if (p.gamma_[i] >= 0 && !contains(p.faces_[i], p.gamma_[i])) p.faces_[i].push_back(p.gamma_[i]);
    for (int y : p.faces_[i]) p.cofaces_[y].push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    int g = p.gamma_[i];
    if (g >= 0 && !contains(p.delta_[i], g)) p.lambda_[g] = false;
  }

  if (resolved) {
    std::set<std::pair<int, int>> seen;
    for (const auto& lo : raw.local_orders) {
      int x = p.index_of(lo.x), z = p.index_of(lo.z);
      if (x < 0 || z < 0) {
        diags.push_back(diag(DiagCode::DanglingId, {lo.x, lo.z}, "mop.local-order",
                             "local order names an unknown cell"));
        continue;
      }
      if (!seen.insert({x, z}).second) {
        diags.push_back(diag(DiagCode::DuplicateId, {lo.x, lo.z}, "mop.local-order",
                             "local order given twice"));
        continue;
      }
      std::vector<int> expected = p.loop_sources(x, z);
      if (!p.lambda_[x] || expected.size() < 2) {
        diags.push_back(diag(DiagCode::LocalOrderUnexpected, {lo.x, lo.z}, "mop.local-order",
                             "local orders are kept only for cells of Lambda with two or more loop sources"));
        continue;
      }
      std::vector<int> order;
      bool bad = false;
      for (const auto& y : lo.order) {
        int j = p.index_of(y);
        if (j < 0 || contains(order, j)) {
          bad = true;
          continue;
        }
        order.push_back(j);
      }
      std::vector<int> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (bad || sorted != expected) {
        diags.push_back(diag(DiagCode::LocalOrderNotTotal, {lo.x, lo.z}, "mop.local-order",
                             "order does not enumerate the loop sources exactly once"));
        continue;
      }
      p.orders_[{x, z}] = order;
    }
    for (int x = 0; x < m; ++x) {
      if (!p.lambda_[x] || p.dim_[x] < 2) continue;
      std::set<int> seconds;
      for (int y : p.faces_[x])
        for (int z : p.faces_[y]) seconds.insert(z);
      for (int z : seconds) {
        if (p.loop_sources(x, z).size() >= 2 && !seen.count({x, z})) {
          diags.push_back(diag(DiagCode::LocalOrderMissing, {p.ids_[x], p.ids_[z]}, "mop.local-order",
                               "two or more loop sources without a local order"));
        }
      }
    }
  }

  if (!diags.empty()) {
    normalize(diags);
    return result;
  }
  result.value = std::move(p);
  return result;
}

std::optional<Sign> relation_sign(const ManyToOnePoset& mop, const CellId& y, const CellId& x) {
  int yi = mop.index_of(y), xi = mop.index_of(x);
  if (yi < 0 || xi < 0) return std::nullopt;
  return mop.sign(yi, xi);
}

}  // namespace opetope
