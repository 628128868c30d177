#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opetope/diagnostic.hpp"
#include "opetope/sign.hpp"

namespace opetope {

// Document-level form of a poset, exactly as read from or written to JSON.
// extra_json holds unknown fields (a compact JSON object, or empty).
struct RawCell {
  CellId id;
  int dim = 0;
  std::vector<CellId> delta;
  std::vector<CellId> gamma;
  std::string extra_json;
};

struct RawLocalOrder {
  CellId x;
  CellId z;
  std::vector<CellId> order;
  std::string extra_json;
};

struct RawDfc {
  std::vector<RawCell> cells;
  std::vector<RawLocalOrder> local_orders;
  std::string extra_json;
};

class ManyToOnePoset {
 public:
  int size() const { return static_cast<int>(ids_.size()); }
  int index_of(const CellId& id) const;
  const CellId& id(int i) const { return ids_[i]; }
  int dim(int i) const { return dim_[i]; }
  int max_dim() const { return max_dim_; }
  int bottom() const { return bottom_; }

  const std::vector<int>& delta(int i) const { return delta_[i]; }
  // -1 for the bottom cell.
  int gamma(int i) const { return gamma_[i]; }
  // delta(i) together with gamma(i), without repetition.
  const std::vector<int>& faces(int i) const { return faces_[i]; }
  const std::vector<int>& cofaces(int i) const { return cofaces_[i]; }
  const std::vector<int>& cells_of_dim(int k) const;

  bool is_loop(int i) const;
  bool is_null(int i) const { return dim_[i] >= 0 && delta_[i].empty(); }
  bool in_lambda(int i) const { return lambda_[i]; }
  bool has_delta(int x, int y) const;

  std::optional<Sign> sign(int y, int x) const;

  // {y | z <o y <- x}, ordered by cell index.
  std::vector<int> loop_sources(int x, int z) const;
  const std::vector<int>* local_order(int x, int z) const;
  const std::map<std::pair<int, int>, std::vector<int>>& local_orders() const { return orders_; }

  const RawDfc& raw() const { return raw_; }

 private:
  friend Checked<ManyToOnePoset> mop_validate(const RawDfc& raw);

  RawDfc raw_;
  std::vector<CellId> ids_;
  std::map<CellId, int> index_;
  std::vector<int> dim_;
  std::vector<std::vector<int>> delta_;
  std::vector<int> gamma_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> cofaces_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<bool> lambda_;
  std::map<std::pair<int, int>, std::vector<int>> orders_;
  int bottom_ = -1;
  int max_dim_ = -1;
};

Checked<ManyToOnePoset> mop_validate(const RawDfc& raw);

std::optional<Sign> relation_sign(const ManyToOnePoset& mop, const CellId& y, const CellId& x);

}  // namespace opetope
