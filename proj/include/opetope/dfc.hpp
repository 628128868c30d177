#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "opetope/poset.hpp"
#include "opetope/tree.hpp"

namespace opetope {

struct DfcOptions {
  // Accept the point (bottom plus a single 0-cell) as a degenerate DFC.
  bool allow_point = false;
};

class Dfc {
 public:
  const ManyToOnePoset& mop() const { return mop_; }
  int dim() const { return dim_; }
  int omega() const { return omega_; }
  const CellId& omega_id() const { return mop_.id(omega_); }
  // Index of the j-dimensional iterated target of omega.
  int iterated(int j) const { return iterated_[j]; }
  bool degenerate() const { return degenerate_; }

  // The unique cell a of Lambda with y <- a, or -1.
  int lambda_coface(int y) const { return lambda_coface_[y]; }

 private:
  friend Checked<Dfc> dfc_validate(const ManyToOnePoset& mop, DfcOptions opts);

  ManyToOnePoset mop_;
  int dim_ = 0;
  int omega_ = -1;
  std::vector<int> iterated_;
  std::vector<int> lambda_coface_;
  bool degenerate_ = false;
};

Checked<Dfc> dfc_validate(const ManyToOnePoset& mop, DfcOptions opts = {});
// Runs mop_validate first; its diagnostics are returned unchanged on failure.
Checked<Dfc> dfc_validate(const RawDfc& raw, DfcOptions opts = {});

CellId iterated_target(const Dfc& c, int j);

struct Strata {
  // Indexed by dimension 0..n; ids sorted.
  std::vector<std::vector<CellId>> lambda, loops, nulls;
};
Strata strata(const Dfc& c);

// A completion z <^beta y' <^alpha x of a chain through y.
struct Completion {
  int y;
  Sign alpha;
  Sign beta;
  bool operator==(const Completion&) const = default;
};

// Every y' != y with z a facet of y' and y' a facet of x, in index order.
std::vector<Completion> lozenge_completions(const ManyToOnePoset& mop, int z, int y, int x);

enum class ChainKind { oriented, loop };

struct ChainVerdict {
  int z, y, x;
  Sign beta, alpha;
  ChainKind kind;
  std::vector<Completion> completions;  // only the admissible ones
  std::optional<DiagCode> failure;
};

// Verdict for every chain z <^b y <^a x with a, b oriented, and every chain
// z <o y <- x.
std::vector<ChainVerdict> thinness_report(const ManyToOnePoset& mop);

struct PathOrder {
  int k = 0;
  Sign sign = Sign::minus;
  std::vector<CellId> cells;
  std::set<std::pair<CellId, CellId>> relation;  // transitive closure
  bool strict = true;
  std::vector<CellId> cycle;
};

// sign minus: x <| x' iff gamma(x) <- x'.  sign plus: x <| x' iff some w has
// x <- w and x' <+ w.
PathOrder path_order(const Dfc& c, int k, Sign sign);
PathOrder path_order(const ManyToOnePoset& mop, int k, Sign sign);

RootedTree delta_tree(const Dfc& c, const CellId& a);

}  // namespace opetope
