#pragma once

#include <vector>

#include "opetope/dfc.hpp"
#include "opetope/morphism.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

// Nodes Lambda_{k-1}, edges C_{k-2}, root the (k-2)-dimensional iterated
// target.  Defined for 2 <= k <= n+2.
RootedTree level_tree(const Dfc& c, int k);

struct ZigzagChain {
  CellId b;
  CellId a;
  Sign beta;   // c <^beta b
  Sign alpha;  // b <^alpha a
};

// All chains c <^beta b <^alpha a with a in Lambda and oriented signs, read
// along the path they form.  The walk starts at the end whose chain has
// positive sign product.
std::vector<ZigzagChain> zigzag(const Dfc& c, const CellId& base);

struct LoopPath {
  enum class End { zigzag, root };
  CellId base;
  std::vector<CellId> loops;  // b_0 = start, b_i = gamma(a_i)
  std::vector<CellId> cofaces;  // a_1 ... a_p
  End end = End::root;
};

LoopPath loop_path(const Dfc& c, const CellId& base, const CellId& b);

enum class LoopCmp { below, above };
LoopCmp compare_loops(const Dfc& c, const CellId& base, const CellId& b, const CellId& b2);

// W_k(y): nulldots w of Lambda_k with gamma^2(w) = y, ascending.
std::vector<CellId> whitedot_order(const Dfc& c, int k, const CellId& y);

struct AugmentationNames {
  CellId t0_node, t0_leaf, t0_root;
};
AugmentationNames augmentation_names(const ManyToOnePoset& mop);

Checked<Opetope> z_of(const Dfc& c);

// Z(f) for an isomorphism f : c -> d.
MapResult<OpetopeIso> z_map(const Dfc& c, const Dfc& d, const DfcIso& f);

}  // namespace opetope
