#pragma once

#include <vector>

#include "opetope/dfc.hpp"
#include "opetope/morphism.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

// S_0 ... S_{n+2} with subdivisions V_0 ... V_{n+1}; S_{n+1} is the corolla
// on `top` and S_{n+2} the unit tree on `top`.
struct ExtendedZoom {
  int n = 0;
  std::vector<RootedTree> S;
  std::vector<Subdivision> V;
  CellId top;
  CellId top_root;
  CellId bottom;

  SubdividedTree subdivided(int i) const { return SubdividedTree{S[i], V[i]}; }
};

ExtendedZoom extend(const Opetope& y);

struct NestingSubtree {
  CellId owner;
  std::vector<CellId> dots;
  bool all_white = false;
  CellId root_edge;
  std::vector<CellId> leaf_edges;
};

// x is an edge of S_{k+2}; the subtree lives in the subdivision of S_{k+1}.
NestingSubtree nesting_subtree(const ExtendedZoom& ez, int k, const CellId& x);

RawDfc p_of_raw(const ExtendedZoom& ez);
Checked<Dfc> p_of(const Opetope& y);

// Source tree of a non-loop cell x of dimension >= 2, read from nestings.
RootedTree sigma_tree(const ExtendedZoom& ez, const CellId& x);

MapResult<DfcIso> p_map(const Opetope& y, const Opetope& y2, const OpetopeIso& f);

}  // namespace opetope
