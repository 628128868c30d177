#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opetope/diagnostic.hpp"

namespace opetope {

// node_target sends a node to its output edge; edge_target sends an edge to
// the node that consumes it.  The root is the only edge without a target.
struct RootedTree {
  std::vector<CellId> nodes;
  std::vector<CellId> edges;
  std::map<CellId, CellId> node_target;
  std::map<CellId, CellId> edge_target;
  CellId root;
  std::string extra_json;
};

std::vector<Diagnostic> tree_validate(const RootedTree& t);

RootedTree unit_tree(const CellId& edge);
RootedTree corolla(const CellId& node, const std::vector<CellId>& leaves, const CellId& root);

// Adjacency derived from a tree that passed tree_validate.
class TreeIndex {
 public:
  explicit TreeIndex(const RootedTree& t);

  const RootedTree& tree() const { return *t_; }
  bool is_node(const CellId& x) const { return node_set_.count(x) > 0; }
  bool is_edge(const CellId& x) const { return edge_set_.count(x) > 0; }
  // Empty string when the edge is a leaf.
  const CellId& source(const CellId& edge) const;
  const std::vector<CellId>& inputs(const CellId& node) const;
  std::vector<CellId> leaves() const;
  std::vector<CellId> nulldots() const;

 private:
  const RootedTree* t_;
  std::set<CellId> node_set_, edge_set_;
  std::map<CellId, CellId> source_;
  std::map<CellId, std::vector<CellId>> inputs_;
};

std::vector<CellId> leaves(const RootedTree& t);
std::vector<CellId> nulldots(const RootedTree& t);
bool is_linear(const RootedTree& t);

// Leaves and sourceless nodes y with a descending path from y to x, where x
// is a node or an edge of t.
std::set<CellId> descendant_dots(const RootedTree& t, const CellId& x);

using Subdivision = std::map<CellId, std::vector<CellId>>;

// W(b) lists whitedots from the root side of b upwards.
struct SubdividedTree {
  RootedTree base;
  Subdivision W;
};

std::vector<Diagnostic> subdivision_validate(const SubdividedTree& t);
std::vector<CellId> whitedots(const SubdividedTree& t);

// The tree obtained by cutting each edge b at its whitedots into segments
// b_0 (root side) ... b_p.  Dots are numbered blackdots first.
struct Expansion {
  struct Segment {
    CellId edge;
    int index = 0;
    int lower = -1;  // dot consuming the segment, -1 for the root segment
    int upper = -1;  // dot producing the segment, -1 for a leaf segment
  };

  std::vector<CellId> dot_id;
  std::vector<bool> white;
  std::map<CellId, int> dot_index;
  std::vector<Segment> segments;
  std::vector<int> out_segment;
  std::vector<std::vector<int>> in_segments;

  int dot(const CellId& id) const;
  int dot_count() const { return static_cast<int>(dot_id.size()); }
};

Expansion expand(const SubdividedTree& t);

std::string segment_id(const CellId& edge, int index);
RootedTree subdivided_as_tree(const SubdividedTree& t);

// Connected components of the full subgraph of the expansion on `dots`.
std::vector<std::vector<int>> components(const Expansion& ex, const std::set<int>& dots);

}  // namespace opetope
