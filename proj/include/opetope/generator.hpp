#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "opetope/zoom.hpp"

namespace opetope {

using Rng = std::mt19937_64;

struct GenParams {
  int dim = 3;
  int max_linear_nodes = 3;
  int max_whitedots = 1;
  // Upper bound on the dots of every subdivided tree and on the nodes of
  // every generated tree.
  int max_dots = 40;
  // Probability of adding one more child circle inside a circle.
  double child_prob = 0.5;
  int max_depth = 4;
};

struct BaseZoom {
  std::vector<RootedTree> trees;                 // T_0, T_1, T_2
  std::vector<RawConstellation> constellations;  // out of T_0 and T_1
};

BaseZoom gen_base(Rng& rng, int max_linear_nodes);

// Whitedots are named <prefix>w<counter>.  A tree without nodes always gets
// at least one whitedot, since it has no dot otherwise.
SubdividedTree gen_subdivision(Rng& rng, const RootedTree& t, int max_whitedots, const std::string& prefix,
                               int max_total = 1 << 20);

// Nodes and inner edges of U are named <prefix>n<counter> and <prefix>e<counter>.
std::pair<RootedTree, RawConstellation> gen_nesting(Rng& rng, const SubdividedTree& t, const std::string& prefix,
                                                    const GenParams& params = {});

RawOpetope gen_opetope_raw(Rng& rng, const GenParams& params);
Opetope gen_opetope(Rng& rng, const GenParams& params);
Opetope gen_opetope(std::uint64_t seed, const GenParams& params);

}  // namespace opetope
