#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "opetope/diagnostic.hpp"
#include "opetope/tree.hpp"

namespace opetope {

// A constellation T -> U: a subdivision of T together with the bijections
// blackdots(T') -> leaves(U) and whitedots(T') -> nulldots(U).  Absent sigma
// maps stand for the identity.
struct RawConstellation {
  Subdivision subdivision;
  std::optional<std::map<CellId, CellId>> sigma_black;
  std::optional<std::map<CellId, CellId>> sigma_white;
  std::string extra_json;
};

struct RawOpetope {
  int dim = 0;
  std::vector<RootedTree> trees;                 // T_0 ... T_n
  std::vector<RawConstellation> constellations;  // entry i maps T_i to T_{i+1}
  std::string extra_json;
};

bool is_exact(const RawConstellation& c);

std::vector<Diagnostic> constellation_validate(const RootedTree& domain, const RawConstellation& c,
                                               const RootedTree& codomain);

class Opetope {
 public:
  int dim() const { return raw_.dim; }
  const RootedTree& tree(int i) const { return raw_.trees[i]; }
  const Subdivision& subdivision(int i) const { return raw_.constellations[i].subdivision; }
  SubdividedTree subdivided(int i) const;
  const RawOpetope& raw() const { return raw_; }
  // T_2 exists and has no node.
  bool degenerate() const;

 private:
  friend Checked<Opetope> opetope_validate(const RawOpetope& raw);
  RawOpetope raw_;
};

Checked<Opetope> opetope_validate(const RawOpetope& raw);

}  // namespace opetope
