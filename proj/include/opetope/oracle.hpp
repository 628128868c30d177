#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opetope/dfc.hpp"
#include "opetope/sign.hpp"
#include "opetope/zoom.hpp"

// Brute-force checkers.  They read the raw documents and rebuild everything
// they need, so they can be compared against the indexed implementations.
namespace opetope {

struct OracleCompletion {
  CellId y;
  Sign alpha;  // sign of y' in x
  Sign beta;   // sign of z in y'
  bool operator==(const OracleCompletion&) const = default;
};

std::vector<OracleCompletion> oracle_lozenge(const RawDfc& raw, const CellId& z, const CellId& y, const CellId& x);

struct OracleChain {
  CellId z, y, x;
  bool loop_chain = false;
  bool ok = true;
  std::vector<CellId> completions;
};

// One entry per chain z <b y <a x with a, b oriented and per chain z <o y <- x.
std::vector<OracleChain> oracle_thinness(const RawDfc& raw);

struct OracleOrder {
  std::vector<CellId> cells;
  std::set<std::pair<CellId, CellId>> closure;
  bool strict = true;
  std::optional<CellId> on_cycle;
};

OracleOrder oracle_strictness(const RawDfc& raw, int k, Sign sign);

struct KernelVerdict {
  bool ok = true;
  CellId witness;  // element of the codomain whose dot set splits
  std::vector<CellId> dots;
};

KernelVerdict oracle_kernel(const RootedTree& domain, const RawConstellation& c, const RootedTree& codomain);

struct HexagonVerdict {
  bool ok = true;
  long configurations = 0;
  std::string counterexample;
};

HexagonVerdict oracle_hexagon(const RawDfc& raw);

// Every isomorphism by exhaustive permutation per dimension.  Empty optional
// when some dimension holds more than max_per_dim cells.
std::optional<std::vector<std::map<CellId, CellId>>> oracle_iso(const RawDfc& a, const RawDfc& b,
                                                                 int max_per_dim = 8);

struct LemmaResult {
  explicit LemmaResult(std::string n) : name(std::move(n)) {}
  std::string name;
  long checked = 0;
  std::vector<std::string> counterexamples;
};

std::vector<LemmaResult> lemma_suite(const Dfc& c);

}  // namespace opetope
