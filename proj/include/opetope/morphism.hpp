#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opetope/poset.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

template <class T>
struct MapResult {
  std::optional<T> value;
  std::string error;  // empty on success
  bool ok() const { return value.has_value(); }
};

struct DfcIso {
  std::map<CellId, CellId> forward;
  std::map<CellId, CellId> backward() const;
  bool operator==(const DfcIso&) const = default;
};

// Per-level maps; whites[i] acts on the whitedots of the subdivision of T_i.
struct OpetopeIso {
  std::vector<std::map<CellId, CellId>> nodes;
  std::vector<std::map<CellId, CellId>> edges;
  std::vector<std::map<CellId, CellId>> whites;
  bool operator==(const OpetopeIso&) const = default;
};

// Empty optional when f is an isomorphism; otherwise the first failed check.
std::optional<std::string> verify_dfc_iso(const ManyToOnePoset& a, const ManyToOnePoset& b,
                                          const std::map<CellId, CellId>& f);
std::optional<std::string> verify_opetope_iso(const Opetope& a, const Opetope& b, const OpetopeIso& f);

DfcIso compose(const DfcIso& g, const DfcIso& f);
OpetopeIso compose(const OpetopeIso& g, const OpetopeIso& f);
OpetopeIso identity_iso(const Opetope& y);

}  // namespace opetope
