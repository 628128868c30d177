#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "opetope/dfc.hpp"
#include "opetope/morphism.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

enum class SearchStatus { found, none, exhausted };

struct SearchOptions {
  // Cap on assignment attempts; 0 means unlimited.
  std::int64_t budget = 2'000'000;
  // Keep searching after the first witness, up to max_witnesses.
  bool all = false;
  std::size_t max_witnesses = 1000;
};

template <class W>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::vector<W> witnesses;
  std::int64_t expansions = 0;
  bool found() const { return !witnesses.empty(); }
};

SearchResult<DfcIso> dfc_iso_search(const Dfc& c, const Dfc& d, const SearchOptions& opts = {});
SearchResult<OpetopeIso> opetope_iso_search(const Opetope& y, const Opetope& z, const SearchOptions& opts = {});

// The canonical comparison maps C -> P(Z(C)) and Y -> Z(P(Y)), each checked
// before it is returned.  The error string starts with "RoundTripBroken".
MapResult<DfcIso> theta(const Dfc& c);
MapResult<OpetopeIso> tau(const Opetope& y);

// Renames every id occurring in the document; ids missing from `rename` stay.
RawDfc relabel(const RawDfc& raw, const std::map<CellId, CellId>& rename);
RawOpetope relabel(const RawOpetope& raw, const std::map<CellId, CellId>& rename);

// The iso between y and relabel(y.raw(), rename).
OpetopeIso relabel_iso(const Opetope& y, const std::map<CellId, CellId>& rename);

}  // namespace opetope
