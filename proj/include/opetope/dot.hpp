#pragma once

#include <string>

#include "opetope/poset.hpp"
#include "opetope/tree.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

// Hasse diagram; each edge y -> x carries the sign symbol of y in x.
std::string export_dot(const RawDfc& raw);
// Root at the bottom; nodes filled, whitedots hollow, tree edges as arrows
// towards the root with invisible ends at leaves and the root.
std::string export_dot(const SubdividedTree& t, const std::string& name = "tree");
std::string export_dot(const Opetope& y);

}  // namespace opetope
