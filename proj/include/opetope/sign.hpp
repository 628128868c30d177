#pragma once

#include <string_view>

namespace opetope {

// Orientation of a facet incidence y < x.
enum class Sign { minus, plus, loop };

constexpr Sign operator*(Sign a, Sign b) {
  if (a == Sign::loop || b == Sign::loop) return Sign::loop;
  return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign operator-(Sign a) {
  if (a == Sign::loop) return Sign::loop;
  return a == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr std::string_view sign_symbol(Sign s) {
  switch (s) {
    case Sign::minus: return "-";
    case Sign::plus: return "+";
    case Sign::loop: return "o";
  }
  return "?";
}

}  // namespace opetope
