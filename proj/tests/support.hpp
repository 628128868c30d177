#pragma once

#include <stdexcept>
#include <string>

#include "opetope/dfc.hpp"
#include "opetope/io.hpp"
#include "opetope/zoom.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(OPETOPE_FIXTURES) + "/" + name; }

inline opetope::RawDfc raw_dfc(const std::string& name) {
  return opetope::parse_dfc(opetope::read_file(path(name))).value;
}

inline opetope::RawOpetope raw_ope(const std::string& name) {
  return opetope::parse_opetope(opetope::read_file(path(name))).value;
}

inline opetope::Dfc dfc(const std::string& name) {
  auto c = opetope::dfc_validate(raw_dfc(name));
  if (!c.ok()) throw std::runtime_error(name + " does not validate");
  return *c;
}

inline opetope::Opetope ope(const std::string& name) {
  auto y = opetope::opetope_validate(raw_ope(name));
  if (!y.ok()) throw std::runtime_error(name + " does not validate");
  return *y;
}

inline int index(const opetope::Dfc& c, const std::string& id) { return c.mop().index_of(id); }

}  // namespace fixture
