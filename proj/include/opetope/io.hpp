#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "opetope/morphism.hpp"
#include "opetope/poset.hpp"
#include "opetope/zoom.hpp"

namespace opetope {

// Malformed text or a document that does not fit the schema.  The message
// names the line and column, or the JSON pointer of the offending value.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
struct Parsed {
  T value;
  std::vector<std::string> warnings;  // one per unknown field
};

Parsed<RawDfc> parse_dfc(const std::string& text);
Parsed<RawOpetope> parse_opetope(const std::string& text);

// Sorted keys with two-space indentation; the text ends in a newline.
std::string serialize_dfc(const RawDfc& raw);
std::string serialize_opetope(const RawOpetope& raw);

enum class DocKind { dfc, opetope, unknown };
DocKind sniff(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

std::string iso_json(const DfcIso& f);
std::string iso_json(const OpetopeIso& f);

}  // namespace opetope
