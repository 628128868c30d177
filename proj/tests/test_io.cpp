#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "opetope/dot.hpp"
#include "opetope/generator.hpp"
#include "opetope/io.hpp"
#include "support.hpp"

using namespace opetope;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) ++n;
  return n;
}

std::vector<std::string> all_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(OPETOPE_FIXTURES))
    if (e.is_regular_file() && e.path().extension() == ".json")
      out.push_back(std::filesystem::relative(e.path(), OPETOPE_FIXTURES).string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fixtures are stored in canonical form") {
  auto names = all_fixtures();
  CHECK(names.size() == 19);
  for (const auto& name : names) {
    CAPTURE(name);
    std::string text = read_file(fixture::path(name));
    if (sniff(text) == DocKind::dfc) {
      auto p = parse_dfc(text);
      CHECK(p.warnings.empty());
      CHECK(serialize_dfc(p.value) == text);
    } else {
      REQUIRE(sniff(text) == DocKind::opetope);
      auto p = parse_opetope(text);
      CHECK(p.warnings.empty());
      CHECK(serialize_opetope(p.value) == text);
    }
  }
}

TEST_CASE("generated documents survive a round trip") {
  GenParams p;
  p.dim = 4;
  p.max_whitedots = 2;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::string text = serialize_opetope(gen_opetope(seed, p).raw());
    CHECK(serialize_opetope(parse_opetope(text).value) == text);
  }
}

TEST_CASE("malformed text names the position") {
  try {
    parse_dfc("{\n  \"cells\": [\n    {\"id\": \"a\",, }\n  ]\n}\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema errors name the JSON pointer") {
  try {
    parse_dfc(R"({"cells": [{"id": "a", "dim": 0}, {"dim": 1}]})");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/cells/1") != std::string::npos);
    CHECK(std::string(e.what()).find("\"id\"") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_opetope(R"({"dim": "three", "trees": []})"), ParseError);
  CHECK_THROWS_AS(parse_dfc("[1, 2]"), ParseError);
}

TEST_CASE("unknown fields are reported and kept") {
  const std::string text =
      R"({"cells": [{"id": "*", "dim": -1, "colour": "red"}], "note": {"by": "hand"}})";
  auto p = parse_dfc(text);
  CHECK(p.warnings.size() == 2);
  std::string out = serialize_dfc(p.value);
  CHECK(out.find("\"colour\": \"red\"") != std::string::npos);
  CHECK(out.find("\"by\": \"hand\"") != std::string::npos);
  CHECK(parse_dfc(out).warnings.size() == 2);
}

TEST_CASE("document kinds") {
  CHECK(sniff(R"({"cells": []})") == DocKind::dfc);
  CHECK(sniff(R"({"dim": 0, "trees": []})") == DocKind::opetope);
  CHECK(sniff(R"({"other": 1})") == DocKind::unknown);
  CHECK_THROWS_AS(read_file(fixture::path("no_such_file.json")), ParseError);
}

TEST_CASE("DOT export") {
  std::string hasse = export_dot(fixture::raw_dfc("rho3.dfc.json"));
  CHECK(hasse.rfind("digraph", 0) == 0);
  CHECK(count(hasse, "label=\"o\"") > 0);
  CHECK(count(hasse, "(") == 22);
  CHECK(count(hasse, "->") == 42);

  std::string unit = export_dot(SubdividedTree{unit_tree("u"), {}});
  CHECK(count(unit, "->") == 1);

  Opetope omega = fixture::ope("omega4.ope.json");
  std::string t3 = export_dot(omega.subdivided(3), "t3");
  CHECK(count(t3, "style=filled") == 4);
  CHECK(count(t3, "shape=circle];") == 1);
  // Six edges, one of them cut in two by the whitedot.
  CHECK(count(t3, "->") == 7);

  std::string whole = export_dot(omega);
  CHECK(count(whole, "subgraph \"cluster_T") == 5);
}
