#include <algorithm>

#include "doctest.h"
#include "opetope/dfc.hpp"
#include "opetope/oracle.hpp"
#include "support.hpp"

using namespace opetope;

namespace {

bool has_code(const std::vector<Diagnostic>& ds, DiagCode c) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == c; });
}

RawDfc arrow() {
  return RawDfc{{{"*", -1, {}, {}, {}}, {"p", 0, {}, {"*"}, {}}, {"q", 0, {}, {"*"}, {}}, {"x", 1, {"p"}, {"q"}, {}}},
                {},
                {}};
}

}  // namespace

TEST_CASE("rho fixture: cell counts and signs") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  const auto& m = c.mop();
  std::vector<std::size_t> counts;
  for (int k = -1; k <= 3; ++k) counts.push_back(m.cells_of_dim(k).size());
  CHECK(counts == std::vector<std::size_t>{1, 3, 9, 8, 1});
  CHECK(c.dim() == 3);
  CHECK(c.omega_id() == "rho");
  auto i = [&](const char* id) { return fixture::index(c, id); };
  CHECK(m.sign(i("b3"), i("a1")) == Sign::minus);
  CHECK(m.sign(i("b0"), i("a1")) == Sign::plus);
  CHECK(m.sign(i("c1"), i("b3")) == Sign::loop);
  CHECK_FALSE(m.sign(i("b8"), i("a0")).has_value());
  CHECK(iterated_target(c, 2) == "a0");
  CHECK(iterated_target(c, 1) == "b0");
  CHECK(iterated_target(c, 0) == "c0");
}

TEST_CASE("omega fixture: strata") {
  Dfc c = fixture::dfc("omega4.dfc.json");
  auto s = strata(c);
  CHECK(s.loops[1] == std::vector<CellId>{"c3", "c4"});
  CHECK(s.loops[2] == std::vector<CellId>{"b6"});
  CHECK(s.nulls[2] == std::vector<CellId>{"b2", "b3", "b5"});
  CHECK(s.lambda[0] == std::vector<CellId>{"d2"});
  CHECK(s.lambda[3] == std::vector<CellId>{"a1", "a2", "a3"});
}

TEST_CASE("local orders are kept only where required") {
  RawDfc raw = fixture::raw_dfc("rho3.dfc.json");
  SUBCASE("missing") {
    raw.local_orders.pop_back();
    CHECK(has_code(mop_validate(raw).diagnostics, DiagCode::LocalOrderMissing));
  }
  SUBCASE("incomplete") {
    raw.local_orders[0].order = {"b6"};
    CHECK(has_code(mop_validate(raw).diagnostics, DiagCode::LocalOrderNotTotal));
  }
  SUBCASE("outside Lambda") {
    raw.local_orders.push_back({"a0", "c1", {"b1", "b2"}, {}});
    CHECK(has_code(mop_validate(raw).diagnostics, DiagCode::LocalOrderUnexpected));
  }
  SUBCASE("reversed order is still a valid complex") {
    std::reverse(raw.local_orders[0].order.begin(), raw.local_orders[0].order.end());
    CHECK(dfc_validate(raw).ok());
  }
}

TEST_CASE("structural errors are all reported") {
  RawDfc raw = arrow();
  raw.cells.push_back({"x", 1, {"p"}, {"q"}, {}});
  raw.cells.push_back({"y", 1, {"nowhere"}, {"q"}, {}});
  raw.cells.push_back({"z", 1, {"p"}, {"q", "p"}, {}});
  auto ds = mop_validate(raw).diagnostics;
  CHECK(has_code(ds, DiagCode::DuplicateId));
  CHECK(has_code(ds, DiagCode::DanglingId));
  CHECK(has_code(ds, DiagCode::GammaNotSingleton));
  CHECK(std::is_sorted(ds.begin(), ds.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::string(code_name(a.code)) < std::string(code_name(b.code));
  }));
  CHECK(mop_validate(raw).diagnostics == ds);
}

TEST_CASE("missing bottom") {
  RawDfc raw = arrow();
  raw.cells.erase(raw.cells.begin());
  CHECK(has_code(mop_validate(raw).diagnostics, DiagCode::NoBottom));
}

TEST_CASE("arrow is a 1-dimensional complex") {
  auto c = dfc_validate(arrow());
  REQUIRE(c.ok());
  CHECK(c->dim() == 1);
  CHECK(c->omega_id() == "x");
}

TEST_CASE("the point needs the allow-point option") {
  RawDfc raw{{{"*", -1, {}, {}, {}}, {"p", 0, {}, {"*"}, {}}}, {}, {}};
  auto strict = dfc_validate(raw);
  CHECK_FALSE(strict.ok());
  CHECK(has_code(strict.diagnostics, DiagCode::NoGreatestElement));
  DfcOptions o;
  o.allow_point = true;
  auto loose = dfc_validate(raw, o);
  REQUIRE(loose.ok());
  CHECK(loose->degenerate());
  CHECK(loose->dim() == 0);
}

TEST_CASE("thinness verdicts match the brute-force scan chain by chain") {
  for (const char* name : {"rho3.dfc.json", "omega4.dfc.json", "mutations/omega4_m02_swap_orientation_b4.dfc.json",
                           "mutations/omega4_m03_delete_b4_from_a0.dfc.json"}) {
    RawDfc raw = fixture::raw_dfc(name);
    auto mop = mop_validate(raw);
    REQUIRE(mop.ok());
    std::map<std::tuple<CellId, CellId, CellId>, bool> fast, slow;
    for (const auto& v : thinness_report(*mop))
      fast[{mop->id(v.z), mop->id(v.y), mop->id(v.x)}] = !v.failure.has_value();
    for (const auto& ch : oracle_thinness(raw)) slow[{ch.z, ch.y, ch.x}] = ch.ok;
    CHECK(fast == slow);
  }
}

TEST_CASE("every oriented chain of rho has exactly one completion") {
  RawDfc raw = fixture::raw_dfc("rho3.dfc.json");
  for (const auto& ch : oracle_thinness(raw)) {
    CHECK(ch.ok);
    if (!ch.loop_chain) CHECK(ch.completions.size() == 1);
  }
}

TEST_CASE("path orders are strict on the fixtures and catch a 2-cycle") {
  for (const char* name : {"rho3.dfc.json", "omega4.dfc.json"}) {
    Dfc c = fixture::dfc(name);
    for (int k = 0; k <= c.dim(); ++k)
      for (Sign s : {Sign::minus, Sign::plus}) {
        auto fast = path_order(c, k, s);
        auto slow = oracle_strictness(c.mop().raw(), k, s);
        CHECK(fast.strict);
        CHECK(fast.relation == slow.closure);
      }
  }
  RawDfc raw = arrow();
  raw.cells.push_back({"y", 1, {"q"}, {"p"}, {}});
  auto mop = mop_validate(raw);
  REQUIRE(mop.ok());
  auto po = path_order(*mop, 1, Sign::minus);
  CHECK_FALSE(po.strict);
  CHECK(po.cycle.size() == 2);
  CHECK_FALSE(oracle_strictness(raw, 1, Sign::minus).strict);
  CHECK(has_code(dfc_validate(raw).diagnostics, DiagCode::NoGreatestElement));
}

TEST_CASE("source tree of a1 in rho") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  RootedTree t = delta_tree(c, "a1");
  CHECK(t.root == "c0");
  CHECK(t.nodes == std::vector<CellId>{"b2", "b7"});
  CHECK(tree_validate(t).empty());
}
