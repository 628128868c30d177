#include <algorithm>

#include "doctest.h"
#include "opetope/oracle.hpp"
#include "opetope/tree.hpp"
#include "opetope/zoom.hpp"
#include "support.hpp"

using namespace opetope;

namespace {

bool has_code(const std::vector<Diagnostic>& ds, DiagCode c) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == c; });
}

// r <- n1 <- {e1 <- n2 <- {l1, l2}, l3}
RootedTree sample() {
  RootedTree t;
  t.nodes = {"n1", "n2"};
  t.edges = {"r", "e1", "l1", "l2", "l3"};
  t.node_target = {{"n1", "r"}, {"n2", "e1"}};
  t.edge_target = {{"e1", "n1"}, {"l3", "n1"}, {"l1", "n2"}, {"l2", "n2"}};
  t.root = "r";
  return t;
}

}  // namespace

TEST_CASE("well-formed trees") {
  CHECK(tree_validate(sample()).empty());
  CHECK(tree_validate(unit_tree("u")).empty());
  CHECK(tree_validate(corolla("n", {}, "r")).empty());
  CHECK(tree_validate(corolla("n", {"a", "b", "c"}, "r")).empty());
}

TEST_CASE("malformed trees") {
  SUBCASE("second root") {
    RootedTree t = sample();
    t.edge_target.erase("l3");
    CHECK(has_code(tree_validate(t), DiagCode::MultipleRoots));
  }
  SUBCASE("declared root has a target") {
    RootedTree t = sample();
    t.root = "e1";
    CHECK(has_code(tree_validate(t), DiagCode::RootMismatch));
  }
  SUBCASE("node without output") {
    RootedTree t = sample();
    t.node_target.erase("n2");
    CHECK(has_code(tree_validate(t), DiagCode::NodeWithoutTarget));
  }
  SUBCASE("edge produced twice") {
    RootedTree t = sample();
    t.nodes.push_back("n3");
    t.node_target["n3"] = "e1";
    CHECK(has_code(tree_validate(t), DiagCode::EdgeMultipleSources));
  }
  SUBCASE("cycle") {
    RootedTree t = sample();
    t.nodes.push_back("n3");
    t.edges.push_back("e3");
    t.node_target["n3"] = "e3";
    t.edge_target["e3"] = "n3";
    auto ds = tree_validate(t);
    CHECK((has_code(ds, DiagCode::Cycle) || has_code(ds, DiagCode::UnreachableEdge)));
  }
  SUBCASE("dangling reference") {
    RootedTree t = sample();
    t.edge_target["l3"] = "ghost";
    CHECK(has_code(tree_validate(t), DiagCode::DanglingId));
  }
}

TEST_CASE("tree index and derived sets") {
  RootedTree t = sample();
  TreeIndex ix(t);
  CHECK(ix.is_node("n2"));
  CHECK(ix.is_edge("l3"));
  CHECK(ix.source("e1") == "n2");
  CHECK(ix.source("l1").empty());
  CHECK(ix.inputs("n1") == std::vector<CellId>{"e1", "l3"});
  CHECK(leaves(t) == std::vector<CellId>{"l1", "l2", "l3"});
  CHECK(nulldots(t).empty());
  CHECK(nulldots(corolla("n", {}, "r")) == std::vector<CellId>{"n"});
  CHECK_FALSE(is_linear(t));
  CHECK(is_linear(unit_tree("u")));
  CHECK(is_linear(corolla("n", {"a"}, "r")));
  CHECK(descendant_dots(t, "e1") == std::set<CellId>{"l1", "l2"});
  CHECK(descendant_dots(t, "r") == std::set<CellId>{"l1", "l2", "l3"});
  CHECK(descendant_dots(corolla("n", {}, "r"), "r") == std::set<CellId>{"n"});
}

TEST_CASE("subdivision and expansion") {
  SubdividedTree s{sample(), {{"e1", {"w0", "w1"}}, {"r", {"w2"}}}};
  CHECK(subdivision_validate(s).empty());
  CHECK(whitedots(s).size() == 3);
  Expansion ex = expand(s);
  CHECK(ex.dot_count() == 5);
  CHECK(ex.segments.size() == 5 + 3);
  CHECK_FALSE(ex.white[ex.dot("n1")]);
  CHECK(ex.white[ex.dot("w1")]);
  // Whitedots are listed from the root side: w0 consumes what w1 produces.
  const auto& below_w1 = ex.segments[ex.out_segment[ex.dot("w1")]];
  CHECK(below_w1.lower == ex.dot("w0"));
  RootedTree flat = subdivided_as_tree(s);
  CHECK(tree_validate(flat).empty());
  CHECK(flat.nodes.size() == 5);
  CHECK(flat.root == segment_id("r", 0));
  auto parts = components(ex, {ex.dot("w2"), ex.dot("n2"), ex.dot("w1")});
  CHECK(parts.size() == 2);

  SUBCASE("whitedot reused") {
    s.W["l3"] = {"w0"};
    CHECK(has_code(subdivision_validate(s), DiagCode::BadSubdivision));
  }
  SUBCASE("unknown edge") {
    s.W["ghost"] = {"w9"};
    CHECK(has_code(subdivision_validate(s), DiagCode::BadSubdivision));
  }
}

TEST_CASE("kernel rule agrees with the brute-force check") {
  struct Case {
    const char* file;
    int level;
    bool ok;
  };
  for (Case cs : {Case{"rho3.ope.json", 2, true}, Case{"omega4.ope.json", 2, true}, Case{"omega4.ope.json", 3, true},
                  Case{"mutations/rho3_m1_leaf_swap.ope.json", 2, false},
                  Case{"mutations/rho3_m2_whitedot_reorder.ope.json", 2, false}}) {
    CAPTURE(cs.file);
    CAPTURE(cs.level);
    RawOpetope raw = fixture::raw_ope(cs.file);
    const auto& dom = raw.trees[cs.level];
    const auto& c = raw.constellations[cs.level];
    const auto& cod = raw.trees[cs.level + 1];
    bool fast = !has_code(constellation_validate(dom, c, cod), DiagCode::KernelRuleViolated);
    KernelVerdict slow = oracle_kernel(dom, c, cod);
    CHECK(fast == cs.ok);
    CHECK(slow.ok == cs.ok);
  }
}

TEST_CASE("kernel rule fails for a scrambled nesting") {
  // T is linear on n1 <- n2 <- n3; U circles {n1, n2} inside a circle with n3.
  RootedTree t;
  t.nodes = {"n1", "n2", "n3"};
  t.edges = {"a", "b", "c", "d"};
  t.node_target = {{"n1", "a"}, {"n2", "b"}, {"n3", "c"}};
  t.edge_target = {{"b", "n1"}, {"c", "n2"}, {"d", "n3"}};
  t.root = "a";
  RootedTree u;
  u.nodes = {"m0", "m1"};
  u.edges = {"u", "i", "n1", "n2", "n3"};
  u.node_target = {{"m0", "u"}, {"m1", "i"}};
  u.edge_target = {{"i", "m0"}, {"n3", "m0"}, {"n1", "m1"}, {"n2", "m1"}};
  u.root = "u";
  RawConstellation good{{}, std::nullopt, std::nullopt, {}};
  CHECK(oracle_kernel(t, good, u).ok);
  CHECK(constellation_validate(t, good, u).empty());

  RawConstellation bad = good;
  bad.sigma_black = std::map<CellId, CellId>{{"n1", "n1"}, {"n2", "n3"}, {"n3", "n2"}};
  KernelVerdict v = oracle_kernel(t, bad, u);
  CHECK_FALSE(v.ok);
  CHECK(v.witness == "m1");
  CHECK(has_code(constellation_validate(t, bad, u), DiagCode::KernelRuleViolated));
}
