#include "doctest.h"
#include "opetope/equivalence.hpp"
#include "opetope/functor_z.hpp"
#include "support.hpp"

using namespace opetope;

TEST_CASE("level trees of rho") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  RootedTree t3 = level_tree(c, 3);
  CHECK(t3.root == "b0");
  CHECK(t3.nodes.size() == 7);
  CHECK(t3.node_target.at("a2") == "b3");
  CHECK(t3.edge_target.at("b8") == "a6");
  RootedTree t2 = level_tree(c, 2);
  CHECK(t2.root == "c0");
  CHECK(t2.nodes == std::vector<CellId>{"b1", "b2"});
  CHECK(tree_validate(level_tree(c, 5)).empty());
}

TEST_CASE("loops over c1 are ordered by their loop paths") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  CHECK(compare_loops(c, "c1", "b5", "b4") == LoopCmp::below);
  CHECK(compare_loops(c, "c1", "b4", "b5") == LoopCmp::above);
  CHECK(compare_loops(c, "c1", "b6", "b3") == LoopCmp::below);
  CHECK(compare_loops(c, "c1", "b3", "b6") == LoopCmp::above);
  LoopPath p = loop_path(c, "c1", "b4");
  CHECK(p.loops.front() == "b4");
  CHECK(p.cofaces.front() == "a2");
  CHECK(whitedot_order(c, 2, "c1") == std::vector<CellId>{"a7", "a5", "a4", "a3"});
  CHECK(whitedot_order(c, 2, "c0").empty());
}

TEST_CASE("zig-zag over c1 starts at a6") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  auto chains = zigzag(c, "c1");
  REQUIRE_FALSE(chains.empty());
  CHECK(chains.front().a == "a6");
  CHECK(chains.front().beta * chains.front().alpha == Sign::plus);
  for (std::size_t i = 1; i < chains.size(); ++i) {
    // Consecutive chains share either the middle cell or the top cell.
    CHECK((chains[i].b == chains[i - 1].b || chains[i].a == chains[i - 1].a));
  }
}

TEST_CASE("Z of the fixtures matches the hand-written zoom complexes") {
  for (const char* name : {"rho3", "omega4"}) {
    CAPTURE(name);
    Dfc c = fixture::dfc(std::string(name) + ".dfc.json");
    auto y = z_of(c);
    REQUIRE(y.ok());
    CHECK(y->dim() == c.dim());
    Opetope expected = fixture::ope(std::string(name) + ".ope.json");
    CHECK(opetope_iso_search(*y, expected).found());
  }
}

TEST_CASE("augmentation names avoid the ids in use") {
  RawDfc raw = fixture::raw_dfc("rho3.dfc.json");
  raw.cells.push_back({"__t0_node", 0, {}, {"*"}, {}});
  raw.cells.push_back({"__t0_nodx", 1, {"c1"}, {"__t0_node"}, {}});
  auto mop = mop_validate(raw);
  REQUIRE(mop.ok());
  AugmentationNames n = augmentation_names(*mop);
  CHECK(n.t0_node != "__t0_node");
  CHECK(mop->index_of(n.t0_node) < 0);
}

TEST_CASE("Z on arrows") {
  Dfc c = fixture::dfc("rho3.dfc.json");
  std::map<CellId, CellId> rename;
  for (const auto& cell : c.mop().raw().cells) rename[cell.id] = "r_" + cell.id;
  auto d = dfc_validate(relabel(c.mop().raw(), rename));
  REQUIRE(d.ok());
  DfcIso f{rename};
  auto zf = z_map(c, *d, f);
  REQUIRE(zf.ok());
  auto yc = z_of(c), yd = z_of(*d);
  CHECK_FALSE(verify_opetope_iso(*yc, *yd, *zf.value).has_value());

  DfcIso broken = f;
  std::swap(broken.forward["a3"], broken.forward["a4"]);
  auto bad = z_map(c, *d, broken);
  CHECK_FALSE(bad.ok());
  CHECK(bad.error.rfind("NotAnIsomorphism", 0) == 0);
}

TEST_CASE("Z of the point and of an arrow") {
  RawDfc point{{{"*", -1, {}, {}, {}}, {"p", 0, {}, {"*"}, {}}}, {}, {}};
  DfcOptions o;
  o.allow_point = true;
  auto c0 = dfc_validate(point, o);
  REQUIRE(c0.ok());
  auto y0 = z_of(*c0);
  REQUIRE(y0.ok());
  CHECK(y0->dim() == 0);
  CHECK(y0->raw().trees.size() == 1);

  RawDfc arrow{{{"*", -1, {}, {}, {}}, {"p", 0, {}, {"*"}, {}}, {"q", 0, {}, {"*"}, {}}, {"x", 1, {"p"}, {"q"}, {}}},
               {},
               {}};
  auto c1 = dfc_validate(arrow);
  REQUIRE(c1.ok());
  auto y1 = z_of(*c1);
  REQUIRE(y1.ok());
  CHECK(y1->dim() == 1);
}
