#include "doctest.h"
#include "opetope/equivalence.hpp"
#include "opetope/functor_p.hpp"
#include "opetope/generator.hpp"
#include "opetope/io.hpp"
#include "opetope/oracle.hpp"
#include "support.hpp"

using namespace opetope;

TEST_CASE("base zoom") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    BaseZoom b = gen_base(rng, 3);
    REQUIRE(b.trees.size() == 3);
    CHECK(b.trees[2].nodes.size() <= 3);
    CHECK(is_linear(b.trees[2]));
    CHECK(b.trees[1].nodes == std::vector<CellId>{b.trees[2].edges.back()});
    CHECK(constellation_validate(b.trees[0], b.constellations[0], b.trees[1]).empty());
    CHECK(constellation_validate(b.trees[1], b.constellations[1], b.trees[2]).empty());
  }
  BaseZoom flat = gen_base(rng, 0);
  CHECK(flat.trees[2].nodes.empty());
  CHECK(flat.trees[2].edges.size() == 1);
}

TEST_CASE("subdivision bounds") {
  Rng rng(9);
  RootedTree t = corolla("n", {"a", "b"}, "r");
  for (int i = 0; i < 20; ++i) {
    SubdividedTree s = gen_subdivision(rng, t, 2, "p_", 3);
    CHECK(whitedots(s).size() <= 3);
    CHECK(subdivision_validate(s).empty());
  }
  SubdividedTree none = gen_subdivision(rng, t, 0, "p_");
  CHECK(whitedots(none).empty());
  SubdividedTree unit = gen_subdivision(rng, unit_tree("u"), 0, "p_");
  CHECK(whitedots(unit).size() == 1);
}

TEST_CASE("nesting a single blackdot") {
  Rng rng(2);
  SubdividedTree t{corolla("n", {"a"}, "r"), {}};
  bool unit = false, corolla_seen = false;
  for (int i = 0; i < 40; ++i) {
    auto [u, c] = gen_nesting(rng, t, "q_");
    CHECK(constellation_validate(t.base, c, u).empty());
    if (u.nodes.empty()) unit = true;
    else corolla_seen = true;
  }
  CHECK(unit);
  CHECK(corolla_seen);
}

TEST_CASE("nesting needs at least one dot") {
  Rng rng(1);
  SubdividedTree t{unit_tree("u"), {}};
  CHECK_THROWS_AS(gen_nesting(rng, t, "q_"), InternalError);
}

TEST_CASE("random nestings satisfy the kernel rule") {
  Rng rng(17);
  RootedTree t = corolla("n0", {"e1", "e2"}, "e0");
  t.nodes.push_back("n1");
  t.edges.push_back("e3");
  t.node_target["n1"] = "e1";
  t.edge_target["e3"] = "n1";
  for (int i = 0; i < 500; ++i) {
    SubdividedTree s = gen_subdivision(rng, t, 2, "w_");
    auto [u, c] = gen_nesting(rng, s, "q_");
    CHECK(tree_validate(u).empty());
    CHECK(constellation_validate(t, c, u).empty());
    CHECK(oracle_kernel(t, c, u).ok);
  }
}

TEST_CASE("generation is deterministic per seed") {
  GenParams p;
  p.dim = 4;
  p.max_whitedots = 2;
  CHECK(serialize_opetope(gen_opetope(42, p).raw()) == serialize_opetope(gen_opetope(42, p).raw()));
  CHECK(serialize_opetope(gen_opetope(42, p).raw()) != serialize_opetope(gen_opetope(43, p).raw()));
}

TEST_CASE("generated opetopes stay within bounds and convert") {
  GenParams p;
  p.max_dots = 12;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    p.dim = 1 + static_cast<int>(seed % 5);
    Opetope y = gen_opetope(seed, p);
    CHECK(y.dim() == p.dim);
    for (int i = 0; i <= y.dim(); ++i) CHECK(static_cast<int>(y.tree(i).nodes.size()) <= p.max_dots);
    if (p.dim == 3) CHECK(p_of(y).ok());
  }
}

TEST_CASE("the nesting of rho is reachable") {
  RawOpetope rho = fixture::raw_ope("rho3.ope.json");
  Opetope target = fixture::ope("rho3.ope.json");
  SubdividedTree t2{rho.trees[2], rho.constellations[2].subdivision};
  Rng rng(2024);
  bool found = false;
  for (int attempt = 0; attempt < 20000 && !found; ++attempt) {
    auto [u, c] = gen_nesting(rng, t2, "g_");
    if (u.nodes.size() != rho.trees[3].nodes.size()) continue;
    RawOpetope raw = rho;
    raw.trees[3] = u;
    raw.constellations[2] = c;
    auto y = opetope_validate(raw);
    REQUIRE(y.ok());
    found = opetope_iso_search(*y, target).found();
  }
  CHECK(found);
}
