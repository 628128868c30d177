#include "doctest.h"
#include "opetope/equivalence.hpp"
#include "opetope/functor_p.hpp"
#include "opetope/generator.hpp"
#include "support.hpp"

using namespace opetope;

TEST_CASE("P of the fixtures matches the hand-written complexes") {
  for (const char* name : {"rho3", "omega4"}) {
    CAPTURE(name);
    Opetope y = fixture::ope(std::string(name) + ".ope.json");
    auto c = p_of(y);
    REQUIRE(c.ok());
    CHECK(c->dim() == y.dim());
    Dfc expected = fixture::dfc(std::string(name) + ".dfc.json");
    CHECK(dfc_iso_search(*c, expected).found());
  }
}

TEST_CASE("extension adds the top cell and its corolla") {
  Opetope y = fixture::ope("rho3.ope.json");
  ExtendedZoom ez = extend(y);
  CHECK(ez.n == 3);
  REQUIRE(ez.S.size() == 6);
  CHECK(ez.S[4].nodes == std::vector<CellId>{ez.top});
  CHECK(ez.S[4].root == ez.top_root);
  CHECK(ez.S[5].root == ez.top);
  CHECK(ez.S[5].nodes.empty());
  CHECK(ez.V.size() == 5);
}

TEST_CASE("a cell is a loop exactly when its nesting holds only whitedots") {
  for (const char* name : {"rho3.ope.json", "omega4.ope.json"}) {
    CAPTURE(name);
    Opetope y = fixture::ope(name);
    ExtendedZoom ez = extend(y);
    auto c = p_of(y);
    REQUIRE(c.ok());
    const auto& mop = c->mop();
    int seen = 0;
    for (int k = 0; k + 2 <= ez.n + 2; ++k)
      for (const auto& x : ez.S[k + 2].edges) {
        int i = mop.index_of(x);
        if (i < 0 || mop.dim(i) < 1) continue;
        NestingSubtree ns = nesting_subtree(ez, k, x);
        CAPTURE(x);
        CHECK(ns.all_white == mop.is_loop(i));
        ++seen;
      }
    CHECK(seen > 0);
  }
}

TEST_CASE("source trees read from nestings agree with the complex") {
  Opetope y = fixture::ope("omega4.ope.json");
  ExtendedZoom ez = extend(y);
  Dfc c = *p_of(y);
  for (const char* x : {"a1", "a2", "b0", "b1"}) {
    CAPTURE(x);
    RootedTree s = sigma_tree(ez, x);
    RootedTree d = delta_tree(c, x);
    CHECK(s.root == d.root);
    CHECK(std::set<CellId>(s.nodes.begin(), s.nodes.end()) == std::set<CellId>(d.nodes.begin(), d.nodes.end()));
  }
}

TEST_CASE("P of low-dimensional opetopes") {
  GenParams p;
  p.dim = 0;
  auto c0 = p_of(gen_opetope(1, p));
  REQUIRE(c0.ok());
  CHECK(c0->degenerate());
  p.dim = 1;
  auto c1 = p_of(gen_opetope(1, p));
  REQUIRE(c1.ok());
  CHECK(c1->dim() == 1);
  CHECK(c1->mop().cells_of_dim(0).size() == 2);
  p.dim = 2;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto c2 = p_of(gen_opetope(seed, p));
    REQUIRE(c2.ok());
    CHECK(c2->dim() == 2);
  }
}

TEST_CASE("P on arrows") {
  Opetope y = fixture::ope("rho3.ope.json");
  auto id = p_map(y, y, identity_iso(y));
  REQUIRE(id.ok());
  for (const auto& [a, b] : id.value->forward) CHECK(a == b);

  OpetopeIso swapped = identity_iso(y);
  std::swap(swapped.whites[2]["a7"], swapped.whites[2]["a5"]);
  std::swap(swapped.nodes[3]["a7"], swapped.nodes[3]["a5"]);
  auto bad = p_map(y, y, swapped);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.error.empty());
}
