#include <algorithm>
#include <set>

#include "doctest.h"
#include "opetope/equivalence.hpp"
#include "opetope/functor_p.hpp"
#include "opetope/functor_z.hpp"
#include "opetope/generator.hpp"
#include "opetope/oracle.hpp"
#include "support.hpp"

using namespace opetope;

namespace {

std::map<CellId, CellId> prefixed(const RawDfc& raw, const std::string& p) {
  std::map<CellId, CellId> m;
  for (const auto& c : raw.cells) m[c.id] = p + c.id;
  return m;
}

std::map<CellId, CellId> prefixed(const RawOpetope& raw, const std::string& p) {
  std::map<CellId, CellId> m;
  for (const auto& t : raw.trees) {
    for (const auto& n : t.nodes) m[n] = p + n;
    for (const auto& e : t.edges) m[e] = p + e;
  }
  for (const auto& c : raw.constellations)
    for (const auto& [e, ws] : c.subdivision)
      for (const auto& w : ws) m[w] = p + w;
  return m;
}

}  // namespace

TEST_CASE("each fixture is isomorphic to itself by the identity") {
  for (const char* name : {"rho3", "omega4"}) {
    Dfc c = fixture::dfc(std::string(name) + ".dfc.json");
    auto r = dfc_iso_search(c, c);
    REQUIRE(r.found());
    CHECK(r.status == SearchStatus::found);
    for (const auto& [a, b] : r.witnesses[0].forward) CHECK(a == b);
    Opetope y = fixture::ope(std::string(name) + ".ope.json");
    auto s = opetope_iso_search(y, y);
    REQUIRE(s.found());
    CHECK(s.witnesses[0] == identity_iso(y));
  }
}

TEST_CASE("search recovers a renaming") {
  Dfc c = fixture::dfc("omega4.dfc.json");
  auto rename = prefixed(c.mop().raw(), "x_");
  auto d = dfc_validate(relabel(c.mop().raw(), rename));
  REQUIRE(d.ok());
  auto r = dfc_iso_search(c, *d);
  REQUIRE(r.found());
  CHECK(r.witnesses[0].forward == rename);

  Opetope y = fixture::ope("omega4.ope.json");
  auto yr = prefixed(y.raw(), "y_");
  auto y2 = opetope_validate(relabel(y.raw(), yr));
  REQUIRE(y2.ok());
  auto s = opetope_iso_search(y, *y2);
  REQUIRE(s.found());
  CHECK(s.witnesses[0] == relabel_iso(y, yr));
}

TEST_CASE("non-isomorphic inputs") {
  Dfc rho = fixture::dfc("rho3.dfc.json");
  Dfc omega = fixture::dfc("omega4.dfc.json");
  CHECK(dfc_iso_search(rho, omega).status == SearchStatus::none);

}

TEST_CASE("iso searches agree with each other and with exhaustive permutation") {
  GenParams p;
  p.dim = 3;
  p.max_linear_nodes = 2;
  p.max_whitedots = 1;
  p.max_dots = 6;
  struct Sample {
    Opetope y;
    Dfc c;
    std::vector<std::size_t> profile;
  };
  std::vector<Sample> samples;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Opetope y = gen_opetope(seed, p);
    Dfc c = *p_of(y);
    std::vector<std::size_t> profile;
    for (int k = 0; k <= c.dim(); ++k) profile.push_back(c.mop().cells_of_dim(k).size());
    if (*std::max_element(profile.begin(), profile.end()) <= 8) samples.push_back({y, c, profile});
  }
  int same = 0, different = 0;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].profile != samples[j].profile) continue;
      bool ope = opetope_iso_search(samples[i].y, samples[j].y).found();
      bool dfc = dfc_iso_search(samples[i].c, samples[j].c).found();
      auto slow = oracle_iso(samples[i].c.mop().raw(), samples[j].c.mop().raw());
      REQUIRE(slow.has_value());
      CHECK(ope == dfc);
      CHECK(dfc == !slow->empty());
      (dfc ? same : different)++;
    }
  CHECK(same > 0);
  CHECK(different > 0);
}

TEST_CASE("a tiny budget reports exhaustion") {
  Dfc c = fixture::dfc("omega4.dfc.json");
  SearchOptions o;
  o.budget = 1;
  auto r = dfc_iso_search(c, c, o);
  CHECK(r.status == SearchStatus::exhausted);
  CHECK_FALSE(r.found());
}

TEST_CASE("all witnesses agree with exhaustive permutation") {
  for (const char* name : {"rho3.dfc.json", "omega4.dfc.json"}) {
    CAPTURE(name);
    Dfc c = fixture::dfc(name);
    SearchOptions o;
    o.all = true;
    auto r = dfc_iso_search(c, c, o);
    CHECK(r.status != SearchStatus::exhausted);
    std::set<std::map<CellId, CellId>> fast;
    for (const auto& w : r.witnesses) fast.insert(w.forward);
    auto slow = oracle_iso(c.mop().raw(), c.mop().raw(), 9);
    REQUIRE(slow.has_value());
    CHECK(fast == std::set<std::map<CellId, CellId>>(slow->begin(), slow->end()));
  }
}

TEST_CASE("round-trip maps on the fixtures") {
  for (const char* name : {"rho3", "omega4"}) {
    CAPTURE(name);
    auto th = theta(fixture::dfc(std::string(name) + ".dfc.json"));
    CHECK_MESSAGE(th.ok(), th.error);
    auto ta = tau(fixture::ope(std::string(name) + ".ope.json"));
    CHECK_MESSAGE(ta.ok(), ta.error);
  }
}

TEST_CASE("round-trip maps in low dimensions") {
  GenParams p;
  for (int dim = 0; dim <= 2; ++dim) {
    p.dim = dim;
    Opetope y = gen_opetope(7, p);
    auto ta = tau(y);
    CHECK_MESSAGE(ta.ok(), ta.error);
    auto c = p_of(y);
    REQUIRE(c.ok());
    auto th = theta(*c);
    CHECK_MESSAGE(th.ok(), th.error);
  }
}

TEST_CASE("tau is natural with respect to renamings") {
  for (std::uint64_t seed : {3u, 11u}) {
    Opetope y = gen_opetope(seed, GenParams{});
    auto rename = prefixed(y.raw(), "n_");
    auto y2c = opetope_validate(relabel(y.raw(), rename));
    REQUIRE(y2c.ok());
    const Opetope& y2 = *y2c;
    OpetopeIso f = relabel_iso(y, rename);

    auto py = p_of(y), py2 = p_of(y2);
    REQUIRE(py.ok());
    REQUIRE(py2.ok());
    auto pf = p_map(y, y2, f);
    REQUIRE(pf.ok());
    auto zpf = z_map(*py, *py2, *pf.value);
    REQUIRE(zpf.ok());
    auto t1 = tau(y), t2 = tau(y2);
    REQUIRE(t1.ok());
    REQUIRE(t2.ok());
    CHECK(compose(*zpf.value, *t1.value) == compose(*t2.value, f));
  }
}
