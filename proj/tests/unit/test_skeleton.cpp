#include <doctest.h>

#include <random>
#include <set>

#include "coronoid/error.hpp"
#include "coronoid/skeleton.hpp"
#include "support/figures.hpp"
#include "support/shapes.hpp"

using namespace coronoid;

TEST_CASE("skeleton counts") {
  auto single = skeleton(shapes::benzene());
  CHECK(single.vertices.size() == 6);
  CHECK(single.edges.size() == 6);
  for (size_t e = 0; e < single.edges.size(); ++e)
    CHECK(!single.edgeInternal[e]);

  auto naph = skeleton(shapes::naphthalene());
  CHECK(naph.vertices.size() == 10);
  CHECK(naph.edges.size() == 11);
  CHECK(std::count(naph.edgeInternal.begin(), naph.edgeInternal.end(), true) ==
        1);
  CHECK(std::count(naph.vertexInternal.begin(), naph.vertexInternal.end(),
                   true) == 0);

  auto cor = skeleton(shapes::coronene());
  CHECK(cor.vertices.size() == 24);
  CHECK(std::count(cor.vertexInternal.begin(), cor.vertexInternal.end(),
                   true) == 6);
}

TEST_CASE("benzenoid vertex count identity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    HexSystem b = shapes::random_benzenoid(4 + trial % 12, rng);
    auto g = skeleton(b);
    int n = static_cast<int>(g.vertices.size());
    int ni = std::count(g.vertexInternal.begin(), g.vertexInternal.end(), true);
    CHECK(n == 4 * static_cast<int>(b.size()) + 2 - ni);
  }
}

TEST_CASE("perimeter structure") {
  std::mt19937 rng(13);
  auto benz = perimeters(skeleton(shapes::random_benzenoid(9, rng)));
  REQUIRE(benz.size() == 1);
  CHECK(benz[0].kind == PerimeterKind::outer);

  auto fig = figures::two_hole_coronoid();
  auto ps = perimeters(skeleton(fig));
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].kind == PerimeterKind::outer);
  CHECK(ps[1].kind == PerimeterKind::inner);
  CHECK(ps[2].kind == PerimeterKind::inner);
  CHECK(ps[1].holeIndex == 0);
  CHECK(ps[2].holeIndex == 1);
}

TEST_CASE("long inner perimeter figure") {
  auto k = figures::long_inner_coronoid();
  auto ps = perimeters(skeleton(k));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].cycle.size() == 48);
  CHECK(ps[1].cycle.size() == 58);
}

TEST_CASE("binary boundary codes of the two-hole figure") {
  auto g = skeleton(figures::two_hole_coronoid());
  auto ps = perimeters(g);
  REQUIRE(ps.size() == 3);

  CHECK(bbc(g, ps[0]).canonical ==
        canonical_cyclic_word(figures::kTwoHoleOuterCode));
  CHECK(bbc(g, ps[1]).canonical ==
        canonical_cyclic_word(figures::kTwoHoleInnerCode));
  CHECK(bbc(g, ps[2]).canonical ==
        canonical_cyclic_word(figures::kTwoHoleInnerCode));
}

TEST_CASE("bbc of a single hexagon") {
  auto g = skeleton(shapes::benzene());
  auto ps = perimeters(g);
  REQUIRE(ps.size() == 1);
  auto code = bbc(g, ps[0]);
  CHECK(code.raw == "222222");
  CHECK(code.canonical == "222222");
}

TEST_CASE("cyclic canonical form") {
  CHECK(canonical_cyclic_word("3333233332") ==
        canonical_cyclic_word("2333323333"));
  CHECK(canonical_cyclic_word("32") == canonical_cyclic_word("23"));
  // Reversal is considered equal.
  CHECK(canonical_cyclic_word("322232") == canonical_cyclic_word("232223"));
}

TEST_CASE("hole statistics") {
  auto naph = hole_stats(shapes::naphthalene());
  CHECK(naph.h == 2);
  CHECK(naph.n == 10);
  CHECK(naph.nInternal == 0);
  CHECK(naph.nu == 2);

  auto single = hole_stats(shapes::benzene());
  CHECK(single.nu == 0);
  // The bound is tight here: sqrt(12*1 - 3) - 3 = 0.
  CHECK((single.nu + 3) * (single.nu + 3) == 12 * single.h - 3);

  auto cor = hole_stats(shapes::coronene());
  CHECK(cor.h == 7);
  CHECK(cor.n == 24);
  CHECK(cor.nInternal == 6);
  CHECK(cor.nu == 6);
  CHECK((cor.nu + 3) * (cor.nu + 3) == 12 * cor.h - 3);

  CHECK_THROWS_AS(hole_stats(shapes::hex_ring()), Error);
}

TEST_CASE("inner perimeter degree-2 count equals the hole's nu") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    HexSystem k = shapes::random_holed_coronoid(10 + trial, rng);
    auto g = skeleton(k);
    auto dec = complement_decomposition(k);
    for (const auto& p : perimeters(g)) {
      if (p.kind != PerimeterKind::inner) continue;
      int deg2 = 0;
      for (int v : p.cycle) deg2 += g.degree(v) == 2 ? 1 : 0;
      CHECK(deg2 == hole_stats(dec.holes[p.holeIndex]).nu);
    }
  }
}

TEST_CASE("boundary subgraph is 2-regular with d+1 cycles") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    HexSystem k = shapes::random_nondeg_coronoid(6 + trial % 18, rng);
    auto g = skeleton(k);
    auto ps = perimeters(g);
    CHECK(static_cast<int>(ps.size()) ==
          complement_decomposition(k).d() + 1);
    std::set<int> onBoundary;
    for (const auto& p : ps)
      for (int v : p.cycle) {
        CHECK(!g.vertexInternal[v]);
        CHECK(onBoundary.insert(v).second);  // perimeters are disjoint
      }
    for (size_t v = 0; v < g.vertices.size(); ++v)
      if (!g.vertexInternal[v]) CHECK(onBoundary.count(static_cast<int>(v)));
  }
}

TEST_CASE("girth and six-cycle count") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    HexSystem k = shapes::random_nondeg_coronoid(5 + trial % 15, rng);
    auto g = skeleton(k);
    CHECK(girth(g) == 6);
    CHECK(count_six_cycles(g) == static_cast<int>(k.size()));
  }
}

TEST_CASE("skeleton rejects bad input") {
  CHECK_THROWS_AS(skeleton(HexSystem{}), Error);
  CHECK_THROWS_AS(skeleton(HexSystem({{0, 0}, {3, 3}})), Error);
}
