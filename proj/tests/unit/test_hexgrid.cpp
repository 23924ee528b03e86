#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coronoid/error.hpp"
#include "coronoid/hexgrid.hpp"

using namespace coronoid;

TEST_CASE("neighbors of the origin") {
  auto nb = neighbors({0, 0});
  std::set<HexCoord> got(nb.begin(), nb.end());
  std::set<HexCoord> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  CHECK(got == want);
  CHECK(got.size() == 6);
  CHECK(got.count({0, 0}) == 0);
}

TEST_CASE("adjacency is symmetric") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    HexCoord a{coord(rng), coord(rng)};
    for (auto b : neighbors(a)) {
      auto back = neighbors(b);
      CHECK(std::count(back.begin(), back.end(), a) == 1);
    }
  }
}

TEST_CASE("adjacent cells share exactly two common neighbours") {
  // Exhaustive over a 5x5 block of cells.
  for (int q = 0; q < 5; ++q) {
    for (int r = 0; r < 5; ++r) {
      HexCoord a{q, r};
      for (auto b : neighbors(a)) {
        auto na = neighbors(a);
        auto nb = neighbors(b);
        int common = 0;
        for (auto x : na)
          common += std::count(nb.begin(), nb.end(), x) ? 1 : 0;
        CHECK(common == 2);
      }
    }
  }
}

TEST_CASE("boundary cycle basics") {
  for (int q = -2; q <= 2; ++q) {
    for (int r = -2; r <= 2; ++r) {
      auto cyc = boundary_cycle({q, r});
      std::set<GridVertex> distinct(cyc.begin(), cyc.end());
      CHECK(distinct.size() == 6);
      for (int i = 0; i < 6; ++i)
        CHECK(vertices_adjacent(cyc[i], cyc[(i + 1) % 6]));
    }
  }
}

TEST_CASE("boundary cycles of adjacent cells share one edge") {
  HexCoord a{0, 0};
  for (auto b : neighbors(a)) {
    auto ca = boundary_cycle(a);
    auto cb = boundary_cycle(b);
    std::set<GridVertex> sa(ca.begin(), ca.end());
    int shared = 0;
    for (auto v : cb) shared += sa.count(v) ? 1 : 0;
    CHECK(shared == 2);
  }
}

TEST_CASE("non-adjacent distinct cells share at most one vertex") {
  for (int q1 = 0; q1 < 5; ++q1)
    for (int r1 = 0; r1 < 5; ++r1)
      for (int q2 = 0; q2 < 5; ++q2)
        for (int r2 = 0; r2 < 5; ++r2) {
          HexCoord a{q1, r1}, b{q2, r2};
          if (a == b) continue;
          auto nb = neighbors(a);
          if (std::count(nb.begin(), nb.end(), b)) continue;
          auto ca = boundary_cycle(a);
          auto cb = boundary_cycle(b);
          std::set<GridVertex> sa(ca.begin(), ca.end());
          int shared = 0;
          for (auto v : cb) shared += sa.count(v) ? 1 : 0;
          CHECK(shared <= 1);
        }
}

TEST_CASE("every vertex touches 3 cells and 3 edges") {
  for (int q = -2; q <= 2; ++q) {
    for (int r = -2; r <= 2; ++r) {
      for (int t = 0; t < 2; ++t) {
        GridVertex v{q, r, t};
        auto cells = incident_cells(v);
        std::set<HexCoord> distinct(cells.begin(), cells.end());
        CHECK(distinct.size() == 3);
        for (auto c : cells) {
          auto cyc = boundary_cycle(c);
          CHECK(std::count(cyc.begin(), cyc.end(), v) == 1);
        }
        auto nbs = vertex_neighbors(v);
        CHECK(std::set<GridVertex>(nbs.begin(), nbs.end()).size() == 3);
        for (auto w : nbs) CHECK(vertices_adjacent(w, v));
      }
    }
  }
}

TEST_CASE("every edge touches exactly two cells") {
  for (int q = -2; q <= 2; ++q) {
    for (int r = -2; r <= 2; ++r) {
      auto cyc = boundary_cycle({q, r});
      for (int i = 0; i < 6; ++i) {
        GridEdge e(cyc[i], cyc[(i + 1) % 6]);
        auto cells = edge_cells(e);
        CHECK(cells[0] != cells[1]);
        auto n0 = neighbors(cells[0]);
        CHECK(std::count(n0.begin(), n0.end(), cells[1]) == 1);
      }
    }
  }
}

TEST_CASE("scaled points invert") {
  for (int q = -3; q <= 3; ++q)
    for (int r = -3; r <= 3; ++r)
      for (int t = 0; t < 2; ++t) {
        GridVertex v{q, r, t};
        CHECK(vertex_at(vertex_point(v)) == v);
      }
}

TEST_CASE("isometry group axioms") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> tr(-5, 5);
  std::vector<Isometry> pts;
  for (int p = 0; p < 12; ++p) pts.push_back({p, {tr(rng), tr(rng)}});

  HexCoord probe{3, -2};
  for (const auto& a : pts) {
    // Inverse really inverts.
    CHECK(compose(a.inverse(), a)(HexCoord{1, 2}) == HexCoord{1, 2});
    CHECK(compose(a, a.inverse())(probe) == probe);
    for (const auto& b : pts) {
      // Composition agrees with pointwise application.
      CHECK(compose(a, b)(probe) == a(b(probe)));
      for (const auto& c : pts) {
        auto lhs = compose(compose(a, b), c);
        auto rhs = compose(a, compose(b, c));
        CHECK(lhs(probe) == rhs(probe));
      }
    }
  }
}

TEST_CASE("rotation has order six, mirror is an involution") {
  auto rot = Isometry::rotation60();
  Isometry acc = Isometry::identity();
  for (int i = 0; i < 6; ++i) acc = compose(rot, acc);
  CHECK(acc == Isometry::identity());

  auto mir = Isometry::mirror();
  CHECK(compose(mir, mir) == Isometry::identity());
}

TEST_CASE("isometries preserve adjacency") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> tr(-8, 8);
  std::uniform_int_distribution<int> pi(0, 11);
  for (int trial = 0; trial < 50; ++trial) {
    Isometry iso{pi(rng), {tr(rng), tr(rng)}};
    HexCoord a{tr(rng), tr(rng)};
    for (auto b : neighbors(a)) {
      auto img = neighbors(iso(a));
      CHECK(std::count(img.begin(), img.end(), iso(b)) == 1);
    }
  }
}

TEST_CASE("isometries act consistently on vertices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> tr(-6, 6);
  std::uniform_int_distribution<int> pi(0, 11);
  for (int trial = 0; trial < 50; ++trial) {
    Isometry iso{pi(rng), {tr(rng), tr(rng)}};
    HexCoord h{tr(rng), tr(rng)};
    // The image of each corner is a corner of the image cell.
    auto imgCorners = boundary_cycle(iso(h));
    for (auto v : boundary_cycle(h)) {
      GridVertex w = iso(v);
      CHECK(std::count(imgCorners.begin(), imgCorners.end(), w) == 1);
    }
  }
}

TEST_CASE("canonical form normalizes a singleton to the origin") {
  std::vector<HexCoord> cells{{5, 7}};
  auto canon = canonical_form(cells);
  REQUIRE(canon.size() == 1);
  CHECK(canon[0] == HexCoord{0, 0});
}

TEST_CASE("canonical form is invariant under the group") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> tr(-10, 10);
  std::uniform_int_distribution<int> pi(0, 11);
  std::uniform_int_distribution<int> step(0, 5);

  for (int trial = 0; trial < 30; ++trial) {
    // Random connected 10-cell system.
    std::vector<HexCoord> cells{{0, 0}};
    while (cells.size() < 10) {
      HexCoord base = cells[rng() % cells.size()];
      cells.push_back(neighbors(base)[step(rng)]);
    }
    Isometry iso{pi(rng), {tr(rng), tr(rng)}};
    std::vector<HexCoord> moved;
    for (auto h : cells) moved.push_back(iso(h));
    CHECK(canonical_form(cells) == canonical_form(moved));
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> step(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<HexCoord> cells{{0, 0}};
    while (cells.size() < 12) {
      HexCoord base = cells[rng() % cells.size()];
      cells.push_back(neighbors(base)[step(rng)]);
    }
    auto once = canonical_form(cells);
    CHECK(canonical_form(once) == once);
  }
}

TEST_CASE("canonical form rejects the empty set") {
  CHECK_THROWS_AS(canonical_form({}), Error);
}
