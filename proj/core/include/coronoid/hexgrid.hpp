#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace coronoid {

// Axial coordinates of a cell of the infinite hexagonal grid. Hexagons are
// pointy-top with unit side; the centre of cell (q, r) sits at
// (sqrt(3)*(q + r/2), 1.5*r), so the two unit translations of the grid are
// exactly (q+1, r) and (q, r+1).
struct HexCoord {
  int q = 0;
  int r = 0;
  auto operator<=>(const HexCoord&) const = default;
};

// Lattice vertex. Every cell owns two of them: t = 0 is its top corner,
// t = 1 its bottom corner. The remaining four corners of a cell are top or
// bottom corners of neighbouring cells.
struct GridVertex {
  int q = 0;
  int r = 0;
  int t = 0;  // 0 = top corner of (q,r), 1 = bottom corner
  auto operator<=>(const GridVertex&) const = default;
};

// Unordered lattice edge; endpoints are normalized so a <= b.
struct GridEdge {
  GridVertex a, b;
  GridEdge() = default;
  GridEdge(GridVertex u, GridVertex v);
  auto operator<=>(const GridEdge&) const = default;
};

// Integer plane coordinates: x in units of sqrt(3)/2 and y in units of 1/2.
// Cell centres land on y % 3 == 0, top corners on y % 3 == 2, bottom corners
// on y % 3 == 1, so the three kinds never collide and all geometry
// (leftmost-vertex picks, signed areas, point-in-polygon) stays integral.
struct ScaledPoint {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const ScaledPoint&) const = default;
};

ScaledPoint cell_center(HexCoord h);
ScaledPoint vertex_point(GridVertex v);
GridVertex vertex_at(ScaledPoint p);

// The 6 neighbours of h, in CCW order starting east.
std::array<HexCoord, 6> neighbors(HexCoord h);

// The 6 corners of h in CCW geometric order, starting at the top corner.
// Consecutive entries are lattice edges.
std::array<GridVertex, 6> boundary_cycle(HexCoord h);

// The 3 cells meeting at v and the 3 lattice vertices adjacent to v.
std::array<HexCoord, 3> incident_cells(GridVertex v);
std::array<GridVertex, 3> vertex_neighbors(GridVertex v);

bool vertices_adjacent(GridVertex u, GridVertex v);

// The two cells separated by an edge.
std::array<HexCoord, 2> edge_cells(const GridEdge& e);

// A symmetry of the grid acting on cells: one of the 12 point maps (rotation
// by k*60 degrees about the centre of cell (0,0), optionally preceded by the
// mirror image across the vertical axis), followed by a lattice translation.
struct Isometry {
  // pointIndex = k + 6*m with k in 0..5 rotation steps and m in {0,1} the
  // mirror flag; the mirror is applied first.
  int pointIndex = 0;
  HexCoord translation{0, 0};

  HexCoord operator()(HexCoord h) const;
  GridVertex operator()(GridVertex v) const;

  static Isometry identity() { return {}; }
  static Isometry rotation60() { return {1, {0, 0}}; }
  static Isometry mirror() { return {6, {0, 0}}; }
  static Isometry translationBy(int dq, int dr) { return {0, {dq, dr}}; }

  friend Isometry compose(const Isometry& outer, const Isometry& inner);
  Isometry inverse() const;

  bool operator==(const Isometry&) const = default;
};

// Lexicographically smallest image of S over the 12 point maps, each image
// translated so its smallest cell is (0,0). Identical for S and psi(S) for
// every isometry psi. S must be non-empty.
std::vector<HexCoord> canonical_form(std::vector<HexCoord> cells);

}  // namespace coronoid
