#include "coronoid/hexgrid.hpp"

#include <algorithm>
#include <cstdlib>

#include "coronoid/error.hpp"

namespace coronoid {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_system: return "empty_system";
    case Errc::duplicate_cells: return "duplicate_cells";
    case Errc::not_a_coronoid: return "not_a_coronoid";
    case Errc::not_a_benzenoid: return "not_a_benzenoid";
    case Errc::degenerate_coronoid: return "degenerate_coronoid";
    case Errc::no_hexagon_found: return "no_hexagon_found";
    case Errc::embedding_conflict: return "embedding_conflict";
    case Errc::verification_failed: return "verification_failed";
    case Errc::bad_map: return "bad_map";
    case Errc::bad_patch: return "bad_patch";
    case Errc::bad_cycle: return "bad_cycle";
    case Errc::bad_iteration_vector: return "bad_iteration_vector";
    case Errc::kekule_less: return "kekule_less";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::too_large: return "too_large";
    case Errc::bad_input: return "bad_input";
  }
  return "unknown";
}

GridEdge::GridEdge(GridVertex u, GridVertex v) {
  if (v < u) std::swap(u, v);
  a = u;
  b = v;
}

ScaledPoint cell_center(HexCoord h) {
  return {2LL * h.q + h.r, 3LL * h.r};
}

ScaledPoint vertex_point(GridVertex v) {
  return {2LL * v.q + v.r, 3LL * v.r + (v.t == 0 ? 2 : -2)};
}

GridVertex vertex_at(ScaledPoint p) {
  // y = 3r+2 (top) or 3r-2 (bottom)
  long long m = ((p.y % 3) + 3) % 3;
  GridVertex v;
  if (m == 2) {
    v.t = 0;
    v.r = static_cast<int>((p.y - 2) / 3);
  } else if (m == 1) {
    v.t = 1;
    v.r = static_cast<int>((p.y + 2) / 3);
  } else {
    fail(Errc::bad_input, "point is not a lattice vertex");
  }
  v.q = static_cast<int>((p.x - v.r) / 2);
  return v;
}

std::array<HexCoord, 6> neighbors(HexCoord h) {
  return {{{h.q + 1, h.r},
           {h.q + 1, h.r - 1},
           {h.q, h.r - 1},
           {h.q - 1, h.r},
           {h.q - 1, h.r + 1},
           {h.q, h.r + 1}}};
}

std::array<GridVertex, 6> boundary_cycle(HexCoord h) {
  int q = h.q, r = h.r;
  // top, NW, SW, bottom, SE, NE -- counterclockwise
  return {{{q, r, 0},
           {q - 1, r + 1, 1},
           {q, r - 1, 0},
           {q, r, 1},
           {q + 1, r - 1, 0},
           {q, r + 1, 1}}};
}

std::array<HexCoord, 3> incident_cells(GridVertex v) {
  if (v.t == 0)
    return {{{v.q, v.r}, {v.q, v.r + 1}, {v.q - 1, v.r + 1}}};
  return {{{v.q, v.r}, {v.q, v.r - 1}, {v.q + 1, v.r - 1}}};
}

std::array<GridVertex, 3> vertex_neighbors(GridVertex v) {
  if (v.t == 0)
    return {{{v.q, v.r + 1, 1}, {v.q - 1, v.r + 1, 1}, {v.q - 1, v.r + 2, 1}}};
  return {{{v.q, v.r - 1, 0}, {v.q + 1, v.r - 1, 0}, {v.q + 1, v.r - 2, 0}}};
}

bool vertices_adjacent(GridVertex u, GridVertex v) {
  auto nb = vertex_neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::array<HexCoord, 2> edge_cells(const GridEdge& e) {
  auto ca = incident_cells(e.a);
  auto cb = incident_cells(e.b);
  std::array<HexCoord, 2> out{};
  int k = 0;
  for (auto x : ca)
    for (auto y : cb)
      if (x == y && k < 2) out[k++] = x;
  if (k != 2) fail(Errc::bad_input, "not a lattice edge");
  if (out[1] < out[0]) std::swap(out[0], out[1]);
  return out;
}

namespace {

HexCoord rot60(HexCoord h) { return {-h.r, h.q + h.r}; }
HexCoord mirror_q(HexCoord h) { return {-h.q - h.r, h.r}; }

HexCoord point_apply(int idx, HexCoord h) {
  if (idx >= 6) h = mirror_q(h);
  for (int i = 0; i < idx % 6; ++i) h = rot60(h);
  return h;
}

// Composition table of the dihedral point group:
//   P(k,m) = rot^k . mirror^m  and  mirror . rot = rot^-1 . mirror.
int point_compose(int outer, int inner) {
  int k2 = outer % 6, m2 = outer / 6;
  int k1 = inner % 6, m1 = inner / 6;
  int k, m;
  if (m2 == 0) {
    k = (k1 + k2) % 6;
    m = m1;
  } else {
    k = ((k2 - k1) % 6 + 6) % 6;
    m = 1 - m1;
  }
  return k + 6 * m;
}

int point_inverse(int idx) {
  if (idx >= 6) return idx;  // reflections are involutions
  return (6 - idx) % 6;
}

}  // namespace

HexCoord Isometry::operator()(HexCoord h) const {
  HexCoord p = point_apply(pointIndex, h);
  return {p.q + translation.q, p.r + translation.r};
}

GridVertex Isometry::operator()(GridVertex v) const {
  // A vertex is determined by its three incident cells.
  auto cells = incident_cells(v);
  std::array<HexCoord, 3> img;
  for (int i = 0; i < 3; ++i) img[i] = (*this)(cells[i]);
  std::sort(img.begin(), img.end());
  for (auto corner : boundary_cycle(img[0])) {
    auto cs = incident_cells(corner);
    std::sort(cs.begin(), cs.end());
    if (std::equal(cs.begin(), cs.end(), img.begin())) return corner;
  }
  fail(Errc::bad_input, "isometry does not preserve the lattice");
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  // outer(inner(h)) = P2(P1 h + t1) + t2 = (P2 P1) h + (P2 t1 + t2)
  Isometry out;
  out.pointIndex = point_compose(outer.pointIndex, inner.pointIndex);
  HexCoord t = point_apply(outer.pointIndex, inner.translation);
  out.translation = {t.q + outer.translation.q, t.r + outer.translation.r};
  return out;
}

Isometry Isometry::inverse() const {
  Isometry out;
  out.pointIndex = point_inverse(pointIndex);
  HexCoord t = point_apply(out.pointIndex, translation);
  out.translation = {-t.q, -t.r};
  return out;
}

std::vector<HexCoord> canonical_form(std::vector<HexCoord> cells) {
  if (cells.empty()) fail(Errc::empty_system, "canonical_form of empty set");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  std::vector<HexCoord> best;
  std::vector<HexCoord> img(cells.size());
  for (int p = 0; p < 12; ++p) {
    for (size_t i = 0; i < cells.size(); ++i) img[i] = point_apply(p, cells[i]);
    std::sort(img.begin(), img.end());
    HexCoord o = img.front();
    for (auto& c : img) c = {c.q - o.q, c.r - o.r};
    if (best.empty() || img < best) best = img;
  }
  return best;
}

}  // namespace coronoid
