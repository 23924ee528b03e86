#include "figures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "coronoid/hexgrid.hpp"
#include "coronoid/hexsystem.hpp"

namespace figures {

using coronoid::HexCoord;
using coronoid::HexSystem;
using coronoid::ScaledPoint;

namespace {

ScaledPoint rot_ccw(ScaledPoint v) { return {(v.x - v.y) / 2, (3 * v.x + v.y) / 2}; }
ScaledPoint rot_cw(ScaledPoint v) { return {(v.x + v.y) / 2, (v.y - 3 * v.x) / 2}; }

// Walks a binary boundary code into a closed polygon on the lattice:
// degree 2 turns one way, degree 3 the other, both by 60 degrees. The code
// may be recorded in either orientation, so both are tried; the choice
// only mirrors the result.
std::vector<ScaledPoint> walk_code(const std::string& code) {
  for (int sense = 0; sense < 2; ++sense) {
    ScaledPoint pos{0, 2};   // a top-class vertex
    ScaledPoint dir{1, 1};   // arriving direction: legal into that class
    std::vector<ScaledPoint> out;
    for (char symbol : code) {
      bool ccw = (symbol == '2') == (sense == 0);
      dir = ccw ? rot_ccw(dir) : rot_cw(dir);
      out.push_back(pos);
      pos = {pos.x + dir.x, pos.y + dir.y};
    }
    if (pos == ScaledPoint{0, 2}) return out;
  }
  throw std::runtime_error("boundary code does not close up");
}

// Fills the polygon: cell centres sit at y % 3 == 0 and only the vertical
// lattice edges can cross such a horizontal line, which keeps the even-odd
// ray test entirely in integers.
HexSystem fill_polygon(const std::vector<ScaledPoint>& poly) {
  long long qlo = 1e9, qhi = -1e9, rlo = 1e9, rhi = -1e9;
  for (auto p : poly) {
    coronoid::GridVertex v = coronoid::vertex_at(p);
    qlo = std::min<long long>(qlo, v.q - 1);
    qhi = std::max<long long>(qhi, v.q + 1);
    rlo = std::min<long long>(rlo, v.r - 1);
    rhi = std::max<long long>(rhi, v.r + 1);
  }

  std::vector<HexCoord> cells;
  for (long long q = qlo; q <= qhi; ++q) {
    for (long long r = rlo; r <= rhi; ++r) {
      ScaledPoint c = coronoid::cell_center({static_cast<int>(q), static_cast<int>(r)});
      int crossings = 0;
      for (size_t i = 0; i < poly.size(); ++i) {
        ScaledPoint a = poly[i];
        ScaledPoint b = poly[(i + 1) % poly.size()];
        if (a.x != b.x) continue;  // only vertical edges cross y % 3 == 0
        if (a.x <= c.x) continue;
        if (std::min(a.y, b.y) < c.y && c.y < std::max(a.y, b.y)) ++crossings;
      }
      if (crossings % 2)
        cells.push_back({static_cast<int>(q), static_cast<int>(r)});
    }
  }
  return HexSystem(std::move(cells));
}

bool interior_cell(const HexSystem& k, HexCoord h) {
  for (auto n : coronoid::neighbors(h))
    if (!k.contains(n)) return false;
  return true;
}

bool cells_adjacent(HexCoord a, HexCoord b) {
  auto nb = coronoid::neighbors(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

bool systems_touch(const HexSystem& a, const HexSystem& b) {
  for (auto x : a)
    for (auto y : b)
      if (x == y || cells_adjacent(x, y)) return true;
  return false;
}

}  // namespace

HexSystem two_hole_coronoid() {
  HexSystem filled = fill_polygon(walk_code(kTwoHoleOuterCode));

  // Interior dominoes: both cells and all their neighbours inside.
  std::vector<HexSystem> dominoes;
  for (auto h : filled) {
    if (!interior_cell(filled, h)) continue;
    for (auto n : coronoid::neighbors(h)) {
      if (!(h < n) || !filled.contains(n) || !interior_cell(filled, n))
        continue;
      dominoes.push_back(HexSystem({h, n}));
    }
  }

  for (size_t i = 0; i < dominoes.size(); ++i) {
    for (size_t j = i + 1; j < dominoes.size(); ++j) {
      if (systems_touch(dominoes[i], dominoes[j])) continue;
      HexSystem carved = coronoid::set_difference(
          filled, coronoid::set_union(dominoes[i], dominoes[j]));
      if (!coronoid::is_connected(carved)) continue;
      auto dec = coronoid::complement_decomposition(carved);
      if (dec.d() != 2) continue;
      if (dec.holes[0].size() == 2 && dec.holes[1].size() == 2) return carved;
    }
  }
  throw std::runtime_error("no admissible hole placement found");
}

HexSystem long_inner_coronoid() {
  // Hexagon-shaped sheet with outer perimeter 48: search the strip sizes.
  HexSystem ambient;
  for (int a = 3; a <= 6 && ambient.empty(); ++a) {
    for (int b = 3; b <= 6 && ambient.empty(); ++b) {
      for (int c = 3; c <= 6; ++c) {
        std::vector<HexCoord> cells;
        for (int q = -a; q <= a; ++q)
          for (int r = -b; r <= b; ++r)
            if (std::abs(q + r) <= c) cells.push_back({q, r});
        HexSystem cand(std::move(cells));
        int h = static_cast<int>(cand.size());
        int ni = coronoid::internal_vertex_count(cand);
        if (4 * h + 2 - 2 * ni == 48) {
          ambient = cand;
          break;
        }
      }
    }
  }
  if (ambient.empty()) throw std::runtime_error("no sheet with perimeter 48");

  // Snake hole of 14 cells: a self-avoiding chain that never touches
  // itself or the sheet boundary; its perimeter is then 4*14 + 2 = 58.
  std::mt19937 rng(2024);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<HexCoord> snake{{0, 0}};
    std::set<HexCoord> inSnake{{0, 0}};
    while (snake.size() < 14) {
      auto head = snake.back();
      std::vector<HexCoord> options;
      for (auto n : coronoid::neighbors(head)) {
        if (inSnake.count(n) || !ambient.contains(n)) continue;
        if (!interior_cell(ambient, n)) continue;
        int touching = 0;
        for (auto m : coronoid::neighbors(n))
          touching += inSnake.count(m) ? 1 : 0;
        if (touching == 1) options.push_back(n);
      }
      if (options.empty()) break;
      auto pick = options[rng() % options.size()];
      snake.push_back(pick);
      inSnake.insert(pick);
    }
    if (snake.size() < 14) continue;

    HexSystem hole(snake);
    HexSystem carved = coronoid::set_difference(ambient, hole);
    if (!coronoid::is_connected(carved)) continue;
    auto dec = coronoid::complement_decomposition(carved);
    if (dec.d() != 1 || !(dec.holes[0] == hole)) continue;
    if (coronoid::internal_vertex_count(hole) != 0) continue;
    return carved;
  }
  throw std::runtime_error("no snake hole found");
}

coronoid::AbstractGraph two_hexagons_with_bridge() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  for (int i = 0; i < 6; ++i) edges.emplace_back(6 + i, 6 + (i + 1) % 6);
  edges.emplace_back(0, 12);
  edges.emplace_back(12, 13);
  edges.emplace_back(13, 6);
  return coronoid::AbstractGraph(14, std::move(edges));
}

coronoid::AbstractGraph hexagon_with_handle() {
  // Hexagon corners 0..5 in boundary order; the handle runs from corner 0
  // to corner 3 through ten fresh vertices, tracing an actual lattice path
  // around the right of the cell.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  edges.emplace_back(0, 6);
  for (int i = 6; i < 15; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(15, 3);
  return coronoid::AbstractGraph(16, std::move(edges));
}

PerimeterExample subdivided_prism() {
  std::vector<std::pair<int, int>> edges;
  // Outer pentagon 0..4 subdivided by 5..9; inner pentagon 10..14; rungs.
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, (i + 1) % 5);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 1) % 5);
  }
  PerimeterExample out;
  out.g = coronoid::AbstractGraph(15, std::move(edges));
  out.cycle = {0, 5, 1, 6, 2, 7, 3, 8, 4, 9};
  return out;
}

SubdividedCube subdivided_cube() {
  auto e1 = [](int a, int b) { return std::make_pair(a - 1, b - 1); };
  std::vector<std::pair<int, int>> edges{
      e1(1, 2), e1(2, 3), e1(3, 4), e1(4, 7), e1(7, 6), e1(6, 5), e1(5, 1),
      e1(5, 9), e1(9, 10), e1(10, 14), e1(14, 8), e1(8, 1), e1(10, 11),
      e1(11, 12), e1(12, 13), e1(13, 16), e1(16, 15), e1(15, 14), e1(3, 16),
      e1(7, 12)};
  SubdividedCube out;
  out.g = coronoid::AbstractGraph(16, std::move(edges));
  out.cycles = {{0, 1, 2, 3, 6, 5, 4}, {0, 4, 8, 9, 13, 7},
                {9, 10, 11, 12, 15, 14, 13}};
  return out;
}

}  // namespace figures
