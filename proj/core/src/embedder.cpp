#include "coronoid/embedder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "coronoid/error.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

namespace {

struct Assignment {
  std::vector<bool> placed;
  std::vector<GridVertex> pos;
  std::map<ScaledPoint, int> occupant;

  explicit Assignment(int n) : placed(n, false), pos(n) {}

  void put(int vertex, GridVertex where) {
    ScaledPoint p = vertex_point(where);
    if (placed[vertex]) {
      if (!(pos[vertex] == where))
        fail(Errc::embedding_conflict,
             "vertex forced onto two lattice positions");
      return;
    }
    auto [it, fresh] = occupant.emplace(p, vertex);
    if (!fresh && it->second != vertex)
      fail(Errc::embedding_conflict,
           "two vertices forced onto one lattice position");
    placed[vertex] = true;
    pos[vertex] = where;
  }
};

// Maps cycle onto cell so that cycle[i] -> u and cycle[i+1] -> v.
void place_cycle(Assignment& asg, const std::array<int, 6>& cycle,
                 HexCoord cell, int i, GridVertex u, GridVertex v) {
  auto corners = boundary_cycle(cell);
  int a = -1, b = -1;
  for (int k = 0; k < 6; ++k) {
    if (corners[k] == u) a = k;
    if (corners[k] == v) b = k;
  }
  if (a < 0 || b < 0) fail(Errc::embedding_conflict, "edge not on target cell");
  int step = (b - a + 6) % 6;
  if (step != 1 && step != 5)
    fail(Errc::embedding_conflict, "edge endpoints not adjacent on cell");
  for (int k = 0; k < 6; ++k)
    asg.put(cycle[(i + k) % 6], corners[(a + step * k) % 6]);
}

}  // namespace

HexSystem embed(const AbstractGraph& g, EmbedOptions opts) {
  if (g.n == 0) fail(Errc::no_hexagon_found, "empty graph");
  for (int d : g.degrees())
    if (d < 2 || d > 3)
      fail(Errc::bad_input, "vertex degree outside {2,3}");
  if (!is_connected(g)) fail(Errc::bad_input, "graph is not connected");

  auto cycles = six_cycles(g);
  if (cycles.empty()) fail(Errc::no_hexagon_found, "graph has no 6-cycle");

  // Index 6-cycles by the edges they use.
  std::map<std::pair<int, int>, std::vector<int>> byEdge;
  for (size_t c = 0; c < cycles.size(); ++c) {
    for (int k = 0; k < 6; ++k) {
      int u = cycles[c][k], v = cycles[c][(k + 1) % 6];
      byEdge[{std::min(u, v), std::max(u, v)}].push_back(
          static_cast<int>(c));
    }
  }

  std::mt19937_64 rng(opts.seed);
  int start = static_cast<int>(rng() % cycles.size());
  bool flip = (rng() & 1) != 0;

  Assignment asg(g.n);
  std::vector<bool> cycleDone(cycles.size(), false);
  std::map<HexCoord, int> cellOf;

  // Seed: the chosen cycle becomes the boundary of cell (0,0), in one of
  // the two orientations. Both lead to equivalent systems.
  {
    auto corners = boundary_cycle(HexCoord{0, 0});
    for (int k = 0; k < 6; ++k) {
      int idx = flip ? (6 - k) % 6 : k;
      asg.put(cycles[start][k], corners[idx]);
    }
    cycleDone[start] = true;
    cellOf[{0, 0}] = start;
  }

  std::deque<int> queue{start};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int k = 0; k < 6; ++k) {
      int u = cycles[c][k], v = cycles[c][(k + 1) % 6];
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      for (int other : byEdge[key]) {
        if (cycleDone[other]) continue;
        // The lattice edge uv borders two cells; the one this cycle does
        // not occupy is forced for the neighbour.
        GridEdge ge(asg.pos[u], asg.pos[v]);
        auto cands = edge_cells(ge);
        HexCoord mine{0, 0};
        bool found = false;
        for (auto cc : cands) {
          auto it = cellOf.find(cc);
          if (it != cellOf.end() && it->second == c) {
            mine = cc;
            found = true;
          }
        }
        if (!found) fail(Errc::embedding_conflict, "lost track of a cell");
        HexCoord target = (cands[0] == mine) ? cands[1] : cands[0];

        const auto& oc = cycles[other];
        int i = -1;
        for (int t = 0; t < 6; ++t) {
          int a = oc[t], b = oc[(t + 1) % 6];
          if ((a == u && b == v) || (a == v && b == u)) i = t;
        }
        place_cycle(asg, oc, target, i, asg.pos[oc[i]],
                    asg.pos[oc[(i + 1) % 6]]);
        if (cellOf.count(target))
          fail(Errc::embedding_conflict, "two 6-cycles forced onto one cell");
        cellOf[target] = other;
        cycleDone[other] = true;
        queue.push_back(other);
      }
    }
  }

  // Every vertex must lie on some reachable 6-cycle.
  for (int v = 0; v < g.n; ++v)
    if (!asg.placed[v])
      fail(Errc::verification_failed,
           "vertex not covered by reachable 6-cycles");

  std::set<GridEdge> imageEdges;
  for (auto [u, v] : g.edges) {
    if (!vertices_adjacent(asg.pos[u], asg.pos[v]))
      fail(Errc::embedding_conflict, "edge maps onto no lattice edge");
    imageEdges.insert(GridEdge(asg.pos[u], asg.pos[v]));
  }

  // Cells whose entire boundary is present in the image.
  std::set<HexCoord> cellSet;
  for (const auto& [cell, idx] : cellOf) {
    (void)idx;
    for (auto n : neighbors(cell)) cellSet.insert(n);
    cellSet.insert(cell);
  }
  std::vector<HexCoord> cells;
  for (auto cell : cellSet) {
    auto corners = boundary_cycle(cell);
    bool full = true;
    for (int k = 0; k < 6 && full; ++k)
      full = imageEdges.count(GridEdge(corners[k], corners[(k + 1) % 6])) > 0;
    if (full) cells.push_back(cell);
  }
  HexSystem result{std::move(cells)};
  if (!is_coronoid(result))
    fail(Errc::verification_failed, "image is not a connected system");

  // Final check: the image must be exactly the skeleton of the result.
  SkeletonGraph sk = skeleton(result);
  if (sk.vertices.size() != static_cast<size_t>(g.n) ||
      sk.edges.size() != g.edges.size())
    fail(Errc::verification_failed, "image is not a coronoid skeleton");
  for (auto v : sk.vertices)
    if (!asg.occupant.count(vertex_point(v)))
      fail(Errc::verification_failed, "skeleton vertex missing from image");
  for (auto [u, v] : sk.edges)
    if (!imageEdges.count(GridEdge(sk.vertices[u], sk.vertices[v])))
      fail(Errc::verification_failed, "skeleton edge missing from image");
  return result;
}

bool roundtrip_check(const HexSystem& k, EmbedOptions opts) {
  return are_equivalent(embed(abstract_graph(skeleton(k)), opts), k);
}

}  // namespace coronoid
