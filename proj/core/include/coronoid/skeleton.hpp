#pragma once

#include <string>
#include <vector>

#include "coronoid/hexsystem.hpp"

namespace coronoid {

// The coronoid graph G(K): every lattice vertex and edge incident to at
// least one cell of K. Vertices are indexed in order of their scaled plane
// position (x, then y), so index 0 is always the leftmost-lowest vertex.
struct SkeletonGraph {
  std::vector<GridVertex> vertices;
  std::vector<bool> vertexInternal;
  std::vector<std::pair<int, int>> edges;  // index pairs, first < second
  std::vector<bool> edgeInternal;          // both sides in K
  std::vector<std::vector<int>> adj;       // sorted neighbour indices
  std::vector<HexCoord> hexFaces;          // cells of K, sorted

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int vertexIndex(GridVertex v) const;     // -1 when absent
  int edgeIndex(int u, int v) const;       // -1 when absent
};

// Requires a coronoid (finite, connected, non-empty).
SkeletonGraph skeleton(const HexSystem& k);

enum class PerimeterKind { outer, inner };

// One cycle of the boundary subgraph. The vertex list starts at the cycle's
// leftmost-lowest vertex and runs counterclockwise for the outer perimeter
// and clockwise for inner ones, so the cells of K are always on the left.
struct Perimeter {
  std::vector<int> cycle;  // vertex indices into the skeleton
  PerimeterKind kind = PerimeterKind::outer;
  int holeIndex = -1;      // index into complement_decomposition(K).holes
};

// All perimeters: the outer one first, then inner ones in hole order.
std::vector<Perimeter> perimeters(const SkeletonGraph& g);

// Binary boundary code: the cyclic word of vertex degrees (2/3) along a
// perimeter. raw starts at the perimeter's stored starting vertex; canonical
// is the least word over all rotations of both reading directions.
struct BBCode {
  std::string raw;
  std::string canonical;
};

BBCode bbc(const SkeletonGraph& g, const Perimeter& p);

// Least representative of a cyclic word up to rotation and reversal.
std::string canonical_cyclic_word(const std::string& w);

// Invariants of a corona hole viewed as a benzenoid on its own. nu counts
// the hole's boundary vertices of degree 3; they are exactly the degree-2
// vertices of the enclosing coronoid's inner perimeter.
struct HoleStats {
  int h = 0;
  int n = 0;
  int m = 0;
  int nInternal = 0;
  int nu = 0;
};

HoleStats hole_stats(const HexSystem& hole);

// Shortest cycle length and the number of 6-cycles, by exhaustive search.
int girth(const SkeletonGraph& g);
int count_six_cycles(const SkeletonGraph& g);

}  // namespace coronoid
