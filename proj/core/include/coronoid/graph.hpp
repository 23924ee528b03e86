#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace coronoid {

// A simple undirected graph given by vertex count and a sorted edge list.
struct AbstractGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  AbstractGraph() = default;
  AbstractGraph(int n, std::vector<std::pair<int, int>> edges);

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;
};

struct SkeletonGraph;
AbstractGraph abstract_graph(const SkeletonGraph& g);

bool is_connected(const AbstractGraph& g);
bool is_biconnected(const AbstractGraph& g);

// Proper 2-colouring if one exists.
bool bipartition(const AbstractGraph& g, std::vector<int>& colour);

// Shortest cycle length, or -1 for forests.
int girth(const AbstractGraph& g);

// All simple 6-cycles, each reported once as a closed vertex walk starting
// at its smallest vertex.
std::vector<std::array<int, 6>> six_cycles(const AbstractGraph& g);

// Relabels vertices by perm (old index -> new index).
AbstractGraph relabel(const AbstractGraph& g, const std::vector<int>& perm);

}  // namespace coronoid
