#include "coronoid/graph.hpp"

#include <algorithm>

#include "coronoid/error.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

AbstractGraph::AbstractGraph(int n_, std::vector<std::pair<int, int>> e)
    : n(n_), edges(std::move(e)) {
  for (auto& [u, v] : edges) {
    if (u == v) fail(Errc::bad_input, "loop edge");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) fail(Errc::bad_input, "edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) fail(Errc::bad_input, "parallel edge");
}

std::vector<std::vector<int>> AbstractGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> AbstractGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) ++deg[u], ++deg[v];
  return deg;
}

bool AbstractGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

AbstractGraph abstract_graph(const SkeletonGraph& g) {
  return AbstractGraph(static_cast<int>(g.vertices.size()), g.edges);
}

bool is_connected(const AbstractGraph& g) {
  if (g.n == 0) return true;
  auto adj = g.adjacency();
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++count;
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return count == g.n;
}

bool is_biconnected(const AbstractGraph& g) {
  if (g.n < 3) return is_connected(g);
  auto adj = g.adjacency();
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  int timer = 0;
  bool ok = true;
  int rootChildren = 0;

  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    for (int v : adj[u]) {
      if (v == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
        continue;
      }
      if (parent < 0) ++rootChildren;
      self(self, v, u);
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= disc[u]) ok = false;
    }
  };
  dfs(dfs, 0, -1);
  if (rootChildren > 1) ok = false;
  for (int v = 0; v < g.n; ++v)
    if (disc[v] < 0) return false;  // disconnected
  return ok;
}

bool bipartition(const AbstractGraph& g, std::vector<int>& colour) {
  auto adj = g.adjacency();
  colour.assign(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int girth(const AbstractGraph& g) {
  auto adj = g.adjacency();
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::array<int, 6>> six_cycles(const AbstractGraph& g) {
  auto adj = g.adjacency();
  std::vector<std::array<int, 6>> out;
  std::vector<bool> used(g.n, false);
  std::array<int, 6> path{};

  auto dfs = [&](auto&& self, int anchor, int cur, int depth) -> void {
    for (int nxt : adj[cur]) {
      if (nxt == anchor && depth == 5) {
        // Keep one direction only: second vertex smaller than last.
        if (path[1] < path[5]) out.push_back(path);
      }
      if (nxt <= anchor || used[nxt] || depth + 1 >= 6) continue;
      used[nxt] = true;
      path[depth + 1] = nxt;
      self(self, anchor, nxt, depth + 1);
      used[nxt] = false;
    }
  };
  for (int a = 0; a < g.n; ++a) {
    used[a] = true;
    path[0] = a;
    dfs(dfs, a, a, 0);
    used[a] = false;
  }
  return out;
}

AbstractGraph relabel(const AbstractGraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return AbstractGraph(g.n, std::move(edges));
}

}  // namespace coronoid
