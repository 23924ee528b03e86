#include "coronoid/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coronoid/error.hpp"

namespace coronoid {

int SkeletonGraph::vertexIndex(GridVertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](GridVertex a, GridVertex b) {
                               return vertex_point(a) < vertex_point(b);
                             });
  if (it != vertices.end() && *it == v)
    return static_cast<int>(it - vertices.begin());
  return -1;
}

int SkeletonGraph::edgeIndex(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it != edges.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges.begin());
  return -1;
}

SkeletonGraph skeleton(const HexSystem& k) {
  if (!is_coronoid(k)) fail(Errc::not_a_coronoid, "skeleton needs a coronoid");

  SkeletonGraph g;
  g.hexFaces = k.cells();

  std::set<GridVertex> vset;
  for (auto h : k)
    for (auto v : boundary_cycle(h)) vset.insert(v);
  g.vertices.assign(vset.begin(), vset.end());
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](GridVertex a, GridVertex b) {
              return vertex_point(a) < vertex_point(b);
            });

  std::map<GridVertex, int> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;

  std::set<std::pair<int, int>> eset;
  for (auto h : k) {
    auto cyc = boundary_cycle(h);
    for (int i = 0; i < 6; ++i) {
      int u = index[cyc[i]], v = index[cyc[(i + 1) % 6]];
      eset.insert({std::min(u, v), std::max(u, v)});
    }
  }
  g.edges.assign(eset.begin(), eset.end());

  g.adj.assign(g.vertices.size(), {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());

  g.edgeInternal.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    auto cells = edge_cells(GridEdge(g.vertices[u], g.vertices[v]));
    g.edgeInternal.push_back(k.contains(cells[0]) && k.contains(cells[1]));
  }

  g.vertexInternal.reserve(g.vertices.size());
  for (auto v : g.vertices) {
    bool all = true;
    for (auto c : incident_cells(v)) all = all && k.contains(c);
    g.vertexInternal.push_back(all);
  }
  return g;
}

namespace {

long long shoelace2(const SkeletonGraph& g, const std::vector<int>& cycle) {
  long long s = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    auto a = vertex_point(g.vertices[cycle[i]]);
    auto b = vertex_point(g.vertices[cycle[(i + 1) % cycle.size()]]);
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

// Rotate so the leftmost-lowest vertex comes first (vertex indices are
// already ordered by position, so the smallest index wins).
void start_at_leftmost(std::vector<int>& cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
}

}  // namespace

std::vector<Perimeter> perimeters(const SkeletonGraph& g) {
  HexSystem k{std::vector<HexCoord>(g.hexFaces)};
  auto dec = complement_decomposition(k);

  // Boundary subgraph: 2-regular, so it decomposes into disjoint cycles.
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> badj(n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edgeInternal[e]) continue;
    auto [u, v] = g.edges[e];
    badj[u].push_back(v);
    badj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v)
    if (!badj[v].empty() && badj[v].size() != 2)
      fail(Errc::not_a_coronoid, "boundary subgraph is not 2-regular");

  std::vector<Perimeter> out;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s] || badj[s].empty()) continue;
    std::vector<int> cycle;
    int prev = -1, cur = s;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      int next = (badj[cur][0] == prev) ? badj[cur][1] : badj[cur][0];
      prev = cur;
      cur = next;
    } while (cur != s);

    // The complement cell across any cycle edge tells which region this
    // perimeter bounds.
    auto cells = edge_cells(
        GridEdge(g.vertices[cycle[0]], g.vertices[cycle[1]]));
    HexCoord outside = k.contains(cells[0]) ? cells[1] : cells[0];

    Perimeter p;
    p.cycle = std::move(cycle);
    p.kind = PerimeterKind::outer;
    for (size_t i = 0; i < dec.holes.size(); ++i) {
      if (dec.holes[i].contains(outside)) {
        p.kind = PerimeterKind::inner;
        p.holeIndex = static_cast<int>(i);
        break;
      }
    }

    start_at_leftmost(p.cycle);
    // Outer runs counterclockwise, inner clockwise: K stays on the left.
    long long area2 = shoelace2(g, p.cycle);
    bool wantCcw = p.kind == PerimeterKind::outer;
    if ((area2 > 0) != wantCcw)
      std::reverse(p.cycle.begin() + 1, p.cycle.end());
    out.push_back(std::move(p));
  }

  std::sort(out.begin(), out.end(), [](const Perimeter& a, const Perimeter& b) {
    if (a.kind != b.kind) return a.kind == PerimeterKind::outer;
    return a.holeIndex < b.holeIndex;
  });
  if (out.empty() || out[0].kind != PerimeterKind::outer ||
      std::count_if(out.begin(), out.end(), [](const Perimeter& p) {
        return p.kind == PerimeterKind::outer;
      }) != 1)
    fail(Errc::not_a_coronoid, "expected exactly one outer perimeter");
  // The leftmost vertex of the whole skeleton lies on the outer perimeter.
  if (std::find(out[0].cycle.begin(), out[0].cycle.end(), 0) ==
      out[0].cycle.end())
    fail(Errc::not_a_coronoid, "leftmost vertex not on outer perimeter");
  return out;
}

std::string canonical_cyclic_word(const std::string& w) {
  if (w.empty()) return w;
  std::string best;
  for (int dir = 0; dir < 2; ++dir) {
    std::string s = w;
    if (dir) std::reverse(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
      std::string rot = s.substr(i) + s.substr(0, i);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

BBCode bbc(const SkeletonGraph& g, const Perimeter& p) {
  BBCode out;
  out.raw.reserve(p.cycle.size());
  for (int v : p.cycle) out.raw.push_back(g.degree(v) == 2 ? '2' : '3');
  out.canonical = canonical_cyclic_word(out.raw);
  return out;
}

HoleStats hole_stats(const HexSystem& hole) {
  if (!is_benzenoid(hole))
    fail(Errc::not_a_benzenoid, "hole_stats needs a benzenoid");
  SkeletonGraph g = skeleton(hole);
  HoleStats st;
  st.h = static_cast<int>(hole.size());
  st.n = static_cast<int>(g.vertices.size());
  st.m = static_cast<int>(g.edges.size());
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertexInternal[v])
      ++st.nInternal;
    else if (g.degree(static_cast<int>(v)) == 3)
      ++st.nu;
  }
  if (st.nu != 2 * st.h - 2 - st.nInternal || st.nu != st.n - 2 * st.h - 4)
    fail(Errc::bad_input, "hole statistics identities violated");
  long long lhs = static_cast<long long>(st.nu + 3) * (st.nu + 3);
  if (lhs < 12LL * st.h - 3)
    fail(Errc::bad_input, "hole statistics bound violated");
  return st;
}

int girth(const SkeletonGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.adj[u]) {
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

int count_six_cycles(const SkeletonGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  long long found = 0;
  std::vector<bool> used(n, false);

  // Anchor each cycle at its smallest vertex; every 6-cycle is then seen
  // exactly twice (once per direction).
  auto dfs = [&](auto&& self, int anchor, int cur, int depth) -> void {
    for (int nxt : g.adj[cur]) {
      if (nxt == anchor && depth == 5) ++found;
      if (nxt <= anchor || used[nxt]) continue;
      if (depth + 1 >= 6) continue;
      used[nxt] = true;
      self(self, anchor, nxt, depth + 1);
      used[nxt] = false;
    }
  };
  for (int a = 0; a < n; ++a) {
    used[a] = true;
    dfs(dfs, a, a, 0);
    used[a] = false;
  }
  return static_cast<int>(found / 2);
}

}  // namespace coronoid
