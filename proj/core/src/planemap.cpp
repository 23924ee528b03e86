#include "coronoid/planemap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coronoid/error.hpp"

namespace coronoid {

AbstractGraph PlaneGraph::graph() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(ne());
  for (int e = 0; e < ne(); ++e) edges.push_back(edgeEnds(e));
  return AbstractGraph(nv(), std::move(edges));
}

std::vector<int> PlaneGraph::faceVertices(int f) const {
  std::vector<int> out;
  out.reserve(faceWalks[f].size());
  for (int d : faceWalks[f]) out.push_back(dartVertex[d]);
  return out;
}

PlaneGraph build_plane_graph(std::vector<std::vector<int>> rot, int outerDart) {
  PlaneGraph g;
  g.rot = std::move(rot);

  std::size_t darts = 0;
  for (const auto& list : g.rot) darts += list.size();
  if (darts == 0 || darts % 2 != 0)
    fail(Errc::bad_map, "odd number of darts");

  g.dartVertex.assign(darts, -1);
  g.sigma.assign(darts, -1);
  for (int v = 0; v < g.nv(); ++v) {
    const auto& list = g.rot[v];
    for (size_t i = 0; i < list.size(); ++i) {
      int d = list[i];
      if (d < 0 || d >= static_cast<int>(darts) || g.dartVertex[d] >= 0)
        fail(Errc::bad_map, "rotation lists do not partition the darts");
      g.dartVertex[d] = v;
      g.sigma[d] = list[(i + 1) % list.size()];
    }
  }
  for (int d = 0; d < static_cast<int>(darts); ++d)
    if (g.dartVertex[d] < 0)
      fail(Errc::bad_map, "rotation lists do not partition the darts");

  // Simple: no loops, no parallel edges.
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.ne(); ++e) {
    auto [u, v] = g.edgeEnds(e);
    if (u == v) fail(Errc::bad_map, "loop edge");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(Errc::bad_map, "parallel edge");
  }

  // Connected.
  {
    std::vector<bool> vis(g.nv(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int count = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (int d : g.rot[u]) {
        int w = g.head(d);
        if (!vis[w]) {
          vis[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (count != g.nv()) fail(Errc::bad_map, "graph is not connected");
  }

  // Trace faces: orbits of phi(d) = sigma(theta(d)), ids by smallest dart.
  g.faceOfDart.assign(darts, -1);
  for (int d0 = 0; d0 < static_cast<int>(darts); ++d0) {
    if (g.faceOfDart[d0] >= 0) continue;
    int id = static_cast<int>(g.faceWalks.size());
    std::vector<int> walk;
    int d = d0;
    do {
      g.faceOfDart[d] = id;
      walk.push_back(d);
      d = g.sigma[PlaneGraph::theta(d)];
    } while (d != d0);
    g.faceWalks.push_back(std::move(walk));
  }

  if (g.nv() - g.ne() + g.nf() != 2)
    fail(Errc::bad_map, "rotation system is not planar");

  if (outerDart < 0 || outerDart >= static_cast<int>(darts))
    fail(Errc::bad_map, "bad outer dart");
  g.outerFace = g.faceOfDart[outerDart];
  return g;
}

void require_cubic(const PlaneGraph& g) {
  for (int v = 0; v < g.nv(); ++v)
    if (g.degree(v) != 3) fail(Errc::bad_map, "map is not cubic");
}

bool FaceAdjacency::adjacent(int f1, int f2) const {
  if (f1 > f2) std::swap(f1, f2);
  auto it = sharedEdges.find({f1, f2});
  return it != sharedEdges.end() && it->second > 0;
}

FaceAdjacency face_adjacency(const PlaneGraph& g) {
  FaceAdjacency out;
  for (int e = 0; e < g.ne(); ++e) {
    auto [f1, f2] = g.edgeFaces(e);
    if (f1 > f2) std::swap(f1, f2);
    ++out.sharedEdges[{f1, f2}];
  }
  return out;
}

PatchSet make_patch(PlaneGraph map, std::vector<int> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) fail(Errc::bad_patch, "empty face subset");
  if (faces.front() < 0 || faces.back() >= map.nf())
    fail(Errc::bad_patch, "face id out of range");
  if (static_cast<int>(faces.size()) == map.nf())
    fail(Errc::bad_patch, "face subset must be proper");
  return {std::move(map), std::move(faces)};
}

namespace {

std::vector<std::vector<int>> components_of(const PlaneGraph& g,
                                            const std::vector<int>& faces) {
  std::set<int> pending(faces.begin(), faces.end());
  auto adj = face_adjacency(g);

  // Face adjacency lists restricted to the subset (support, not multiset).
  std::map<int, std::vector<int>> nbr;
  for (const auto& [key, count] : adj.sharedEdges) {
    (void)count;
    auto [f1, f2] = key;
    if (f1 == f2) continue;
    if (pending.count(f1) && pending.count(f2)) {
      nbr[f1].push_back(f2);
      nbr[f2].push_back(f1);
    }
  }

  std::vector<std::vector<int>> out;
  std::set<int> left(pending);
  while (!left.empty()) {
    std::vector<int> comp;
    std::vector<int> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      comp.push_back(f);
      for (int w : nbr[f]) {
        if (left.erase(w)) stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> face_components(const PlaneGraph& g,
                                              const std::vector<int>& faces) {
  return components_of(g, faces);
}

std::vector<std::vector<int>> complement_faces(const PlaneGraph& g,
                                               const std::vector<int>& faces) {
  std::set<int> in(faces.begin(), faces.end());
  std::vector<int> rest;
  for (int f = 0; f < g.nf(); ++f)
    if (!in.count(f)) rest.push_back(f);
  return components_of(g, rest);
}

bool is_perforated_patch(const PlaneGraph& g, const std::vector<int>& faces) {
  if (faces.empty() || static_cast<int>(faces.size()) >= g.nf()) return false;
  return face_components(g, faces).size() == 1;
}

bool is_patch(const PlaneGraph& g, const std::vector<int>& faces) {
  return is_perforated_patch(g, faces) &&
         complement_faces(g, faces).size() == 1;
}

std::vector<int> patch_closure(const PlaneGraph& g,
                               const std::vector<int>& faces, int forbidden) {
  if (!is_perforated_patch(g, faces))
    fail(Errc::bad_patch, "closure needs a perforated patch");
  if (std::binary_search(faces.begin(), faces.end(), forbidden))
    fail(Errc::bad_patch, "forbidden face lies inside the patch");
  if (forbidden < 0 || forbidden >= g.nf())
    fail(Errc::bad_patch, "forbidden face out of range");
  std::vector<int> out = faces;
  for (const auto& comp : complement_faces(g, faces)) {
    if (std::find(comp.begin(), comp.end(), forbidden) != comp.end()) continue;
    out.insert(out.end(), comp.begin(), comp.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubsetSkeleton subset_skeleton(const PlaneGraph& g,
                               const std::vector<int>& faces) {
  SubsetSkeleton out;
  std::set<int> vs;
  std::set<int> es;
  for (int f : faces) {
    for (int d : g.faceWalks[f]) {
      vs.insert(g.dartVertex[d]);
      es.insert(d / 2);
    }
  }
  out.vertices.assign(vs.begin(), vs.end());
  out.edges.assign(es.begin(), es.end());
  return out;
}

AbstractGraph subset_graph(const PlaneGraph& g, const std::vector<int>& faces,
                           std::vector<int>* vertexMap) {
  SubsetSkeleton sk = subset_skeleton(g, faces);
  std::map<int, int> idx;
  for (size_t i = 0; i < sk.vertices.size(); ++i)
    idx[sk.vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int e : sk.edges) {
    auto [u, v] = g.edgeEnds(e);
    edges.emplace_back(idx[u], idx[v]);
  }
  if (vertexMap) *vertexMap = sk.vertices;
  return AbstractGraph(static_cast<int>(sk.vertices.size()), std::move(edges));
}

bool has_ill_behaved_face(const PlaneGraph& g, const std::vector<int>& faces) {
  for (int f : faces) {
    std::set<int> used;
    for (int d : g.faceWalks[f])
      if (!used.insert(d / 2).second) return true;
  }
  return false;
}

bool is_2connected_patch(const PatchSet& p) {
  return !has_ill_behaved_face(p.map, p.faces);
}

PreGraph pregraph(const PlaneGraph& g, const std::vector<int>& faces) {
  std::set<int> in(faces.begin(), faces.end());
  std::set<int> kept;
  for (int f : faces)
    for (int d : g.faceWalks[f]) kept.insert(g.dartVertex[d]);

  PreGraph out;
  out.vertices.assign(kept.begin(), kept.end());
  for (int e = 0; e < g.ne(); ++e) {
    auto [f1, f2] = g.edgeFaces(e);
    if (in.count(f1) || in.count(f2)) {
      out.fullEdges.push_back(e);
      continue;
    }
    // Both sides removed: the edge is cut in the middle; each kept endpoint
    // retains a dangling half edge.
    for (int d : {2 * e, 2 * e + 1}) {
      int v = g.dartVertex[d];
      if (kept.count(v)) out.halfEdges.push_back({v, d});
    }
  }
  return out;
}

// --- surgery ---

namespace {

// Inserts dart `fresh` immediately after dart `anchor` in its rotation list.
void insert_after(std::vector<std::vector<int>>& rot, int vertex, int anchor,
                  int fresh) {
  auto& list = rot[vertex];
  auto it = std::find(list.begin(), list.end(), anchor);
  if (it == list.end()) fail(Errc::bad_map, "anchor dart missing");
  list.insert(it + 1, fresh);
}

// Positions of the visits of face f's walk, with the arriving dart for each.
struct Visit {
  int vertex;
  int arriving;  // walk dart whose head is vertex
  int leaving;   // walk dart whose origin is vertex
};

std::vector<Visit> face_visits(const PlaneGraph& g, int f) {
  const auto& walk = g.faceWalks[f];
  int len = static_cast<int>(walk.size());
  std::vector<Visit> out(len);
  for (int k = 0; k < len; ++k) {
    out[k].vertex = g.dartVertex[walk[k]];
    out[k].arriving = walk[(k - 1 + len) % len];
    out[k].leaving = walk[k];
  }
  return out;
}

}  // namespace

RingInsertion insert_ring_in_face(const PlaneGraph& g, int f, int spacing) {
  if (f < 0 || f >= g.nf()) fail(Errc::bad_cycle, "face out of range");
  auto visits = face_visits(g, f);

  std::vector<Visit> anchors;
  std::set<int> anchorVertices;
  for (const auto& vis : visits) {
    if (g.degree(vis.vertex) != 2) continue;
    if (!anchorVertices.insert(vis.vertex).second)
      fail(Errc::bad_cycle, "degree-2 vertex visited twice on the walk");
    anchors.push_back(vis);
  }
  int d = static_cast<int>(anchors.size());
  if (d < (spacing > 0 ? 2 : 3))
    fail(Errc::bad_cycle, "too few degree-2 vertices on the perimeter");

  int nv0 = g.nv(), ne0 = g.ne();
  int period = 1 + spacing;
  int total = d * period;

  auto rot = g.rot;
  rot.resize(nv0 + total);

  RingInsertion out;
  for (int j = 0; j < total; ++j) out.ringVertices.push_back(nv0 + j);
  for (int j = 0; j < total; ++j) out.ringEdges.push_back(ne0 + j);
  for (int i = 0; i < d; ++i) {
    out.spokeEdges.push_back(ne0 + total + i);
    out.anchors.push_back(anchors[i].vertex);
  }

  // Ring edge j joins ring vertex j to j+1; its first dart sits at j.
  auto ringDartFwd = [&](int j) { return 2 * (ne0 + j); };
  auto ringDartBack = [&](int j) { return 2 * (ne0 + j) + 1; };
  // Spoke i joins ring vertex i*period (dart 2e) to anchor i (dart 2e+1).
  auto spokeDartAtRing = [&](int i) { return 2 * (ne0 + total + i); };
  auto spokeDartAtAnchor = [&](int i) { return 2 * (ne0 + total + i) + 1; };

  for (int i = 0; i < d; ++i)
    insert_after(rot, anchors[i].vertex, PlaneGraph::theta(anchors[i].arriving),
                 spokeDartAtAnchor(i));

  for (int j = 0; j < total; ++j) {
    auto& list = rot[nv0 + j];
    list.push_back(ringDartFwd(j));  // toward next ring vertex
    if (j % period == 0) list.push_back(spokeDartAtRing(j / period));
    list.push_back(ringDartBack((j - 1 + total) % total));  // toward previous
  }

  int outerRep = (f == g.outerFace) ? ringDartFwd(0)
                                    : g.faceWalks[g.outerFace][0];
  out.map = build_plane_graph(std::move(rot), outerRep);

  out.faceRemap.assign(g.nf(), -1);
  for (int fo = 0; fo < g.nf(); ++fo)
    if (fo != f) out.faceRemap[fo] = out.map.faceOfDart[g.faceWalks[fo][0]];
  out.newFace = out.map.faceOfDart[ringDartFwd(0)];
  for (int i = 0; i < d; ++i)
    out.annulusFaces.push_back(out.map.faceOfDart[anchors[i].leaving]);
  return out;
}

namespace {

// Splits edge e with a fresh degree-2 vertex. Dart ids of e are reused for
// the half towards the first endpoint.
PlaneGraph subdivide_edge(const PlaneGraph& g, int e,
                          std::vector<int>* faceRemap) {
  auto [a, b] = g.edgeEnds(e);
  int m = g.nv();
  int fresh = g.ne();  // new edge m-b
  auto rot = g.rot;
  rot.resize(m + 1);
  // Old dart 2e keeps running a -> m; old dart 2e+1 now runs m -> a.
  auto& rb = rot[b];
  *std::find(rb.begin(), rb.end(), 2 * e + 1) = 2 * fresh + 1;
  rot[m] = {2 * e + 1, 2 * fresh};

  int outerRep = g.faceWalks[g.outerFace][0];
  if (outerRep == 2 * e + 1) outerRep = g.faceWalks[g.outerFace][1 % g.faceWalks[g.outerFace].size()];
  PlaneGraph out = build_plane_graph(std::move(rot), outerRep);
  if (faceRemap) {
    faceRemap->assign(g.nf(), -1);
    for (int fo = 0; fo < g.nf(); ++fo) {
      int rep = g.faceWalks[fo][0];
      if (rep == 2 * e + 1 && g.faceWalks[fo].size() > 1)
        rep = g.faceWalks[fo][1];
      (*faceRemap)[fo] = out.faceOfDart[rep];
    }
  }
  return out;
}

std::vector<int> degree2_on_outer(const PlaneGraph& g) {
  std::vector<int> order;
  std::set<int> seen;
  for (const auto& vis : face_visits(g, g.outerFace)) {
    if (g.degree(vis.vertex) != 2) continue;
    if (!seen.insert(vis.vertex).second)
      fail(Errc::bad_input, "degree-2 vertex visited twice on outer walk");
    order.push_back(vis.vertex);
  }
  for (int v = 0; v < g.nv(); ++v)
    if (g.degree(v) == 2 && !seen.count(v))
      fail(Errc::bad_input, "degree-2 vertex not on the outer perimeter");
  return order;
}

void compose_remap(std::vector<int>& acc, const std::vector<int>& step) {
  for (auto& f : acc)
    if (f >= 0) f = step[f];
}

// The arriving dart of face f's walk at vertex v (exactly one visit).
int face_arrival(const PlaneGraph& g, int f, int v) {
  int found = -1;
  for (const auto& vis : face_visits(g, f)) {
    if (vis.vertex != v) continue;
    if (found >= 0) fail(Errc::bad_input, "vertex visited twice on face walk");
    found = vis.arriving;
  }
  if (found < 0) fail(Errc::bad_input, "vertex not on face walk");
  return found;
}

int outer_arrival(const PlaneGraph& g, int v) {
  return face_arrival(g, g.outerFace, v);
}

// Adds the path u - p_1 - ... - p_count - v through the outer face, with
// optional spokes from p_{2i} to spokeTargets[i-1]. Used by the bipartite
// completion; count == 0 only when connecting u and v directly.
PlaneGraph add_outer_path(const PlaneGraph& g, int u, int v,
                          const std::vector<int>& spokeTargets, int count,
                          std::vector<int>* faceRemap) {
  int nv0 = g.nv(), ne0 = g.ne();
  auto rot = g.rot;
  rot.resize(nv0 + count);

  // Path edges: ne0 + k joins p_k to p_{k+1} (0 = u, count+1 = v).
  int pathEdges = count + 1;
  auto pathVertex = [&](int k) { return nv0 + k - 1; };  // k in 1..count
  auto edgeId = [&](int k) { return ne0 + k; };          // k in 0..count

  insert_after(rot, u, PlaneGraph::theta(outer_arrival(g, u)),
               2 * edgeId(0));
  insert_after(rot, v, PlaneGraph::theta(outer_arrival(g, v)),
               2 * edgeId(count) + 1);

  int spokeBase = ne0 + pathEdges;
  for (size_t i = 0; i < spokeTargets.size(); ++i) {
    int w = spokeTargets[i];
    int e = spokeBase + static_cast<int>(i);
    insert_after(rot, w, PlaneGraph::theta(outer_arrival(g, w)), 2 * e + 1);
  }

  for (int k = 1; k <= count; ++k) {
    auto& list = rot[pathVertex(k)];
    list.push_back(2 * edgeId(k));          // toward next
    if (k % 2 == 0 && k / 2 <= static_cast<int>(spokeTargets.size()))
      list.push_back(2 * (spokeBase + k / 2 - 1));  // spoke
    list.push_back(2 * edgeId(k - 1) + 1);  // toward previous
  }

  int outerRep = count > 0 ? 2 * edgeId(0) : 2 * edgeId(0);
  PlaneGraph out = build_plane_graph(std::move(rot), outerRep);
  if (faceRemap) {
    faceRemap->assign(g.nf(), -1);
    for (int fo = 0; fo < g.nf(); ++fo)
      if (fo != g.outerFace)
        (*faceRemap)[fo] = out.faceOfDart[g.faceWalks[fo][0]];
  }
  return out;
}

}  // namespace

namespace {

int degree2_count_on_face(const PlaneGraph& g, int f) {
  std::set<int> seen;
  for (const auto& vis : face_visits(g, f))
    if (g.degree(vis.vertex) == 2) seen.insert(vis.vertex);
  return static_cast<int>(seen.size());
}

// Attaches a cubic plug (K4 with one subdivided edge) to the degree-2
// vertex u through face f. The resulting graph cannot be 2-connected.
PlaneGraph attach_cherry(const PlaneGraph& g, int f, int u,
                         std::vector<int>& remapAcc) {
  int nv0 = g.nv(), ne0 = g.ne();
  auto rot = g.rot;
  rot.resize(nv0 + 5);
  int m = nv0, a = nv0 + 1, b = nv0 + 2, c = nv0 + 3, dd = nv0 + 4;
  // Edges: ne0: u-m, +1: m-a, +2: m-b, +3: a-c, +4: a-d, +5: b-c, +6: b-d,
  // +7: c-d. First dart of each edge sits at the first-listed endpoint.
  auto D = [&](int e, int side) { return 2 * (ne0 + e) + side; };
  insert_after(rot, u, PlaneGraph::theta(face_arrival(g, f, u)), D(0, 0));
  rot[m] = {D(2, 0), D(1, 0), D(0, 1)};
  rot[a] = {D(4, 0), D(3, 0), D(1, 1)};
  rot[b] = {D(5, 0), D(6, 0), D(2, 1)};
  rot[c] = {D(3, 1), D(7, 0), D(5, 1)};
  rot[dd] = {D(7, 1), D(4, 1), D(6, 1)};
  int outerRep = g.faceWalks[g.outerFace][0];

  PlaneGraph done;
  try {
    done = build_plane_graph(rot, outerRep);
  } catch (const Error&) {
    // Mirrored plug for the opposite ambient orientation.
    for (int v : {m, a, b, c, dd}) std::reverse(rot[v].begin(), rot[v].end());
    done = build_plane_graph(rot, outerRep);
  }
  std::vector<int> step(g.nf(), -1);
  for (int fo = 0; fo < g.nf(); ++fo)
    step[fo] = done.faceOfDart[g.faceWalks[fo][0]];
  compose_remap(remapAcc, step);
  return done;
}

int degree2_on_face_any(const PlaneGraph& g, int f) {
  for (const auto& vis : face_visits(g, f))
    if (g.degree(vis.vertex) == 2) return vis.vertex;
  fail(Errc::bad_input, "no degree-2 vertex on face");
}

// Raises every degree-2 vertex on face f to degree 3. The face id f refers
// to the CURRENT graph; remapAcc (original ids -> current) is updated.
PlaneGraph cap_face(const PlaneGraph& g, int f, std::vector<int>& remapAcc) {
  int d = degree2_count_on_face(g, f);
  if (d == 0) return g;

  if (d >= 3) {
    auto ins = insert_ring_in_face(g, f, 0);
    compose_remap(remapAcc, ins.faceRemap);
    return std::move(ins.map);
  }

  if (d == 2) {
    // A plain ring would be a double edge: expand first, then subdivide one
    // ring edge to reach three anchors, and close with a ring.
    auto first = insert_ring_in_face(g, f, 1);
    compose_remap(remapAcc, first.faceRemap);

    std::vector<int> step;
    PlaneGraph mid = subdivide_edge(first.map, first.ringEdges[0], &step);
    int hole = step[first.newFace];
    compose_remap(remapAcc, step);

    auto second = insert_ring_in_face(mid, hole, 0);
    compose_remap(remapAcc, second.faceRemap);
    return std::move(second.map);
  }

  return attach_cherry(g, f, degree2_on_face_any(g, f), remapAcc);
}

}  // namespace

CompletionResult cubic_completion(const PlaneGraph& g) {
  CompletionResult out;
  degree2_on_outer(g);  // validates the precondition

  out.faceRemap.resize(g.nf());
  std::iota(out.faceRemap.begin(), out.faceRemap.end(), 0);
  out.map = cap_face(g, g.outerFace, out.faceRemap);
  require_cubic(out.map);
  return out;
}

CompletionResult make_cubic_witness(const PlaneGraph& g,
                                    const std::vector<int>& protectedFaces) {
  CompletionResult out;
  out.map = g;
  out.faceRemap.resize(g.nf());
  std::iota(out.faceRemap.begin(), out.faceRemap.end(), 0);

  for (;;) {
    std::set<int> keep;
    for (int f : protectedFaces)
      if (out.faceRemap[f] >= 0) keep.insert(out.faceRemap[f]);

    int face = -1;
    for (int v = 0; v < out.map.nv() && face < 0; ++v) {
      if (out.map.degree(v) != 2) continue;
      for (int d : out.map.rot[v]) {
        int f = out.map.faceOfDart[d];
        if (!keep.count(f)) {
          face = f;
          break;
        }
      }
      if (face < 0)
        fail(Errc::bad_patch, "degree-2 vertex enclosed by protected faces");
    }
    if (face < 0) break;
    out.map = cap_face(out.map, face, out.faceRemap);
  }
  require_cubic(out.map);
  return out;
}

CompletionResult bipartite_cubic_completion(const PlaneGraph& g,
                                            std::vector<BipartiteStep>* audit) {
  std::vector<int> colour;
  if (!bipartition(g.graph(), colour))
    fail(Errc::bad_input, "graph is not bipartite");

  CompletionResult out;
  out.map = g;
  out.faceRemap.resize(g.nf());
  std::iota(out.faceRemap.begin(), out.faceRemap.end(), 0);

  auto record = [&](const PlaneGraph& cur) {
    if (!audit) return;
    std::vector<int> col;
    bipartition(cur.graph(), col);
    BipartiteStep st;
    for (int v = 0; v < cur.nv(); ++v) {
      if (cur.degree(v) != 2) continue;
      (col[v] == 0 ? st.deg2Black : st.deg2White)++;
    }
    audit->push_back(st);
  };
  record(out.map);

  while (true) {
    PlaneGraph& cur = out.map;
    auto deg2 = degree2_on_outer(cur);
    int n2 = static_cast<int>(deg2.size());
    if (n2 == 1) fail(Errc::bad_input, "single degree-2 vertex is impossible");
    if (n2 <= 2) break;

    std::vector<int> col;
    bipartition(cur.graph(), col);

    // Pick a colour class with two or more members and take a cyclically
    // consecutive pair of that colour along the outer walk.
    int black = col[deg2[0]];
    int countBlack = 0;
    for (int v : deg2) countBlack += (col[v] == black) ? 1 : 0;
    if (countBlack < 2) black = 1 - black;

    int first = -1;
    for (int i = 0; i < n2 && first < 0; ++i)
      if (col[deg2[i]] == black) first = i;
    int second = -1;
    for (int k = 1; k < n2 && second < 0; ++k)
      if (col[deg2[(first + k) % n2]] == black) second = (first + k) % n2;

    int u = deg2[first], v = deg2[second];
    std::vector<int> whites;
    for (int k = (first + 1) % n2; k != second; k = (k + 1) % n2)
      whites.push_back(deg2[k]);

    int before = n2;
    std::vector<int> step;
    // l whites vanish with u and v; l+1 fresh degree-2 vertices appear on
    // the new path, so the total drops by exactly one.
    int l = static_cast<int>(whites.size());
    out.map = add_outer_path(cur, u, v, whites, 2 * l + 1, &step);
    compose_remap(out.faceRemap, step);
    record(out.map);

    int after = static_cast<int>(degree2_on_outer(out.map).size());
    if (after != before - 1)
      fail(Errc::bad_map, "completion step did not reduce the count by one");
  }

  auto deg2 = degree2_on_outer(out.map);
  if (!deg2.empty()) {
    std::vector<int> col;
    bipartition(out.map.graph(), col);
    int u = deg2[0], v = deg2[1];
    if (col[u] == col[v])
      fail(Errc::bad_input, "terminal degree-2 pair has equal colours");
    if (!out.map.graph().has_edge(u, v)) {
      std::vector<int> step;
      out.map = add_outer_path(out.map, u, v, {}, 0, &step);
      compose_remap(out.faceRemap, step);
    } else {
      // Adjacent terminal pair: plug in a cube with one edge removed; its
      // two degree-2 corners have opposite colours by bipartiteness.
      PlaneGraph& cur = out.map;
      int nv0 = cur.nv(), ne0 = cur.ne();
      auto rot = cur.rot;
      rot.resize(nv0 + 8);
      int A = nv0, B = nv0 + 1, C = nv0 + 2, Dv = nv0 + 3;
      int A2 = nv0 + 4, B2 = nv0 + 5, C2 = nv0 + 6, D2 = nv0 + 7;
      // Edges: 0: u-A, 1: v-B, 2: B-C, 3: C-D, 4: D-A, 5: A-A2, 6: B-B2,
      // 7: C-C2, 8: D-D2, 9: A2-B2, 10: B2-C2, 11: C2-D2, 12: D2-A2.
      auto E = [&](int e, int side) { return 2 * (ne0 + e) + side; };
      insert_after(rot, u, PlaneGraph::theta(outer_arrival(cur, u)), E(0, 0));
      insert_after(rot, v, PlaneGraph::theta(outer_arrival(cur, v)), E(1, 0));
      rot[A] = {E(5, 0), E(4, 1), E(0, 1)};
      rot[B] = {E(2, 0), E(6, 0), E(1, 1)};
      rot[C] = {E(3, 0), E(7, 0), E(2, 1)};
      rot[Dv] = {E(4, 0), E(8, 0), E(3, 1)};
      rot[A2] = {E(9, 0), E(12, 1), E(5, 1)};
      rot[B2] = {E(10, 0), E(9, 1), E(6, 1)};
      rot[C2] = {E(11, 0), E(10, 1), E(7, 1)};
      rot[D2] = {E(12, 0), E(11, 1), E(8, 1)};
      int outerRep = cur.faceWalks[cur.outerFace][0];
      PlaneGraph done;
      try {
        done = build_plane_graph(rot, outerRep);
      } catch (const Error&) {
        for (int w : {A, B, C, Dv, A2, B2, C2, D2})
          std::reverse(rot[w].begin(), rot[w].end());
        done = build_plane_graph(rot, outerRep);
      }
      std::vector<int> step(cur.nf(), -1);
      for (int fo = 0; fo < cur.nf(); ++fo)
        if (fo != cur.outerFace)
          step[fo] = done.faceOfDart[cur.faceWalks[fo][0]];
      out.map = std::move(done);
      compose_remap(out.faceRemap, step);
    }
    record(out.map);
  }

  require_cubic(out.map);
  std::vector<int> finalCol;
  if (!bipartition(out.map.graph(), finalCol))
    fail(Errc::bad_map, "completion lost bipartiteness");
  return out;
}

// --- bridge from hexagonal systems ---

namespace {

// CCW rank of the six lattice edge directions.
int direction_rank(ScaledPoint from, ScaledPoint to) {
  long long dx = to.x - from.x, dy = to.y - from.y;
  if (dx == 1 && dy == 1) return 0;    // 30 degrees
  if (dx == 0 && dy == 2) return 1;    // 90
  if (dx == -1 && dy == 1) return 2;   // 150
  if (dx == -1 && dy == -1) return 3;  // 210
  if (dx == 0 && dy == -2) return 4;   // 270
  if (dx == 1 && dy == -1) return 5;   // 330
  fail(Errc::bad_input, "not a unit lattice direction");
}

}  // namespace

SkeletonPlane skeleton_plane(const SkeletonGraph& sk) {
  int n = static_cast<int>(sk.vertices.size());
  std::vector<std::vector<int>> rot(n);

  auto dartFromTo = [&](int u, int v) {
    int e = sk.edgeIndex(u, v);
    return (u < v) ? 2 * e : 2 * e + 1;
  };

  for (int v = 0; v < n; ++v) {
    auto p = vertex_point(sk.vertices[v]);
    std::vector<std::pair<int, int>> order;  // (rank, dart)
    for (int w : sk.adj[v])
      order.push_back(
          {direction_rank(p, vertex_point(sk.vertices[w])), dartFromTo(v, w)});
    std::sort(order.begin(), order.end());
    for (auto [rank, dart] : order) {
      (void)rank;
      rot[v].push_back(dart);
    }
  }

  // Vertex 0 is leftmost-lowest; the outer face lies right of the dart
  // arriving from its northern neighbour.
  int northDart = -1;
  auto p0 = vertex_point(sk.vertices[0]);
  for (int w : sk.adj[0])
    if (direction_rank(p0, vertex_point(sk.vertices[w])) == 1)
      northDart = dartFromTo(0, w);
  if (northDart < 0)
    fail(Errc::bad_input, "unexpected geometry at leftmost vertex");

  SkeletonPlane out;
  out.g = build_plane_graph(std::move(rot), PlaneGraph::theta(northDart));
  out.outerFace = out.g.outerFace;

  HexSystem k{std::vector<HexCoord>(sk.hexFaces)};
  for (auto cell : sk.hexFaces) {
    auto corners = boundary_cycle(cell);
    int i1 = sk.vertexIndex(corners[1]);
    int i0 = sk.vertexIndex(corners[0]);
    out.cellFace.push_back(out.g.faceOfDart[dartFromTo(i1, i0)]);
  }

  auto dec = complement_decomposition(k);
  for (const auto& hole : dec.holes) {
    int face = -1;
    for (auto hc : hole) {
      for (auto nb : neighbors(hc)) {
        if (!k.contains(nb)) continue;
        // Shared edge between hole cell hc and k-cell nb.
        auto ca = boundary_cycle(hc);
        auto cb = boundary_cycle(nb);
        std::vector<GridVertex> shared;
        for (auto x : ca)
          for (auto y : cb)
            if (x == y) shared.push_back(x);
        if (shared.size() != 2) continue;
        auto pa = vertex_point(shared[0]);
        auto pb = vertex_point(shared[1]);
        auto pc = cell_center(hc);
        long long cross = (pb.x - pa.x) * (pc.y - pa.y) -
                          (pb.y - pa.y) * (pc.x - pa.x);
        int u = sk.vertexIndex(shared[0]);
        int w = sk.vertexIndex(shared[1]);
        // The hole lies right of the dart whose cross product is negative.
        face = out.g.faceOfDart[cross < 0 ? dartFromTo(u, w)
                                          : dartFromTo(w, u)];
        break;
      }
      if (face >= 0) break;
    }
    if (face < 0) fail(Errc::bad_input, "hole face not found");
    out.holeFace.push_back(face);
  }
  return out;
}

PatchSet hex_patch(const HexSystem& k) {
  HexSystem closure = benzenoid_closure(k);
  SkeletonGraph sk = skeleton(closure);
  SkeletonPlane sp = skeleton_plane(sk);
  CompletionResult comp = cubic_completion(sp.g);

  std::vector<int> faces;
  for (size_t i = 0; i < closure.cells().size(); ++i) {
    if (!k.contains(closure.cells()[i])) continue;
    int f = comp.faceRemap[sp.cellFace[i]];
    if (f < 0) fail(Errc::bad_patch, "cell face lost in completion");
    faces.push_back(f);
  }
  return make_patch(std::move(comp.map), std::move(faces));
}

}  // namespace coronoid
