#include "coronoid/altan.hpp"

#include <algorithm>
#include <set>

#include "coronoid/error.hpp"

namespace coronoid {

namespace {

void check_cycle(const AbstractGraph& g, const Cycle& c) {
  int len = static_cast<int>(c.vertices.size());
  if (len < 3) fail(Errc::bad_cycle, "cycle too short");
  std::set<int> distinct(c.vertices.begin(), c.vertices.end());
  if (static_cast<int>(distinct.size()) != len)
    fail(Errc::bad_cycle, "cycle repeats a vertex");
  for (int i = 0; i < len; ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % len];
    if (u < 0 || u >= g.n || !g.has_edge(u, v))
      fail(Errc::bad_cycle, "cycle edge missing from graph");
  }
}

std::vector<int> cycle_anchors(const std::vector<int>& deg, const Cycle& c) {
  std::vector<int> anchors;
  for (int v : c.vertices)
    if (deg[v] == 2) anchors.push_back(v);
  return anchors;
}

}  // namespace

void validate_admissible(const AdmissibleStructure& s) {
  auto deg = s.g.degrees();
  std::set<int> usedDeg2;
  for (const auto& c : s.cycles) {
    check_cycle(s.g, c);
    auto anchors = cycle_anchors(deg, c);
    if (anchors.size() < 2)
      fail(Errc::bad_cycle, "cycle has fewer than 2 degree-2 vertices");
    for (int v : anchors)
      if (!usedDeg2.insert(v).second)
        fail(Errc::bad_cycle, "degree-2 vertex on two cycles");
  }
}

std::vector<std::pair<int, int>> AltanResult::perimeterEdges(int j) const {
  const auto& c = s.cycles[j].vertices;
  std::vector<std::pair<int, int>> out;
  int len = static_cast<int>(c.size());
  for (int i = 0; i < len; ++i) {
    int u = c[i], v = c[(i + 1) % len];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> AltanResult::canonicalEdges() const {
  // Original vertices keep their ids; new ones are renumbered by tag, so
  // two runs that processed cycles in different orders agree exactly.
  std::vector<int> order(vertexTags.size());
  std::vector<int> fresh;
  for (size_t v = 0; v < vertexTags.size(); ++v)
    if (!vertexTags[v].original()) fresh.push_back(static_cast<int>(v));
  std::sort(fresh.begin(), fresh.end(), [&](int a, int b) {
    return vertexTags[a] < vertexTags[b];
  });
  int next = 0;
  for (size_t v = 0; v < vertexTags.size(); ++v)
    if (vertexTags[v].original()) order[v] = next++;
  for (int v : fresh) order[v] = next++;

  std::vector<std::pair<int, int>> out;
  out.reserve(s.g.edges.size());
  for (auto [u, v] : s.g.edges) {
    int a = order[u], b = order[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct AltanState {
  AdmissibleStructure s;
  std::vector<GenTag> vertexTags;
  std::map<std::pair<int, int>, GenTag> edgeTags;
  std::vector<std::pair<int, int>> spokes;
};

AltanState init_state(const AdmissibleStructure& s) {
  AltanState st;
  st.s = s;
  st.vertexTags.assign(s.g.n, GenTag{});
  for (auto e : s.g.edges) st.edgeTags[e] = GenTag{};
  return st;
}

// Replaces cycle j with a fresh cycle twice as long as its anchor count,
// spoked to the anchors in cycle order.
void expand(AltanState& st, int j, int iteration) {
  auto deg = st.s.g.degrees();
  const Cycle& c = st.s.cycles[j];
  auto anchors = cycle_anchors(deg, c);
  int d = static_cast<int>(anchors.size());
  if (d < 2) fail(Errc::bad_cycle, "cycle has fewer than 2 degree-2 vertices");

  int base = st.s.g.n;
  auto edges = st.s.g.edges;
  Cycle fresh;
  for (int x = 0; x < 2 * d; ++x) {
    fresh.vertices.push_back(base + x);
    st.vertexTags.push_back({j, iteration, x});
  }
  for (int x = 0; x < 2 * d; ++x) {
    int u = base + x, v = base + (x + 1) % (2 * d);
    auto e = std::minmax(u, v);
    edges.emplace_back(e.first, e.second);
    st.edgeTags[{e.first, e.second}] = {j, iteration, x};
  }
  for (int i = 0; i < d; ++i) {
    int u = base + 2 * i, v = anchors[i];
    auto e = std::minmax(u, v);
    edges.emplace_back(e.first, e.second);
    st.edgeTags[{e.first, e.second}] = {j, iteration, 2 * d + i};
    st.spokes.emplace_back(e.first, e.second);
  }
  st.s.g = AbstractGraph(base + 2 * d, std::move(edges));
  st.s.cycles[j] = std::move(fresh);
}

AltanResult finish(AltanState&& st) {
  AltanResult out;
  out.s = std::move(st.s);
  out.vertexTags = std::move(st.vertexTags);
  out.edgeTags = std::move(st.edgeTags);
  out.spokes = std::move(st.spokes);
  return out;
}

std::vector<int> checked_index_set(const AdmissibleStructure& s,
                                   std::vector<int> j) {
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int idx : j)
    if (idx < 0 || idx >= static_cast<int>(s.cycles.size()))
      fail(Errc::bad_iteration_vector, "cycle index out of range");
  return j;
}

}  // namespace

AltanResult altan(const AbstractGraph& g, const Cycle& c) {
  AdmissibleStructure s{g, {c}};
  validate_admissible(s);
  AltanState st = init_state(s);
  expand(st, 0, 1);
  return finish(std::move(st));
}

AltanResult generalised_altan(const AdmissibleStructure& s,
                              const std::vector<int>& j) {
  validate_admissible(s);
  auto idx = checked_index_set(s, j);
  AltanState st = init_state(s);
  for (int i : idx) expand(st, i, 1);
  return finish(std::move(st));
}

AltanResult iterated_altan(const AdmissibleStructure& s,
                           const std::vector<int>& n) {
  validate_admissible(s);
  if (n.size() != s.cycles.size())
    fail(Errc::bad_iteration_vector, "iteration vector length mismatch");
  for (int v : n)
    if (v < 0) fail(Errc::bad_iteration_vector, "negative entry");

  AltanState st = init_state(s);
  std::vector<int> left = n;
  int iteration = 1;
  for (;;) {
    std::vector<int> j;
    for (size_t i = 0; i < left.size(); ++i)
      if (left[i] > 0) j.push_back(static_cast<int>(i));
    if (j.empty()) break;
    for (int i : j) {
      expand(st, i, iteration);
      --left[i];
    }
    ++iteration;
  }
  return finish(std::move(st));
}

AdmissibleStructure admissible_from_coronoid(const HexSystem& k) {
  auto cls = classify(k);
  if (cls.kind == SystemKind::disconnected)
    fail(Errc::not_a_coronoid, "system is not connected");
  if (cls.degeneracy == Degeneracy::degenerate)
    fail(Errc::degenerate_coronoid, "coronoid has a single-cell hole");

  SkeletonGraph sk = skeleton(k);
  AdmissibleStructure out;
  out.g = abstract_graph(sk);
  for (const auto& p : perimeters(sk)) out.cycles.push_back({p.cycle});
  validate_admissible(out);
  return out;
}

// --- plane form ---

namespace {

void remap_faces(PlaneAltan& a, const std::vector<int>& remap) {
  for (auto& f : a.perimeterFaces)
    if (f >= 0) f = remap[f];
  for (auto& cf : a.createdFaces)
    if (cf.face >= 0) cf.face = remap[cf.face];
  if (a.outerOriginal >= 0) a.outerOriginal = remap[a.outerOriginal];
}

void plane_expand(PlaneAltan& a, int j, int iteration) {
  int f = a.perimeterFaces[j];
  auto ins = insert_ring_in_face(a.g, f, 1);

  for (size_t x = 0; x < ins.ringVertices.size(); ++x)
    a.vertexTags.push_back({j, iteration, static_cast<int>(x)});
  for (size_t x = 0; x < ins.ringEdges.size(); ++x) {
    auto [u, v] = ins.map.edgeEnds(ins.ringEdges[x]);
    auto e = std::minmax(u, v);
    a.edgeTags[{e.first, e.second}] = {j, iteration, static_cast<int>(x)};
  }
  int twoD = static_cast<int>(ins.ringVertices.size());
  for (size_t i = 0; i < ins.spokeEdges.size(); ++i) {
    auto [u, v] = ins.map.edgeEnds(ins.spokeEdges[i]);
    auto e = std::minmax(u, v);
    a.edgeTags[{e.first, e.second}] = {j, iteration,
                                       twoD + static_cast<int>(i)};
    a.spokes.emplace_back(e.first, e.second);
  }

  remap_faces(a, ins.faceRemap);
  a.perimeterFaces[j] = ins.newFace;
  for (size_t i = 0; i < ins.annulusFaces.size(); ++i) {
    int deg = static_cast<int>(ins.map.faceWalks[ins.annulusFaces[i]].size());
    a.createdFaces.push_back(
        {ins.annulusFaces[i], {j, iteration, static_cast<int>(i)}, deg});
  }
  a.g = std::move(ins.map);
}

}  // namespace

PlaneAltan plane_admissible_from_coronoid(const HexSystem& k) {
  auto cls = classify(k);
  if (cls.kind == SystemKind::disconnected)
    fail(Errc::not_a_coronoid, "system is not connected");
  if (cls.degeneracy == Degeneracy::degenerate)
    fail(Errc::degenerate_coronoid, "coronoid has a single-cell hole");

  SkeletonGraph sk = skeleton(k);
  SkeletonPlane sp = skeleton_plane(sk);

  PlaneAltan out;
  out.g = sp.g;
  out.perimeterFaces.push_back(sp.outerFace);
  for (int f : sp.holeFace) out.perimeterFaces.push_back(f);
  out.vertexTags.assign(out.g.nv(), GenTag{});
  for (int e = 0; e < out.g.ne(); ++e) {
    auto [u, v] = out.g.edgeEnds(e);
    auto key = std::minmax(u, v);
    out.edgeTags[{key.first, key.second}] = GenTag{};
  }
  out.outerOriginal = sp.outerFace;
  return out;
}

PlaneAltan plane_admissible_from_patch(const PatchSet& p) {
  if (!is_perforated_patch(p.map, p.faces))
    fail(Errc::bad_patch, "face subset is not a perforated patch");

  // The skeleton of the patch with induced rotations: every complement
  // component collapses into a single region face.
  SubsetSkeleton sk = subset_skeleton(p.map, p.faces);
  std::map<int, int> vidx;
  for (size_t i = 0; i < sk.vertices.size(); ++i)
    vidx[sk.vertices[i]] = static_cast<int>(i);
  std::map<int, int> eidx;
  for (size_t i = 0; i < sk.edges.size(); ++i)
    eidx[sk.edges[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> rot(sk.vertices.size());
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    for (int d : p.map.rot[sk.vertices[i]]) {
      auto it = eidx.find(d / 2);
      if (it == eidx.end()) continue;  // edge dropped with the region
      rot[i].push_back(2 * it->second + (d % 2));
    }
  }

  // For every complement component find a sub-map dart whose right side is
  // that region: take a kept edge on the region's boundary, directed so the
  // patch lies on its left.
  std::set<int> inPatch(p.faces.begin(), p.faces.end());
  auto comps = complement_faces(p.map, p.faces);
  std::vector<int> regionRep(comps.size(), -1);
  for (int e : sk.edges) {
    auto [f1, f2] = p.map.edgeFaces(e);
    bool b1 = inPatch.count(f1) > 0, b2 = inPatch.count(f2) > 0;
    if (b1 == b2) continue;
    int regionFace = b1 ? f2 : f1;
    int dart = b1 ? 2 * e + 1 : 2 * e;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      if (regionRep[ci] >= 0) continue;
      if (std::find(comps[ci].begin(), comps[ci].end(), regionFace) !=
          comps[ci].end())
        regionRep[ci] = 2 * eidx[e] + (dart % 2);
    }
  }
  int outerComp = -1;
  for (size_t ci = 0; ci < comps.size(); ++ci)
    if (std::find(comps[ci].begin(), comps[ci].end(), p.map.outerFace) !=
        comps[ci].end())
      outerComp = static_cast<int>(ci);
  if (outerComp < 0 || regionRep[outerComp] < 0)
    fail(Errc::bad_patch, "could not locate the outer region");

  PlaneAltan out;
  out.g = build_plane_graph(std::move(rot), regionRep[outerComp]);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    if (regionRep[ci] < 0) fail(Errc::bad_patch, "region face not found");
    out.perimeterFaces.push_back(out.g.faceOfDart[regionRep[ci]]);
  }

  out.vertexTags.assign(out.g.nv(), GenTag{});
  for (int e = 0; e < out.g.ne(); ++e) {
    auto [u, v] = out.g.edgeEnds(e);
    auto key = std::minmax(u, v);
    out.edgeTags[{key.first, key.second}] = GenTag{};
  }
  out.outerOriginal = out.g.outerFace;
  return out;
}

PlaneAltan plane_iterated_altan(PlaneAltan base, const std::vector<int>& n) {
  if (n.size() != base.perimeterFaces.size())
    fail(Errc::bad_iteration_vector, "iteration vector length mismatch");
  for (int v : n)
    if (v < 0) fail(Errc::bad_iteration_vector, "negative entry");

  std::vector<int> left = n;
  int iteration = 1;
  for (;;) {
    std::vector<int> j;
    for (size_t i = 0; i < left.size(); ++i)
      if (left[i] > 0) j.push_back(static_cast<int>(i));
    if (j.empty()) break;
    for (int i : j) {
      plane_expand(base, i, iteration);
      --left[i];
    }
    ++iteration;
  }
  return base;
}

PatchSet realize_patch(const PlaneAltan& a) {
  // Patch faces: everything except the region faces.
  std::set<int> regions(a.perimeterFaces.begin(), a.perimeterFaces.end());
  std::vector<int> patchFaces;
  for (int f = 0; f < a.g.nf(); ++f)
    if (!regions.count(f)) patchFaces.push_back(f);

  CompletionResult witness = make_cubic_witness(a.g, patchFaces);
  std::vector<int> mapped;
  for (int f : patchFaces) {
    if (witness.faceRemap[f] < 0)
      fail(Errc::bad_patch, "patch face lost while capping");
    mapped.push_back(witness.faceRemap[f]);
  }
  return make_patch(std::move(witness.map), std::move(mapped));
}

FaceDegreePrediction new_face_degrees(const std::string& code) {
  int twos = 0;
  for (char ch : code) {
    if (ch != '2' && ch != '3') fail(Errc::bad_input, "code symbol not 2/3");
    twos += (ch == '2') ? 1 : 0;
  }
  if (twos < 2) fail(Errc::bad_input, "code needs at least two 2s");

  // Rotate so the word starts at its first 2, then read the 3-runs.
  std::string w = code;
  auto at = w.find('2');
  std::rotate(w.begin(), w.begin() + at, w.end());

  FaceDegreePrediction out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i + 1;
    int run = 0;
    while (j < w.size() && w[j] == '3') ++run, ++j;
    out.degrees.push_back(run + 5);
    i = j;
  }
  for (int i2 = 0; i2 < twos; ++i2) out.newCode += "32";
  return out;
}

WitnessFace assert_not_coronoid(const HexSystem& k, const std::vector<int>& n) {
  bool proper = false;
  for (int v : n) proper = proper || v > 0;
  if (!proper)
    fail(Errc::bad_iteration_vector, "altan with n = 0 changes nothing");

  PlaneAltan a = plane_iterated_altan(plane_admissible_from_coronoid(k), n);
  for (const auto& cf : a.createdFaces)
    if (cf.degree != 6) return {cf.face, cf.degree, cf.tag};
  fail(Errc::bad_input, "no non-hexagonal face found");
}

}  // namespace coronoid
