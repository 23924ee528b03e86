#include "coronoid/json_io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "coronoid/error.hpp"

namespace coronoid {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::bad_input, "malformed JSON");
  return doc;
}

}  // namespace

HexSystem hex_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("hexes") || !doc["hexes"].is_array())
    fail(Errc::bad_input, "expected {\"hexes\": [[q,r],...]}");
  std::vector<HexCoord> cells;
  std::set<std::pair<int, int>> seen;
  for (const auto& item : doc["hexes"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      fail(Errc::bad_input, "hex entry must be [q,r]");
    int q = item[0].get<int>(), r = item[1].get<int>();
    if (!seen.insert({q, r}).second)
      fail(Errc::duplicate_cells, "duplicate hex entry");
    cells.push_back({q, r});
  }
  return HexSystem(std::move(cells));
}

std::string hex_to_json(const HexSystem& k) {
  json hexes = json::array();
  for (auto h : k) hexes.push_back(json::array({h.q, h.r}));
  return json{{"hexes", hexes}}.dump();
}

std::string skeleton_to_json(const SkeletonGraph& g) {
  json vertices = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    auto v = g.vertices[i];
    vertices.push_back({{"q", v.q},
                        {"r", v.r},
                        {"t", v.t},
                        {"label", g.vertexInternal[i] ? "internal" : "boundary"}});
  }
  json edges = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    edges.push_back(json::array({g.edges[e].first, g.edges[e].second}));
  }
  json faces = json::array();
  for (auto h : g.hexFaces) faces.push_back(json::array({h.q, h.r}));
  json labels = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e)
    labels.push_back(g.edgeInternal[e] ? "internal" : "boundary");
  return json{{"vertices", vertices},
              {"edges", edges},
              {"edgeLabels", labels},
              {"faces", faces}}
      .dump();
}

PlaneGraph map_from_json(const std::string& text) {
  json doc = parse(text);
  if (doc.is_object() && doc.contains("map")) doc = doc["map"];
  if (!doc.is_object() || !doc.contains("rotations") || !doc.contains("theta"))
    fail(Errc::bad_map, "expected {\"rotations\":..., \"theta\":...}");

  // theta pairs define the edges; external dart ids map onto 2k/2k+1.
  std::map<long long, int> dartId;
  int edges = 0;
  for (const auto& pair : doc["theta"]) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Errc::bad_map, "theta entry must be a pair");
    long long d1 = pair[0].get<long long>(), d2 = pair[1].get<long long>();
    if (d1 == d2 || dartId.count(d1) || dartId.count(d2))
      fail(Errc::bad_map, "theta is not an involution without fixed points");
    dartId[d1] = 2 * edges;
    dartId[d2] = 2 * edges + 1;
    ++edges;
  }

  std::vector<std::vector<int>> rot;
  for (const auto& list : doc["rotations"]) {
    std::vector<int> out;
    for (const auto& d : list) {
      auto it = dartId.find(d.get<long long>());
      if (it == dartId.end()) fail(Errc::bad_map, "unknown dart in rotations");
      out.push_back(it->second);
    }
    rot.push_back(std::move(out));
  }

  PlaneGraph g = build_plane_graph(std::move(rot), 0);
  int outer = doc.value("outer", 0);
  if (outer < 0 || outer >= g.nf()) fail(Errc::bad_map, "outer face id out of range");
  g.outerFace = outer;
  return g;
}

std::string map_to_json(const PlaneGraph& g) {
  json rotations = json::array();
  for (const auto& list : g.rot) rotations.push_back(list);
  json theta = json::array();
  for (int e = 0; e < g.ne(); ++e)
    theta.push_back(json::array({2 * e, 2 * e + 1}));
  return json{{"rotations", rotations},
              {"theta", theta},
              {"outer", g.outerFace}}
      .dump();
}

PatchSet patch_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("map") || !doc.contains("faces"))
    fail(Errc::bad_patch, "expected {\"map\":..., \"faces\":[...]}");
  PlaneGraph g = map_from_json(doc["map"].dump());
  require_cubic(g);
  std::vector<int> faces;
  for (const auto& f : doc["faces"]) faces.push_back(f.get<int>());
  return make_patch(std::move(g), std::move(faces));
}

std::string patch_to_json(const PatchSet& p) {
  json doc;
  doc["map"] = json::parse(map_to_json(p.map));
  doc["faces"] = p.faces;
  return doc.dump();
}

AbstractGraph edges_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) fail(Errc::bad_input, "expected header \"n m\"");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) fail(Errc::bad_input, "truncated edge list");
    edges.emplace_back(u, v);
  }
  return AbstractGraph(n, std::move(edges));
}

std::string report_to_json(const AltanTheoremReport& rep) {
  return json{{"K", rep.k.str()},
              {"Kprime", rep.kPrime.str()},
              {"exponentOk", rep.exponentOk},
              {"spokesZero", rep.spokesZero},
              {"perimeterHalf", rep.perimeterHalf},
              {"originalOrdersPreserved", rep.originalOrdersPreserved}}
      .dump();
}

std::string altan_to_json(const PlaneAltan& a) {
  json doc;
  doc["map"] = json::parse(map_to_json(a.g));
  doc["perimeterFaces"] = a.perimeterFaces;

  json vtags = json::array();
  for (const auto& t : a.vertexTags)
    vtags.push_back({{"cycle", t.cycle}, {"iteration", t.iteration}});
  doc["vertexTags"] = vtags;

  json spokes = json::array();
  for (auto [u, v] : a.spokes) spokes.push_back(json::array({u, v}));
  doc["spokes"] = spokes;

  json faces = json::array();
  for (const auto& cf : a.createdFaces)
    faces.push_back({{"face", cf.face},
                     {"cycle", cf.tag.cycle},
                     {"iteration", cf.tag.iteration},
                     {"degree", cf.degree}});
  doc["createdFaces"] = faces;
  return doc.dump();
}

}  // namespace coronoid
