#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coronoid/graph.hpp"
#include "coronoid/hexsystem.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

// A plane graph as a rotation system. Edge k owns darts 2k and 2k+1; dart d
// runs from vertex(d) to vertex(theta(d)) with theta(d) = d^1. rot lists the
// darts leaving each vertex in counterclockwise order. Faces are the orbits
// of phi(d) = sigma(theta(d)); the face of a dart lies on its left, so
// bounded faces are counterclockwise walks and the outer face is the one
// clockwise walk. Face ids are assigned by smallest dart in the orbit.
struct PlaneGraph {
  std::vector<std::vector<int>> rot;        // vertex -> outgoing darts, CCW
  std::vector<int> dartVertex;              // dart -> origin vertex
  std::vector<int> sigma;                   // dart -> next dart at vertex
  std::vector<int> faceOfDart;              // dart -> face id
  std::vector<std::vector<int>> faceWalks;  // face id -> dart orbit
  int outerFace = 0;

  int nv() const { return static_cast<int>(rot.size()); }
  int ne() const { return static_cast<int>(dartVertex.size()) / 2; }
  int nf() const { return static_cast<int>(faceWalks.size()); }
  static int theta(int d) { return d ^ 1; }
  int head(int d) const { return dartVertex[theta(d)]; }
  std::pair<int, int> edgeEnds(int e) const {
    return {dartVertex[2 * e], dartVertex[2 * e + 1]};
  }
  std::pair<int, int> edgeFaces(int e) const {
    return {faceOfDart[2 * e], faceOfDart[2 * e + 1]};
  }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  AbstractGraph graph() const;

  // Vertices of a face walk, in walk order.
  std::vector<int> faceVertices(int f) const;
};

// Validates the rotation lists (every dart exactly once), simplicity,
// connectivity and the Euler formula V - E + F = 2, then traces faces.
// outerDart designates the outer face by one of its darts.
PlaneGraph build_plane_graph(std::vector<std::vector<int>> rot, int outerDart);

void require_cubic(const PlaneGraph& g);

// Face adjacency as a multiset: two faces may share several edges, and an
// ill-behaved edge has the same face on both sides.
struct FaceAdjacency {
  std::map<std::pair<int, int>, int> sharedEdges;  // key f1 <= f2
  bool adjacent(int f1, int f2) const;
};
FaceAdjacency face_adjacency(const PlaneGraph& g);

// A chosen subset of faces of a cubic plane map.
struct PatchSet {
  PlaneGraph map;
  std::vector<int> faces;  // sorted, unique, proper non-empty subset
};

PatchSet make_patch(PlaneGraph map, std::vector<int> faces);

std::vector<std::vector<int>> face_components(const PlaneGraph& g,
                                              const std::vector<int>& faces);
std::vector<std::vector<int>> complement_faces(const PlaneGraph& g,
                                               const std::vector<int>& faces);

bool is_perforated_patch(const PlaneGraph& g, const std::vector<int>& faces);
bool is_patch(const PlaneGraph& g, const std::vector<int>& faces);

// Closure of P with respect to a forbidden face p in its complement:
// P plus every complement component except the one containing p.
std::vector<int> patch_closure(const PlaneGraph& g,
                               const std::vector<int>& faces, int forbidden);

// Skeleton of a face subset: every vertex and edge incident to a chosen
// face. Vertices and edges keep their ids in the ambient map.
struct SubsetSkeleton {
  std::vector<int> vertices;
  std::vector<int> edges;
};
SubsetSkeleton subset_skeleton(const PlaneGraph& g,
                               const std::vector<int>& faces);
AbstractGraph subset_graph(const PlaneGraph& g, const std::vector<int>& faces,
                           std::vector<int>* vertexMap = nullptr);

// 2-connectivity via ill-behaved faces: a face whose boundary walk uses
// some edge twice signals a bridge.
bool has_ill_behaved_face(const PlaneGraph& g, const std::vector<int>& faces);
bool is_2connected_patch(const PatchSet& p);

// Dangling half edges appear where an edge lies between two complement
// faces but still touches the patch through an endpoint.
struct PreGraph {
  std::vector<int> vertices;                 // kept vertices of the map
  std::vector<int> fullEdges;                // kept edge ids
  std::vector<std::pair<int, int>> halfEdges;  // (vertex, dart id)
};
PreGraph pregraph(const PlaneGraph& g, const std::vector<int>& faces);

// Extends a subcubic plane graph with all degree-2 vertices on the outer
// perimeter to a simple cubic plane map; inner faces survive unchanged.
// faceRemap maps surviving face ids to ids in the result.
struct CompletionResult {
  PlaneGraph map;
  std::vector<int> faceRemap;  // -1 for the replaced outer face
};
CompletionResult cubic_completion(const PlaneGraph& g);

// Bipartite variant: the result is also bipartite. Each round attaches a
// path over a run of degree-2 vertices and lowers their count by one; the
// audit records the two-colour counts after every round.
struct BipartiteStep {
  int deg2Black = 0;
  int deg2White = 0;
};
CompletionResult bipartite_cubic_completion(
    const PlaneGraph& g, std::vector<BipartiteStep>* audit = nullptr);

// Caps every region holding degree-2 vertices, not only the outer one, so
// any subcubic plane graph becomes a cubic map it embeds in. Faces are
// interchangeable on the sphere, which is what makes this legitimate.
// protectedFaces (ids in g) are never capped.
CompletionResult make_cubic_witness(const PlaneGraph& g,
                                    const std::vector<int>& protectedFaces = {});

// --- plane surgery building blocks ---

// Inserts a cycle of new vertices inside face f, with a spoke to every
// degree-2 vertex on f's boundary walk and `spacing` plain vertices between
// consecutive spoked ones. spacing 1 is the altan expansion, spacing 0 the
// completion ring. Requires at least 2 (spacing 1) or 3 (spacing 0) anchors.
struct RingInsertion {
  PlaneGraph map;
  std::vector<int> faceRemap;      // old face id -> new face id; -1 for f
  std::vector<int> anchors;        // old degree-2 vertices in walk order
  std::vector<int> ringVertices;   // new vertex ids in walk order
  std::vector<int> spokeEdges;     // new edge ids, one per anchor
  std::vector<int> ringEdges;      // new edge ids around the cycle
  std::vector<int> annulusFaces;   // face after anchor i, in anchor order
  int newFace = -1;                // face enclosed by the new cycle
};
RingInsertion insert_ring_in_face(const PlaneGraph& g, int f, int spacing);

// --- bridge from hexagonal systems ---

// The natural plane embedding of a coronoid skeleton, with the faces
// matched back to cells, corona holes and the exterior.
struct SkeletonPlane {
  PlaneGraph g;
  std::vector<int> cellFace;  // per skeleton hexFaces index
  std::vector<int> holeFace;  // per complement_decomposition hole index
  int outerFace = 0;
};
SkeletonPlane skeleton_plane(const SkeletonGraph& sk);

// Realizes K as a patch: completes the closure's skeleton to a cubic map
// and selects the faces of K's cells. For a proper coronoid the complement
// components are exactly the holes plus one exterior component.
PatchSet hex_patch(const HexSystem& k);

}  // namespace coronoid
