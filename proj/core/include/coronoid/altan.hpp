#pragma once

#include <map>
#include <string>
#include <vector>

#include "coronoid/graph.hpp"
#include "coronoid/hexsystem.hpp"
#include "coronoid/planemap.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

// An oriented simple cycle given as a cyclic vertex list.
struct Cycle {
  std::vector<int> vertices;
};

// A graph with designated cycles, each carrying at least two degree-2
// vertices and no degree-2 vertex shared between cycles.
struct AdmissibleStructure {
  AbstractGraph g;
  std::vector<Cycle> cycles;
};

void validate_admissible(const AdmissibleStructure& s);

// Which expansion created a vertex/edge: iteration 0 marks original
// material, pos is the position on the added cycle.
struct GenTag {
  int cycle = -1;
  int iteration = 0;
  int pos = -1;
  bool original() const { return iteration == 0; }
  auto operator<=>(const GenTag&) const = default;
};

struct AltanResult {
  AdmissibleStructure s;  // expanded graph with the replacement cycles
  std::vector<GenTag> vertexTags;
  std::map<std::pair<int, int>, GenTag> edgeTags;
  std::vector<std::pair<int, int>> spokes;  // all generations

  // Edges along the current cycle of index j.
  std::vector<std::pair<int, int>> perimeterEdges(int j) const;
  // Edge list under the order-independent labelling (original vertices
  // first, then new ones sorted by generation tag).
  std::vector<std::pair<int, int>> canonicalEdges() const;
};

// One altan step at a single perimeter cycle.
AltanResult altan(const AbstractGraph& g, const Cycle& c);

// Altan applied at every cycle indexed by J (processed in ascending order;
// the outcome does not depend on the order).
AltanResult generalised_altan(const AdmissibleStructure& s,
                              const std::vector<int>& j);

// A^n via the reduction A^n = A^{n-1 componentwise over the positive
// entries}(A(...; {i : n_i > 0})).
AltanResult iterated_altan(const AdmissibleStructure& s,
                           const std::vector<int>& n);

// The coronoid's perimeters (outer first, then holes in order) form an
// admissible structure. Requires a non-degenerate coronoid.
AdmissibleStructure admissible_from_coronoid(const HexSystem& k);

// --- plane form: same operations with faces maintained ---

struct PlaneAltan {
  PlaneGraph g;
  std::vector<int> perimeterFaces;  // current face per cycle index
  std::vector<GenTag> vertexTags;
  std::map<std::pair<int, int>, GenTag> edgeTags;
  std::vector<std::pair<int, int>> spokes;
  struct CreatedFace {
    int face;     // id in the final graph
    GenTag tag;   // cycle + iteration that created it, pos = anchor index
    int degree;   // walk length
  };
  std::vector<CreatedFace> createdFaces;  // annulus faces, all generations
  int outerOriginal = -1;  // current id of the original outer region
};

PlaneAltan plane_admissible_from_coronoid(const HexSystem& k);
PlaneAltan plane_admissible_from_patch(const PatchSet& p);

PlaneAltan plane_iterated_altan(PlaneAltan base, const std::vector<int>& n);

// Witness map for the result of an altan on a perforated patch: the
// expanded skeleton capped to a cubic map, with the patch faces selected.
PatchSet realize_patch(const PlaneAltan& a);

// Face degrees predicted from a binary boundary code 2 3^л1 2 3^л2 ...:
// degree l_i + 5 for the i-th segment, new boundary code (32)^d.
struct FaceDegreePrediction {
  std::vector<int> degrees;
  std::string newCode;
};
FaceDegreePrediction new_face_degrees(const std::string& code);

// A face of degree != 6 created by a proper altan of a coronoid; its
// existence shows the result is never a coronoid.
struct WitnessFace {
  int face = -1;
  int degree = 0;
  GenTag tag;
};
WitnessFace assert_not_coronoid(const HexSystem& k, const std::vector<int>& n);

}  // namespace coronoid
