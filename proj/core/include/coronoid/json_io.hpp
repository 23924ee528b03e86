#pragma once

#include <string>

#include "coronoid/altan.hpp"
#include "coronoid/graph.hpp"
#include "coronoid/hexsystem.hpp"
#include "coronoid/kekule.hpp"
#include "coronoid/planemap.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

// {"hexes": [[q,r], ...]}; duplicate pairs are rejected.
HexSystem hex_from_json(const std::string& text);
std::string hex_to_json(const HexSystem& k);

// {"vertices":[{"q":..,"r":..,"t":..,"label":..}], "edges":[[i,j],..],
//  "faces":[[q,r],..]}
std::string skeleton_to_json(const SkeletonGraph& g);

// {"rotations": [[dartIds...] per vertex], "theta": [[d1,d2],...],
//  "outer": faceId}. Face ids follow trace order (smallest dart first).
PlaneGraph map_from_json(const std::string& text);
std::string map_to_json(const PlaneGraph& g);

// {"map": {...}, "faces": [ids]}
PatchSet patch_from_json(const std::string& text);
std::string patch_to_json(const PatchSet& p);

// Plain text: first line "n m", then m lines "u v" (0-based).
AbstractGraph edges_from_text(const std::string& text);

std::string report_to_json(const AltanTheoremReport& rep);

// Map document of the expanded graph plus generation tags, spokes and the
// current perimeter faces, so the output feeds back into matching counts.
std::string altan_to_json(const PlaneAltan& a);

}  // namespace coronoid
