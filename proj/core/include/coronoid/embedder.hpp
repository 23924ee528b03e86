#pragma once

#include <cstdint>

#include "coronoid/graph.hpp"
#include "coronoid/hexsystem.hpp"

namespace coronoid {

struct EmbedOptions {
  // Selects the starting 6-cycle and its orientation; any choice yields an
  // equivalent result for valid inputs.
  std::uint64_t seed = 0;
};

// Recovers the unique (up to lattice symmetry) hexagonal system whose
// skeleton is g. The result is always non-degenerate: single-cell holes in
// the source system are indistinguishable from filled cells at graph level.
//
// Throws Error with code
//   no_hexagon_found     when g has no 6-cycle,
//   embedding_conflict   when two vertices collide on one lattice vertex or
//                        an edge of g maps onto no lattice edge,
//   verification_failed  when the embedded image is not the skeleton of the
//                        reconstructed system (e.g. edges on no 6-cycle).
HexSystem embed(const AbstractGraph& g, EmbedOptions opts = {});

// embed(skeleton(k)) is equivalent to k for non-degenerate coronoids.
bool roundtrip_check(const HexSystem& k, EmbedOptions opts = {});

}  // namespace coronoid
