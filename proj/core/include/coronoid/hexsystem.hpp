#pragma once

#include <optional>
#include <vector>

#include "coronoid/hexgrid.hpp"

namespace coronoid {

// A finite hexagonal system: a set of cells, stored sorted and unique.
class HexSystem {
 public:
  HexSystem() = default;
  explicit HexSystem(std::vector<HexCoord> cells);

  bool contains(HexCoord h) const;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<HexCoord>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool operator==(const HexSystem&) const = default;

 private:
  std::vector<HexCoord> cells_;
};

HexSystem set_union(const HexSystem& a, const HexSystem& b);
HexSystem set_difference(const HexSystem& a, const HexSystem& b);
HexSystem set_intersection(const HexSystem& a, const HexSystem& b);
HexSystem apply(const Isometry& iso, const HexSystem& s);

bool are_equivalent(const HexSystem& a, const HexSystem& b);

std::vector<HexSystem> connected_components(const HexSystem& s);
bool is_connected(const HexSystem& s);  // true for the empty system

// The complement of a finite system decomposes into one infinite component
// (the exterior) plus finitely many finite ones (the corona holes). Holes
// are ordered by their smallest cell; each is connected by construction.
struct ComplementDecomposition {
  std::vector<HexSystem> holes;
  HexCoord exteriorWitness{0, 0};
  int d() const { return static_cast<int>(holes.size()); }
};

ComplementDecomposition complement_decomposition(const HexSystem& k);

bool is_coronoid(const HexSystem& s);   // finite, connected, non-empty
bool is_benzenoid(const HexSystem& s);  // coronoid with connected complement

// K together with all of its corona holes; the smallest benzenoid
// containing K. Requires a coronoid.
HexSystem benzenoid_closure(const HexSystem& k);

// K together with its single-cell corona holes only; the smallest
// non-degenerate coronoid containing K. Requires a coronoid.
HexSystem nondeg_closure(const HexSystem& k);

enum class SystemKind { benzenoid, properCoronoid, disconnected };
enum class Degeneracy { nonDegenerate, degenerate };
enum class Condensation { catacondensed, gaunt, corpulent };

struct SystemClass {
  SystemKind kind = SystemKind::disconnected;
  std::optional<Degeneracy> degeneracy;      // present iff connected
  std::optional<Condensation> condensation;  // present iff benzenoid
};

SystemClass classify(const HexSystem& s);

// Connected components of the intersection of two benzenoids; every
// component is itself a benzenoid (asserted).
std::vector<HexSystem> intersect_benzenoids(const HexSystem& a,
                                            const HexSystem& b);

// Counting helpers shared by classification and hole statistics.
// A vertex is internal when all three incident cells are present; a cell is
// internal when all six neighbours are present.
int internal_vertex_count(const HexSystem& s);
int internal_hexagon_count(const HexSystem& s);

}  // namespace coronoid
