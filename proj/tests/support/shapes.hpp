#pragma once

#include <random>
#include <vector>

#include "coronoid/hexsystem.hpp"

namespace shapes {

using coronoid::HexCoord;
using coronoid::HexSystem;

inline HexSystem benzene() { return HexSystem({{0, 0}}); }

inline HexSystem naphthalene() { return HexSystem({{0, 0}, {1, 0}}); }

inline HexSystem anthracene() { return HexSystem({{0, 0}, {1, 0}, {2, 0}}); }

// Central cell plus its six neighbours.
inline HexSystem coronene() {
  std::vector<HexCoord> cells{{0, 0}};
  for (auto n : coronoid::neighbors({0, 0})) cells.push_back(n);
  return HexSystem(std::move(cells));
}

// Six cells around an empty centre: the smallest (degenerate) coronoid.
inline HexSystem hex_ring() {
  auto nb = coronoid::neighbors({0, 0});
  return HexSystem({nb.begin(), nb.end()});
}

// The eight cells around an empty naphthalene: the smallest non-degenerate
// proper coronoid.
inline HexSystem naphthalene_hole_coronoid() {
  HexSystem hole = naphthalene();
  std::vector<HexCoord> cells;
  for (auto h : hole)
    for (auto n : coronoid::neighbors(h))
      if (!hole.contains(n)) cells.push_back(n);
  return HexSystem(std::move(cells));
}

// Random connected system grown cell by cell.
inline HexSystem random_connected(int cells, std::mt19937& rng) {
  std::vector<HexCoord> out{{0, 0}};
  std::uniform_int_distribution<int> side(0, 5);
  while (static_cast<int>(HexSystem(out).size()) < cells) {
    HexCoord base = out[rng() % out.size()];
    out.push_back(coronoid::neighbors(base)[side(rng)]);
  }
  return HexSystem(std::move(out));
}

inline HexSystem random_benzenoid(int cells, std::mt19937& rng) {
  return coronoid::benzenoid_closure(random_connected(cells, rng));
}

inline HexSystem random_nondeg_coronoid(int cells, std::mt19937& rng) {
  return coronoid::nondeg_closure(random_connected(cells, rng));
}

// Non-degenerate coronoid with at least one hole: grows a benzenoid and
// carves a two-cell hole out of its interior. Sizes that cannot host a
// hole are retried with a bigger blob.
inline HexSystem random_holed_coronoid(int cells, std::mt19937& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    HexSystem b = random_benzenoid(cells + 8, rng);
    std::vector<std::pair<HexCoord, HexCoord>> dominoes;
    for (auto h : b) {
      bool interiorH = true;
      for (auto n : coronoid::neighbors(h))
        interiorH = interiorH && b.contains(n);
      if (!interiorH) continue;
      for (auto n : coronoid::neighbors(h)) {
        if (!(h < n)) continue;
        bool interiorN = true;
        for (auto m : coronoid::neighbors(n))
          interiorN = interiorN && b.contains(m);
        if (interiorN) dominoes.push_back({h, n});
      }
    }
    if (dominoes.empty()) continue;
    auto [c1, c2] = dominoes[rng() % dominoes.size()];
    HexSystem carved =
        coronoid::set_difference(b, HexSystem({c1, c2}));
    auto cls = coronoid::classify(carved);
    if (cls.kind == coronoid::SystemKind::properCoronoid &&
        cls.degeneracy == coronoid::Degeneracy::nonDegenerate)
      return carved;
  }
  return naphthalene_hole_coronoid();
}

}  // namespace shapes
