#include "coronoid/hexsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coronoid/error.hpp"

namespace coronoid {

HexSystem::HexSystem(std::vector<HexCoord> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool HexSystem::contains(HexCoord h) const {
  return std::binary_search(cells_.begin(), cells_.end(), h);
}

HexSystem set_union(const HexSystem& a, const HexSystem& b) {
  std::vector<HexCoord> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return HexSystem(std::move(out));
}

HexSystem set_difference(const HexSystem& a, const HexSystem& b) {
  std::vector<HexCoord> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return HexSystem(std::move(out));
}

HexSystem set_intersection(const HexSystem& a, const HexSystem& b) {
  std::vector<HexCoord> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return HexSystem(std::move(out));
}

HexSystem apply(const Isometry& iso, const HexSystem& s) {
  std::vector<HexCoord> out;
  out.reserve(s.size());
  for (auto h : s) out.push_back(iso(h));
  return HexSystem(std::move(out));
}

bool are_equivalent(const HexSystem& a, const HexSystem& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return canonical_form(a.cells()) == canonical_form(b.cells());
}

std::vector<HexSystem> connected_components(const HexSystem& s) {
  std::vector<HexSystem> out;
  std::set<HexCoord> pending(s.begin(), s.end());
  while (!pending.empty()) {
    std::vector<HexCoord> comp;
    std::deque<HexCoord> queue{*pending.begin()};
    pending.erase(pending.begin());
    while (!queue.empty()) {
      HexCoord h = queue.front();
      queue.pop_front();
      comp.push_back(h);
      for (auto n : neighbors(h)) {
        auto it = pending.find(n);
        if (it != pending.end()) {
          pending.erase(it);
          queue.push_back(n);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const HexSystem& a, const HexSystem& b) {
    return a.cells() < b.cells();
  });
  return out;
}

bool is_connected(const HexSystem& s) {
  return connected_components(s).size() <= 1;
}

ComplementDecomposition complement_decomposition(const HexSystem& k) {
  ComplementDecomposition out;
  if (k.empty()) {
    out.exteriorWitness = {0, 0};
    return out;
  }
  // Flood fill the complement over the bounding box of K padded by one
  // ring. The ring is connected and lies in the complement, so every
  // complement component reaching it belongs to the exterior; everything
  // else is a hole.
  int qlo = k.begin()->q, qhi = qlo, rlo = k.begin()->r, rhi = rlo;
  for (auto h : k) {
    qlo = std::min(qlo, h.q);
    qhi = std::max(qhi, h.q);
    rlo = std::min(rlo, h.r);
    rhi = std::max(rhi, h.r);
  }
  --qlo, ++qhi, --rlo, ++rhi;

  auto inBox = [&](HexCoord h) {
    return h.q >= qlo && h.q <= qhi && h.r >= rlo && h.r <= rhi;
  };
  auto onRing = [&](HexCoord h) {
    return h.q == qlo || h.q == qhi || h.r == rlo || h.r == rhi;
  };

  std::set<HexCoord> seen;
  out.exteriorWitness = {qlo, rlo};
  for (int q = qlo; q <= qhi; ++q) {
    for (int r = rlo; r <= rhi; ++r) {
      HexCoord start{q, r};
      if (k.contains(start) || seen.count(start)) continue;
      std::vector<HexCoord> comp;
      bool infinite = false;
      std::deque<HexCoord> queue{start};
      seen.insert(start);
      while (!queue.empty()) {
        HexCoord h = queue.front();
        queue.pop_front();
        comp.push_back(h);
        if (onRing(h)) infinite = true;
        for (auto n : neighbors(h)) {
          if (!inBox(n) || k.contains(n) || seen.count(n)) continue;
          seen.insert(n);
          queue.push_back(n);
        }
      }
      if (!infinite) out.holes.emplace_back(std::move(comp));
    }
  }
  std::sort(out.holes.begin(), out.holes.end(),
            [](const HexSystem& a, const HexSystem& b) {
              return a.cells().front() < b.cells().front();
            });
  return out;
}

bool is_coronoid(const HexSystem& s) { return !s.empty() && is_connected(s); }

bool is_benzenoid(const HexSystem& s) {
  return is_coronoid(s) && complement_decomposition(s).d() == 0;
}

HexSystem benzenoid_closure(const HexSystem& k) {
  if (!is_coronoid(k))
    fail(Errc::not_a_coronoid, "benzenoid_closure needs a coronoid");
  HexSystem out = k;
  for (const auto& hole : complement_decomposition(k).holes)
    out = set_union(out, hole);
  return out;
}

HexSystem nondeg_closure(const HexSystem& k) {
  if (!is_coronoid(k))
    fail(Errc::not_a_coronoid, "nondeg_closure needs a coronoid");
  HexSystem out = k;
  for (const auto& hole : complement_decomposition(k).holes)
    if (hole.size() == 1) out = set_union(out, hole);
  return out;
}

int internal_vertex_count(const HexSystem& s) {
  std::set<GridVertex> internal;
  for (auto h : s) {
    for (auto v : boundary_cycle(h)) {
      bool all = true;
      for (auto c : incident_cells(v)) all = all && s.contains(c);
      if (all) internal.insert(v);
    }
  }
  return static_cast<int>(internal.size());
}

int internal_hexagon_count(const HexSystem& s) {
  int count = 0;
  for (auto h : s) {
    bool all = true;
    for (auto n : neighbors(h)) all = all && s.contains(n);
    if (all) ++count;
  }
  return count;
}

SystemClass classify(const HexSystem& s) {
  if (s.empty()) fail(Errc::empty_system, "classify of empty system");
  SystemClass out;
  if (!is_connected(s)) {
    out.kind = SystemKind::disconnected;
    return out;
  }
  auto dec = complement_decomposition(s);
  bool degenerate = false;
  for (const auto& hole : dec.holes) degenerate = degenerate || hole.size() == 1;
  out.degeneracy = degenerate ? Degeneracy::degenerate : Degeneracy::nonDegenerate;
  if (dec.d() == 0) {
    out.kind = SystemKind::benzenoid;
    if (internal_vertex_count(s) == 0)
      out.condensation = Condensation::catacondensed;
    else if (internal_hexagon_count(s) > 0)
      out.condensation = Condensation::corpulent;
    else
      out.condensation = Condensation::gaunt;
  } else {
    out.kind = SystemKind::properCoronoid;
  }
  return out;
}

std::vector<HexSystem> intersect_benzenoids(const HexSystem& a,
                                            const HexSystem& b) {
  if (!is_benzenoid(a) || !is_benzenoid(b))
    fail(Errc::not_a_benzenoid, "intersect_benzenoids needs two benzenoids");
  auto comps = connected_components(set_intersection(a, b));
  for (const auto& c : comps)
    if (!is_benzenoid(c))
      fail(Errc::not_a_benzenoid,
           "intersection component is not a benzenoid");
  return comps;
}

}  // namespace coronoid
