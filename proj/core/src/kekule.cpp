#include "coronoid/kekule.hpp"

#include <algorithm>

#include "coronoid/error.hpp"

namespace coronoid {

namespace {

bool mask_test(const std::vector<std::uint64_t>& m, int i) {
  return (m[i >> 6] >> (i & 63)) & 1;
}

void mask_clear(std::vector<std::uint64_t>& m, int i) {
  m[i >> 6] &= ~(1ull << (i & 63));
}

}  // namespace

KekuleCounter::KekuleCounter(const AbstractGraph& g)
    : n_(g.n), adj_(g.adjacency()) {}

BigInt KekuleCounter::count() {
  Mask all((n_ + 63) / 64, 0);
  for (int i = 0; i < n_; ++i) all[i >> 6] |= 1ull << (i & 63);
  return countMask(all);
}

BigInt KekuleCounter::count_without(int u, int v) {
  Mask all((n_ + 63) / 64, 0);
  for (int i = 0; i < n_; ++i) all[i >> 6] |= 1ull << (i & 63);
  mask_clear(all, u);
  mask_clear(all, v);
  return countMask(all);
}

BigInt KekuleCounter::countMask(const Mask& alive) {
  // Factor over connected components of the surviving induced subgraph.
  std::vector<int> seen(n_, 0);
  BigInt product = 1;
  for (int s = 0; s < n_ && product != 0; ++s) {
    if (!mask_test(alive, s) || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t qi = 0; qi < comp.size(); ++qi)
      for (int w : adj_[comp[qi]])
        if (mask_test(alive, w) && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    if (comp.size() % 2) return 0;
    product *= countComponent(alive, comp);
  }
  return product;
}

BigInt KekuleCounter::countComponent(const Mask& alive,
                                     const std::vector<int>& comp) {
  if (comp.empty()) return 1;

  Mask key((n_ + 63) / 64, 0);
  for (int v : comp) key[v >> 6] |= 1ull << (v & 63);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // Branch on the matches of a vertex with the fewest live neighbours.
  int pivot = -1, best = 4;
  for (int v : comp) {
    int deg = 0;
    for (int w : adj_[v]) deg += mask_test(key, w) ? 1 : 0;
    if (deg < best) {
      best = deg;
      pivot = v;
    }
  }
  BigInt total = 0;
  if (best > 0) {
    for (int w : adj_[pivot]) {
      if (!mask_test(key, w)) continue;
      Mask next = key;
      mask_clear(next, pivot);
      mask_clear(next, w);
      total += countMask(next);
    }
  }
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt count_kekule(const AbstractGraph& g) {
  return KekuleCounter(g).count();
}

std::vector<Matching> enumerate_kekule(const AbstractGraph& g,
                                       std::uint64_t cap) {
  if (g.n > 40) fail(Errc::too_large, "enumeration oracle is desk-scale only");
  auto adj = g.adjacency();
  std::vector<Matching> out;
  if (g.n % 2) return out;

  std::vector<int> mate(g.n, -1);
  Matching current;

  auto rec = [&](auto&& self, int from) -> void {
    int v = from;
    while (v < g.n && mate[v] >= 0) ++v;
    if (v == g.n) {
      if (out.size() >= cap) fail(Errc::cap_exceeded, "too many matchings");
      out.push_back(current);
      return;
    }
    for (int w : adj[v]) {
      if (mate[w] >= 0) continue;
      mate[v] = w;
      mate[w] = v;
      current.emplace_back(v, w);
      self(self, v + 1);
      current.pop_back();
      mate[v] = -1;
      mate[w] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

BondOrderMap pauling_bond_orders(const AbstractGraph& g) {
  KekuleCounter counter(g);
  BigInt total = counter.count();
  if (total == 0) fail(Errc::kekule_less, "graph has no Kekule structure");

  BondOrderMap out;
  for (auto [u, v] : g.edges)
    out[{u, v}] = Rational(counter.count_without(u, v), total);
  return out;
}

AltanTheoremReport verify_altan_theorem(const AdmissibleStructure& s,
                                        const std::vector<int>& n) {
  AltanTheoremReport rep;
  for (int v : n) rep.exponent += v;

  AltanResult res = iterated_altan(s, n);

  KekuleCounter before(s.g);
  KekuleCounter after(res.s.g);
  rep.k = before.count();
  rep.kPrime = after.count();

  BigInt expected = rep.k;
  expected <<= rep.exponent;
  rep.exponentOk = (rep.kPrime == expected);

  rep.spokesZero = true;
  for (auto [u, v] : res.spokes)
    rep.spokesZero = rep.spokesZero && after.count_without(u, v) == 0;

  // Edges on the latest perimeter of every expanded cycle carry exactly
  // half of all matchings.
  rep.perimeterHalf = true;
  for (size_t j = 0; j < n.size(); ++j) {
    if (n[j] == 0) continue;
    for (auto [u, v] : res.perimeterEdges(static_cast<int>(j)))
      rep.perimeterHalf =
          rep.perimeterHalf && 2 * after.count_without(u, v) == rep.kPrime;
  }

  rep.originalOrdersPreserved = true;
  if (rep.k != 0) {
    for (auto [u, v] : s.g.edges) {
      Rational lhs(before.count_without(u, v), rep.k);
      Rational rhs(after.count_without(u, v), rep.kPrime);
      rep.originalOrdersPreserved = rep.originalOrdersPreserved && lhs == rhs;
    }
  }
  return rep;
}

}  // namespace coronoid
