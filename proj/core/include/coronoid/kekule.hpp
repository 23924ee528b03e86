#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "coronoid/altan.hpp"
#include "coronoid/graph.hpp"

namespace coronoid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact perfect-matching counter over one base graph. Subproblems are
// vertex-induced subgraphs, so the memo key is the surviving vertex set.
class KekuleCounter {
 public:
  explicit KekuleCounter(const AbstractGraph& g);

  BigInt count();
  // Matchings of the graph minus two vertices; the per-edge count of uv is
  // count_without(u, v).
  BigInt count_without(int u, int v);

 private:
  using Mask = std::vector<std::uint64_t>;
  BigInt countMask(const Mask& alive);
  BigInt countComponent(const Mask& mask, const std::vector<int>& comp);

  int n_;
  std::vector<std::vector<int>> adj_;
  std::map<Mask, BigInt> memo_;
};

BigInt count_kekule(const AbstractGraph& g);

using Matching = std::vector<std::pair<int, int>>;

// Explicit enumeration, limited to desk scale; the independent oracle for
// the counting path and for bond orders.
std::vector<Matching> enumerate_kekule(const AbstractGraph& g,
                                       std::uint64_t cap = 1u << 20);

// Exact Pauling bond order per edge: matchings through the edge over all
// matchings. Requires a Kekulean graph.
using BondOrderMap = std::map<std::pair<int, int>, Rational>;
BondOrderMap pauling_bond_orders(const AbstractGraph& g);

// Checks the altan counting law on an admissible structure: the count
// doubles per expansion, spokes never appear in a matching, the latest
// perimeter edges sit in exactly half of all matchings, and bond orders of
// the original edges are untouched.
struct AltanTheoremReport {
  BigInt k;
  BigInt kPrime;
  int exponent = 0;
  bool exponentOk = false;
  bool spokesZero = false;
  bool perimeterHalf = false;
  bool originalOrdersPreserved = false;
  bool ok() const {
    return exponentOk && spokesZero && perimeterHalf && originalOrdersPreserved;
  }
};

AltanTheoremReport verify_altan_theorem(const AdmissibleStructure& s,
                                        const std::vector<int>& n);

}  // namespace coronoid
