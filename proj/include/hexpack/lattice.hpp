// Core geometry of the hexagonal close-packing (HCP) lattice: integer site
// coordinates, the exact integer contact predicate, neighbor enumeration,
// finite windows, and the lattice symmetry subgroup used for canonical forms.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hexpack {

// Lattice site [i, j, k]: i and j index within a hexagonal layer, k indexes
// layers. Ordering is lexicographic on (k, j, i); this is the tie-break order
// used everywhere (canonical forms, window enumeration, witness sets).
struct HexCoord {
  int i = 0;
  int j = 0;
  int k = 0;

  friend constexpr bool operator==(const HexCoord&, const HexCoord&) = default;
  friend constexpr std::strong_ordering operator<=>(const HexCoord& a,
                                                    const HexCoord& b) {
    if (auto c = a.k <=> b.k; c != std::strong_ordering::equal) return c;
    if (auto c = a.j <=> b.j; c != std::strong_ordering::equal) return c;
    return a.i <=> b.i;
  }
};

struct CartPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Axis-aligned box of lattice sites {[i,j,k] : 0 <= i < I, 0 <= j < J,
// 0 <= k < K}. The search universe is always an explicit window.
struct Window {
  int I = 0;
  int J = 0;
  int K = 0;

  [[nodiscard]] constexpr bool contains(const HexCoord& p) const {
    return 0 <= p.i && p.i < I && 0 <= p.j && p.j < J && 0 <= p.k && p.k < K;
  }
  [[nodiscard]] constexpr long long site_count() const {
    return static_cast<long long>(I) * J * K;
  }
  friend constexpr bool operator==(const Window&, const Window&) = default;
};

// Layer parity in {0, 1}, correct for negative k as well.
constexpr int parity(int k) { return k & 1; }

// Cartesian embedding (ball radius 1, diameter 2):
//   x = 2i + j + p,  y = sqrt(3)*j + p*sqrt(1/3),  z = k*sqrt(8/3),
// where p = parity(k). Adjacent layers are offset by [1, sqrt(1/3), sqrt(8/3)].
CartPoint to_cartesian(const HexCoord& p);

// Exact integer quadratic form Q(a, b) = 3*dx^2 + dY^2 + 8*dk^2 with
//   dp = parity(a.k) - parity(b.k), dx = 2*di + dj + dp, dY = 3*dj + dp,
//   dk = a.k - b.k.
// Identity: Q(a, b) == 3 * |to_cartesian(a) - to_cartesian(b)|^2, exactly.
// Tangency (distance 2) is Q == 12; the minimum nonzero value is 12, so any
// set of distinct sites is automatically an overlap-free packing.
long long pair_form(const HexCoord& a, const HexCoord& b);

constexpr long long kContactForm = 12;

// True iff the two balls are tangent (Cartesian distance exactly 2).
bool is_contact(const HexCoord& a, const HexCoord& b);

// The 12 neighbor offsets (di, dj, dk) of a site, by layer parity: six
// in-layer, three in the layer above, three below.
const std::array<std::array<int, 3>, 12>& neighbor_offsets(int layer_parity);

// The 12 sites at Q = 12 from p (the lattice coordination shell).
std::vector<HexCoord> neighbors(const HexCoord& p);

// All window sites in (k, j, i) lexicographic order. Throws
// std::invalid_argument for non-positive extents.
std::vector<HexCoord> enum_window(const Window& w);

// A labeled bijection on lattice sites. The generator set: in-layer unit
// translations, vertical translation by two layers, layer negation k -> -k,
// in-layer 120-degree rotation about the vertical axis through [0,0,0], and
// one in-layer mirror. 60-degree rotation is deliberately absent: it does not
// map the two-layer stacking to itself.
struct SymmetryOp {
  std::string label;
  std::function<HexCoord(const HexCoord&)> action;
};

// Point ops fixing the origin axis, indexed 0..11: apply layer negation
// (index / 6), then rotation120 (index % 6 / 2 times), then the mirror
// (index % 2). These 12 are the full point group used for canonical forms.
constexpr int kPointOpCount = 12;
HexCoord apply_point_op(int op_index, const HexCoord& p);

// The 12 point ops wrapped as labeled SymmetryOps.
const std::vector<SymmetryOp>& point_group();

// Named generators (for tests and documentation).
SymmetryOp rotation120_op();
SymmetryOp mirror_op();
SymmetryOp layer_negation_op();
// Translation by (di, dj, dk); dk must be even (odd vertical shifts do not
// preserve the layer-parity pattern). Throws std::invalid_argument otherwise.
SymmetryOp translation_op(int di, int dj, int dk);

// True iff Q(g(a), g(b)) == Q(a, b) for every sampled pair. Used as a
// self-test of the generator table; sample must be non-empty.
bool validate_symmetry(const SymmetryOp& op,
                       const std::vector<std::pair<HexCoord, HexCoord>>& sample);

}  // namespace hexpack
