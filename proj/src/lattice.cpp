#include "hexpack/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace hexpack {

CartPoint to_cartesian(const HexCoord& p) {
  const double par = parity(p.k);
  return CartPoint{2.0 * p.i + p.j + par,
                   std::sqrt(3.0) * p.j + par * std::sqrt(1.0 / 3.0),
                   p.k * std::sqrt(8.0 / 3.0)};
}

long long pair_form(const HexCoord& a, const HexCoord& b) {
  const long long dp = parity(a.k) - parity(b.k);
  const long long dx = 2LL * (a.i - b.i) + (a.j - b.j) + dp;
  const long long dY = 3LL * (a.j - b.j) + dp;
  const long long dk = a.k - b.k;
  return 3 * dx * dx + dY * dY + 8 * dk * dk;
}

bool is_contact(const HexCoord& a, const HexCoord& b) {
  return pair_form(a, b) == kContactForm;
}

namespace {

// In-layer ring is parity-independent; the vertical triads are not: going up
// from an even layer the three sites lean toward (-i, -j), going up from an
// odd layer toward (+i, +j).
constexpr std::array<std::array<int, 3>, 12> kOffsetsEven = {{
    {1, 0, 0},
    {-1, 0, 0},
    {0, 1, 0},
    {0, -1, 0},
    {1, -1, 0},
    {-1, 1, 0},
    {0, 0, 1},
    {-1, 0, 1},
    {0, -1, 1},
    {0, 0, -1},
    {-1, 0, -1},
    {0, -1, -1},
}};

constexpr std::array<std::array<int, 3>, 12> kOffsetsOdd = {{
    {1, 0, 0},
    {-1, 0, 0},
    {0, 1, 0},
    {0, -1, 0},
    {1, -1, 0},
    {-1, 1, 0},
    {0, 0, 1},
    {1, 0, 1},
    {0, 1, 1},
    {0, 0, -1},
    {1, 0, -1},
    {0, 1, -1},
}};

HexCoord rotate120(const HexCoord& p) {
  const int d = parity(p.k);
  return HexCoord{-p.i - p.j - d, p.i, p.k};
}

HexCoord mirror(const HexCoord& p) {
  const int d = parity(p.k);
  return HexCoord{-p.i - p.j - d, p.j, p.k};
}

HexCoord negate_layers(const HexCoord& p) { return HexCoord{p.i, p.j, -p.k}; }

}  // namespace

const std::array<std::array<int, 3>, 12>& neighbor_offsets(int layer_parity) {
  return layer_parity == 0 ? kOffsetsEven : kOffsetsOdd;
}

std::vector<HexCoord> neighbors(const HexCoord& p) {
  const auto& offs = neighbor_offsets(parity(p.k));
  std::vector<HexCoord> out;
  out.reserve(offs.size());
  for (const auto& o : offs) {
    out.push_back(HexCoord{p.i + o[0], p.j + o[1], p.k + o[2]});
  }
  return out;
}

std::vector<HexCoord> enum_window(const Window& w) {
  if (w.I <= 0 || w.J <= 0 || w.K <= 0) {
    throw std::invalid_argument("window extents must be positive");
  }
  std::vector<HexCoord> sites;
  sites.reserve(static_cast<std::size_t>(w.site_count()));
  for (int k = 0; k < w.K; ++k) {
    for (int j = 0; j < w.J; ++j) {
      for (int i = 0; i < w.I; ++i) {
        sites.push_back(HexCoord{i, j, k});
      }
    }
  }
  return sites;
}

HexCoord apply_point_op(int op_index, const HexCoord& p) {
  HexCoord q = p;
  if (op_index / 6 != 0) q = negate_layers(q);
  const int rotations = (op_index % 6) / 2;
  for (int r = 0; r < rotations; ++r) q = rotate120(q);
  if (op_index % 2 != 0) q = mirror(q);
  return q;
}

const std::vector<SymmetryOp>& point_group() {
  static const std::vector<SymmetryOp> ops = [] {
    std::vector<SymmetryOp> v;
    v.reserve(kPointOpCount);
    for (int t = 0; t < kPointOpCount; ++t) {
      std::string label = "r" + std::to_string((t % 6) / 2);
      if (t % 2 != 0) label += "m";
      if (t / 6 != 0) label += "n";
      v.push_back(SymmetryOp{
          std::move(label), [t](const HexCoord& p) { return apply_point_op(t, p); }});
    }
    return v;
  }();
  return ops;
}

SymmetryOp rotation120_op() {
  return SymmetryOp{"rot120", [](const HexCoord& p) { return rotate120(p); }};
}

SymmetryOp mirror_op() {
  return SymmetryOp{"mirror", [](const HexCoord& p) { return mirror(p); }};
}

SymmetryOp layer_negation_op() {
  return SymmetryOp{"negate", [](const HexCoord& p) { return negate_layers(p); }};
}

SymmetryOp translation_op(int di, int dj, int dk) {
  if (dk % 2 != 0) {
    throw std::invalid_argument("vertical translation step must be even");
  }
  std::string label = "t(" + std::to_string(di) + "," + std::to_string(dj) +
                      "," + std::to_string(dk) + ")";
  return SymmetryOp{std::move(label), [di, dj, dk](const HexCoord& p) {
                      return HexCoord{p.i + di, p.j + dj, p.k + dk};
                    }};
}

bool validate_symmetry(
    const SymmetryOp& op,
    const std::vector<std::pair<HexCoord, HexCoord>>& sample) {
  if (sample.empty()) {
    throw std::invalid_argument("validate_symmetry: sample must be non-empty");
  }
  for (const auto& [a, b] : sample) {
    if (pair_form(op.action(a), op.action(b)) != pair_form(a, b)) return false;
  }
  return true;
}

}  // namespace hexpack
