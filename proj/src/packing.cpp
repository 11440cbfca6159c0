#include "hexpack/packing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace hexpack {

namespace {

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

// Translate so min i = 0, min j = 0, min k in {0, 1} (vertical shifts stay
// even to preserve parity), then sort in (k, j, i) order.
std::vector<HexCoord> pin_sorted(std::vector<HexCoord> v) {
  int mi = std::numeric_limits<int>::max();
  int mj = std::numeric_limits<int>::max();
  int mk = std::numeric_limits<int>::max();
  for (const auto& p : v) {
    mi = std::min(mi, p.i);
    mj = std::min(mj, p.j);
    mk = std::min(mk, p.k);
  }
  const int dk = -2 * floor_div2(mk);
  for (auto& p : v) {
    p.i -= mi;
    p.j -= mj;
    p.k += dk;
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ValidationResult validate(const Configuration& cfg) {
  ValidationResult result;
  std::map<HexCoord, int> first_seen;
  for (int t = 0; t < static_cast<int>(cfg.centers.size()); ++t) {
    auto [it, inserted] = first_seen.emplace(cfg.centers[t], t);
    if (!inserted) {
      result.ok = false;
      result.errors.push_back("duplicate centers at indices (" +
                              std::to_string(it->second + 1) + "," +
                              std::to_string(t + 1) + ")");
    }
  }
  return result;
}

ContactGraph build_contact_graph(const Configuration& cfg) {
  const auto v = validate(cfg);
  if (!v.ok) {
    throw std::invalid_argument("invalid configuration: " + v.errors.front());
  }
  ContactGraph g;
  g.n = static_cast<int>(cfg.centers.size());
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (is_contact(cfg.centers[a], cfg.centers[b])) {
        g.edges.emplace_back(a + 1, b + 1);
      }
    }
  }
  return g;
}

int contact_count(const Configuration& cfg) {
  return build_contact_graph(cfg).count();
}

CanonicalForm canonicalize(const Configuration& cfg) {
  if (cfg.centers.empty()) return CanonicalForm{};
  std::vector<HexCoord> best;
  std::vector<HexCoord> image(cfg.centers.size());
  for (int t = 0; t < kPointOpCount; ++t) {
    for (std::size_t s = 0; s < cfg.centers.size(); ++s) {
      image[s] = apply_point_op(t, cfg.centers[s]);
    }
    auto candidate = pin_sorted(image);
    if (t == 0 || candidate < best) best = std::move(candidate);
  }
  return CanonicalForm{Configuration{std::move(best)}};
}

}  // namespace hexpack
