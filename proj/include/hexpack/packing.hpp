// Ball configurations, contact graphs, and canonical forms. A configuration
// is an ordered list of distinct lattice sites; distinctness alone guarantees
// an overlap-free packing (minimum nonzero form value is 12 = tangency).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hexpack/lattice.hpp"

namespace hexpack {

// Ordered list of ball centers; position t holds ball t+1 (indices are
// 1-based in listings and edge lists).
struct Configuration {
  std::vector<HexCoord> centers;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Index pair (a, b), 1-based, a < b.
using Edge = std::pair<int, int>;

struct ContactGraph {
  int n = 0;
  std::vector<Edge> edges;  // lexicographically sorted, a < b

  [[nodiscard]] int count() const { return static_cast<int>(edges.size()); }
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> errors;
};

// Orbit-minimal representative of a configuration under the point group
// composed with translations (in-layer arbitrary, vertical in steps of two to
// preserve the layer-parity pattern); centers sorted in (k, j, i) order.
struct CanonicalForm {
  Configuration configuration;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.configuration.centers < b.configuration.centers;
  }
};

// ok iff all centers are pairwise distinct; duplicate errors name the 1-based
// index pairs. The empty configuration is ok.
ValidationResult validate(const Configuration& cfg);

// All tangent index pairs, lexicographically sorted. Throws
// std::invalid_argument when validation fails.
ContactGraph build_contact_graph(const Configuration& cfg);

// Number of tangent pairs (the contact count).
int contact_count(const Configuration& cfg);

// Canonical form: minimum over the 12 point-group images of the configuration
// translated so min i = 0, min j = 0, min k in {0, 1}, centers sorted.
// Idempotent; equal for any two configurations related by a subgroup element.
// Precondition: cfg valid (distinct centers).
CanonicalForm canonicalize(const Configuration& cfg);

}  // namespace hexpack
