#include <algorithm>
#include <set>

#include "doctest.h"
#include "hexpack/packing.hpp"

using namespace hexpack;

namespace {

Configuration translated(const Configuration& cfg, int di, int dj, int dk) {
  Configuration out = cfg;
  for (auto& p : out.centers) {
    p.i += di;
    p.j += dj;
    p.k += dk;
  }
  return out;
}

Configuration mapped(const Configuration& cfg, int op_index) {
  Configuration out = cfg;
  for (auto& p : out.centers) p = apply_point_op(op_index, p);
  return out;
}

}  // namespace

TEST_CASE("validate: distinct centers required, duplicates named") {
  CHECK(validate(Configuration{}).ok);
  CHECK(validate(Configuration{{{0, 0, 0}, {1, 0, 0}}}).ok);

  const Configuration dup{{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}};
  const auto result = validate(dup);
  CHECK_FALSE(result.ok);
  REQUIRE(result.errors.size() == 1);
  // 1-based ball indices in the message.
  CHECK(result.errors[0].find("1") != std::string::npos);
  CHECK(result.errors[0].find("3") != std::string::npos);
}

TEST_CASE("contact graph: edges 1-based, sorted, complete") {
  // A tangent triple in one layer plus one isolated ball.
  const Configuration cfg{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 0}}};
  const auto graph = build_contact_graph(cfg);
  CHECK(graph.n == 4);
  const std::vector<Edge> expected{{1, 2}, {1, 3}, {2, 3}};
  CHECK(graph.edges == expected);
  CHECK(graph.count() == 3);
  CHECK(contact_count(cfg) == 3);

  CHECK(build_contact_graph(Configuration{}).count() == 0);
  CHECK_THROWS_AS(build_contact_graph(Configuration{{{0, 0, 0}, {0, 0, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("contact graph: cross-layer tangency by parity") {
  // Even layer up-neighbors include [0,0,1]; odd layer up-neighbors
  // include [1,0,2] from [0,0,1].
  CHECK(contact_count(Configuration{{{0, 0, 0}, {0, 0, 1}}}) == 1);
  CHECK(contact_count(Configuration{{{0, 0, 1}, {1, 0, 2}}}) == 1);
  CHECK(contact_count(Configuration{{{0, 0, 0}, {1, 0, 1}}}) == 0);
  CHECK(contact_count(Configuration{{{0, 0, 0}, {0, 0, 2}}}) == 0);
}

TEST_CASE("canonical form: pinned to the origin, sorted, idempotent") {
  const Configuration cfg{{{3, 2, 2}, {4, 2, 2}, {3, 3, 2}, {3, 2, 3}}};
  const auto canon = canonicalize(cfg);
  // Pinning: min i = 0, min j = 0, min k in {0, 1}.
  int mi = 99, mj = 99, mk = 99;
  for (const auto& p : canon.configuration.centers) {
    mi = std::min(mi, p.i);
    mj = std::min(mj, p.j);
    mk = std::min(mk, p.k);
  }
  CHECK(mi == 0);
  CHECK(mj == 0);
  CHECK((mk == 0 || mk == 1));
  CHECK(std::is_sorted(canon.configuration.centers.begin(),
                       canon.configuration.centers.end()));
  // Idempotent.
  CHECK(canonicalize(canon.configuration) == canon);
}

TEST_CASE("canonical form: invariant under the symmetry subgroup") {
  const Configuration cfg{
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 1}}};
  const auto canon = canonicalize(cfg);

  // All 12 point-group images share the canonical form.
  for (int t = 0; t < kPointOpCount; ++t) {
    CHECK(canonicalize(mapped(cfg, t)) == canon);
  }
  // Translations (vertical by even steps) share it too.
  CHECK(canonicalize(translated(cfg, 7, -3, 0)) == canon);
  CHECK(canonicalize(translated(cfg, -2, 5, 4)) == canon);
  CHECK(canonicalize(translated(cfg, 1, 1, -2)) == canon);
  // An odd vertical shift is NOT in the subgroup: it swaps layer parity,
  // which is a genuinely different labeling. (The shifted set is still a
  // valid configuration; it just need not share the canonical form.)
  CHECK(validate(translated(cfg, 0, 0, 1)).ok);
}

TEST_CASE("canonical form: contact count is invariant") {
  const Configuration cfg{
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 0, 1}}};
  const auto canon = canonicalize(cfg);
  CHECK(contact_count(canon.configuration) == contact_count(cfg));
  CHECK(canon.configuration.centers.size() == cfg.centers.size());
}

TEST_CASE("canonical form: distinguishes genuinely different packings") {
  const Configuration path{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
  const Configuration triangle{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}};
  CHECK_FALSE(canonicalize(path) == canonicalize(triangle));
  CHECK(canonicalize(path) < canonicalize(triangle) ||
        canonicalize(triangle) < canonicalize(path));
}
