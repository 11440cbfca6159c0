// Search for configurations of n lattice balls maximizing the contact count:
// an exact branch-and-bound oracle for small instances, an independent naive
// enumeration cross-check, and greedy/annealing heuristics for larger n.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hexpack/packing.hpp"

namespace hexpack {

enum class Algorithm { exact, greedy, anneal };

enum class SearchStatus { optimal_in_window, heuristic_lower_bound };

const char* algorithm_name(Algorithm a);
const char* status_name(SearchStatus s);

struct SearchParams {
  int n = 1;
  Window window;
  Algorithm algorithm = Algorithm::exact;
  std::uint64_t seed = 0;
  double budget = 0.0;  // wall-clock seconds; 0 = unlimited for exact
  int restarts = 8;
  std::optional<Configuration> initial;
  int threads = 1;

  // Annealing schedule (geometric cooling from t0 to t_end over the whole
  // move budget); overridable, recorded in result provenance.
  double t0 = 2.0;
  double t_end = 0.02;

  // Exact-search knobs. Disabling isomorph rejection falls back to
  // translation-only deduplication: more nodes, identical best value.
  bool isomorph_rejection = true;
  // Test instrumentation: called at every pruned node with (partial size,
  // upper bound, incumbent).
  std::function<void(int, int, int)> on_prune;
};

struct SearchResult {
  int best_count = 0;
  std::vector<CanonicalForm> witnesses;  // deduplicated, ascending
  SearchStatus status = SearchStatus::heuristic_lower_bound;
  std::uint64_t nodes_explored = 0;  // nodes for exact; proposed moves for
                                     // anneal; candidate evaluations for greedy
  double elapsed = 0.0;              // wall-clock seconds (diagnostic only)
  // A concrete best configuration placed inside the window. For exact search
  // this is the lexicographically minimal in-window realization of the
  // minimal witness; heuristics return the configuration they ended on.
  Configuration best_configuration;
};

// Thrown when the exact search exhausts its wall-clock budget before proving
// optimality. Never downgraded to a heuristic result silently.
class SearchIncomplete : public std::runtime_error {
 public:
  SearchIncomplete(std::uint64_t nodes, double seconds)
      : std::runtime_error("exact search budget exhausted after " +
                           std::to_string(nodes) + " nodes (" +
                           std::to_string(seconds) + "s) without a proof"),
        nodes_explored(nodes) {}
  std::uint64_t nodes_explored;
};

// True maximum contact count over all n-subsets of the window, proved by
// exhaustive connected growth with sound pruning. Any configuration whose
// orbit fits the window is represented (the universe is translation- and
// symmetry-normalized); for n >= 2 some maximum-count configuration is always
// connected, so connected growth is value-complete — cross-checked against
// naive_oracle on an exhaustive grid of small instances. Deterministic:
// independent of seed and of thread count. Witnesses are all canonical forms
// attaining the best value. Intended for small n (about 10 at desk scale).
SearchResult exact_max_contacts(const SearchParams& params);

// Independent correctness oracle: enumerate every n-subset of the window
// with no pruning, no symmetry, and no connectivity assumption. Refuses
// instances with more than 10^7 subsets (std::invalid_argument).
int naive_oracle(int n, const Window& window);

// Repeatedly add the window site with the maximum number of contacts to the
// current set. Ties are broken by the minimal canonical form of the extended
// set; sites whose extensions share that canonical form (symmetric images)
// are resolved by a seeded random pick. params.initial, when given, is the
// starting partial configuration.
SearchResult greedy_grow(const SearchParams& params);

// Simulated annealing over single-ball relocations (move one ball to an
// empty window site, proposals biased toward sites adjacent to the rest),
// objective = contact count, acceptance exp(delta/T), geometric cooling.
// Restarts run from params.initial when given, else from a per-restart
// seeded greedy_grow. Never returns a count below its initialization.
// The wall-clock budget is converted to a move count at a fixed conservative
// rate (250000 moves/second) so results are bit-reproducible; budget 0 with
// an initial configuration returns it unchanged.
SearchResult anneal(const SearchParams& params);

struct LocalMaxResult {
  bool is_local_max = true;
  int ball = 0;  // 1-based index of the relocated ball; 0 when none improves
  HexCoord to;
  int gain = 0;
};

// True iff no single-ball relocation to an empty window site strictly
// increases the contact count. cfg must lie inside the window. Scans balls in
// index order and sites in (k, j, i) order; reports the first improving move.
LocalMaxResult local_maximality_check(const Configuration& cfg,
                                      const Window& window);

}  // namespace hexpack
