#include "hexpack/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace hexpack {

namespace {

// ------------------------------------------------------------- determinism

// Deterministic RNG wrapper. std::uniform_int_distribution is
// implementation-defined, which would break bit-reproducibility across
// standard libraries, so bounded draws are hand-rolled (unbiased rejection).
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    return x % n;
  }

  double real01() {  // uniform in [0, 1), 53 bits
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct StopWatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  [[nodiscard]] double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

// ------------------------------------------------------------ window graph

// Window sites in (k, j, i) order with in-window adjacency lists.
struct WindowGraph {
  Window w;
  std::vector<HexCoord> sites;
  std::vector<std::vector<int>> adj;

  explicit WindowGraph(const Window& win) : w(win), sites(enum_window(win)) {
    adj.resize(sites.size());
    for (std::size_t s = 0; s < sites.size(); ++s) {
      for (const auto& q : neighbors(sites[s])) {
        if (w.contains(q)) adj[s].push_back(index_of(q));
      }
    }
  }

  [[nodiscard]] int index_of(const HexCoord& p) const {
    return (p.k * w.J + p.j) * w.I + p.i;
  }

  [[nodiscard]] bool adjacent(int a, int b) const {
    const auto& list = adj[static_cast<std::size_t>(a)];
    return std::find(list.begin(), list.end(), b) != list.end();
  }
};

int occupied_neighbor_count(const WindowGraph& g, const std::vector<char>& occ,
                            int site) {
  int count = 0;
  for (int q : g.adj[static_cast<std::size_t>(site)]) count += occ[static_cast<std::size_t>(q)];
  return count;
}

// ------------------------------------------------------- shared validation

void require_window_capacity(const SearchParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (params.window.I <= 0 || params.window.J <= 0 || params.window.K <= 0) {
    throw std::invalid_argument("window extents must be positive");
  }
  if (params.window.site_count() < params.n) {
    throw std::invalid_argument("window smaller than n");
  }
}

void require_in_window(const Configuration& cfg, const Window& w) {
  const auto v = validate(cfg);
  if (!v.ok) {
    throw std::invalid_argument("invalid configuration: " + v.errors.front());
  }
  for (const auto& p : cfg.centers) {
    if (!w.contains(p)) {
      throw std::invalid_argument("configuration does not fit the window");
    }
  }
}

// Translation pinning (same convention as canonical forms): min i = 0,
// min j = 0, min k in {0, 1}; sorted in (k, j, i) order.
int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

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

// --------------------------------------------------------------- exact B&B

// Exhaustive growth over connectivity classes. States are connected sets
// containing a parity-pinned origin ball; a state is kept only if some
// point-group image of it fits the window after translation pinning (fit is
// class-invariant and monotone under taking subsets, so pruning on it is
// sound). Deduplication is by canonical form (or by pinned translate when
// isomorph rejection is off). Candidates are unrestricted lattice neighbors,
// so every connected class whose orbit fits the window is generated exactly
// once: any connected set can be built one ball at a time through connected
// prefixes, and the class representative's extensions cover all extension
// classes.
class ExactEngine {
 public:
  ExactEngine(const SearchParams& params)
      : n_(params.n),
        w_(params.window),
        budget_(params.budget),
        iso_(params.isomorph_rejection),
        on_prune_(params.on_prune) {
    // Tail bound: the t-th added ball can touch at most min(12, size + t - 1)
    // of the balls present by then.
    tail_.resize(static_cast<std::size_t>(n_) + 1, 0);
    for (int size = n_; size >= 0; --size) {
      int sum = 0;
      for (int t = 1; t <= n_ - size; ++t) sum += std::min(12, size + t - 1);
      tail_[static_cast<std::size_t>(size)] = sum;
    }
  }

  SearchResult run() {
    for (const HexCoord root : {HexCoord{0, 0, 0}, HexCoord{0, 0, 1}}) {
      std::vector<HexCoord> s{root};
      if (!fits(s)) continue;
      if (visited_.insert(key(s)).second) dfs(s, 0);
    }
    SearchResult result;
    result.best_count = std::max(best_, 0);
    for (const auto& centers : witnesses_) {
      result.witnesses.push_back(CanonicalForm{Configuration{centers}});
    }
    result.status = SearchStatus::optimal_in_window;
    result.nodes_explored = nodes_;
    result.elapsed = watch_.elapsed();
    if (!witnesses_.empty()) {
      result.best_configuration = realize(*witnesses_.begin());
    }
    return result;
  }

  void prime(int incumbent) { best_ = std::max(best_, incumbent); }

 private:
  std::vector<HexCoord> key(const std::vector<HexCoord>& s) const {
    if (iso_) return canonicalize(Configuration{s}).configuration.centers;
    return pin_sorted(s);
  }

  bool fits(const std::vector<HexCoord>& s) const {
    for (int t = 0; t < kPointOpCount; ++t) {
      int min_i = std::numeric_limits<int>::max(), max_i = std::numeric_limits<int>::min();
      int min_j = min_i, max_j = max_i, min_k = min_i, max_k = max_i;
      for (const auto& p : s) {
        const HexCoord q = apply_point_op(t, p);
        min_i = std::min(min_i, q.i);
        max_i = std::max(max_i, q.i);
        min_j = std::min(min_j, q.j);
        max_j = std::max(max_j, q.j);
        min_k = std::min(min_k, q.k);
        max_k = std::max(max_k, q.k);
      }
      if (max_i - min_i > w_.I - 1 || max_j - min_j > w_.J - 1) continue;
      const int span_k = max_k - min_k;
      // After pinning, min k becomes parity(min_k); the stack must still fit.
      if (span_k + parity(min_k) <= w_.K - 1) return true;
    }
    return false;
  }

  // Place the canonical witness inside the window: the lexicographically
  // minimal pinned point-group image that fits directly.
  Configuration realize(const std::vector<HexCoord>& witness) const {
    std::vector<HexCoord> best_placed;
    std::vector<HexCoord> image(witness.size());
    for (int t = 0; t < kPointOpCount; ++t) {
      for (std::size_t s = 0; s < witness.size(); ++s) {
        image[s] = apply_point_op(t, witness[s]);
      }
      auto placed = pin_sorted(image);
      const bool inside =
          std::all_of(placed.begin(), placed.end(),
                      [&](const HexCoord& p) { return w_.contains(p); });
      if (inside && (best_placed.empty() || placed < best_placed)) {
        best_placed = std::move(placed);
      }
    }
    return Configuration{best_placed};
  }

  void dfs(std::vector<HexCoord>& s, int edges) {
    ++nodes_;
    if (budget_ > 0 && (nodes_ & 1023) == 0 && watch_.elapsed() > budget_) {
      throw SearchIncomplete(nodes_, watch_.elapsed());
    }
    const int size = static_cast<int>(s.size());
    if (size == n_) {
      if (edges > best_) {
        best_ = edges;
        witnesses_.clear();
      }
      if (edges == best_) {
        witnesses_.insert(canonicalize(Configuration{s}).configuration.centers);
      }
      return;
    }
    const int ub = edges + tail_[static_cast<std::size_t>(size)];
    if (ub < best_) {
      if (on_prune_) on_prune_(size, ub, best_);
      return;
    }
    std::set<HexCoord> candidates;
    for (const auto& p : s) {
      for (const auto& q : neighbors(p)) {
        if (!std::binary_search(s.begin(), s.end(), q)) candidates.insert(q);
      }
    }
    for (const auto& c : candidates) {
      auto extended = s;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), c), c);
      if (!fits(extended)) continue;
      if (!visited_.insert(key(extended)).second) continue;
      int gain = 0;
      for (const auto& p : s) gain += is_contact(p, c) ? 1 : 0;
      dfs(extended, edges + gain);
    }
  }

  int n_;
  Window w_;
  double budget_;
  bool iso_;
  std::function<void(int, int, int)> on_prune_;
  std::vector<int> tail_;
  std::set<std::vector<HexCoord>> visited_;
  std::set<std::vector<HexCoord>> witnesses_;
  int best_ = -1;
  std::uint64_t nodes_ = 0;
  StopWatch watch_;
};

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::exact:
      return "exact";
    case Algorithm::greedy:
      return "greedy";
    case Algorithm::anneal:
      return "anneal";
  }
  return "?";
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::optimal_in_window:
      return "optimal-in-window";
    case SearchStatus::heuristic_lower_bound:
      return "heuristic-lower-bound";
  }
  return "?";
}

SearchResult exact_max_contacts(const SearchParams& params) {
  require_window_capacity(params);
  ExactEngine engine(params);
  if (params.n >= 2) {
    // Prime the incumbent with a greedy lower bound (fixed internal seed:
    // exact results are independent of params.seed). Pruning is strict
    // (upper bound < incumbent), so every witness at the final value
    // survives priming.
    SearchParams greedy_params;
    greedy_params.n = params.n;
    greedy_params.window = params.window;
    greedy_params.algorithm = Algorithm::greedy;
    greedy_params.seed = 0;
    engine.prime(greedy_grow(greedy_params).best_count);
  }
  return engine.run();
}

int naive_oracle(int n, const Window& window) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const WindowGraph g(window);
  const int m = static_cast<int>(g.sites.size());
  if (m < n) throw std::invalid_argument("window smaller than n");
  double subsets = 1.0;
  for (int t = 1; t <= n; ++t) subsets = subsets * (m - n + t) / t;
  if (subsets > 1.0e7) {
    throw std::invalid_argument("instance above the enumeration cap (10^7 subsets)");
  }

  int best = 0;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n));
  // Plain combination enumeration: every n-subset, no pruning, no symmetry.
  auto rec = [&](auto&& self, int start, int edges) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      best = std::max(best, edges);
      return;
    }
    const int remaining = n - static_cast<int>(chosen.size());
    for (int s = start; s <= m - remaining; ++s) {
      int gain = 0;
      for (int c : chosen) gain += g.adjacent(s, c) ? 1 : 0;
      chosen.push_back(s);
      self(self, s + 1, edges + gain);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

SearchResult greedy_grow(const SearchParams& params) {
  require_window_capacity(params);
  StopWatch watch;
  const WindowGraph g(params.window);
  const int m = static_cast<int>(g.sites.size());
  Rng rng(params.seed);

  std::vector<char> occ(static_cast<std::size_t>(m), 0);
  std::vector<int> gain(static_cast<std::size_t>(m), 0);
  Configuration built;
  int edges = 0;
  std::uint64_t evaluations = 0;

  auto add_site = [&](int s) {
    edges += gain[static_cast<std::size_t>(s)];
    occ[static_cast<std::size_t>(s)] = 1;
    for (int q : g.adj[static_cast<std::size_t>(s)]) ++gain[static_cast<std::size_t>(q)];
    built.centers.push_back(g.sites[static_cast<std::size_t>(s)]);
  };

  if (params.initial.has_value()) {
    require_in_window(*params.initial, params.window);
    if (static_cast<int>(params.initial->centers.size()) > params.n) {
      throw std::invalid_argument("initial configuration larger than n");
    }
    for (const auto& p : params.initial->centers) add_site(g.index_of(p));
  }

  while (static_cast<int>(built.centers.size()) < params.n) {
    int best_gain = -1;
    std::vector<int> tied;
    for (int s = 0; s < m; ++s) {
      if (occ[static_cast<std::size_t>(s)]) continue;
      ++evaluations;
      const int value = gain[static_cast<std::size_t>(s)];
      if (value > best_gain) {
        best_gain = value;
        tied.clear();
      }
      if (value == best_gain) tied.push_back(s);
    }
    int pick = tied.front();
    if (tied.size() > 1) {
      // Minimal canonical form of the extended set; sites whose extensions
      // share it (symmetric images) fall through to a seeded pick.
      std::vector<HexCoord> minimal_form;
      std::vector<int> group;
      for (int s : tied) {
        built.centers.push_back(g.sites[static_cast<std::size_t>(s)]);
        auto form = canonicalize(built).configuration.centers;
        built.centers.pop_back();
        if (group.empty() || form < minimal_form) {
          minimal_form = std::move(form);
          group.assign(1, s);
        } else if (form == minimal_form) {
          group.push_back(s);
        }
      }
      pick = group[rng.below(group.size())];
    }
    add_site(pick);
  }

  SearchResult result;
  result.best_count = edges;
  result.witnesses.push_back(canonicalize(built));
  result.status = SearchStatus::heuristic_lower_bound;
  result.nodes_explored = evaluations;
  result.elapsed = watch.elapsed();
  result.best_configuration = std::move(built);
  return result;
}

SearchResult anneal(const SearchParams& params) {
  require_window_capacity(params);
  StopWatch watch;
  if (params.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(params.t0 > 0.0) || !(params.t_end > 0.0) || params.t_end > params.t0) {
    throw std::invalid_argument("annealing schedule requires t0 >= t_end > 0");
  }
  if (params.initial.has_value()) {
    require_in_window(*params.initial, params.window);
    if (static_cast<int>(params.initial->centers.size()) != params.n) {
      throw std::invalid_argument("initial configuration must have exactly n balls");
    }
  }
  if (params.budget < 0.0) throw std::invalid_argument("budget must be >= 0");
  if (params.budget == 0.0) {
    if (!params.initial.has_value()) {
      throw std::invalid_argument("anneal requires a positive budget or an initial configuration");
    }
    SearchResult result;
    result.best_count = contact_count(*params.initial);
    result.witnesses.push_back(canonicalize(*params.initial));
    result.status = SearchStatus::heuristic_lower_bound;
    result.nodes_explored = 0;
    result.elapsed = watch.elapsed();
    result.best_configuration = *params.initial;
    return result;
  }

  const WindowGraph g(params.window);
  const int m = static_cast<int>(g.sites.size());

  // Determinism contract: the wall-clock budget buys a fixed number of moves
  // at a conservative 250000 moves/second, split across restarts.
  const auto total_moves =
      static_cast<std::uint64_t>(std::llround(params.budget * 250000.0));
  const std::uint64_t per_restart = std::max<std::uint64_t>(
      1, total_moves / static_cast<std::uint64_t>(params.restarts));

  struct Outcome {
    int best = -1;
    std::vector<int> best_sites;
    std::uint64_t moves = 0;
  };

  auto run_restart = [&](int r) -> Outcome {
    const std::uint64_t base =
        splitmix64(params.seed ^
                   (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1)));
    Rng rng(splitmix64(base ^ 0xD1B54A32D192ED03ULL));

    Configuration init;
    if (params.initial.has_value()) {
      init = *params.initial;
    } else {
      SearchParams greedy_params;
      greedy_params.n = params.n;
      greedy_params.window = params.window;
      greedy_params.algorithm = Algorithm::greedy;
      greedy_params.seed = splitmix64(base);
      init = greedy_grow(greedy_params).best_configuration;
    }

    std::vector<char> occ(static_cast<std::size_t>(m), 0);
    std::vector<int> occ_list, occ_pos(static_cast<std::size_t>(m), -1);
    std::vector<int> empty_list, empty_pos(static_cast<std::size_t>(m), -1);
    for (const auto& p : init.centers) occ[static_cast<std::size_t>(g.index_of(p))] = 1;
    for (int s = 0; s < m; ++s) {
      if (occ[static_cast<std::size_t>(s)]) {
        occ_pos[static_cast<std::size_t>(s)] = static_cast<int>(occ_list.size());
        occ_list.push_back(s);
      } else {
        empty_pos[static_cast<std::size_t>(s)] = static_cast<int>(empty_list.size());
        empty_list.push_back(s);
      }
    }

    int edges = 0;
    for (int s : occ_list) edges += occupied_neighbor_count(g, occ, s);
    edges /= 2;

    int best = edges;
    std::vector<int> best_sites = occ_list;

    double temperature = params.t0;
    const double alpha =
        per_restart > 1
            ? std::pow(params.t_end / params.t0,
                       1.0 / static_cast<double>(per_restart - 1))
            : 1.0;

    const double bias = 0.9;
    for (std::uint64_t mv = 0; mv < per_restart; ++mv) {
      int target = -1;
      if (rng.real01() < bias) {
        // Toward the cluster: a random neighbor of a random occupied ball.
        const int a = occ_list[rng.below(occ_list.size())];
        const auto& around = g.adj[static_cast<std::size_t>(a)];
        if (!around.empty()) {
          const int q = around[rng.below(around.size())];
          if (!occ[static_cast<std::size_t>(q)]) target = q;
        }
      }
      if (target < 0) target = empty_list[rng.below(empty_list.size())];
      const int ball = occ_list[rng.below(occ_list.size())];

      const int degree_new = occupied_neighbor_count(g, occ, target) -
                             (g.adjacent(target, ball) ? 1 : 0);
      const int degree_old = occupied_neighbor_count(g, occ, ball);
      const int delta = degree_new - degree_old;

      if (delta >= 0 ||
          rng.real01() < std::exp(static_cast<double>(delta) / temperature)) {
        // Relocate: ball -> target, maintaining the index lists.
        occ[static_cast<std::size_t>(ball)] = 0;
        occ[static_cast<std::size_t>(target)] = 1;
        const int bp = occ_pos[static_cast<std::size_t>(ball)];
        occ_list[static_cast<std::size_t>(bp)] = target;
        occ_pos[static_cast<std::size_t>(target)] = bp;
        occ_pos[static_cast<std::size_t>(ball)] = -1;
        const int tp = empty_pos[static_cast<std::size_t>(target)];
        empty_list[static_cast<std::size_t>(tp)] = ball;
        empty_pos[static_cast<std::size_t>(ball)] = tp;
        empty_pos[static_cast<std::size_t>(target)] = -1;
        edges += delta;
        if (edges > best) {
          best = edges;
          best_sites = occ_list;
        }
      }
      temperature *= alpha;
    }
    return Outcome{best, std::move(best_sites), per_restart};
  };

  std::vector<Outcome> outcomes(static_cast<std::size_t>(params.restarts));
  if (params.threads <= 1) {
    for (int r = 0; r < params.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = run_restart(r);
  } else {
    std::vector<std::future<Outcome>> futures;
    futures.reserve(static_cast<std::size_t>(params.restarts));
    for (int r = 0; r < params.restarts; ++r) {
      futures.push_back(std::async(std::launch::async, run_restart, r));
    }
    for (int r = 0; r < params.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = futures[static_cast<std::size_t>(r)].get();
  }

  // Deterministic merge: global best value; witnesses from every restart
  // attaining it; the realized configuration from the earliest such restart.
  int global_best = -1;
  for (const auto& o : outcomes) global_best = std::max(global_best, o.best);

  SearchResult result;
  result.best_count = global_best;
  result.status = SearchStatus::heuristic_lower_bound;
  std::set<std::vector<HexCoord>> witness_set;
  bool realized = false;
  for (const auto& o : outcomes) {
    result.nodes_explored += o.moves;
    if (o.best != global_best) continue;
    std::vector<HexCoord> centers;
    centers.reserve(o.best_sites.size());
    for (int s : o.best_sites) centers.push_back(g.sites[static_cast<std::size_t>(s)]);
    std::sort(centers.begin(), centers.end());
    if (!realized) {
      result.best_configuration = Configuration{centers};
      realized = true;
    }
    witness_set.insert(canonicalize(Configuration{std::move(centers)})
                           .configuration.centers);
  }
  for (const auto& centers : witness_set) {
    result.witnesses.push_back(CanonicalForm{Configuration{centers}});
  }
  result.elapsed = watch.elapsed();
  return result;
}

LocalMaxResult local_maximality_check(const Configuration& cfg,
                                      const Window& window) {
  require_in_window(cfg, window);
  const WindowGraph g(window);
  const int m = static_cast<int>(g.sites.size());
  std::vector<char> occ(static_cast<std::size_t>(m), 0);
  for (const auto& p : cfg.centers) occ[static_cast<std::size_t>(g.index_of(p))] = 1;

  for (int t = 0; t < static_cast<int>(cfg.centers.size()); ++t) {
    const int ball_site = g.index_of(cfg.centers[static_cast<std::size_t>(t)]);
    const int degree_old = occupied_neighbor_count(g, occ, ball_site);
    for (int s = 0; s < m; ++s) {
      if (occ[static_cast<std::size_t>(s)]) continue;
      const int degree_new = occupied_neighbor_count(g, occ, s) -
                             (g.adjacent(s, ball_site) ? 1 : 0);
      if (degree_new > degree_old) {
        return LocalMaxResult{false, t + 1, g.sites[static_cast<std::size_t>(s)],
                              degree_new - degree_old};
      }
    }
  }
  return LocalMaxResult{};
}

}  // namespace hexpack
