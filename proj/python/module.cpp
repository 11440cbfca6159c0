// Python bindings: a thin, plain-data surface over the C++ core.
// Coordinates are (i, j, k) tuples, configurations are lists of tuples,
// structured results are dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hexpack/corpus.hpp"
#include "hexpack/lattice.hpp"
#include "hexpack/packing.hpp"
#include "hexpack/report.hpp"
#include "hexpack/search.hpp"

namespace py = pybind11;

namespace {

using hexpack::Configuration;
using hexpack::HexCoord;
using hexpack::Window;

HexCoord coord_from(const py::sequence& s) {
  if (py::len(s) != 3) throw py::value_error("coordinate must have three entries");
  return HexCoord{s[0].cast<int>(), s[1].cast<int>(), s[2].cast<int>()};
}

py::tuple coord_to(const HexCoord& p) { return py::make_tuple(p.i, p.j, p.k); }

Configuration config_from(const py::sequence& seq) {
  Configuration cfg;
  for (const auto& item : seq) cfg.centers.push_back(coord_from(item.cast<py::sequence>()));
  return cfg;
}

py::list config_to(const Configuration& cfg) {
  py::list out;
  for (const auto& p : cfg.centers) out.append(coord_to(p));
  return out;
}

Window window_from(const py::sequence& s) {
  if (py::len(s) != 3) throw py::value_error("window must be (I, J, K)");
  return Window{s[0].cast<int>(), s[1].cast<int>(), s[2].cast<int>()};
}

py::list edges_to(const std::vector<hexpack::Edge>& edges) {
  py::list out;
  for (const auto& [a, b] : edges) out.append(py::make_tuple(a, b));
  return out;
}

std::vector<hexpack::Edge> edges_from(const py::sequence& seq) {
  std::vector<hexpack::Edge> edges;
  for (const auto& item : seq) {
    auto pair = item.cast<py::sequence>();
    if (py::len(pair) != 2) throw py::value_error("edge must have two entries");
    edges.emplace_back(pair[0].cast<int>(), pair[1].cast<int>());
  }
  return edges;
}

py::dict result_to(const hexpack::SearchResult& r) {
  py::dict out;
  out["best_count"] = r.best_count;
  py::list witnesses;
  for (const auto& w : r.witnesses) witnesses.append(config_to(w.configuration));
  out["witnesses"] = witnesses;
  out["status"] = hexpack::status_name(r.status);
  out["nodes_explored"] = r.nodes_explored;
  out["elapsed"] = r.elapsed;
  out["configuration"] = config_to(r.best_configuration);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite ball packings on the hexagonal close-packing lattice";

  // ----- lattice
  m.def("to_cartesian", [](const py::sequence& p) {
    const auto c = hexpack::to_cartesian(coord_from(p));
    return py::make_tuple(c.x, c.y, c.z);
  });
  m.def("pair_form", [](const py::sequence& a, const py::sequence& b) {
    return hexpack::pair_form(coord_from(a), coord_from(b));
  });
  m.def("is_contact", [](const py::sequence& a, const py::sequence& b) {
    return hexpack::is_contact(coord_from(a), coord_from(b));
  });
  m.def("neighbors", [](const py::sequence& p) {
    py::list out;
    for (const auto& q : hexpack::neighbors(coord_from(p))) out.append(coord_to(q));
    return out;
  });

  // ----- packing
  m.def("contact_count",
        [](const py::sequence& cfg) { return hexpack::contact_count(config_from(cfg)); });
  m.def("contact_graph", [](const py::sequence& cfg) {
    return edges_to(hexpack::build_contact_graph(config_from(cfg)).edges);
  });
  m.def("canonicalize", [](const py::sequence& cfg) {
    return config_to(hexpack::canonicalize(config_from(cfg)).configuration);
  });

  // ----- corpus
  m.def("embedded", [](int n) {
    const auto& e = hexpack::embedded(n);
    py::dict out;
    out["n"] = e.n;
    out["centers"] = config_to(e.configuration);
    out["edges"] = edges_to(e.listed_edges);
    out["claimed_total"] = e.claimed_total;
    out["total_note"] = e.total_note;
    return out;
  });
  m.def("verify", [](int n) {
    const auto r = hexpack::verify_entry(hexpack::embedded(n));
    py::dict out;
    out["n"] = r.n;
    out["computed_count"] = r.computed_count;
    out["claimed_total"] = r.claimed_total;
    out["listed_count"] = r.listed_count;
    out["missing_edges"] = edges_to(r.missing_edges);
    out["extra_edges"] = edges_to(r.extra_edges);
    out["exact_match"] = r.exact_match();
    return out;
  });
  m.def("parse_configuration",
        [](const std::string& text) { return config_to(hexpack::parse_configuration(text)); });
  m.def("serialize_configuration", [](const py::sequence& cfg) {
    return hexpack::serialize_configuration(config_from(cfg));
  });
  m.def("parse_edges",
        [](const std::string& text) { return edges_to(hexpack::parse_edges(text)); });
  m.def("serialize_edges",
        [](const py::sequence& e) { return hexpack::serialize_edges(edges_from(e)); });

  // ----- report
  m.def("metrics_row", [](int n, int c) {
    const auto r = hexpack::metrics_row(n, c);
    py::dict out;
    out["n"] = r.n;
    out["c"] = r.c;
    out["excess"] = r.excess;
    out["ratio"] = r.ratio;
    out["ratio_display"] = r.ratio_display;
    return out;
  });
  m.def("bound_check", [](int n, int c) {
    const auto b = hexpack::bound_check(n, c);
    py::dict out;
    out["lower"] = b.lower;
    out["upper"] = b.upper;
    out["ratio"] = b.ratio;
    out["relation"] = hexpack::relation_name(b.relation);
    out["note"] = b.note;
    return out;
  });
  m.def("summary_table", [](const py::sequence& rows) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : rows) {
      auto pair = item.cast<py::sequence>();
      pairs.emplace_back(pair[0].cast<int>(), pair[1].cast<int>());
    }
    return hexpack::summary_table(pairs);
  });

  // ----- search
  auto fill_params = [](hexpack::SearchParams& params, int n, const py::sequence& window,
                        std::uint64_t seed, double budget, int restarts, int threads,
                        const py::object& initial) {
    params.n = n;
    params.window = window_from(window);
    params.seed = seed;
    params.budget = budget;
    params.restarts = restarts;
    params.threads = threads;
    if (!initial.is_none()) params.initial = config_from(initial.cast<py::sequence>());
  };

  m.def(
      "exact_max_contacts",
      [](int n, const py::sequence& window, double budget, bool isomorph_rejection) {
        hexpack::SearchParams params;
        params.n = n;
        params.window = window_from(window);
        params.budget = budget;
        params.isomorph_rejection = isomorph_rejection;
        params.algorithm = hexpack::Algorithm::exact;
        return result_to(hexpack::exact_max_contacts(params));
      },
      py::arg("n"), py::arg("window"), py::arg("budget") = 0.0,
      py::arg("isomorph_rejection") = true);

  m.def(
      "naive_oracle",
      [](int n, const py::sequence& window) {
        return hexpack::naive_oracle(n, window_from(window));
      },
      py::arg("n"), py::arg("window"));

  m.def(
      "greedy",
      [fill_params](int n, const py::sequence& window, std::uint64_t seed,
                    const py::object& initial) {
        hexpack::SearchParams params;
        fill_params(params, n, window, seed, 0.0, 1, 1, initial);
        params.algorithm = hexpack::Algorithm::greedy;
        return result_to(hexpack::greedy_grow(params));
      },
      py::arg("n"), py::arg("window"), py::arg("seed") = 0,
      py::arg("initial") = py::none());

  m.def(
      "anneal",
      [fill_params](int n, const py::sequence& window, double budget, std::uint64_t seed,
                    int restarts, int threads, const py::object& initial, double t0,
                    double t_end) {
        hexpack::SearchParams params;
        fill_params(params, n, window, seed, budget, restarts, threads, initial);
        params.algorithm = hexpack::Algorithm::anneal;
        params.t0 = t0;
        params.t_end = t_end;
        return result_to(hexpack::anneal(params));
      },
      py::arg("n"), py::arg("window"), py::arg("budget"), py::arg("seed") = 0,
      py::arg("restarts") = 8, py::arg("threads") = 1, py::arg("initial") = py::none(),
      py::arg("t0") = 2.0, py::arg("t_end") = 0.02);

  m.def(
      "local_maximality_check",
      [](const py::sequence& cfg, const py::sequence& window) {
        const auto r =
            hexpack::local_maximality_check(config_from(cfg), window_from(window));
        py::dict out;
        out["is_local_max"] = r.is_local_max;
        out["ball"] = r.ball;
        out["to"] = coord_to(r.to);
        out["gain"] = r.gain;
        return out;
      },
      py::arg("configuration"), py::arg("window"));
}
