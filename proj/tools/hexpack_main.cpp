// Command-line frontend: verification against the bundled corpus, contact
// maximization searches, format conversion, and summary reporting.
//
// Exit codes: 0 success / exact match; 1 verification mismatch, search target
// not met, or exact-search budget exhausted; 2 usage or parse error.
// Results go to the output stream (or --out), diagnostics to the error
// stream; all result content is deterministic for identical arguments.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hexpack/corpus.hpp"
#include "hexpack/lattice.hpp"
#include "hexpack/packing.hpp"
#include "hexpack/report.hpp"
#include "hexpack/search.hpp"

namespace {

using hexpack::Configuration;
using hexpack::Edge;
using hexpack::Window;

Window parse_window(const std::string& text) {
  int i = 0, j = 0, k = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%dx%dx%d%c", &i, &j, &k, &extra) != 3 ||
      i <= 0 || j <= 0 || k <= 0) {
    throw std::invalid_argument("window must be IxJxK with positive integers, got \"" +
                                text + "\"");
  }
  return Window{i, j, k};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << content;
}

void print_edge_lines(const char* label, const std::vector<Edge>& edges) {
  for (const auto& [a, b] : edges) {
    std::cout << label << ": " << a << " " << b << "\n";
  }
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int paper_n = 0;
  bool has_paper = false;
  std::string input_path;
  std::string edges_path;
};

int run_verify(const VerifyArgs& args) {
  if (args.has_paper) {
    const auto& entry = hexpack::embedded(args.paper_n);
    const auto report = hexpack::verify_entry(entry);
    std::cout << "n: " << report.n << "\n"
              << "computed_count: " << report.computed_count << "\n"
              << "claimed_total: " << report.claimed_total << "\n"
              << "listed_count: " << report.listed_count << "\n"
              << "missing_edges: " << report.missing_edges.size() << "\n";
    print_edge_lines("missing", report.missing_edges);
    std::cout << "extra_edges: " << report.extra_edges.size() << "\n";
    print_edge_lines("extra", report.extra_edges);
    std::cout << "verdict: " << (report.exact_match() ? "exact-match" : "mismatch")
              << "\n";
    if (!entry.total_note.empty()) std::cout << "note: " << entry.total_note << "\n";
    return report.exact_match() ? 0 : 1;
  }

  const Configuration cfg = hexpack::parse_configuration(read_file(args.input_path));
  const auto graph = hexpack::build_contact_graph(cfg);
  std::cout << "n: " << graph.n << "\n"
            << "computed_count: " << graph.count() << "\n";
  if (args.edges_path.empty()) {
    std::cout << "verdict: computed\n";
    return 0;
  }
  const auto listed = hexpack::parse_edges(read_file(args.edges_path));
  std::vector<Edge> missing, extra;
  std::set_difference(listed.begin(), listed.end(), graph.edges.begin(),
                      graph.edges.end(), std::back_inserter(missing));
  std::set_difference(graph.edges.begin(), graph.edges.end(), listed.begin(),
                      listed.end(), std::back_inserter(extra));
  std::cout << "listed_count: " << listed.size() << "\n"
            << "missing_edges: " << missing.size() << "\n";
  print_edge_lines("missing", missing);
  std::cout << "extra_edges: " << extra.size() << "\n";
  print_edge_lines("extra", extra);
  const bool match = missing.empty() && extra.empty();
  std::cout << "verdict: " << (match ? "exact-match" : "mismatch") << "\n";
  return match ? 0 : 1;
}

// ----------------------------------------------------------------- search

struct SearchArgs {
  int n = 1;
  std::string window_text;
  std::string algo;
  std::uint64_t seed = 0;
  double budget = 0.0;
  int restarts = 8;
  std::string init_path;
  int target = 0;
  bool has_target = false;
  std::string out_path;
  int threads = 1;
};

int run_search(const SearchArgs& args) {
  hexpack::SearchParams params;
  params.n = args.n;
  params.window = parse_window(args.window_text);
  params.seed = args.seed;
  params.budget = args.budget;
  params.restarts = args.restarts;
  params.threads = args.threads;
  if (!args.init_path.empty()) {
    params.initial = hexpack::parse_configuration(read_file(args.init_path));
  }

  hexpack::SearchResult result;
  if (args.algo == "exact") {
    params.algorithm = hexpack::Algorithm::exact;
    result = hexpack::exact_max_contacts(params);
  } else if (args.algo == "greedy") {
    params.algorithm = hexpack::Algorithm::greedy;
    result = hexpack::greedy_grow(params);
  } else {
    params.algorithm = hexpack::Algorithm::anneal;
    result = hexpack::anneal(params);
  }

  std::ostringstream summary;
  summary << "algorithm: " << hexpack::algorithm_name(params.algorithm) << "\n"
          << "n: " << params.n << "\n"
          << "window: " << params.window.I << "x" << params.window.J << "x"
          << params.window.K << "\n"
          << "seed: " << params.seed << "\n"
          << "restarts: " << params.restarts << "\n"
          << "threads: " << params.threads << "\n"
          << "best_count: " << result.best_count << "\n"
          << "status: " << hexpack::status_name(result.status) << "\n"
          << "nodes: " << result.nodes_explored << "\n"
          << "witnesses: " << result.witnesses.size() << "\n";
  std::cerr << summary.str();

  std::ostringstream cfg_text;
  std::istringstream lines(summary.str());
  for (std::string line; std::getline(lines, line);) {
    cfg_text << "# " << line << "\n";
  }
  cfg_text << hexpack::serialize_configuration(result.best_configuration);
  write_output(args.out_path, cfg_text.str());

  if (args.has_target && result.best_count < args.target) {
    std::cerr << "target not met: best_count " << result.best_count << " < "
              << args.target << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------- convert

int run_convert(const std::string& input_path, const std::string& to) {
  const Configuration cfg = hexpack::parse_configuration(read_file(input_path));
  if (to == "cartesian") {
    std::string out = "index,x,y,z\n";
    for (std::size_t t = 0; t < cfg.centers.size(); ++t) {
      const auto p = hexpack::to_cartesian(cfg.centers[t]);
      out += std::to_string(t + 1) + "," + hexpack::format_real9(p.x) + "," +
             hexpack::format_real9(p.y) + "," + hexpack::format_real9(p.z) + "\n";
    }
    std::cout << out;
    return 0;
  }
  const auto graph = hexpack::build_contact_graph(cfg);
  std::cout << hexpack::serialize_edges(graph.edges);
  return 0;
}

// ----------------------------------------------------------------- report

int run_report(bool paper, const std::vector<std::string>& inputs) {
  std::vector<std::pair<int, int>> rows;
  if (paper) {
    for (int n = 20; n <= 27; ++n) {
      const auto& entry = hexpack::embedded(n);
      rows.emplace_back(entry.n, hexpack::contact_count(entry.configuration));
    }
  }
  for (const auto& path : inputs) {
    const Configuration cfg = hexpack::parse_configuration(read_file(path));
    rows.emplace_back(static_cast<int>(cfg.centers.size()),
                      hexpack::contact_count(cfg));
  }
  std::cout << hexpack::summary_table(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ball packings on the hexagonal close-packing lattice"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a configuration's contact list");
  auto* verify_paper = verify_cmd->add_option("--paper", verify_args.paper_n,
                                              "Bundled reference entry (20..27)");
  auto* verify_input =
      verify_cmd->add_option("--input", verify_args.input_path, ".hexcfg file");
  auto* verify_edges = verify_cmd->add_option(
      "--edges", verify_args.edges_path, ".edges file to compare against");
  verify_paper->excludes(verify_input);
  verify_edges->needs(verify_input);

  SearchArgs search_args;
  auto* search_cmd =
      app.add_subcommand("search", "Maximize the contact count of n balls");
  search_cmd->add_option("--n", search_args.n, "Number of balls")->required();
  search_cmd->add_option("--window", search_args.window_text, "Window IxJxK")
      ->required();
  search_cmd->add_option("--algo", search_args.algo, "exact|greedy|anneal")
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "anneal"}));
  search_cmd->add_option("--seed", search_args.seed, "RNG seed (default 0)");
  search_cmd->add_option("--budget", search_args.budget,
                         "Wall-clock budget in seconds");
  search_cmd->add_option("--restarts", search_args.restarts,
                         "Annealing restarts (default 8)");
  search_cmd->add_option("--init", search_args.init_path,
                         "Initial configuration (.hexcfg)");
  auto* target_opt = search_cmd->add_option("--target", search_args.target,
                                            "Exit 1 if best_count falls short");
  search_cmd->add_option("--out", search_args.out_path,
                         "Output .hexcfg path (default standard output)");
  search_cmd->add_option("--threads", search_args.threads,
                         "Worker threads; 1 = fully deterministic output");

  std::string convert_input, convert_to;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert a .hexcfg to other formats");
  convert_cmd->add_option("--input", convert_input, ".hexcfg file")->required();
  convert_cmd->add_option("--to", convert_to, "cartesian|edges")
      ->required()
      ->check(CLI::IsMember({"cartesian", "edges"}));

  bool report_paper = false;
  std::vector<std::string> report_inputs;
  auto* report_cmd =
      app.add_subcommand("report", "Summary metrics table (TSV)");
  auto* report_paper_flag = report_cmd->add_flag(
      "--paper", report_paper, "Report on the bundled corpus (n = 20..27)");
  auto* report_input_opt = report_cmd->add_option(
      "--input", report_inputs, ".hexcfg files to report on");
  report_paper_flag->excludes(report_input_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      verify_args.has_paper = verify_paper->count() > 0;
      if (!verify_args.has_paper && verify_input->count() == 0) {
        std::cerr << "verify requires --paper N or --input FILE\n";
        return 2;
      }
      return run_verify(verify_args);
    }
    if (search_cmd->parsed()) {
      search_args.has_target = target_opt->count() > 0;
      return run_search(search_args);
    }
    if (convert_cmd->parsed()) return run_convert(convert_input, convert_to);
    return run_report(report_paper, report_inputs);
  } catch (const hexpack::SearchIncomplete& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hexpack::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
