#include "hexpack/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace hexpack {

#include "corpus_data.inc"

namespace {

std::array<PaperEntry, 8> build_entries() {
  std::array<PaperEntry, 8> entries;
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const RawEntry& raw = kRawEntries[t];
    PaperEntry e;
    e.n = raw.n;
    e.configuration.centers.reserve(static_cast<std::size_t>(raw.n));
    for (int s = 0; s < raw.n; ++s) {
      e.configuration.centers.push_back(
          HexCoord{raw.centers[s][0], raw.centers[s][1], raw.centers[s][2]});
    }
    e.listed_edges.reserve(static_cast<std::size_t>(raw.edge_count));
    for (int s = 0; s < raw.edge_count; ++s) {
      e.listed_edges.emplace_back(raw.edges[s][0], raw.edges[s][1]);
    }
    e.claimed_total = raw.claimed_total;
    if (raw.total_note != nullptr) e.total_note = raw.total_note;
    entries[t] = std::move(e);
  }
  return entries;
}

// Splits into lines, remembering 1-based line numbers; skips blank and
// '#'-comment lines (leading whitespace allowed before '#').
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int line_number = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(line_number, line);
  }
  return out;
}

std::vector<long long> parse_int_tokens(int line_number, const std::string& line) {
  std::vector<long long> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t' || *p == '\r') {
      ++p;
      continue;
    }
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t' &&
                              *next != '\r')) {
      throw ParseError(line_number, "non-integer token");
    }
    values.push_back(value);
    p = next;
  }
  return values;
}

}  // namespace

const PaperEntry& embedded(int n) {
  static const std::array<PaperEntry, 8> entries = build_entries();
  if (n < 20 || n > 27) {
    throw std::out_of_range("embedded entry index must be in 20..27, got " +
                            std::to_string(n));
  }
  return entries[static_cast<std::size_t>(n - 20)];
}

Configuration parse_configuration(const std::string& text) {
  Configuration cfg;
  for (const auto& [line_number, line] : content_lines(text)) {
    const auto values = parse_int_tokens(line_number, line);
    if (values.size() != 3) {
      throw ParseError(line_number, "expected three integers \"i j k\", got " +
                                        std::to_string(values.size()) +
                                        " token(s)");
    }
    cfg.centers.push_back(HexCoord{static_cast<int>(values[0]),
                                   static_cast<int>(values[1]),
                                   static_cast<int>(values[2])});
    const HexCoord& added = cfg.centers.back();
    for (std::size_t t = 0; t + 1 < cfg.centers.size(); ++t) {
      if (cfg.centers[t] == added) {
        throw ParseError(line_number,
                         "duplicate center (also ball " + std::to_string(t + 1) +
                             ")");
      }
    }
  }
  return cfg;
}

std::string serialize_configuration(const Configuration& cfg) {
  std::string out;
  for (const auto& p : cfg.centers) {
    out += std::to_string(p.i) + " " + std::to_string(p.j) + " " +
           std::to_string(p.k) + "\n";
  }
  return out;
}

std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> edges;
  for (const auto& [line_number, line] : content_lines(text)) {
    const auto values = parse_int_tokens(line_number, line);
    if (values.size() != 2) {
      throw ParseError(line_number, "expected two integers \"a b\", got " +
                                        std::to_string(values.size()) +
                                        " token(s)");
    }
    if (values[0] < 1 || values[1] <= values[0]) {
      throw ParseError(line_number, "edge must satisfy 1 <= a < b");
    }
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string serialize_edges(const std::vector<Edge>& edges) {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [a, b] : sorted) {
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

VerificationReport verify_entry(const PaperEntry& entry) {
  VerificationReport report;
  report.n = entry.n;
  report.claimed_total = entry.claimed_total;
  report.listed_count = static_cast<int>(entry.listed_edges.size());

  const ContactGraph graph = build_contact_graph(entry.configuration);
  report.computed_count = graph.count();

  std::set_difference(entry.listed_edges.begin(), entry.listed_edges.end(),
                      graph.edges.begin(), graph.edges.end(),
                      std::back_inserter(report.missing_edges));
  std::set_difference(graph.edges.begin(), graph.edges.end(),
                      entry.listed_edges.begin(), entry.listed_edges.end(),
                      std::back_inserter(report.extra_edges));
  return report;
}

}  // namespace hexpack
