// Bundled reference corpus (eight packings, n = 20..27, with recorded contact
// lists and totals), plain-text file formats, and corpus verification.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hexpack/packing.hpp"

namespace hexpack {

// One reference entry: the transcribed configuration, its recorded contact
// list, and the total the source claims for it. total_note is non-empty only
// where the source text needed commentary (the n=24 total line is garbled).
struct PaperEntry {
  int n = 0;
  Configuration configuration;
  std::vector<Edge> listed_edges;  // lexicographically sorted, a < b
  int claimed_total = 0;
  std::string total_note;
};

struct VerificationReport {
  int n = 0;
  int computed_count = 0;
  int claimed_total = 0;
  int listed_count = 0;
  std::vector<Edge> missing_edges;  // listed but not computed
  std::vector<Edge> extra_edges;    // computed but not listed
  [[nodiscard]] bool exact_match() const {
    return missing_edges.empty() && extra_edges.empty() &&
           computed_count == claimed_total;
  }
};

// Thrown by the text-format parsers; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
  int line;
};

// The read-only reference entry for n in 20..27; throws std::out_of_range
// otherwise.
const PaperEntry& embedded(int n);

// .hexcfg: UTF-8 text, one ball per line as three integers "i j k"; lines
// starting with '#' and blank lines are ignored; ball indices are 1-based in
// file order. Throws ParseError on malformed lines or duplicate centers.
Configuration parse_configuration(const std::string& text);
std::string serialize_configuration(const Configuration& cfg);

// .edges: one edge per line as two 1-based integers "a b" with a < b;
// '#' comments and blank lines allowed. Parsed edges are returned sorted.
std::vector<Edge> parse_edges(const std::string& text);
std::string serialize_edges(const std::vector<Edge>& edges);

// Recompute the entry's contact graph and compare it, as a set, against the
// recorded list. Mismatch is a result, never an exception.
VerificationReport verify_entry(const PaperEntry& entry);

}  // namespace hexpack
