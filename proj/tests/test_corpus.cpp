#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "hexpack/corpus.hpp"

using namespace hexpack;

namespace {
constexpr int kTotals[8] = {64, 67, 72, 76, 80, 84, 87, 90};
}

TEST_CASE("embedded corpus: shape and recorded totals") {
  for (int n = 20; n <= 27; ++n) {
    const auto& entry = embedded(n);
    CHECK(entry.n == n);
    CHECK(static_cast<int>(entry.configuration.centers.size()) == n);
    CHECK(entry.claimed_total == kTotals[n - 20]);
    CHECK(static_cast<int>(entry.listed_edges.size()) == kTotals[n - 20]);
    CHECK(validate(entry.configuration).ok);
    // Listed edges are sorted, 1-based, a < b.
    CHECK(std::is_sorted(entry.listed_edges.begin(), entry.listed_edges.end()));
    for (const auto& [a, b] : entry.listed_edges) {
      CHECK(1 <= a);
      CHECK(a < b);
      CHECK(b <= n);
    }
    // The total note exists only where the source text is garbled (n = 24).
    if (n == 24) {
      CHECK(entry.total_note ==
            "source total line garbled: \"Total: c(24) = y\"; the 80 listed "
            "pairs match the summary value");
    } else {
      CHECK(entry.total_note.empty());
    }
  }
  CHECK_THROWS_AS(embedded(19), std::out_of_range);
  CHECK_THROWS_AS(embedded(28), std::out_of_range);
}

TEST_CASE("corpus verification: computed graphs match the listings exactly") {
  for (int n = 20; n <= 27; ++n) {
    const auto report = verify_entry(embedded(n));
    CHECK(report.n == n);
    CHECK(report.computed_count == kTotals[n - 20]);
    CHECK(report.claimed_total == kTotals[n - 20]);
    CHECK(report.listed_count == kTotals[n - 20]);
    CHECK(report.missing_edges.empty());
    CHECK(report.extra_edges.empty());
    CHECK(report.exact_match());
  }
}

TEST_CASE("every listed pair is an exact tangency (both predicates)") {
  for (int n = 20; n <= 27; ++n) {
    const auto& entry = embedded(n);
    for (const auto& [a, b] : entry.listed_edges) {
      const HexCoord& pa = entry.configuration.centers[a - 1];
      const HexCoord& pb = entry.configuration.centers[b - 1];
      CHECK(pair_form(pa, pb) == 12);
      const CartPoint ca = to_cartesian(pa), cb = to_cartesian(pb);
      const double d = std::sqrt((ca.x - cb.x) * (ca.x - cb.x) +
                                 (ca.y - cb.y) * (ca.y - cb.y) +
                                 (ca.z - cb.z) * (ca.z - cb.z));
      CHECK(std::fabs(d - 2.0) <= 1e-9);
    }
  }
}

TEST_CASE("mismatch reporting is a result, not an exception") {
  PaperEntry entry = embedded(20);
  // Claim one extra bogus pair and drop a real one.
  entry.listed_edges.erase(entry.listed_edges.begin());
  entry.listed_edges.emplace_back(19, 20);
  std::sort(entry.listed_edges.begin(), entry.listed_edges.end());
  const auto report = verify_entry(entry);
  CHECK_FALSE(report.exact_match());
  // The bogus pair is listed-but-not-computed unless 19 and 20 happen to
  // touch; either way the dropped real pair cannot be "missing" (it is
  // computed but no longer listed -> extra).
  CHECK(report.extra_edges.size() >= 1);
}

TEST_CASE("configuration text format: round trip, comments, 1-based order") {
  const std::string text =
      "# leading comment\n"
      "\n"
      "0 0 0\n"
      "   1 0 0   \n"
      "# interior comment\n"
      "-1 2 -3\n";
  const auto cfg = parse_configuration(text);
  REQUIRE(cfg.centers.size() == 3);
  CHECK(cfg.centers[0] == HexCoord{0, 0, 0});
  CHECK(cfg.centers[1] == HexCoord{1, 0, 0});
  CHECK(cfg.centers[2] == HexCoord{-1, 2, -3});

  const auto again = parse_configuration(serialize_configuration(cfg));
  CHECK(again == cfg);

  CHECK(parse_configuration("").centers.empty());
  CHECK(parse_configuration("# only comments\n\n").centers.empty());
}

TEST_CASE("configuration parse errors carry 1-based line numbers") {
  try {
    parse_configuration("0 0 0\n1 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_configuration("1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("a b c\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("1 2 3.5\n"), ParseError);
  // Duplicate centers: reported with the line of the second occurrence.
  try {
    parse_configuration("0 0 0\n# x\n1 0 0\n0 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("edge list text format: round trip and validation") {
  const auto edges = parse_edges("# c\n1 2\n3 7\n2 3\n");
  const std::vector<Edge> expected{{1, 2}, {2, 3}, {3, 7}};
  CHECK(edges == expected);  // returned sorted
  CHECK(parse_edges(serialize_edges(edges)) == edges);
  CHECK(parse_edges("").empty());

  CHECK_THROWS_AS(parse_edges("1\n"), ParseError);
  CHECK_THROWS_AS(parse_edges("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edges("2 2\n"), ParseError);  // requires a < b
  CHECK_THROWS_AS(parse_edges("3 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edges("0 2\n"), ParseError);  // 1-based
  try {
    parse_edges("1 2\n5 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("corpus entries round trip through the text formats") {
  for (int n : {20, 24, 27}) {
    const auto& entry = embedded(n);
    CHECK(parse_configuration(serialize_configuration(entry.configuration)) ==
          entry.configuration);
    CHECK(parse_edges(serialize_edges(entry.listed_edges)) ==
          entry.listed_edges);
  }
}
