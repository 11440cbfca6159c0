// Summary metrics for packings: the excess c - 3n, the asymptotic ratio
// (6n - c)/n^(2/3), and the reference interval it is compared against.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hexpack {

struct ReportRow {
  int n = 0;
  int c = 0;
  int excess = 0;             // c - 3n
  double ratio = 0.0;         // (6n - c) / n^(2/3), full precision
  std::string ratio_display;  // rounded to nearest, one decimal
};

enum class Relation { below, inside, above };

// Asymptotic reference interval for the ratio; it is reported, never
// enforced — the bound holds for n -> infinity, not at any finite n.
inline constexpr double kRatioLower = 0.926;
inline constexpr double kRatioUpper = 7.862;

struct BoundCheck {
  double lower = kRatioLower;
  double upper = kRatioUpper;
  double ratio = 0.0;
  Relation relation = Relation::inside;
  std::string note;
};

const char* relation_name(Relation r);

// Throws std::invalid_argument unless n >= 1 and 0 <= c <= 6n (a ball has at
// most 12 lattice neighbors, so c > 6n is impossible).
ReportRow metrics_row(int n, int c);

BoundCheck bound_check(int n, int c);

// Tab-separated table: header "n\tc\tc_minus_3n\tratio\tratio_full" and one
// row per (n, c) pair; newline-terminated rows.
std::string summary_table(const std::vector<std::pair<int, int>>& rows);

// Formats with 9 significant digits; integral values keep one decimal
// ("4.0", "0.0") so the column stays visibly real-valued.
std::string format_real9(double value);

}  // namespace hexpack
