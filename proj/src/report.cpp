#include "hexpack/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hexpack {

namespace {

constexpr const char* kAsymptoticNote =
    "asymptotic reference - valid for n -> infinity, not a constraint at "
    "finite n";

double ratio_value(int n, int c) {
  // cbrt-squared rather than pow(n, 2/3): exact for perfect cubes
  // (n = 27 gives exactly 9), and at least as accurate elsewhere.
  const double r = std::cbrt(static_cast<double>(n));
  return (6.0 * n - c) / (r * r);
}

void check_domain(int n, int c) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (c < 0 || c > 6 * n) {
    throw std::invalid_argument("contact count must satisfy 0 <= c <= 6n");
  }
}

}  // namespace

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::below:
      return "below";
    case Relation::inside:
      return "inside";
    case Relation::above:
      return "above";
  }
  return "?";
}

ReportRow metrics_row(int n, int c) {
  check_domain(n, c);
  ReportRow row;
  row.n = n;
  row.c = c;
  row.excess = c - 3 * n;
  row.ratio = ratio_value(n, c);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", row.ratio);
  row.ratio_display = buf;
  return row;
}

BoundCheck bound_check(int n, int c) {
  check_domain(n, c);
  BoundCheck check;
  check.ratio = ratio_value(n, c);
  if (check.ratio < kRatioLower) {
    check.relation = Relation::below;
  } else if (check.ratio > kRatioUpper) {
    check.relation = Relation::above;
  } else {
    check.relation = Relation::inside;
  }
  check.note = kAsymptoticNote;
  return check;
}

std::string summary_table(const std::vector<std::pair<int, int>>& rows) {
  std::string out = "n\tc\tc_minus_3n\tratio\tratio_full\n";
  for (const auto& [n, c] : rows) {
    const ReportRow row = metrics_row(n, c);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d\t%d\t%d\t%s\t%.9f\n", row.n, row.c,
                  row.excess, row.ratio_display.c_str(), row.ratio);
    out += buf;
  }
  return out;
}

std::string format_real9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  std::string s = buf;
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace hexpack
