#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrlab {

struct ReportRow {
  std::vector<double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// One estimate checked over a sweep: rows of (params..., lhs, rhs, ratio).
struct EstimateReport {
  std::string name;
  std::vector<std::string> param_names;
  std::vector<ReportRow> rows;
  double max_ratio = 0.0;
  std::size_t skipped = 0;
  bool flagged = false;
  std::string note;

  void add(std::vector<double> params, double lhs, double rhs);
  void merge(const EstimateReport& other);
  double min_ratio() const;
  bool empty() const { return rows.empty(); }
};

/// Header row, one line per row, then a summary line "max,<blank params>,,,max_ratio".
void write_csv(std::ostream& out, const EstimateReport& report);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace mrlab
