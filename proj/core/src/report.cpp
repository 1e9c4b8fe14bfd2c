#include "mrlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace mrlab {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void EstimateReport::add(std::vector<double> params, double lhs, double rhs) {
  ReportRow row{std::move(params), lhs, rhs, 0.0};
  if (rhs > 0.0) {
    row.ratio = lhs / rhs;
  } else {
    row.ratio = lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  max_ratio = rows.empty() ? row.ratio : std::max(max_ratio, row.ratio);
  rows.push_back(std::move(row));
}

void EstimateReport::merge(const EstimateReport& other) {
  if (param_names.empty()) param_names = other.param_names;
  for (const ReportRow& r : other.rows) {
    max_ratio = rows.empty() ? r.ratio : std::max(max_ratio, r.ratio);
    rows.push_back(r);
  }
  skipped += other.skipped;
  flagged = flagged || other.flagged;
}

double EstimateReport::min_ratio() const {
  double m = std::numeric_limits<double>::infinity();
  for (const ReportRow& r : rows) m = std::min(m, r.ratio);
  return rows.empty() ? 0.0 : m;
}

void write_csv(std::ostream& out, const EstimateReport& report) {
  for (const std::string& name : report.param_names) out << name << ',';
  out << "lhs,rhs,ratio\n";
  for (const ReportRow& r : report.rows) {
    for (double v : r.params) out << format_double(v) << ',';
    out << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.ratio)
        << '\n';
  }
  out << "max";
  const std::size_t blanks = report.param_names.empty() ? 1 : report.param_names.size() + 1;
  for (std::size_t i = 0; i < blanks; ++i) out << ',';
  out << ',' << format_double(report.max_ratio) << '\n';
}

}  // namespace mrlab
