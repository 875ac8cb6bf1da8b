// Scan reports: ordered cells plus ordered metadata. CSV output contains
// only the header and the data rows (17 significant digits, '.' decimal), so
// identical configurations produce byte-identical files regardless of job
// count; volatile metadata (timestamps) lives in the JSON form only.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fhl {

struct ScanCell {
  std::string series;  // "opnorm", "witness", "tail_norm", "profile", "xp_norm", ...
  double param = 0.0;  // lambda / s / w / t / N_keep
  long trunc = 0;      // truncation N; 0 when not applicable
  double value = 0.0;
  bool has_ratio = false;
  double ratio = 0.0;  // value / value at the previous truncation of the same (series, param)
};

struct ScanReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> metadata;  // insertion-ordered
  std::vector<ScanCell> cells;

  void add_meta(std::string key, double value);
  void add_meta(std::string key, std::string value);
  const std::string* find_meta(const std::string& key) const;

  // Appends a cell, deriving has_ratio/ratio from the most recent cell with
  // the same series and param.
  void push_cell(const std::string& series, double param, long trunc, double value);

  // Largest value/previous ratio among cells of a series at the given param,
  // taken at the two largest truncations (the scan's stability statistic).
  double last_growth_ratio(const std::string& series, double param) const;
};

// 17-significant-digit form that round-trips doubles exactly.
std::string format_double(double v);

std::string report_to_csv(const ScanReport& report);
std::string report_to_json(const ScanReport& report);

}  // namespace fhl
