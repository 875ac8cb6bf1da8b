#include "fhl/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace fhl {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ScanReport::add_meta(std::string key, double value) {
  metadata.emplace_back(std::move(key), format_double(value));
}

void ScanReport::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

const std::string* ScanReport::find_meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return &v;
  return nullptr;
}

void ScanReport::push_cell(const std::string& series, double param, long trunc, double value) {
  ScanCell cell{series, param, trunc, value, false, 0.0};
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    if (it->series == series && it->param == param) {
      if (it->value != 0.0) {
        cell.has_ratio = true;
        cell.ratio = value / it->value;
      }
      break;
    }
  }
  cells.push_back(std::move(cell));
}

double ScanReport::last_growth_ratio(const std::string& series, double param) const {
  for (auto it = cells.rbegin(); it != cells.rend(); ++it)
    if (it->series == series && it->param == param && it->has_ratio) return it->ratio;
  return 1.0;
}

std::string report_to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "series,parameter,N,value,ratio\n";
  for (const ScanCell& c : report.cells) {
    os << c.series << ',' << format_double(c.param) << ',' << c.trunc << ','
       << format_double(c.value) << ',';
    if (c.has_ratio) os << format_double(c.ratio);
    os << '\n';
  }
  return os.str();
}

std::string report_to_json(const ScanReport& report) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : report.metadata) meta[k] = v;
  j["metadata"] = meta;
  nlohmann::json cells = nlohmann::json::array();
  for (const ScanCell& c : report.cells) {
    nlohmann::json jc{{"series", c.series}, {"parameter", c.param}, {"N", c.trunc},
                      {"value", c.value}};
    if (c.has_ratio) jc["ratio"] = c.ratio;
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j.dump(2);
}

}  // namespace fhl
