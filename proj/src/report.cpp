#include "pav/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "pav/error.hpp"

namespace pav {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string report_json(const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  nlohmann::ordered_json config{
      {"theorem_id", cfg.theorem_id},
      {"n_grid", cfg.n_grid},
      {"replicates", cfg.replicates},
      {"seed", cfg.seed},
      {"c", cfg.c.value_or(0)},
      {"alpha", cfg.alpha.value_or(0)},
      {"epsilon", cfg.epsilon},
      {"keep_raw", cfg.keep_raw},
  };
  auto results = nlohmann::ordered_json::array();
  for (const ResultRow& row : report.results) {
    results.push_back({
        {"n", row.n},
        {"statistic", row.statistic},
        {"mean", row.summary.mean},
        {"sd", row.summary.sd},
        {"median", row.summary.median},
        {"q25", row.summary.q25},
        {"q75", row.summary.q75},
        {"count", row.summary.count},
    });
  }
  nlohmann::ordered_json doc{
      {"config", config},
      {"results", results},
      {"meta", {{"seed", cfg.seed}, {"version", report.version}, {"wall_seconds", report.wall_seconds}}},
  };
  return doc.dump(2) + "\n";
}

std::string raw_csv(const ExperimentReport& report) {
  std::string out = "n,replicate,statistic,value\n";
  for (const RawValue& v : report.raw) {
    out += std::to_string(v.n);
    out += ',';
    out += std::to_string(v.replicate);
    out += ',';
    out += v.statistic;
    out += ',';
    out += format_double(v.value);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

}  // namespace pav
