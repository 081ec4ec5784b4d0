#ifndef PAV_REPORT_HPP
#define PAV_REPORT_HPP

#include <string>
#include <string_view>

#include "pav/experiments.hpp"

namespace pav {

/// Shortest round-trip decimal form, always with '.' as separator and
/// independent of the global locale.
std::string format_double(double value);

/// The JSON report: {config, results, meta}. Output paths and the thread
/// count are left out of the config echo so that reports of the same
/// experiment compare byte for byte.
std::string report_json(const ExperimentReport& report);

/// Per-replicate values under the header "n,replicate,statistic,value".
std::string raw_csv(const ExperimentReport& report);

/// Throws Error(IoError) when the file cannot be written.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pav

#endif  // PAV_REPORT_HPP
