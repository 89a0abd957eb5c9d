#ifndef LINHYP_REPORT_IO_HPP
#define LINHYP_REPORT_IO_HPP

#include <string>

#include "linhyp/config_search.hpp"
#include "linhyp/verdict.hpp"

// Machine-readable renderings. JSON documents carry a "schema" tag matching a
// file under schemas/; all numbers in verdicts are exact strings ("p" or "p/q").
namespace linhyp {

inline constexpr const char* kReportSchema = "linhyp.report/1";
inline constexpr const char* kAnalysisSchema = "linhyp.analysis/1";
inline constexpr const char* kSweepSchema = "linhyp.sweep/1";
inline constexpr const char* kConfigSchema = "linhyp.config/1";

inline constexpr const char* kCsvHeader = "family-hash,bound-id,applicable,left,right,slack,verdict";

std::string report_to_json(const Family& f, const BoundReport& report);
/// Header line plus one row per record.
std::string report_to_csv(const Family& f, const BoundReport& report);

/// Structural summary: matching, S_F, nested sequence and partition sizes.
std::string analysis_to_json(const Family& f);
std::string analysis_to_text(const Family& f);

std::string sweep_to_json(const SweepReport& report);
/// Needs a report built with keep_rows.
std::string sweep_to_csv(const SweepReport& report);

std::string unique8_to_json(const Unique8Result& r);
std::string sevens_to_json(const Sevens& r, std::uint64_t budget);

}  // namespace linhyp

#endif
