#pragma once

// CSV / JSON emitters and readers for every file the toolkit writes.
// Numbers are printed with 17 significant digits, independent of locale.

#include "ilvr/analytic.hpp"
#include "ilvr/ensemble.hpp"
#include "ilvr/path_metrics.hpp"
#include "ilvr/price_process.hpp"
#include "ilvr/stats.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ilvr::io {

std::string format_number(double v);

// Parse failure, with the 1-based line number when it applies.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// step,price
std::string path_csv(const PricePath& path);
PricePath parse_path_csv(std::string_view text);

// seed,il_final,lvr_total
std::string metrics_csv(std::uint64_t seed, const PathMetrics& metrics);

// run_index,seed,final_price,il_final,lvr_total
std::string runs_csv(const std::vector<RunRecord>& runs);
std::vector<RunRecord> parse_runs_csv(std::string_view text);

// {"metric", "mean", "std_dev", "std_err", "median", "runs", "histogram": {"edges", "counts"}}
std::string report_json(const EnsembleReport& report);
EnsembleReport parse_report_json(std::string_view text);

// t,value
std::string curve_csv(const AnalyticCurve& curve);
AnalyticCurve parse_curve_csv(std::string_view text, CurveKind kind);

// p,density
std::string density_csv(const std::vector<std::pair<double, double>>& rows);

// Writes to a sibling temp file and renames it over the target.
void write_atomic(const std::filesystem::path& target, std::string_view content);

std::string read_file(const std::filesystem::path& source);

}  // namespace ilvr::io
