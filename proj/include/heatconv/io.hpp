#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "heatconv/sweep.hpp"

namespace heatconv {

/// One row of the fixed output schema shared by every command.
struct ResultRecord {
    double n_rate = 0.0;
    double a_sq = 0.0;
    std::string method;
    int order = 0;  ///< K or resolution; 0 for first-approx
    double rayleigh = 0.0;
    std::optional<double> paper_value;
    std::optional<double> rel_deviation;
    std::string note;
};

/// Rounds to 9 significant digits, the precision every emitted number uses.
double round_sig9(double v);
std::string format_sig9(double v);

std::vector<ResultRecord> records_from_points(const std::vector<NeutralPoint>& pts);
std::vector<ResultRecord> records_from_table1(const Table1Report& report);

std::string to_csv(const std::vector<ResultRecord>& records);
nlohmann::json to_json(const std::vector<ResultRecord>& records,
                       const std::string& command, const std::string& summary);

/// Parses a JSON document produced by to_json back into records.
std::vector<ResultRecord> records_from_json(const nlohmann::json& doc);

/// gnuplot-style whitespace columns (a, N, Ra, method) with a '#' header;
/// surface data separated into blank-line blocks per N value.
std::string to_plot_data(const std::vector<NeutralPoint>& points);

/// Output-path problems, distinct from solver failures for exit-code mapping.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes via temp file + rename; a failed write leaves no file at path.
void atomic_write(const std::string& path, const std::string& contents);

}  // namespace heatconv
