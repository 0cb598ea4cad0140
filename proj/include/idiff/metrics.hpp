#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "idiff/search.hpp"

namespace idiff {

/// Linear-interpolation quantile of unsorted values, q in [0, 1].
double quantile(std::vector<double> values, double q);

struct CategoryStats {
    std::size_t count = 0;
    double mean = 0;
    double p1 = 0;
    double p99 = 0;
    double negative_share = 0;
    /// Mean over cases of (category value / that case's average speed).
    double ratio_to_average_speed = 0;
};

struct Report {
    std::size_t cases = 0;
    std::size_t solved = 0;
    std::map<std::string, std::size_t> status_counts;

    double mean_min_feedback = 0;
    std::map<int, std::size_t> min_feedback_histogram;
    double share_min_feedback_one = 0;
    double share_min_feedback_le3 = 0;

    std::map<double, std::size_t> average_speed_histogram;

    CategoryStats ideal;  // the per-case average speed
    CategoryStats best;
    CategoryStats average;
    CategoryStats worst;
};

/// Folds per-case results. Only solved cases contribute to the statistics;
/// depth-1 categories use solved cases with at least one feasible action.
Report aggregate(const std::vector<SimResult>& results);

nlohmann::json to_json(const Report& report);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Per-case CSV. wall_ms is left empty unless with_timing is set, which keeps
/// the file reproducible byte for byte.
std::string to_csv(const std::vector<SimResult>& results, bool with_timing);

inline constexpr const char* csv_header =
    "case_id,N,M,changed_lines,initial_distance,mismatch_areas,min_feedback,average_speed,"
    "depth1_best,depth1_avg,depth1_worst,status,wall_ms";

}  // namespace idiff
