#include "idiff/metrics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>

namespace idiff {

double quantile(std::vector<double> values, double q) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

namespace {

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

CategoryStats category(const std::vector<double>& values, const std::vector<double>& speeds) {
    CategoryStats s;
    s.count = values.size();
    if (values.empty()) return s;
    s.mean = mean(values);
    s.p1 = quantile(values, 0.01);
    s.p99 = quantile(values, 0.99);
    s.negative_share = static_cast<double>(std::count_if(values.begin(), values.end(), [](double x) { return x < 0; })) /
                       static_cast<double>(values.size());
    std::vector<double> ratios;
    ratios.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) ratios.push_back(values[k] / speeds[k]);
    s.ratio_to_average_speed = mean(ratios);
    return s;
}

nlohmann::json category_json(const CategoryStats& s) {
    return {{"count", s.count},
            {"mean", s.mean},
            {"p1", s.p1},
            {"p99", s.p99},
            {"negative_share", s.negative_share},
            {"ratio_to_average_speed", s.ratio_to_average_speed}};
}

}  // namespace

Report aggregate(const std::vector<SimResult>& results) {
    Report r;
    r.cases = results.size();
    std::vector<double> feedback;
    std::vector<double> speeds;
    std::vector<double> d1_speeds;
    std::vector<double> best;
    std::vector<double> avg;
    std::vector<double> worst;
    for (const auto& res : results) {
        ++r.status_counts[to_string(res.status)];
        if (res.status != CaseStatus::ok) continue;
        ++r.solved;
        feedback.push_back(res.min_feedback);
        ++r.min_feedback_histogram[res.min_feedback];
        const double speed = res.average_speed();
        speeds.push_back(speed);
        ++r.average_speed_histogram[speed];
        if (res.depth1.valid) {
            d1_speeds.push_back(speed);
            best.push_back(res.depth1.best);
            avg.push_back(res.depth1.average);
            worst.push_back(res.depth1.worst);
        }
    }
    if (r.solved == 0) return r;
    r.mean_min_feedback = mean(feedback);
    const auto solved = static_cast<double>(r.solved);
    r.share_min_feedback_one = static_cast<double>(std::count(feedback.begin(), feedback.end(), 1.0)) / solved;
    r.share_min_feedback_le3 =
        static_cast<double>(std::count_if(feedback.begin(), feedback.end(), [](double x) { return x <= 3; })) / solved;
    r.ideal = category(speeds, speeds);
    r.best = category(best, d1_speeds);
    r.average = category(avg, d1_speeds);
    r.worst = category(worst, d1_speeds);
    return r;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), end);
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["cases"] = r.cases;
    j["solved"] = r.solved;
    j["status"] = r.status_counts;
    nlohmann::json hist = nlohmann::json::object();
    for (auto [k, n] : r.min_feedback_histogram) hist[std::to_string(k)] = n;
    j["min_feedback"] = {{"mean", r.mean_min_feedback},
                         {"histogram", hist},
                         {"share_one", r.share_min_feedback_one},
                         {"share_at_most_three", r.share_min_feedback_le3}};
    nlohmann::json speed_hist = nlohmann::json::object();
    for (auto [k, n] : r.average_speed_histogram) speed_hist[format_number(k)] = n;
    j["average_speed"] = category_json(r.ideal);
    j["average_speed"]["histogram"] = speed_hist;
    j["delta_distance"] = {{"best", category_json(r.best)},
                           {"average", category_json(r.average)},
                           {"worst", category_json(r.worst)}};
    return j;
}

std::string to_csv(const std::vector<SimResult>& results, bool with_timing) {
    std::string out = std::string(csv_header) + "\n";
    for (const auto& r : results) {
        const bool ok = r.status == CaseStatus::ok;
        const bool d1 = ok && r.depth1.valid;
        auto field = [](bool present, const std::string& s) { return present ? s : std::string(); };
        out += r.id + "," + std::to_string(r.old_size) + "," + std::to_string(r.new_size) + "," +
               std::to_string(r.changed_lines) + "," + std::to_string(r.initial_distance) + "," +
               std::to_string(r.mismatch_areas) + "," + field(ok, std::to_string(r.min_feedback)) + "," +
               field(ok, format_number(ok ? r.average_speed() : 0)) + "," + field(d1, format_number(r.depth1.best)) +
               "," + field(d1, format_number(r.depth1.average)) + "," + field(d1, format_number(r.depth1.worst)) + "," +
               to_string(r.status) + "," + field(with_timing, format_number(std::round(r.wall_ms * 1000) / 1000)) +
               "\n";
    }
    return out;
}

}  // namespace idiff
