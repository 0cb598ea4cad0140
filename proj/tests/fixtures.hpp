#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idiff/feedback.hpp"
#include "idiff/line_pair.hpp"
#include "idiff/search.hpp"

namespace fixtures {

using idiff::Diff;
using idiff::Edge;
using idiff::EdgeKind;
using idiff::LinePair;
using idiff::Node;

/// Builds a diff from a compact script: 'd' diagonal, 'h' horizontal, 'v' vertical.
inline Diff path(const std::string& script) {
    Diff d;
    Node at{0, 0};
    for (char c : script) {
        EdgeKind k = c == 'd' ? EdgeKind::diagonal : c == 'h' ? EdgeKind::horizontal : EdgeKind::vertical;
        d.edges.push_back({at, k});
        at = d.edges.back().to();
    }
    return d;
}

inline std::string script(const Diff& d) {
    std::string s;
    for (const auto& e : d.edges) s += e.kind == EdgeKind::diagonal ? 'd' : e.kind == EdgeKind::horizontal ? 'h' : 'v';
    return s;
}

inline LinePair lines(const std::string& old_chars, const std::string& new_chars) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (char c : old_chars) a.emplace_back(1, c);
    for (char c : new_chars) b.emplace_back(1, c);
    return LinePair(std::move(a), std::move(b));
}

/// An interface that loses two commented methods while the two remaining
/// methods gain comments. The shortest diff pairs up the comment lines of
/// different methods; the target keeps getCount matched.
inline const char* running_old =
    "public interface Blob {\n"
    "    int getCount();\n"
    "    /**\n"
    "     * Returns the size.\n"
    "     */\n"
    "    int getSize();\n"
    "    /**\n"
    "     * Returns the name.\n"
    "     */\n"
    "    String getName();\n"
    "    int getRange();\n"
    "}\n";

inline const char* running_new =
    "public interface Blob {\n"
    "    /**\n"
    "     * Returns the count.\n"
    "     */\n"
    "    int getCount();\n"
    "    /**\n"
    "     * Returns the range.\n"
    "     */\n"
    "    int getRange();\n"
    "}\n";

/// Target: keep line 1, add the getCount comment, match getCount, match the
/// first comment opener to the getRange comment, drop the rest of the removed
/// methods, then match getRange and the closing brace.
inline const char* running_target = "dvvvddhvdhhhhhdd";

inline idiff::SimCase running_case() {
    return idiff::make_case("running", idiff::build_line_pair(running_old, running_new, false), path(running_target));
}

/// Two independent swapped blocks separated by a shared line.
inline idiff::SimCase two_region_case() {
    // The shortest diff matches B and D; the target matches A and C instead.
    return idiff::make_case("two-region", lines("ABSCD", "BASDC"), path("vdhdvdh"));
}

/// Two solved cases whose category means are 4.87 / 5.67 / 3.14 / 0.71 and
/// whose per-case ratios to the average speed average 1 / 1.14 / 0.68 / 0.22.
/// Speeds are 2 and 7.74; each category's pair of values solves
///   v1 + v2 = 2 * mean,  v1 / 2 + v2 / 7.74 = 2 * ratio.
inline std::vector<idiff::SimResult> table_two_results() {
    const double s1 = 2.0;
    const double s2 = 387.0 / 50.0;
    auto solve = [&](double mean, double ratio) {
        const double v1 = (2 * ratio - 2 * mean / s2) / (1 / s1 - 1 / s2);
        return std::pair<double, double>{v1, 2 * mean - v1};
    };
    const auto best = solve(5.67, 1.14);
    const auto avg = solve(3.14, 0.68);
    const auto worst = solve(0.71, 0.22);
    idiff::SimResult a;
    a.id = "a";
    a.initial_distance = 2;
    a.min_feedback = 1;
    a.depth1 = {{}, true, best.first, avg.first, worst.first};
    idiff::SimResult b;
    b.id = "b";
    b.initial_distance = 387;
    b.min_feedback = 50;
    b.depth1 = {{}, true, best.second, avg.second, worst.second};
    return {a, b};
}

}  // namespace fixtures
