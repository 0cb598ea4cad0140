#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace idiff {

/// Exit codes: diff(1) style 0/1/2, plus these.
inline constexpr int exit_same = 0;
inline constexpr int exit_different = 1;
inline constexpr int exit_error = 2;
inline constexpr int exit_infeasible = 3;
inline constexpr int exit_no_cases = 4;

/// "250ms", "10s", "30m", "1h"; a bare number is seconds.
std::optional<std::chrono::milliseconds> parse_duration(const std::string& text);

/// Entry point of the idiff command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idiff
