#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idiff/feedback.hpp"
#include "idiff/line_pair.hpp"

namespace idiff {

/// Sorted, duplicate-free set of actions: the search state identity.
using ActionSet = std::vector<FeedbackAction>;

/// Inserts keeping the set sorted; no-op if present.
ActionSet with_action(ActionSet set, const FeedbackAction& action);

/// One simulation instance: a line pair and the diff the simulated reviewer wants.
struct SimCase {
    std::string id;
    LinePair pair;
    Diff target;
    Diff initial;  // diff_fix of the empty state
    int initial_distance = 0;
};

SimCase make_case(std::string id, LinePair pair, Diff target);

/// Feedback candidates c(d; d*): actions of d's edges that no edge of d* maps to. Sorted.
std::vector<FeedbackAction> candidates(const Diff& current, const Diff& target);

int similarity_distance(const Diff& current, const Diff& target);

/// Nodes entered by both diffs from different predecessors. Each mismatch
/// area closes at exactly one such node.
int mismatch_area_count(const Diff& current, const Diff& target);

struct SearchState {
    ActionSet actions;
    std::optional<Diff> diff;  // empty when the constraints admit no path
    int distance = 0;

    bool dead() const { return !diff.has_value(); }
};

SearchState evaluate(const SimCase& sim, ActionSet actions);
bool goal(const SearchState& state, const SimCase& sim);

/// One child per candidate of the state's diff; dead children are included
/// and flagged so callers can prune them.
std::vector<SearchState> successors(const SearchState& state, const SimCase& sim);

enum class Heuristic { similarity_distance, mismatch_areas };

enum class SearchStatus { found, exhausted, timeout, out_of_memory };

struct SearchLimits {
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    std::size_t max_states = 2'000'000;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    ActionSet witness;
    int depth = 0;
    std::size_t expansions = 0;
};

/// A* over action sets with unit step cost. Ties go to the lower heuristic,
/// then to the earlier insertion.
SearchOutcome astar(const SimCase& sim, Heuristic heuristic, const SearchLimits& limits);

enum class CaseStatus { ok, timeout, out_of_memory, unreachable };

std::string to_string(CaseStatus status);

struct Depth1Record {
    FeedbackAction action;
    std::optional<int> delta;  // empty when the action makes the graph infeasible
};

struct Depth1Summary {
    std::vector<Depth1Record> records;
    bool valid = false;  // at least one feasible record
    double best = 0;
    double average = 0;
    double worst = 0;
};

struct SimResult {
    std::string id;
    int old_size = 0;
    int new_size = 0;
    int changed_lines = 0;
    int initial_distance = 0;
    int mismatch_areas = 0;
    CaseStatus status = CaseStatus::ok;
    int min_feedback = 0;
    ActionSet witness;
    int phase1_depth = 0;
    bool phase2_run = false;
    Depth1Summary depth1;
    double wall_ms = 0;
    std::size_t expansions = 0;

    /// initial_distance / min_feedback; only meaningful for solved cases.
    double average_speed() const { return static_cast<double>(initial_distance) / min_feedback; }
};

struct SolveOptions {
    std::chrono::milliseconds budget{30 * 60 * 1000};
    std::size_t max_states = 2'000'000;
};

/// Minimum number of feedback actions reaching the target. A first pass uses
/// the similarity distance as a fast, inadmissible heuristic; if it needs more
/// actions than the initial mismatch-area count, a second pass with the
/// admissible mismatch-area heuristic decides the minimum. The budget covers
/// both passes.
SimResult solve_min_feedback(const SimCase& sim, const SolveOptions& options = {});

/// Δdistance of every single action available from the empty state.
Depth1Summary depth1_study(const SimCase& sim);

/// solve_min_feedback followed, for solved cases, by depth1_study.
SimResult simulate_case(const SimCase& sim, const SolveOptions& options = {});

}  // namespace idiff
