#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "idiff/differ.hpp"
#include "idiff/line_pair.hpp"

namespace idiff {

enum class ActionKind : std::uint8_t { mismatch, old_orphan, new_orphan };

/// A reviewer's dissatisfaction with one line of the diff.
///
/// Written (i,j) for a mismatch, (i,*) for an old orphan and (*,j) for a new
/// orphan; the wildcard side is stored as 0.
struct FeedbackAction {
    ActionKind kind = ActionKind::mismatch;
    LineNo old_line = 0;
    LineNo new_line = 0;

    static FeedbackAction mismatch(LineNo i, LineNo j) { return {ActionKind::mismatch, i, j}; }
    static FeedbackAction old_orphan(LineNo i) { return {ActionKind::old_orphan, i, 0}; }
    static FeedbackAction new_orphan(LineNo j) { return {ActionKind::new_orphan, 0, j}; }

    auto operator<=>(const FeedbackAction&) const = default;
};

/// "(3,6)", "(2,*)", "(*,7)".
std::string to_string(const FeedbackAction& action);

/// Parses `{"old": 2, "new": null}` style JSON. Throws std::invalid_argument.
FeedbackAction parse_action(const std::string& json);
std::string to_json(const FeedbackAction& action);

FeedbackAction action_from_edge(const Edge& edge);

/// Edge removals for one action. `warning` is set for an orphan action whose
/// line equals no line on the other side, which can never be satisfied.
struct ConstraintDelta {
    ConstraintSet removed;
    std::optional<std::string> warning;
};

/// Throws UsageError for out-of-range indices or a mismatch on a non-existent diagonal.
ConstraintDelta expand_action(const FeedbackAction& action, const LinePair& pair);

/// A set of feedback actions in the order they were given, plus the union
/// of their edge removals.
class FeedbackState {
public:
    FeedbackState() = default;

    /// Returns false (and leaves the state unchanged) for a duplicate action.
    bool add(const FeedbackAction& action, const LinePair& pair);

    /// Drops the most recent action and rebuilds the constraints.
    bool undo(const LinePair& pair);

    const std::vector<FeedbackAction>& actions() const { return actions_; }
    const ConstraintSet& constraints() const { return constraints_; }
    bool empty() const { return actions_.empty(); }

    static FeedbackState from_actions(const std::vector<FeedbackAction>& actions, const LinePair& pair);

private:
    std::vector<FeedbackAction> actions_;
    ConstraintSet constraints_;
};

/// Shortest diff under the state's constraints with no stability reference;
/// depends only on the set of actions.
Diff diff_fix(const LinePair& pair, const FeedbackState& state);
Diff diff_fix(const LinePair& pair, const std::vector<FeedbackAction>& actions);

/// Replays the actions one at a time, each step using the previous diff as the
/// stability reference. Returns the diff after every prefix (size = actions + 1).
std::vector<Diff> diff_fix_incremental(const LinePair& pair, const std::vector<FeedbackAction>& actions);

}  // namespace idiff
