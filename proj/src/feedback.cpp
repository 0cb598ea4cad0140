#include "idiff/feedback.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace idiff {

std::string to_string(const FeedbackAction& a) {
    auto side = [](LineNo x) { return x == 0 ? std::string("*") : std::to_string(x); };
    return "(" + side(a.old_line) + "," + side(a.new_line) + ")";
}

FeedbackAction parse_action(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed action JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("old") || !j.contains("new"))
        throw std::invalid_argument("action must be an object with \"old\" and \"new\" keys");
    auto side = [&](const char* name) -> LineNo {
        const auto& v = j.at(name);
        if (v.is_null()) return 0;
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000'000)
            throw std::invalid_argument(std::string("action \"") + name + "\" must be a positive line number or null");
        return static_cast<LineNo>(v.get<long long>());
    };
    const LineNo i = side("old");
    const LineNo k = side("new");
    if (i == 0 && k == 0) throw std::invalid_argument("action needs at least one line number");
    if (k == 0) return FeedbackAction::old_orphan(i);
    if (i == 0) return FeedbackAction::new_orphan(k);
    return FeedbackAction::mismatch(i, k);
}

std::string to_json(const FeedbackAction& a) {
    nlohmann::ordered_json j;
    j["old"] = a.old_line == 0 ? nlohmann::json(nullptr) : nlohmann::json(a.old_line);
    j["new"] = a.new_line == 0 ? nlohmann::json(nullptr) : nlohmann::json(a.new_line);
    return j.dump();
}

FeedbackAction action_from_edge(const Edge& edge) {
    const Node to = edge.to();
    switch (edge.kind) {
    case EdgeKind::horizontal: return FeedbackAction::old_orphan(to.i);
    case EdgeKind::vertical: return FeedbackAction::new_orphan(to.j);
    case EdgeKind::diagonal: break;
    }
    return FeedbackAction::mismatch(to.i, to.j);
}

ConstraintDelta expand_action(const FeedbackAction& action, const LinePair& pair) {
    ConstraintDelta delta;
    auto check_old = [&](LineNo i) {
        if (i < 1 || i > pair.old_size()) throw UsageError("action " + to_string(action) + " is outside the old version");
    };
    auto check_new = [&](LineNo j) {
        if (j < 1 || j > pair.new_size()) throw UsageError("action " + to_string(action) + " is outside the new version");
    };
    switch (action.kind) {
    case ActionKind::mismatch:
        check_old(action.old_line);
        check_new(action.new_line);
        if (!pair.eq(action.old_line, action.new_line))
            throw UsageError("action " + to_string(action) + " names lines that are not equal");
        delta.removed.removed_diagonals.insert({action.old_line, action.new_line});
        break;
    case ActionKind::old_orphan: {
        check_old(action.old_line);
        delta.removed.orphan_banned_old.insert(action.old_line);
        bool any = false;
        for (LineNo j = 1; j <= pair.new_size() && !any; ++j) any = pair.eq(action.old_line, j);
        if (!any) delta.warning = "trivially infeasible: old line " + std::to_string(action.old_line) + " equals no new line";
        break;
    }
    case ActionKind::new_orphan: {
        check_new(action.new_line);
        delta.removed.orphan_banned_new.insert(action.new_line);
        bool any = false;
        for (LineNo i = 1; i <= pair.old_size() && !any; ++i) any = pair.eq(i, action.new_line);
        if (!any) delta.warning = "trivially infeasible: new line " + std::to_string(action.new_line) + " equals no old line";
        break;
    }
    }
    return delta;
}

bool FeedbackState::add(const FeedbackAction& action, const LinePair& pair) {
    if (std::find(actions_.begin(), actions_.end(), action) != actions_.end()) return false;
    auto delta = expand_action(action, pair);
    constraints_.merge(delta.removed);
    actions_.push_back(action);
    return true;
}

bool FeedbackState::undo(const LinePair& pair) {
    if (actions_.empty()) return false;
    auto rest = actions_;
    rest.pop_back();
    *this = from_actions(rest, pair);
    return true;
}

FeedbackState FeedbackState::from_actions(const std::vector<FeedbackAction>& actions, const LinePair& pair) {
    FeedbackState state;
    for (const auto& a : actions) state.add(a, pair);
    return state;
}

Diff diff_fix(const LinePair& pair, const FeedbackState& state) { return shortest_diff(pair, state.constraints()); }

Diff diff_fix(const LinePair& pair, const std::vector<FeedbackAction>& actions) {
    return diff_fix(pair, FeedbackState::from_actions(actions, pair));
}

std::vector<Diff> diff_fix_incremental(const LinePair& pair, const std::vector<FeedbackAction>& actions) {
    std::vector<Diff> diffs;
    diffs.reserve(actions.size() + 1);
    FeedbackState state;
    diffs.push_back(shortest_diff(pair));
    for (const auto& a : actions) {
        if (!state.add(a, pair)) {
            diffs.push_back(diffs.back());
            continue;
        }
        diffs.push_back(shortest_diff(pair, state.constraints(), &diffs.back()));
    }
    return diffs;
}

}  // namespace idiff
