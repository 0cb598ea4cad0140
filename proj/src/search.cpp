#include "idiff/search.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>

#include "idiff/differ.hpp"

namespace idiff {

ActionSet with_action(ActionSet set, const FeedbackAction& action) {
    auto it = std::lower_bound(set.begin(), set.end(), action);
    if (it == set.end() || *it != action) set.insert(it, action);
    return set;
}

SimCase make_case(std::string id, LinePair pair, Diff target) {
    validate(pair, target);
    SimCase sim{std::move(id), std::move(pair), std::move(target), {}, 0};
    sim.initial = shortest_diff(sim.pair);
    sim.initial_distance = similarity_distance(sim.initial, sim.target);
    return sim;
}

namespace {

std::vector<FeedbackAction> actions_of(const Diff& d) {
    std::vector<FeedbackAction> out;
    out.reserve(d.edges.size());
    for (const auto& e : d.edges) out.push_back(action_from_edge(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<FeedbackAction> candidates(const Diff& current, const Diff& target) {
    const auto mine = actions_of(current);
    const auto theirs = actions_of(target);
    std::vector<FeedbackAction> out;
    std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(out));
    return out;
}

int similarity_distance(const Diff& current, const Diff& target) {
    return static_cast<int>(candidates(current, target).size());
}

int mismatch_area_count(const Diff& current, const Diff& target) {
    // Both edge lists visit nodes in strictly increasing (i, j) order, so a
    // merge walk pairs up the edges entering the same node.
    int count = 0;
    auto a = current.edges.begin();
    auto b = target.edges.begin();
    while (a != current.edges.end() && b != target.edges.end()) {
        const Node ta = a->to();
        const Node tb = b->to();
        if (ta < tb) {
            ++a;
        } else if (tb < ta) {
            ++b;
        } else {
            if (a->from != b->from) ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

SearchState evaluate(const SimCase& sim, ActionSet actions) {
    SearchState state{std::move(actions), std::nullopt, 0};
    try {
        state.diff = diff_fix(sim.pair, state.actions);
        state.distance = similarity_distance(*state.diff, sim.target);
    } catch (const Infeasible&) {
        state.diff.reset();
    }
    return state;
}

bool goal(const SearchState& state, const SimCase& sim) { return !state.dead() && *state.diff == sim.target; }

std::vector<SearchState> successors(const SearchState& state, const SimCase& sim) {
    std::vector<SearchState> children;
    if (state.dead()) return children;
    for (const auto& a : candidates(*state.diff, sim.target)) children.push_back(evaluate(sim, with_action(state.actions, a)));
    return children;
}

namespace {

struct ActionSetHash {
    std::size_t operator()(const ActionSet& s) const {
        std::size_t h = s.size();
        for (const auto& a : s) {
            std::size_t x = (static_cast<std::size_t>(a.kind) << 58) ^ (static_cast<std::size_t>(a.old_line) << 29) ^
                            static_cast<std::size_t>(a.new_line);
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<EdgeKind> pack(const Diff& d) {
    std::vector<EdgeKind> kinds;
    kinds.reserve(d.edges.size());
    for (const auto& e : d.edges) kinds.push_back(e.kind);
    return kinds;
}

Diff unpack(const std::vector<EdgeKind>& kinds) {
    Diff d;
    d.edges.reserve(kinds.size());
    Node at{0, 0};
    for (auto k : kinds) {
        d.edges.push_back({at, k});
        at = d.edges.back().to();
    }
    return d;
}

}  // namespace

SearchOutcome astar(const SimCase& sim, Heuristic heuristic, const SearchLimits& limits) {
    struct Open {
        int f;
        int h;
        std::size_t seq;
        bool operator>(const Open& o) const { return std::tie(f, h, seq) > std::tie(o.f, o.h, o.seq); }
    };
    struct Stored {
        ActionSet actions;
        std::vector<EdgeKind> path;  // released once expanded
    };

    auto estimate = [&](const Diff& d, int distance) {
        return heuristic == Heuristic::similarity_distance ? distance : mismatch_area_count(d, sim.target);
    };

    SearchOutcome out;
    std::vector<Stored> nodes;
    std::priority_queue<Open, std::vector<Open>, std::greater<>> open;
    std::unordered_set<ActionSet, ActionSetHash> seen;

    auto root = evaluate(sim, {});
    if (root.dead()) return out;
    seen.insert({});
    nodes.push_back({{}, pack(*root.diff)});
    const int h0 = estimate(*root.diff, root.distance);
    open.push({h0, h0, 0});

    while (!open.empty()) {
        if (std::chrono::steady_clock::now() >= limits.deadline) {
            out.status = SearchStatus::timeout;
            return out;
        }
        const Open top = open.top();
        open.pop();
        Stored& node = nodes[top.seq];
        const Diff diff = unpack(node.path);
        node.path = {};
        const int depth = static_cast<int>(node.actions.size());
        if (diff == sim.target) {
            out.status = SearchStatus::found;
            out.witness = node.actions;
            out.depth = depth;
            return out;
        }
        ++out.expansions;
        const ActionSet parent = node.actions;
        for (const auto& a : candidates(diff, sim.target)) {
            if (std::chrono::steady_clock::now() >= limits.deadline) {
                out.status = SearchStatus::timeout;
                return out;
            }
            ActionSet child = with_action(parent, a);
            if (!seen.insert(child).second) continue;
            if (seen.size() > limits.max_states) {
                out.status = SearchStatus::out_of_memory;
                return out;
            }
            SearchState s = evaluate(sim, std::move(child));
            if (s.dead()) continue;
            const int h = estimate(*s.diff, s.distance);
            const std::size_t seq = nodes.size();
            nodes.push_back({std::move(s.actions), pack(*s.diff)});
            open.push({depth + 1 + h, h, seq});
        }
    }
    out.status = SearchStatus::exhausted;
    return out;
}

std::string to_string(CaseStatus status) {
    switch (status) {
    case CaseStatus::ok: return "ok";
    case CaseStatus::timeout: return "timeout";
    case CaseStatus::out_of_memory: return "oom";
    case CaseStatus::unreachable: return "unreachable";
    }
    return "unknown";
}

namespace {

CaseStatus failure(SearchStatus s) {
    switch (s) {
    case SearchStatus::timeout: return CaseStatus::timeout;
    case SearchStatus::out_of_memory: return CaseStatus::out_of_memory;
    default: return CaseStatus::unreachable;
    }
}

void describe_case(const SimCase& sim, SimResult& r) {
    r.id = sim.id;
    r.old_size = sim.pair.old_size();
    r.new_size = sim.pair.new_size();
    r.changed_lines =
        static_cast<int>(sim.initial.count(EdgeKind::horizontal) + sim.initial.count(EdgeKind::vertical));
    r.initial_distance = sim.initial_distance;
    r.mismatch_areas = mismatch_area_count(sim.initial, sim.target);
}

}  // namespace

SimResult solve_min_feedback(const SimCase& sim, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SimResult r;
    describe_case(sim, r);
    const SearchLimits limits{start + options.budget, options.max_states};

    auto finish = [&](SimResult& res) -> SimResult& {
        res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return res;
    };

    const auto first = astar(sim, Heuristic::similarity_distance, limits);
    r.expansions = first.expansions;
    if (first.status != SearchStatus::found) {
        r.status = failure(first.status);
        return finish(r);
    }
    r.phase1_depth = first.depth;
    r.min_feedback = first.depth;
    r.witness = first.witness;
    if (first.depth > r.mismatch_areas) {
        r.phase2_run = true;
        const auto second = astar(sim, Heuristic::mismatch_areas, limits);
        r.expansions += second.expansions;
        if (second.status != SearchStatus::found) {
            r.status = failure(second.status);
            return finish(r);
        }
        r.min_feedback = second.depth;
        r.witness = second.witness;
    }
    r.status = CaseStatus::ok;
    return finish(r);
}

Depth1Summary depth1_study(const SimCase& sim) {
    Depth1Summary summary;
    long sum = 0;
    int feasible = 0;
    for (const auto& a : candidates(sim.initial, sim.target)) {
        const auto child = evaluate(sim, {a});
        Depth1Record rec{a, std::nullopt};
        if (!child.dead()) {
            const int delta = sim.initial_distance - child.distance;
            rec.delta = delta;
            if (feasible == 0) {
                summary.best = summary.worst = delta;
            } else {
                summary.best = std::max<double>(summary.best, delta);
                summary.worst = std::min<double>(summary.worst, delta);
            }
            sum += delta;
            ++feasible;
        }
        summary.records.push_back(rec);
    }
    if (feasible > 0) {
        summary.valid = true;
        summary.average = static_cast<double>(sum) / feasible;
    }
    return summary;
}

SimResult simulate_case(const SimCase& sim, const SolveOptions& options) {
    SimResult r = solve_min_feedback(sim, options);
    if (r.status == CaseStatus::ok) r.depth1 = depth1_study(sim);
    return r;
}

}  // namespace idiff
