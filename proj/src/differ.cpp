#include "idiff/differ.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>

namespace idiff {

void ConstraintSet::merge(const ConstraintSet& other) {
    removed_diagonals.insert(other.removed_diagonals.begin(), other.removed_diagonals.end());
    orphan_banned_old.insert(other.orphan_banned_old.begin(), other.orphan_banned_old.end());
    orphan_banned_new.insert(other.orphan_banned_new.begin(), other.orphan_banned_new.end());
}

bool ConstraintSet::removes(const Edge& edge) const {
    const Node to = edge.to();
    switch (edge.kind) {
    case EdgeKind::horizontal: return orphan_banned_old.contains(to.i);
    case EdgeKind::vertical: return orphan_banned_new.contains(to.j);
    case EdgeKind::diagonal: break;
    }
    return removed_diagonals.contains({to.i, to.j});
}

namespace {

std::string describe(const std::vector<LineNo>& rows, const std::vector<LineNo>& columns) {
    std::string msg = "no diff satisfies the feedback";
    auto list = [](const std::vector<LineNo>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    if (!rows.empty()) msg += "; old lines that cannot be matched: " + list(rows);
    if (!columns.empty()) msg += "; new lines that cannot be matched: " + list(columns);
    return msg;
}

std::uint64_t key(LineNo i, LineNo j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) | static_cast<std::uint32_t>(j);
}

/// Dense view of a ConstraintSet for the DP inner loop.
struct Blocked {
    std::vector<char> row;     // row[i]: horizontal edges into row i removed
    std::vector<char> column;  // column[j]: vertical edges into column j removed
    std::unordered_set<std::uint64_t> diagonal;

    Blocked(const LinePair& pair, const ConstraintSet& c)
        : row(static_cast<std::size_t>(pair.old_size()) + 2, 0),
          column(static_cast<std::size_t>(pair.new_size()) + 2, 0) {
        for (auto i : c.orphan_banned_old)
            if (i >= 1 && i <= pair.old_size()) row[static_cast<std::size_t>(i)] = 1;
        for (auto j : c.orphan_banned_new)
            if (j >= 1 && j <= pair.new_size()) column[static_cast<std::size_t>(j)] = 1;
        for (auto [i, j] : c.removed_diagonals) diagonal.insert(key(i, j));
    }

    bool diagonal_open(const LinePair& pair, LineNo i, LineNo j) const {
        return pair.old_id(i) == pair.new_id(j) && (diagonal.empty() || !diagonal.contains(key(i, j)));
    }
};

/// Outgoing edge kind of every node on a reference path, indexed by row.
class ReferenceIndex {
public:
    ReferenceIndex(const Diff* ref, LineNo n) : first_(static_cast<std::size_t>(n) + 1, -1), first_j_(first_.size(), 0), count_(first_.size(), 0) {
        if (!ref) return;
        edges_ = &ref->edges;
        for (std::size_t k = 0; k < ref->edges.size(); ++k) {
            const auto& e = ref->edges[k];
            auto row = static_cast<std::size_t>(e.from.i);
            if (first_[row] < 0) {
                first_[row] = static_cast<long>(k);
                first_j_[row] = e.from.j;
            }
            ++count_[row];
        }
    }

    bool contains(LineNo i, LineNo j, EdgeKind kind) const {
        if (!edges_) return false;
        auto row = static_cast<std::size_t>(i);
        const long offset = j - first_j_[row];
        if (first_[row] < 0 || offset < 0 || offset >= count_[row]) return false;
        return (*edges_)[static_cast<std::size_t>(first_[row] + offset)].kind == kind;
    }

private:
    const std::vector<Edge>* edges_ = nullptr;
    std::vector<long> first_;
    std::vector<LineNo> first_j_;
    std::vector<long> count_;
};

Infeasible diagnose(const LinePair& pair, const ConstraintSet& constraints, const Blocked& blocked) {
    std::vector<LineNo> rows;
    std::vector<LineNo> columns;
    for (auto i : constraints.orphan_banned_old) {
        bool open = false;
        for (LineNo j = 1; j <= pair.new_size() && !open; ++j) open = blocked.diagonal_open(pair, i, j);
        if (!open) rows.push_back(i);
    }
    for (auto j : constraints.orphan_banned_new) {
        bool open = false;
        for (LineNo i = 1; i <= pair.old_size() && !open; ++i) open = blocked.diagonal_open(pair, i, j);
        if (!open) columns.push_back(j);
    }
    if (rows.empty() && columns.empty()) {
        // No single row or column is dead; the orphan constraints conflict jointly.
        rows.assign(constraints.orphan_banned_old.begin(), constraints.orphan_banned_old.end());
        columns.assign(constraints.orphan_banned_new.begin(), constraints.orphan_banned_new.end());
    }
    return Infeasible(std::move(rows), std::move(columns));
}

enum Step : std::uint8_t { none = 0, diag = 1, horiz = 2, vert = 3 };

}  // namespace

Infeasible::Infeasible(std::vector<LineNo> rows, std::vector<LineNo> columns)
    : std::runtime_error(describe(rows, columns)), rows_(std::move(rows)), columns_(std::move(columns)) {}

Diff shortest_diff(const LinePair& pair, const ConstraintSet& constraints, const Diff* reference) {
    if (reference) validate(pair, *reference);
    const LineNo n = pair.old_size();
    const LineNo m = pair.new_size();
    const Blocked blocked(pair, constraints);
    const ReferenceIndex ref(reference, n);

    // Cost is (edge count, edges outside the reference) packed into one word.
    using Cost = std::uint64_t;
    constexpr Cost inf = std::numeric_limits<Cost>::max();
    auto edge_cost = [&](LineNo i, LineNo j, EdgeKind kind) -> Cost {
        return (Cost{1} << 32) + (ref.contains(i, j, kind) ? 0 : 1);
    };

    const auto width = static_cast<std::size_t>(m) + 1;
    std::vector<std::uint8_t> step(static_cast<std::size_t>(n + 1) * width, none);
    std::vector<Cost> below(width, inf);  // cost-to-go of row i+1
    std::vector<Cost> here(width, inf);

    for (LineNo i = n; i >= 0; --i) {
        for (LineNo j = m; j >= 0; --j) {
            const auto uj = static_cast<std::size_t>(j);
            if (i == n && j == m) {
                here[uj] = 0;
                continue;
            }
            Cost best = inf;
            std::uint8_t choice = none;
            auto consider = [&](Cost tail, LineNo fi, LineNo fj, EdgeKind kind, std::uint8_t s) {
                if (tail == inf) return;
                Cost c = tail + edge_cost(fi, fj, kind);
                if (c < best) {
                    best = c;
                    choice = s;
                }
            };
            if (i < n && j < m && blocked.diagonal_open(pair, i + 1, j + 1))
                consider(below[uj + 1], i, j, EdgeKind::diagonal, diag);
            if (i < n && !blocked.row[static_cast<std::size_t>(i + 1)])
                consider(below[uj], i, j, EdgeKind::horizontal, horiz);
            if (j < m && !blocked.column[uj + 1]) consider(here[uj + 1], i, j, EdgeKind::vertical, vert);
            here[uj] = best;
            step[static_cast<std::size_t>(i) * width + uj] = choice;
        }
        std::swap(here, below);
    }
    if (below[0] == inf) throw diagnose(pair, constraints, blocked);

    Diff out;
    out.edges.reserve(static_cast<std::size_t>(n + m));
    Node at{0, 0};
    while (at != Node{n, m}) {
        Edge e{at, EdgeKind::diagonal};
        switch (step[static_cast<std::size_t>(at.i) * width + static_cast<std::size_t>(at.j)]) {
        case diag: e.kind = EdgeKind::diagonal; break;
        case horiz: e.kind = EdgeKind::horizontal; break;
        case vert: e.kind = EdgeKind::vertical; break;
        default: throw std::logic_error("broken predecessor trace");
        }
        out.edges.push_back(e);
        at = e.to();
    }
    return out;
}

int lcs_length(const LinePair& pair, const ConstraintSet& constraints) {
    // Forward DP maximizing matches over reachable nodes; independent of the
    // path-reconstructing solver above.
    const LineNo n = pair.old_size();
    const LineNo m = pair.new_size();
    const Blocked blocked(pair, constraints);
    const auto width = static_cast<std::size_t>(m) + 1;
    std::vector<int> prev(width, -1);
    std::vector<int> cur(width, -1);
    for (LineNo i = 0; i <= n; ++i) {
        for (LineNo j = 0; j <= m; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            int best = (i == 0 && j == 0) ? 0 : -1;
            if (i > 0 && !blocked.row[static_cast<std::size_t>(i)] && prev[uj] >= 0) best = std::max(best, prev[uj]);
            if (j > 0 && !blocked.column[uj] && cur[uj - 1] >= 0) best = std::max(best, cur[uj - 1]);
            if (i > 0 && j > 0 && prev[uj - 1] >= 0 && blocked.diagonal_open(pair, i, j))
                best = std::max(best, prev[uj - 1] + 1);
            cur[uj] = best;
        }
        std::swap(prev, cur);
    }
    if (prev[static_cast<std::size_t>(m)] < 0) throw diagnose(pair, constraints, blocked);
    return prev[static_cast<std::size_t>(m)];
}

}  // namespace idiff
