#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idiff/line_pair.hpp"

namespace idiff {

/// Edges removed from the edit graph, in compact form.
///
/// An edge is removed iff it is a diagonal into a node listed in
/// removed_diagonals, a horizontal edge in a banned old row, or a vertical
/// edge in a banned new column.
struct ConstraintSet {
    std::set<std::pair<LineNo, LineNo>> removed_diagonals;
    std::set<LineNo> orphan_banned_old;
    std::set<LineNo> orphan_banned_new;

    bool empty() const {
        return removed_diagonals.empty() && orphan_banned_old.empty() && orphan_banned_new.empty();
    }
    void merge(const ConstraintSet& other);

    bool removes(const Edge& edge) const;

    bool operator==(const ConstraintSet&) const = default;
};

/// No path from (0,0) to (N,M) survives the constraints.
class Infeasible : public std::runtime_error {
public:
    Infeasible(std::vector<LineNo> rows, std::vector<LineNo> columns);

    /// Banned old rows / new columns that are the likely cause.
    const std::vector<LineNo>& rows() const { return rows_; }
    const std::vector<LineNo>& columns() const { return columns_; }

private:
    std::vector<LineNo> rows_;
    std::vector<LineNo> columns_;
};

/// Shortest path on the constrained edit graph.
///
/// Among shortest paths, the one sharing the most edges with `reference`
/// wins, so a feasible shortest reference is returned unchanged. Remaining
/// ties are broken walking forward from the origin: diagonal, then
/// horizontal, then vertical.
Diff shortest_diff(const LinePair& pair, const ConstraintSet& constraints = {},
                   const Diff* reference = nullptr);

/// Number of diagonal edges in a shortest constrained path.
int lcs_length(const LinePair& pair, const ConstraintSet& constraints = {});

}  // namespace idiff
