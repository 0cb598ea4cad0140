#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idiff {

/// Line numbers are 1-based; 0 is the origin row/column of the edit graph.
using LineNo = int;

/// A node (i, j) of the edit graph: i old lines and j new lines have been read.
struct Node {
    LineNo i = 0;
    LineNo j = 0;

    auto operator<=>(const Node&) const = default;
};

enum class EdgeKind : std::uint8_t {
    horizontal,  // old line deleted
    vertical,    // new line added
    diagonal,    // old line matched with new line
};

struct Edge {
    Node from;
    EdgeKind kind = EdgeKind::diagonal;

    Node to() const {
        switch (kind) {
        case EdgeKind::horizontal: return {from.i + 1, from.j};
        case EdgeKind::vertical: return {from.i, from.j + 1};
        case EdgeKind::diagonal: break;
        }
        return {from.i + 1, from.j + 1};
    }

    auto operator<=>(const Edge&) const = default;
};

/// A path from (0,0) to (N,M) stored as its ordered edge list.
///
/// Paths on the edit graph are monotone, so two diffs of the same pair are
/// equal as edge sets exactly when their edge sequences are equal.
struct Diff {
    std::vector<Edge> edges;

    bool operator==(const Diff&) const = default;

    std::size_t count(EdgeKind kind) const;
};

/// Raised when an index or a diff does not fit the line pair it is used with.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Old and new versions of a file as line sequences.
class LinePair {
public:
    LinePair() = default;
    LinePair(std::vector<std::string> old_lines, std::vector<std::string> new_lines);
    LinePair(std::vector<std::string> old_lines, std::vector<std::string> new_lines,
             std::vector<LineNo> old_origin, std::vector<LineNo> new_origin);

    LineNo old_size() const { return static_cast<LineNo>(old_.size()); }
    LineNo new_size() const { return static_cast<LineNo>(new_.size()); }

    const std::string& old_line(LineNo i) const;
    const std::string& new_line(LineNo j) const;
    const std::vector<std::string>& old_lines() const { return old_; }
    const std::vector<std::string>& new_lines() const { return new_; }

    /// Line number in the unstripped input for model line i / j.
    LineNo old_origin(LineNo i) const;
    LineNo new_origin(LineNo j) const;

    /// Byte equality of old line i and new line j (1-based, checked).
    bool eq(LineNo i, LineNo j) const;

    /// Interned line ids: old_id(i) == new_id(j) iff eq(i, j). Unchecked.
    std::uint32_t old_id(LineNo i) const { return old_ids_[static_cast<std::size_t>(i - 1)]; }
    std::uint32_t new_id(LineNo j) const { return new_ids_[static_cast<std::size_t>(j - 1)]; }

    /// Sub-pair of old lines (i0, i1] and new lines (j0, j1]; origins are kept.
    LinePair slice(LineNo i0, LineNo i1, LineNo j0, LineNo j1) const;

private:
    void intern();

    std::vector<std::string> old_;
    std::vector<std::string> new_;
    std::vector<LineNo> old_origin_;
    std::vector<LineNo> new_origin_;
    std::vector<std::uint32_t> old_ids_;
    std::vector<std::uint32_t> new_ids_;
};

/// Splits text on '\n', dropping a trailing '\r' from each line. A final line
/// without a terminator still counts; empty text has no lines.
std::vector<std::string> split_lines(std::string_view text);

/// Builds the pair; with strip_blank, empty lines are dropped and the origin
/// maps record where the surviving lines came from.
LinePair build_line_pair(std::string_view old_text, std::string_view new_text, bool strip_blank);

/// Throws UsageError unless diff is a path from (0,0) to (N,M) over existing edges.
void validate(const LinePair& pair, const Diff& diff);

struct UnifiedOptions {
    int context = 3;
    std::string old_label = "a";
    std::string new_label = "b";
    bool headers = true;
};

/// Unified-diff text for the diff. Identical inputs render as the empty string.
std::string render_unified(const LinePair& pair, const Diff& diff, const UnifiedOptions& options = {});

}  // namespace idiff
