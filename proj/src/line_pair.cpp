#include "idiff/line_pair.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace idiff {

std::size_t Diff::count(EdgeKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [kind](const Edge& e) { return e.kind == kind; }));
}

namespace {

std::vector<LineNo> identity_origin(std::size_t n) {
    std::vector<LineNo> origin(n);
    std::iota(origin.begin(), origin.end(), 1);
    return origin;
}

}  // namespace

LinePair::LinePair(std::vector<std::string> old_lines, std::vector<std::string> new_lines)
    : old_(std::move(old_lines)), new_(std::move(new_lines)) {
    old_origin_ = identity_origin(old_.size());
    new_origin_ = identity_origin(new_.size());
    intern();
}

LinePair::LinePair(std::vector<std::string> old_lines, std::vector<std::string> new_lines,
                   std::vector<LineNo> old_origin, std::vector<LineNo> new_origin)
    : old_(std::move(old_lines)),
      new_(std::move(new_lines)),
      old_origin_(std::move(old_origin)),
      new_origin_(std::move(new_origin)) {
    if (old_origin_.size() != old_.size() || new_origin_.size() != new_.size())
        throw UsageError("line origin map does not cover every line");
    auto increasing = [](const std::vector<LineNo>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end() &&
               (v.empty() || v.front() >= 1);
    };
    if (!increasing(old_origin_) || !increasing(new_origin_))
        throw UsageError("line origin map must be strictly increasing");
    intern();
}

void LinePair::intern() {
    std::unordered_map<std::string_view, std::uint32_t> ids;
    auto id_of = [&ids](const std::string& line) {
        auto [it, inserted] = ids.try_emplace(line, static_cast<std::uint32_t>(ids.size()));
        return it->second;
    };
    old_ids_.clear();
    new_ids_.clear();
    old_ids_.reserve(old_.size());
    new_ids_.reserve(new_.size());
    for (const auto& line : old_) old_ids_.push_back(id_of(line));
    for (const auto& line : new_) new_ids_.push_back(id_of(line));
}

const std::string& LinePair::old_line(LineNo i) const {
    if (i < 1 || i > old_size()) throw UsageError("old line index out of range: " + std::to_string(i));
    return old_[static_cast<std::size_t>(i - 1)];
}

const std::string& LinePair::new_line(LineNo j) const {
    if (j < 1 || j > new_size()) throw UsageError("new line index out of range: " + std::to_string(j));
    return new_[static_cast<std::size_t>(j - 1)];
}

LineNo LinePair::old_origin(LineNo i) const {
    if (i < 1 || i > old_size()) throw UsageError("old line index out of range: " + std::to_string(i));
    return old_origin_[static_cast<std::size_t>(i - 1)];
}

LineNo LinePair::new_origin(LineNo j) const {
    if (j < 1 || j > new_size()) throw UsageError("new line index out of range: " + std::to_string(j));
    return new_origin_[static_cast<std::size_t>(j - 1)];
}

bool LinePair::eq(LineNo i, LineNo j) const {
    if (i < 1 || i > old_size()) throw UsageError("old line index out of range: " + std::to_string(i));
    if (j < 1 || j > new_size()) throw UsageError("new line index out of range: " + std::to_string(j));
    return old_id(i) == new_id(j);
}

LinePair LinePair::slice(LineNo i0, LineNo i1, LineNo j0, LineNo j1) const {
    if (i0 < 0 || i0 > i1 || i1 > old_size() || j0 < 0 || j0 > j1 || j1 > new_size())
        throw UsageError("slice out of range");
    auto b = [](auto& v, LineNo k) { return v.begin() + k; };
    return LinePair({b(old_, i0), b(old_, i1)}, {b(new_, j0), b(new_, j1)},
                    {b(old_origin_, i0), b(old_origin_, i1)}, {b(new_origin_, j0), b(new_origin_, j1)});
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        std::size_t next = end == std::string_view::npos ? text.size() : end + 1;
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        start = next;
    }
    return lines;
}

LinePair build_line_pair(std::string_view old_text, std::string_view new_text, bool strip_blank) {
    auto old_lines = split_lines(old_text);
    auto new_lines = split_lines(new_text);
    if (!strip_blank) return LinePair(std::move(old_lines), std::move(new_lines));

    auto strip = [](std::vector<std::string>& lines) {
        std::vector<std::string> kept;
        std::vector<LineNo> origin;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (lines[k].empty()) continue;
            kept.push_back(std::move(lines[k]));
            origin.push_back(static_cast<LineNo>(k + 1));
        }
        return std::pair{std::move(kept), std::move(origin)};
    };
    auto [old_kept, old_origin] = strip(old_lines);
    auto [new_kept, new_origin] = strip(new_lines);
    return LinePair(std::move(old_kept), std::move(new_kept), std::move(old_origin), std::move(new_origin));
}

void validate(const LinePair& pair, const Diff& diff) {
    Node at{0, 0};
    for (const auto& e : diff.edges) {
        if (e.from != at) throw UsageError("diff edges do not chain into a path");
        Node to = e.to();
        if (to.i > pair.old_size() || to.j > pair.new_size())
            throw UsageError("diff path leaves the edit graph");
        if (e.kind == EdgeKind::diagonal && !pair.eq(to.i, to.j))
            throw UsageError("diff uses a diagonal between unequal lines");
        at = to;
    }
    if (at != Node{pair.old_size(), pair.new_size()}) throw UsageError("diff path does not reach the sink");
}

}  // namespace idiff
