#include <algorithm>
#include <string>

#include "idiff/line_pair.hpp"

namespace idiff {

namespace {

std::string range(LineNo start, std::size_t count) {
    std::string out = std::to_string(start);
    if (count != 1) out += "," + std::to_string(count);
    return out;
}

}  // namespace

std::string render_unified(const LinePair& pair, const Diff& diff, const UnifiedOptions& options) {
    validate(pair, diff);
    const auto& edges = diff.edges;
    const std::size_t n = edges.size();
    const std::size_t context = options.context < 0 ? n : static_cast<std::size_t>(options.context);

    std::vector<std::size_t> changes;
    for (std::size_t k = 0; k < n; ++k)
        if (edges[k].kind != EdgeKind::diagonal) changes.push_back(k);
    if (changes.empty()) return {};

    std::string out;
    if (options.headers) out += "--- " + options.old_label + "\n+++ " + options.new_label + "\n";

    std::size_t c = 0;
    while (c < changes.size()) {
        // Extend the hunk while the gap of matched lines fits within both contexts.
        std::size_t last = c;
        while (last + 1 < changes.size() && changes[last + 1] - changes[last] - 1 <= 2 * context) ++last;
        const std::size_t begin = changes[c] - std::min(changes[c], context);
        const std::size_t end = std::min(n, changes[last] + 1 + context);

        std::size_t old_count = 0;
        std::size_t new_count = 0;
        for (std::size_t k = begin; k < end; ++k) {
            if (edges[k].kind != EdgeKind::vertical) ++old_count;
            if (edges[k].kind != EdgeKind::horizontal) ++new_count;
        }
        const Node first = edges[begin].from;
        // An empty side names the line after which the hunk applies.
        const LineNo old_start = old_count > 0 ? pair.old_origin(first.i + 1) : (first.i > 0 ? pair.old_origin(first.i) : 0);
        const LineNo new_start = new_count > 0 ? pair.new_origin(first.j + 1) : (first.j > 0 ? pair.new_origin(first.j) : 0);
        out += "@@ -" + range(old_start, old_count) + " +" + range(new_start, new_count) + " @@\n";

        for (std::size_t k = begin; k < end; ++k) {
            const Node to = edges[k].to();
            switch (edges[k].kind) {
            case EdgeKind::horizontal: out += "-" + pair.old_line(to.i) + "\n"; break;
            case EdgeKind::vertical: out += "+" + pair.new_line(to.j) + "\n"; break;
            case EdgeKind::diagonal: out += " " + pair.old_line(to.i) + "\n"; break;
            }
        }
        c = last + 1;
    }
    return out;
}

}  // namespace idiff
