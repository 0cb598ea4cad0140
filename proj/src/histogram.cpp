#include "idiff/histogram.hpp"

#include <limits>
#include <unordered_map>

#include "idiff/differ.hpp"

namespace idiff {

namespace {

struct Counts {
    int old_count = 0;
    int new_count = 0;
    LineNo first_old = 0;
    LineNo first_new = 0;
};

class HistogramDiffer {
public:
    HistogramDiffer(const LinePair& pair, const HistogramOptions& options) : pair_(pair), options_(options) {}

    Diff run() {
        diff_.edges.reserve(static_cast<std::size_t>(pair_.old_size() + pair_.new_size()));
        region(0, pair_.old_size(), 0, pair_.new_size());
        return std::move(diff_);
    }

private:
    // Diffs old lines (i0, i1] against new lines (j0, j1].
    void region(LineNo i0, LineNo i1, LineNo j0, LineNo j1) {
        if (i0 == i1 || j0 == j1) {
            for (LineNo i = i0; i < i1; ++i) diff_.edges.push_back({{i, j0}, EdgeKind::horizontal});
            for (LineNo j = j0; j < j1; ++j) diff_.edges.push_back({{i1, j}, EdgeKind::vertical});
            return;
        }
        Node anchor{0, 0};
        if (!find_anchor(i0, i1, j0, j1, anchor)) {
            fallback(i0, i1, j0, j1);
            return;
        }
        region(i0, anchor.i - 1, j0, anchor.j - 1);
        diff_.edges.push_back({{anchor.i - 1, anchor.j - 1}, EdgeKind::diagonal});
        region(anchor.i, i1, anchor.j, j1);
    }

    bool find_anchor(LineNo i0, LineNo i1, LineNo j0, LineNo j1, Node& anchor) const {
        std::unordered_map<std::uint32_t, Counts> counts;
        for (LineNo i = i0 + 1; i <= i1; ++i) {
            auto& c = counts[pair_.old_id(i)];
            if (c.old_count++ == 0) c.first_old = i;
        }
        for (LineNo j = j0 + 1; j <= j1; ++j) {
            auto it = counts.find(pair_.new_id(j));
            if (it == counts.end()) continue;
            if (it->second.new_count++ == 0) it->second.first_new = j;
        }
        int best = std::numeric_limits<int>::max();
        for (LineNo i = i0 + 1; i <= i1; ++i) {
            const auto& c = counts.at(pair_.old_id(i));
            if (c.first_old != i || c.new_count == 0) continue;
            const int occurrences = c.old_count + c.new_count;
            if (occurrences > options_.bucket_limit || occurrences >= best) continue;
            best = occurrences;
            anchor = {c.first_old, c.first_new};
        }
        return best != std::numeric_limits<int>::max();
    }

    void fallback(LineNo i0, LineNo i1, LineNo j0, LineNo j1) {
        const Diff sub = shortest_diff(pair_.slice(i0, i1, j0, j1));
        for (auto e : sub.edges) {
            e.from.i += i0;
            e.from.j += j0;
            diff_.edges.push_back(e);
        }
    }

    const LinePair& pair_;
    const HistogramOptions& options_;
    Diff diff_;
};

}  // namespace

Diff histogram_diff(const LinePair& pair, const HistogramOptions& options) {
    return HistogramDiffer(pair, options).run();
}

}  // namespace idiff
