#pragma once

#include "idiff/line_pair.hpp"

namespace idiff {

struct HistogramOptions {
    /// Lines occurring more often than this (old + new, within the region) are never anchors.
    int bucket_limit = 64;
};

/// Anchor-based diff: the common line with the fewest occurrences in the
/// current region is matched, and both sides of it are diffed recursively.
/// Regions without an eligible anchor fall back to shortest_diff. The result
/// is a valid diff but not necessarily a shortest one.
Diff histogram_diff(const LinePair& pair, const HistogramOptions& options = {});

}  // namespace idiff
