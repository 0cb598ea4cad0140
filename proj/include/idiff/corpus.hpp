#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "idiff/histogram.hpp"
#include "idiff/line_pair.hpp"
#include "idiff/search.hpp"

namespace idiff {

struct CorpusEntry {
    std::string id;
    std::filesystem::path old_path;
    std::filesystem::path new_path;

    LinePair pair;
    Diff initial;  // shortest diff, no feedback
    Diff target;   // histogram diff

    int old_size = 0;
    int new_size = 0;
    int changed_lines = 0;  // horizontal + vertical edges of the initial diff
    int initial_distance = 0;
    bool histogram_differs = false;
};

struct SkipRecord {
    std::string id;
    std::string reason;
};

struct IngestResult {
    std::vector<CorpusEntry> entries;  // sorted by id
    std::vector<SkipRecord> skipped;
};

struct IngestOptions {
    bool strip_blank = true;
    std::set<std::string> exclude;
    unsigned jobs = 1;
    HistogramOptions histogram;
};

/// Computes the diffs and statistics for one pair.
CorpusEntry make_entry(std::string id, LinePair pair, const HistogramOptions& histogram = {});

/// Reads `<root>/<case>/old.*` + `<root>/<case>/new.*` pairs, or, when `root`
/// is a file, a manifest with one `{"id":..., "old":..., "new":...}` object
/// per line (relative paths resolve against the manifest's directory).
/// Unreadable or incomplete cases are skipped with a reason.
IngestResult ingest(const std::filesystem::path& root, const IngestOptions& options = {});

/// Ids listed one per line; blank lines and `#` comments are ignored.
std::set<std::string> read_exclusion_list(const std::filesystem::path& file);

struct FilterOptions {
    int max_loc = 3000;
    int max_candidates = 30;
};

bool passes(const CorpusEntry& entry, const FilterOptions& options);
std::vector<CorpusEntry> filter(const std::vector<CorpusEntry>& entries, const FilterOptions& options = {});

SimCase to_case(const CorpusEntry& entry);

struct SummaryRow {
    std::string attribute;
    bool empty = true;
    double min = 0;
    double q1 = 0;
    double q2 = 0;
    double q3 = 0;
    double max = 0;
    double average = 0;
};

/// LOC old/new, changed lines and initial distance, with quartiles by linear interpolation.
std::vector<SummaryRow> summarize(const std::vector<CorpusEntry>& entries);
std::string summary_table(const std::vector<SummaryRow>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace idiff
