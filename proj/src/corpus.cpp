#include "idiff/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "idiff/differ.hpp"
#include "idiff/metrics.hpp"
#include "idiff/parallel.hpp"

namespace fs = std::filesystem;

namespace idiff {

namespace {

struct PendingPair {
    std::string id;
    fs::path old_path;
    fs::path new_path;
};

bool read_file(const fs::path& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return false;
    out = ss.str();
    return true;
}

void scan_directory(const fs::path& root, std::vector<PendingPair>& pending, std::vector<SkipRecord>& skipped) {
    std::vector<fs::path> dirs;
    for (const auto& item : fs::directory_iterator(root))
        if (item.is_directory()) dirs.push_back(item.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& dir : dirs) {
        PendingPair p{dir.filename().string(), {}, {}};
        std::vector<fs::path> files;
        for (const auto& item : fs::directory_iterator(dir))
            if (!item.is_directory()) files.push_back(item.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            const auto stem = f.stem().string();
            if (stem == "old" && p.old_path.empty()) p.old_path = f;
            if (stem == "new" && p.new_path.empty()) p.new_path = f;
        }
        if (p.old_path.empty() || p.new_path.empty()) {
            skipped.push_back({p.id, "missing old.* or new.* file"});
            continue;
        }
        pending.push_back(std::move(p));
    }
}

void scan_manifest(const fs::path& manifest, std::vector<PendingPair>& pending, std::vector<SkipRecord>& skipped) {
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot read manifest " + manifest.string());
    const fs::path base = manifest.parent_path();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto j = nlohmann::json::parse(line);
            PendingPair p{j.at("id").get<std::string>(), j.at("old").get<std::string>(), j.at("new").get<std::string>()};
            if (p.old_path.is_relative()) p.old_path = base / p.old_path;
            if (p.new_path.is_relative()) p.new_path = base / p.new_path;
            pending.push_back(std::move(p));
        } catch (const nlohmann::json::exception& e) {
            skipped.push_back({"line " + std::to_string(line_no), std::string("bad manifest entry: ") + e.what()});
        }
    }
}

}  // namespace

CorpusEntry make_entry(std::string id, LinePair pair, const HistogramOptions& histogram) {
    CorpusEntry e;
    e.id = std::move(id);
    e.initial = shortest_diff(pair);
    e.target = histogram_diff(pair, histogram);
    e.old_size = pair.old_size();
    e.new_size = pair.new_size();
    e.changed_lines = static_cast<int>(e.initial.count(EdgeKind::horizontal) + e.initial.count(EdgeKind::vertical));
    e.initial_distance = similarity_distance(e.initial, e.target);
    e.histogram_differs = !(e.initial == e.target);
    e.pair = std::move(pair);
    return e;
}

IngestResult ingest(const fs::path& root, const IngestOptions& options) {
    IngestResult result;
    std::vector<PendingPair> pending;
    if (fs::is_directory(root))
        scan_directory(root, pending, result.skipped);
    else
        scan_manifest(root, pending, result.skipped);

    std::erase_if(pending, [&](const PendingPair& p) { return options.exclude.contains(p.id); });
    std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

    std::vector<std::optional<CorpusEntry>> slots(pending.size());
    std::vector<std::optional<SkipRecord>> failures(pending.size());
    parallel_for(pending.size(), options.jobs, [&](std::size_t k) {
        const auto& p = pending[k];
        std::string old_text;
        std::string new_text;
        if (!read_file(p.old_path, old_text)) {
            failures[k] = SkipRecord{p.id, "cannot read " + p.old_path.string()};
            return;
        }
        if (!read_file(p.new_path, new_text)) {
            failures[k] = SkipRecord{p.id, "cannot read " + p.new_path.string()};
            return;
        }
        slots[k] = make_entry(p.id, build_line_pair(old_text, new_text, options.strip_blank), options.histogram);
        slots[k]->old_path = p.old_path;
        slots[k]->new_path = p.new_path;
    });
    for (std::size_t k = 0; k < pending.size(); ++k) {
        if (slots[k]) result.entries.push_back(std::move(*slots[k]));
        if (failures[k]) result.skipped.push_back(std::move(*failures[k]));
    }
    return result;
}

std::set<std::string> read_exclusion_list(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read exclusion list " + file.string());
    std::set<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        ids.insert(line.substr(b, e - b + 1));
    }
    return ids;
}

bool passes(const CorpusEntry& e, const FilterOptions& o) {
    return e.old_size <= o.max_loc && e.new_size <= o.max_loc && e.initial_distance >= 1 &&
           e.initial_distance <= o.max_candidates && e.histogram_differs;
}

std::vector<CorpusEntry> filter(const std::vector<CorpusEntry>& entries, const FilterOptions& options) {
    std::vector<CorpusEntry> kept;
    for (const auto& e : entries)
        if (passes(e, options)) kept.push_back(e);
    return kept;
}

SimCase to_case(const CorpusEntry& e) {
    return SimCase{e.id, e.pair, e.target, e.initial, e.initial_distance};
}

std::vector<SummaryRow> summarize(const std::vector<CorpusEntry>& entries) {
    struct Column {
        const char* name;
        int CorpusEntry::*field;
    };
    const Column columns[] = {{"LOC in the old version", &CorpusEntry::old_size},
                              {"LOC in the new version", &CorpusEntry::new_size},
                              {"# changed lines", &CorpusEntry::changed_lines},
                              {"initial similarity distance", &CorpusEntry::initial_distance}};
    std::vector<SummaryRow> rows;
    for (const auto& c : columns) {
        SummaryRow row;
        row.attribute = c.name;
        std::vector<double> v;
        for (const auto& e : entries) v.push_back(e.*(c.field));
        if (!v.empty()) {
            row.empty = false;
            row.min = *std::min_element(v.begin(), v.end());
            row.max = *std::max_element(v.begin(), v.end());
            row.q1 = quantile(v, 0.25);
            row.q2 = quantile(v, 0.5);
            row.q3 = quantile(v, 0.75);
            double sum = 0;
            for (double x : v) sum += x;
            row.average = sum / static_cast<double>(v.size());
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fixed(double x) {
    char buf[64];
    if (x == static_cast<long long>(x))
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(x));
    else
        std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

std::string summary_table(const std::vector<SummaryRow>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-28s %8s %8s %8s %8s %8s %10s\n", "", "Min", "Q1", "Q2", "Q3", "Max", "Average");
    out += buf;
    for (const auto& r : rows) {
        auto cell = [&](double x) { return r.empty ? std::string("N/A") : fixed(x); };
        std::snprintf(buf, sizeof buf, "%-28s %8s %8s %8s %8s %8s %10s\n", r.attribute.c_str(), cell(r.min).c_str(),
                      cell(r.q1).c_str(), cell(r.q2).c_str(), cell(r.q3).c_str(), cell(r.max).c_str(),
                      cell(r.average).c_str());
        out += buf;
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out = "attribute,min,q1,q2,q3,max,average\n";
    for (const auto& r : rows) {
        auto cell = [&](double x) { return r.empty ? std::string("N/A") : format_number(x); };
        out += r.attribute + "," + cell(r.min) + "," + cell(r.q1) + "," + cell(r.q2) + "," + cell(r.q3) + "," +
               cell(r.max) + "," + cell(r.average) + "\n";
    }
    return out;
}

}  // namespace idiff
