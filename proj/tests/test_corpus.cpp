#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "idiff/corpus.hpp"
#include "idiff/differ.hpp"
#include "idiff/metrics.hpp"

using namespace idiff;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("idiff-corpus-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

CorpusEntry sized(int old_size, int distance, bool differs = true) {
    CorpusEntry e;
    e.old_size = old_size;
    e.new_size = 1;
    e.initial_distance = distance;
    e.histogram_differs = differs;
    return e;
}

}  // namespace

TEST_CASE("ingest a directory corpus") {
    TempDir dir;
    CHECK(ingest(dir.path).entries.empty());

    write(dir.path / "c2/old.txt", "a\nb\n");
    write(dir.path / "c2/new.txt", "a\nc\n");
    write(dir.path / "c1/old.java", "x\n");
    write(dir.path / "c1/new.java", "x\ny\n");
    write(dir.path / "c3/old", "\n\nq\n");
    write(dir.path / "c3/new", "q\n");
    write(dir.path / "c4/old.txt", "only one side\n");

    auto r = ingest(dir.path);
    REQUIRE(r.entries.size() == 3);
    CHECK(r.entries[0].id == "c1");
    CHECK(r.entries[1].id == "c2");
    CHECK(r.entries[1].changed_lines == 2);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].id == "c4");

    // Identical once blank lines are stripped: kept by ingest, dropped by the filter.
    CHECK(r.entries[2].initial_distance == 0);
    auto kept = filter(r.entries);
    CHECK(std::none_of(kept.begin(), kept.end(), [](const CorpusEntry& e) { return e.id == "c3"; }));

    IngestOptions keep;
    keep.strip_blank = false;
    keep.exclude = {"c1"};
    auto k = ingest(dir.path, keep);
    REQUIRE(k.entries.size() == 2);
    CHECK(k.entries[0].id == "c2");
    CHECK(k.entries[1].old_size == 3);
}

TEST_CASE("ingest a manifest") {
    TempDir dir;
    write(dir.path / "files/a1", "a\nb\nc\n");
    write(dir.path / "files/a2", "a\nc\n");
    write(dir.path / "m.jsonl",
          R"({"id":"one","old":"files/a1","new":"files/a2"})"
          "\n\n"
          R"({"id":"two","old":"files/missing","new":"files/a2"})"
          "\n"
          "not json\n");
    auto r = ingest(dir.path / "m.jsonl");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].id == "one");
    CHECK(r.entries[0].old_size == 3);
    CHECK(r.skipped.size() == 2);
    CHECK_THROWS(ingest(dir.path / "nope.jsonl"));
}

TEST_CASE("exclusion list") {
    TempDir dir;
    write(dir.path / "ex.txt", "# generated\n a \n\nb\n");
    CHECK(read_exclusion_list(dir.path / "ex.txt") == std::set<std::string>{"a", "b"});
}

TEST_CASE("filter bounds") {
    FilterOptions o;
    CHECK_FALSE(passes(sized(3001, 5), o));
    CHECK(passes(sized(3000, 5), o));
    CHECK_FALSE(passes(sized(10, 0), o));
    CHECK(passes(sized(10, 30), o));
    CHECK_FALSE(passes(sized(10, 31), o));
    CHECK_FALSE(passes(sized(10, 5, false), o));
}

TEST_CASE("entry statistics") {
    auto e = make_entry("x", build_line_pair("a\na\na\nx\n", "x\na\na\na\n", false));
    CHECK(e.histogram_differs);
    CHECK(e.changed_lines == 2);
    CHECK(e.initial_distance == similarity_distance(e.initial, e.target));
    auto c = to_case(e);
    CHECK(c.initial == e.initial);
    CHECK(c.target == e.target);
}

TEST_CASE("summary statistics") {
    auto single = summarize({make_entry("s", build_line_pair("a\nb\n", "a\n", false))});
    REQUIRE(single.size() == 4);
    for (const auto& row : single) {
        CHECK(row.min == row.max);
        CHECK(row.q1 == row.min);
        CHECK(row.q2 == row.min);
        CHECK(row.average == row.min);
    }

    std::vector<CorpusEntry> five;
    const int sizes[] = {4, 1, 9, 16, 25};
    for (int n : sizes) five.push_back(make_entry("e", LinePair(std::vector<std::string>(static_cast<std::size_t>(n), "x"), {}), {}));
    auto rows = summarize(five);
    // Sorted 1 4 9 16 25: quartiles at positions 1, 2, 3.
    CHECK(rows[0].min == 1);
    CHECK(rows[0].q1 == 4);
    CHECK(rows[0].q2 == 9);
    CHECK(rows[0].q3 == 16);
    CHECK(rows[0].max == 25);
    CHECK(rows[0].average == doctest::Approx(11));

    auto empty = summarize({});
    CHECK(summary_table(empty).find("N/A") != std::string::npos);
    CHECK(summary_csv(rows).rfind("attribute,min,q1,q2,q3,max,average\nLOC in the old version,1,4,9,16,25,11\n", 0) == 0);
}

TEST_CASE("bundled corpus diverges from histogram output") {
    auto r = ingest(IDIFF_CORPUS_DIR);
    REQUIRE(r.entries.size() == 20);
    CHECK(r.skipped.empty());
    auto kept = filter(r.entries);
    CHECK(kept.size() == 20);
}
