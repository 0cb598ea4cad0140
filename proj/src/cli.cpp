#include "idiff/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idiff/corpus.hpp"
#include "idiff/differ.hpp"
#include "idiff/feedback.hpp"
#include "idiff/histogram.hpp"
#include "idiff/http_service.hpp"
#include "idiff/metrics.hpp"
#include "idiff/parallel.hpp"

namespace fs = std::filesystem;

namespace idiff {

std::optional<std::chrono::milliseconds> parse_duration(const std::string& text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (value < 0) return std::nullopt;
    const std::string unit = text.substr(used);
    double ms = 0;
    if (unit == "ms")
        ms = value;
    else if (unit.empty() || unit == "s")
        ms = value * 1e3;
    else if (unit == "m" || unit == "min")
        ms = value * 60e3;
    else if (unit == "h")
        ms = value * 3600e3;
    else
        return std::nullopt;
    return std::chrono::milliseconds(static_cast<long long>(ms));
}

namespace {

class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(exit_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string colorize(const std::string& text) {
    std::string out;
    for (const auto& line : split_lines(text)) {
        const char* color = nullptr;
        if (line.rfind("---", 0) == 0 || line.rfind("+++", 0) == 0)
            color = "\033[1m";
        else if (!line.empty() && line[0] == '-')
            color = "\033[31m";
        else if (!line.empty() && line[0] == '+')
            color = "\033[32m";
        else if (line.rfind("@@", 0) == 0)
            color = "\033[36m";
        out += color ? std::string(color) + line + "\033[0m\n" : line + "\n";
    }
    return out;
}

struct DiffFlags {
    std::string old_path;
    std::string new_path;
    bool strip_blank = false;
    int context = 3;
    bool color = false;
};

int print_diff(const DiffFlags& f, const LinePair& pair, const Diff& diff, std::ostream& out) {
    UnifiedOptions o;
    o.context = f.context;
    o.old_label = f.old_path;
    o.new_label = f.new_path;
    const std::string text = render_unified(pair, diff, o);
    out << (f.color ? colorize(text) : text);
    return text.empty() ? exit_same : exit_different;
}

std::vector<FeedbackAction> read_session(const std::string& path) {
    std::vector<FeedbackAction> actions;
    if (path.empty() || !fs::exists(path)) return actions;
    std::ifstream in(path);
    if (!in) throw CommandError(exit_error, "cannot read session " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            actions.push_back(parse_action(line));
        } catch (const std::invalid_argument& e) {
            throw CommandError(exit_error, "session " + path + ": " + e.what());
        }
    }
    return actions;
}

void write_session(const std::string& path, const std::vector<FeedbackAction>& actions) {
    std::ofstream outf(path, std::ios::trunc);
    if (!outf) throw CommandError(exit_error, "cannot write session " + path);
    for (const auto& a : actions) outf << to_json(a) << "\n";
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary | std::ios::trunc);
    if (!outf) throw CommandError(exit_error, "cannot write " + path.string());
    outf << text;
}

std::chrono::milliseconds default_budget() {
    if (const char* env = std::getenv("IDIFF_BUDGET_SECS")) {
        if (auto d = parse_duration(env)) return *d;
    }
    return std::chrono::minutes(30);
}

void add_diff_flags(CLI::App* cmd, DiffFlags& f) {
    cmd->add_option("old", f.old_path, "Old version")->required();
    cmd->add_option("new", f.new_path, "New version")->required();
    cmd->add_flag("--strip-blank", f.strip_blank, "Ignore empty lines");
    cmd->add_option("-U,--context", f.context, "Lines of context")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--color", f.color, "Colorize output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interactive line diff: shortest diffs that honour reviewer feedback", "idiff"};
    app.require_subcommand(1);

    DiffFlags diff_flags;
    bool histogram = false;
    auto* diff_cmd = app.add_subcommand("diff", "Print a unified diff");
    add_diff_flags(diff_cmd, diff_flags);
    diff_cmd->add_flag("--histogram", histogram, "Use the histogram differ instead of the shortest diff");

    DiffFlags fix_flags;
    std::vector<std::string> action_json;
    std::string session_path;
    bool undo = false;
    auto* fix_cmd = app.add_subcommand("fix", "Apply feedback actions and print the updated diff");
    add_diff_flags(fix_cmd, fix_flags);
    fix_cmd->add_option("--action", action_json, R"(Feedback action, e.g. '{"old":2,"new":null}'; repeatable)");
    fix_cmd->add_option("--session", session_path, "File holding the actions given so far (JSON lines)");
    fix_cmd->add_flag("--undo", undo, "Drop the most recent action");

    std::string corpus;
    std::string budget_text;
    unsigned jobs = 1;
    std::string out_dir = "idiff-out";
    bool keep_blank = false;
    bool timings = false;
    std::string exclude_path;
    FilterOptions filter_options;
    std::size_t max_states = 2'000'000;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the feedback simulation over a corpus");
    sim_cmd->add_option("corpus", corpus, "Corpus directory or JSON-lines manifest")->required();
    sim_cmd->add_option("--budget", budget_text, "Search time limit per case (e.g. 30m, 10s, 250ms)");
    sim_cmd->add_option("--jobs,-j", jobs, "Cases simulated in parallel")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--out", out_dir, "Output directory");
    sim_cmd->add_flag("--keep-blank", keep_blank, "Do not drop empty lines before diffing");
    sim_cmd->add_flag("--timings", timings, "Record wall_ms in the CSV (makes output run-dependent)");
    sim_cmd->add_option("--exclude", exclude_path, "File listing case ids to skip");
    sim_cmd->add_option("--max-loc", filter_options.max_loc, "Largest file kept, in lines");
    sim_cmd->add_option("--max-candidates", filter_options.max_candidates, "Largest initial distance kept");
    sim_cmd->add_option("--max-states", max_states, "Search states before a case counts as out of memory");

    std::string sum_corpus;
    bool sum_keep_blank = false;
    bool sum_csv = false;
    bool sum_all = false;
    auto* sum_cmd = app.add_subcommand("summarize", "Print dataset attributes of a corpus");
    sum_cmd->add_option("corpus", sum_corpus, "Corpus directory or JSON-lines manifest")->required();
    sum_cmd->add_flag("--keep-blank", sum_keep_blank, "Do not drop empty lines before diffing");
    sum_cmd->add_flag("--csv", sum_csv, "CSV instead of an aligned table");
    sum_cmd->add_flag("--unfiltered", sum_all, "Summarize every pair, not only those the filters keep");

    int port = 8080;
    std::string host = "127.0.0.1";
    bool open_browser = false;
    std::string ui_dir;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the interactive session API");
    serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)");
    serve_cmd->add_option("--host", host, "Address to bind");
    serve_cmd->add_flag("--open", open_browser, "Open the UI in a browser");
    serve_cmd->add_option("--ui", ui_dir, "Directory with the built web UI to serve at /");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_same;
    } catch (const CLI::ParseError& e) {
        err << "idiff: " << e.what() << "\n";
        return exit_error;
    }

    try {
        if (*diff_cmd) {
            const auto pair =
                build_line_pair(read_text(diff_flags.old_path), read_text(diff_flags.new_path), diff_flags.strip_blank);
            return print_diff(diff_flags, pair, histogram ? histogram_diff(pair) : shortest_diff(pair), out);
        }

        if (*fix_cmd) {
            const auto pair =
                build_line_pair(read_text(fix_flags.old_path), read_text(fix_flags.new_path), fix_flags.strip_blank);
            auto actions = read_session(session_path);
            for (const auto& text : action_json) {
                try {
                    actions.push_back(parse_action(text));
                } catch (const std::invalid_argument& e) {
                    throw CommandError(exit_error, e.what());
                }
            }
            if (undo && !actions.empty()) actions.pop_back();
            std::vector<Diff> diffs;
            try {
                diffs = diff_fix_incremental(pair, actions);
            } catch (const Infeasible& e) {
                err << "idiff: " << e.what() << "\n";
                return exit_infeasible;
            }
            if (!session_path.empty()) write_session(session_path, actions);
            return print_diff(fix_flags, pair, diffs.back(), out);
        }

        if (*sim_cmd) {
            SolveOptions solve;
            solve.max_states = max_states;
            solve.budget = default_budget();
            if (!budget_text.empty()) {
                auto d = parse_duration(budget_text);
                if (!d) throw CommandError(exit_error, "bad --budget " + budget_text);
                solve.budget = *d;
            }
            IngestOptions ingest_options;
            ingest_options.strip_blank = !keep_blank;
            ingest_options.jobs = jobs;
            if (!exclude_path.empty()) ingest_options.exclude = read_exclusion_list(exclude_path);
            if (!fs::exists(corpus)) throw CommandError(exit_error, "no such corpus " + corpus);

            auto ingested = ingest(corpus, ingest_options);
            for (const auto& s : ingested.skipped) err << "idiff: skipped " << s.id << ": " << s.reason << "\n";
            const auto kept = filter(ingested.entries, filter_options);

            std::vector<SimResult> results(kept.size());
            parallel_for(kept.size(), jobs, [&](std::size_t k) { results[k] = simulate_case(to_case(kept[k]), solve); });

            fs::create_directories(out_dir);
            write_file(fs::path(out_dir) / "cases.csv", to_csv(results, timings));
            write_file(fs::path(out_dir) / "aggregate.json", to_json(aggregate(results)).dump(2) + "\n");
            const auto rows = summarize(kept);
            write_file(fs::path(out_dir) / "dataset.csv", summary_csv(rows));

            const auto solved = std::count_if(results.begin(), results.end(),
                                              [](const SimResult& r) { return r.status == CaseStatus::ok; });
            out << "ingested " << ingested.entries.size() << ", kept " << kept.size() << ", solved " << solved
                << "; results in " << out_dir << "\n";
            if (solved == 0) {
                err << "idiff: no cases\n";
                return exit_no_cases;
            }
            return exit_same;
        }

        if (*sum_cmd) {
            IngestOptions ingest_options;
            ingest_options.strip_blank = !sum_keep_blank;
            if (!fs::exists(sum_corpus)) throw CommandError(exit_error, "no such corpus " + sum_corpus);
            auto ingested = ingest(sum_corpus, ingest_options);
            const auto rows = summarize(sum_all ? ingested.entries : filter(ingested.entries));
            out << (sum_csv ? summary_csv(rows) : summary_table(rows));
            return exit_same;
        }

        if (*serve_cmd) {
            if (port < 0 || port > 65535) throw CommandError(exit_error, "invalid port " + std::to_string(port));
            SessionStore store;
            HttpService service(store, ui_dir);
            const int bound = service.bind(host, port);
            if (bound < 0) throw CommandError(exit_error, "cannot bind " + host + ":" + std::to_string(port));
            const std::string url = "http://" + host + ":" + std::to_string(bound) + "/";
            out << "listening on " << url << std::endl;
            if (open_browser) {
                const std::string cmd = "xdg-open '" + url + "' >/dev/null 2>&1 &";
                if (std::system(cmd.c_str()) != 0) err << "idiff: could not open a browser\n";
            }
            service.run();
            return exit_same;
        }
    } catch (const CommandError& e) {
        err << "idiff: " << e.what() << "\n";
        return e.code();
    } catch (const UsageError& e) {
        err << "idiff: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "idiff: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

}  // namespace idiff
