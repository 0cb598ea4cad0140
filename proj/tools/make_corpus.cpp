// Generates the bundled synthetic corpus: Java-like file pairs whose
// histogram diff differs from the shortest diff, small enough to solve fast.
//
//   make_corpus <out-dir> [count] [seed]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "idiff/corpus.hpp"
#include "idiff/search.hpp"

namespace fs = std::filesystem;

namespace {

struct Method {
    std::string name;
    bool commented = false;
    std::vector<std::string> body;
};

const std::vector<std::string> kStatements = {
    "        return null;",        "        return count;",      "        int i = 0;",
    "        i++;",                "        if (value == null) {", "            return;",
    "        }",                   "        log.debug(\"enter\");", "        this.count = count;",
    "        list.add(item);",     "        return list;",       "        throw new IllegalStateException();",
    "        for (Item item : items) {", "            total += item.size();", "        return total;",
    "        super.init();",       "        close();",           "        return true;",
};

const std::vector<std::string> kNames = {"getCount", "getRange", "getName", "setName", "reset", "close",
                                         "isEmpty", "size", "addItem", "removeItem", "total", "init",
                                         "load", "save", "validate", "refresh"};

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    std::vector<Method> methods() {
        std::vector<Method> out;
        const int n = pick(5, 10);
        std::vector<std::string> names = kNames;
        std::shuffle(names.begin(), names.end(), rng_);
        for (int k = 0; k < n; ++k) {
            Method m{names[static_cast<std::size_t>(k)], chance(0.5), {}};
            const int lines = pick(1, 4);
            for (int l = 0; l < lines; ++l) m.body.push_back(kStatements[static_cast<std::size_t>(pick(0, static_cast<int>(kStatements.size()) - 1))]);
            out.push_back(std::move(m));
        }
        return out;
    }

    std::vector<Method> mutate(std::vector<Method> ms) {
        const int edits = pick(1, 5);
        for (int e = 0; e < edits && ms.size() > 2; ++e) {
            const auto at = static_cast<std::size_t>(pick(0, static_cast<int>(ms.size()) - 1));
            switch (pick(0, 4)) {
            case 0: ms.erase(ms.begin() + static_cast<long>(at)); break;
            case 1: ms[at].commented = !ms[at].commented; break;
            case 2: {
                auto& body = ms[at].body;
                body.insert(body.begin() + pick(0, static_cast<int>(body.size())),
                            kStatements[static_cast<std::size_t>(pick(0, static_cast<int>(kStatements.size()) - 1))]);
                break;
            }
            case 3: {
                Method copy = ms[at];
                copy.name += "2";
                ms.insert(ms.begin() + pick(0, static_cast<int>(ms.size())), copy);
                break;
            }
            default: {
                auto to = static_cast<std::size_t>(pick(0, static_cast<int>(ms.size()) - 1));
                std::swap(ms[at], ms[to]);
            }
            }
        }
        return ms;
    }

    static std::string render(const std::vector<Method>& ms) {
        std::string out = "public class Store {\n\n";
        for (const auto& m : ms) {
            if (m.commented) out += "    /**\n     * Returns the " + m.name + ".\n     */\n";
            out += "    public Object " + m.name + "() {\n";
            for (const auto& line : m.body) out += line + "\n";
            out += "    }\n\n";
        }
        out += "}\n";
        return out;
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    std::mt19937 rng_;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: make_corpus <out-dir> [count] [seed]\n";
        return 2;
    }
    const fs::path out = argv[1];
    const int count = argc > 2 ? std::stoi(argv[2]) : 20;
    const unsigned seed = argc > 3 ? static_cast<unsigned>(std::stoul(argv[3])) : 20240601u;

    Generator gen(seed);
    idiff::FilterOptions filter;
    filter.max_candidates = 12;
    idiff::SolveOptions solve;
    solve.budget = std::chrono::seconds(2);

    int made = 0;
    for (int attempt = 0; made < count && attempt < 100000; ++attempt) {
        const auto before = gen.methods();
        const auto after = gen.mutate(before);
        const std::string old_text = Generator::render(before);
        const std::string new_text = Generator::render(after);
        auto entry = idiff::make_entry("", idiff::build_line_pair(old_text, new_text, true));
        if (!idiff::passes(entry, filter)) continue;
        const auto result = idiff::solve_min_feedback(idiff::to_case(entry), solve);
        if (result.status != idiff::CaseStatus::ok) continue;
        // Every third case needs more than one action, so both search phases get exercised.
        if (made % 3 == 2 && result.min_feedback < 2) continue;

        char name[32];
        std::snprintf(name, sizeof name, "case_%02d", made + 1);
        fs::create_directories(out / name);
        std::ofstream(out / name / "old.java", std::ios::binary) << old_text;
        std::ofstream(out / name / "new.java", std::ios::binary) << new_text;
        std::cout << name << ": N=" << entry.old_size << " M=" << entry.new_size
                  << " distance=" << entry.initial_distance << " min_feedback=" << result.min_feedback << "\n";
        ++made;
    }
    return made == count ? 0 : 1;
}
