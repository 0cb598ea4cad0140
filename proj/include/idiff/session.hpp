#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "idiff/feedback.hpp"
#include "idiff/line_pair.hpp"

namespace idiff {

/// An error the HTTP layer reports with the given status code.
class ServiceError : public std::runtime_error {
public:
    ServiceError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

/// Largest accepted file, in lines per side.
inline constexpr int max_session_lines = 3000;

/// One line of a rendered diff as the UI sees it. Coordinates are edit-graph
/// line numbers (0 for the absent side); old_no/new_no are the line numbers in
/// the submitted text.
struct PayloadLine {
    std::string kind;  // "ctx", "del" or "add"
    LineNo old_line = 0;
    LineNo new_line = 0;
    LineNo old_no = 0;
    LineNo new_no = 0;
    std::string text;
};

/// One payload line per diff edge, in path order.
std::vector<PayloadLine> payload_lines(const LinePair& pair, const Diff& diff);
nlohmann::json to_json(const std::vector<PayloadLine>& lines);

/// The edge of `diff` a click on a payload line refers to. Throws
/// ServiceError(409) when no such line is in the diff.
Edge clicked_edge(const Diff& diff, const std::string& kind, LineNo old_line, LineNo new_line);

struct FeedbackOutcome {
    bool feasible = true;
    std::string conflict;
    FeedbackAction action;
};

/// The interactive loop for one file pair: each click adds a feedback action
/// and the diff is recomputed with the previous diff as stability reference.
class Session {
public:
    Session(std::string id, LinePair pair, std::string old_name = "a", std::string new_name = "b");

    const std::string& id() const { return id_; }
    const LinePair& pair() const { return pair_; }
    const Diff& diff() const { return diffs_.back(); }
    const std::vector<FeedbackAction>& actions() const { return actions_; }
    /// Number of actions in effect; undo lowers it.
    std::uint64_t revision() const { return actions_.size(); }
    bool can_undo() const { return !actions_.empty(); }
    bool can_redo() const { return !redo_.empty(); }

    nlohmann::json payload() const;

    /// Rejects a stale revision with ServiceError(409). An infeasible action is
    /// rolled back and reported through the outcome.
    FeedbackOutcome feedback(std::uint64_t revision, const std::string& kind, LineNo old_line, LineNo new_line);

    bool undo();
    bool redo();

    /// "unified" or "actions"; anything else is ServiceError(400).
    std::string export_as(const std::string& format) const;

private:
    std::optional<Diff> apply(const FeedbackAction& action, std::string& conflict);

    std::string id_;
    LinePair pair_;
    std::string old_name_;
    std::string new_name_;
    std::vector<FeedbackAction> actions_;
    FeedbackState state_;
    std::vector<Diff> diffs_;  // diffs_[k] is the diff after the first k actions
    std::vector<FeedbackAction> redo_;
};

/// Thread-safe registry of sessions with idle expiry. Operations on one
/// session are serialized; different sessions run concurrently.
class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(std::chrono::seconds idle_ttl = std::chrono::hours(1));

    /// Throws ServiceError(413) for inputs over max_session_lines per side.
    nlohmann::json create(const std::string& old_text, const std::string& new_text, bool strip_blank,
                          const std::string& old_name = "a", const std::string& new_name = "b");

    /// Runs fn with the session locked. Unknown or expired ids are ServiceError(404).
    nlohmann::json with(const std::string& id, const std::function<nlohmann::json(Session&)>& fn);

    std::size_t size() const;

    /// For tests: pretend `by` has elapsed.
    void advance_clock(std::chrono::seconds by);

private:
    struct Slot {
        Slot(Session s, Clock::time_point t) : session(std::move(s)), last_used(t) {}
        std::mutex mutex;
        Session session;
        Clock::time_point last_used;
    };

    Clock::time_point now() const { return Clock::now() + skew_; }
    void sweep();

    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Slot>> sessions_;
    std::chrono::seconds ttl_;
    Clock::duration skew_{0};
    std::uint64_t counter_ = 0;
};

}  // namespace idiff
