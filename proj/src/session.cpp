#include "idiff/session.hpp"

#include <random>

#include "idiff/differ.hpp"

namespace idiff {

std::vector<PayloadLine> payload_lines(const LinePair& pair, const Diff& diff) {
    std::vector<PayloadLine> lines;
    lines.reserve(diff.edges.size());
    for (const auto& e : diff.edges) {
        const Node to = e.to();
        PayloadLine line;
        switch (e.kind) {
        case EdgeKind::diagonal:
            line = {"ctx", to.i, to.j, pair.old_origin(to.i), pair.new_origin(to.j), pair.old_line(to.i)};
            break;
        case EdgeKind::horizontal: line = {"del", to.i, 0, pair.old_origin(to.i), 0, pair.old_line(to.i)}; break;
        case EdgeKind::vertical: line = {"add", 0, to.j, 0, pair.new_origin(to.j), pair.new_line(to.j)}; break;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

nlohmann::json to_json(const std::vector<PayloadLine>& lines) {
    auto number = [](LineNo n) { return n == 0 ? nlohmann::json(nullptr) : nlohmann::json(n); };
    nlohmann::json out = nlohmann::json::array();
    for (const auto& l : lines)
        out.push_back({{"kind", l.kind},
                       {"old", number(l.old_line)},
                       {"new", number(l.new_line)},
                       {"old_no", number(l.old_no)},
                       {"new_no", number(l.new_no)},
                       {"text", l.text}});
    return out;
}

Edge clicked_edge(const Diff& diff, const std::string& kind, LineNo old_line, LineNo new_line) {
    EdgeKind want;
    if (kind == "ctx" && old_line > 0 && new_line > 0)
        want = EdgeKind::diagonal;
    else if (kind == "del" && old_line > 0 && new_line == 0)
        want = EdgeKind::horizontal;
    else if (kind == "add" && old_line == 0 && new_line > 0)
        want = EdgeKind::vertical;
    else
        throw ServiceError(400, "clicked line must be ctx with old and new, del with old only, or add with new only");

    for (const auto& e : diff.edges) {
        if (e.kind != want) continue;
        const Node to = e.to();
        const bool hit = (want == EdgeKind::diagonal && to.i == old_line && to.j == new_line) ||
                         (want == EdgeKind::horizontal && to.i == old_line) ||
                         (want == EdgeKind::vertical && to.j == new_line);
        if (hit) return e;
    }
    throw ServiceError(409, "stale click: the line is not part of the current diff");
}

Session::Session(std::string id, LinePair pair, std::string old_name, std::string new_name)
    : id_(std::move(id)), pair_(std::move(pair)), old_name_(std::move(old_name)), new_name_(std::move(new_name)) {
    diffs_.push_back(shortest_diff(pair_));
}

nlohmann::json Session::payload() const {
    nlohmann::json actions = nlohmann::json::array();
    for (const auto& a : actions_) actions.push_back(nlohmann::json::parse(to_json(a)));
    return {{"id", id_},
            {"revision", revision()},
            {"lines", to_json(payload_lines(pair_, diff()))},
            {"actions", actions},
            {"can_undo", can_undo()}};
}

std::optional<Diff> Session::apply(const FeedbackAction& action, std::string& conflict) {
    FeedbackState next = state_;
    next.add(action, pair_);
    try {
        Diff d = shortest_diff(pair_, next.constraints(), &diff());
        state_ = std::move(next);
        return d;
    } catch (const Infeasible& e) {
        conflict = e.what();
        return std::nullopt;
    }
}

FeedbackOutcome Session::feedback(std::uint64_t revision, const std::string& kind, LineNo old_line, LineNo new_line) {
    if (revision != this->revision())
        throw ServiceError(409, "stale revision " + std::to_string(revision) + ", current is " +
                                    std::to_string(this->revision()));
    FeedbackOutcome out;
    out.action = action_from_edge(clicked_edge(diff(), kind, old_line, new_line));
    auto d = apply(out.action, out.conflict);
    if (!d) {
        out.feasible = false;
        return out;
    }
    actions_.push_back(out.action);
    diffs_.push_back(std::move(*d));
    redo_.clear();
    return out;
}

bool Session::undo() {
    if (actions_.empty()) return false;
    redo_.push_back(actions_.back());
    actions_.pop_back();
    diffs_.pop_back();
    state_ = FeedbackState::from_actions(actions_, pair_);
    return true;
}

bool Session::redo() {
    if (redo_.empty()) return false;
    const FeedbackAction action = redo_.back();
    std::string conflict;
    auto d = apply(action, conflict);
    if (!d) return false;  // cannot happen: the action was feasible from this same diff
    redo_.pop_back();
    actions_.push_back(action);
    diffs_.push_back(std::move(*d));
    return true;
}

std::string Session::export_as(const std::string& format) const {
    if (format == "unified") {
        UnifiedOptions o;
        o.old_label = old_name_;
        o.new_label = new_name_;
        return render_unified(pair_, diff(), o);
    }
    if (format == "actions") {
        std::string out;
        for (const auto& a : actions_) out += to_json(a) + "\n";
        return out;
    }
    throw ServiceError(400, "unknown export format \"" + format + "\" (expected unified or actions)");
}

SessionStore::SessionStore(std::chrono::seconds idle_ttl) : ttl_(idle_ttl) {}

void SessionStore::sweep() {
    const auto t = now();
    std::erase_if(sessions_, [&](const auto& kv) {
        std::unique_lock slot_lock(kv.second->mutex, std::try_to_lock);
        return slot_lock.owns_lock() && t - kv.second->last_used > ttl_;
    });
}

nlohmann::json SessionStore::create(const std::string& old_text, const std::string& new_text, bool strip_blank,
                                    const std::string& old_name, const std::string& new_name) {
    LinePair pair = build_line_pair(old_text, new_text, strip_blank);
    if (pair.old_size() > max_session_lines || pair.new_size() > max_session_lines)
        throw ServiceError(413, "files over " + std::to_string(max_session_lines) + " lines are not supported");

    static thread_local std::mt19937_64 rng{std::random_device{}()};
    std::string id;
    {
        std::lock_guard lock(mutex_);
        char buf[40];
        std::snprintf(buf, sizeof buf, "%016llx%04llx", static_cast<unsigned long long>(rng()),
                      static_cast<unsigned long long>(++counter_ & 0xffff));
        id = buf;
    }
    Session session(id, std::move(pair), old_name, new_name);
    nlohmann::json payload = session.payload();
    std::lock_guard lock(mutex_);
    auto slot = std::make_shared<Slot>(std::move(session), now());
    sweep();
    sessions_.emplace(id, std::move(slot));
    return payload;
}

nlohmann::json SessionStore::with(const std::string& id, const std::function<nlohmann::json(Session&)>& fn) {
    std::shared_ptr<Slot> slot;
    Clock::time_point t;
    {
        std::lock_guard lock(mutex_);
        sweep();
        t = now();
        auto it = sessions_.find(id);
        if (it == sessions_.end()) throw ServiceError(404, "unknown session " + id);
        slot = it->second;
    }
    std::lock_guard slot_lock(slot->mutex);
    slot->last_used = t;
    return fn(slot->session);
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

void SessionStore::advance_clock(std::chrono::seconds by) {
    std::lock_guard lock(mutex_);
    skew_ += by;
}

}  // namespace idiff
