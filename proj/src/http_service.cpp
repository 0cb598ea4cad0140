#include "idiff/http_service.hpp"

#include "httplib.h"

namespace idiff {

namespace {

using nlohmann::json;

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) {
    try {
        auto j = json::parse(req.body);
        if (!j.is_object()) throw ServiceError(400, "request body must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw ServiceError(400, std::string("malformed JSON: ") + e.what());
    }
}

LineNo line_field(const json& body, const char* name) {
    if (!body.contains(name) || body.at(name).is_null()) return 0;
    const auto& v = body.at(name);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > max_session_lines)
        throw ServiceError(400, std::string("\"") + name + "\" must be a line number or null");
    return static_cast<LineNo>(v.get<long long>());
}

template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const ServiceError& e) {
            send(res, e.status(), {{"error", e.what()}});
        } catch (const json::exception& e) {
            send(res, 400, {{"error", e.what()}});
        } catch (const std::exception& e) {
            send(res, 500, {{"error", e.what()}});
        }
    };
}

}  // namespace

HttpService::HttpService(SessionStore& store, std::filesystem::path static_dir)
    : store_(store), static_dir_(std::move(static_dir)), server_(std::make_unique<httplib::Server>()) {
    // httplib's default adds SO_REUSEPORT, which would let a second server share a busy port.
    server_->set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
    });
    routes();
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

void HttpService::run() { server_->listen_after_bind(); }

void HttpService::wait_until_ready() const { server_->wait_until_ready(); }

void HttpService::stop() {
    if (server_) server_->stop();
}

void HttpService::routes() {
    auto& s = *server_;
    if (!static_dir_.empty()) s.set_mount_point("/", static_dir_.string());

    s.Get("/health", guarded([](const httplib::Request&, httplib::Response& res) { send(res, 200, {{"status", "ok"}}); }));

    s.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        if (!body.contains("old") || !body.contains("new") || !body["old"].is_string() || !body["new"].is_string())
            throw ServiceError(400, "\"old\" and \"new\" must be strings");
        send(res, 201,
             store_.create(body["old"].get<std::string>(), body["new"].get<std::string>(), body.value("strip_blank", false),
                           body.value("old_name", std::string("a")), body.value("new_name", std::string("b"))));
    }));

    s.Get(R"(/sessions/([0-9a-f]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        send(res, 200, store_.with(req.matches[1], [](Session& session) { return session.payload(); }));
    }));

    s.Post(R"(/sessions/([0-9a-f]+)/feedback)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        if (!body.contains("revision") || !body["revision"].is_number_unsigned())
            throw ServiceError(400, "\"revision\" is required");
        const auto revision = body["revision"].get<std::uint64_t>();
        const LineNo old_line = line_field(body, "old");
        const LineNo new_line = line_field(body, "new");
        std::string kind = body.value("kind", std::string());
        if (kind.empty()) kind = old_line && new_line ? "ctx" : old_line ? "del" : "add";
        send(res, 200, store_.with(req.matches[1], [&](Session& session) {
            const auto outcome = session.feedback(revision, kind, old_line, new_line);
            json reply = {{"payload", session.payload()},
                          {"feasible", outcome.feasible},
                          {"action", json::parse(to_json(outcome.action))},
                          {"can_redo", session.can_redo()}};
            reply["conflict"] = outcome.feasible ? json(nullptr) : json(outcome.conflict);
            return reply;
        }));
    }));

    auto history = [this](bool forward) {
        return guarded([this, forward](const httplib::Request& req, httplib::Response& res) {
            send(res, 200, store_.with(req.matches[1], [&](Session& session) {
                const bool changed = forward ? session.redo() : session.undo();
                return json{{"payload", session.payload()}, {"changed", changed}, {"can_redo", session.can_redo()}};
            }));
        });
    };
    s.Post(R"(/sessions/([0-9a-f]+)/undo)", history(false));
    s.Post(R"(/sessions/([0-9a-f]+)/redo)", history(true));

    s.Get(R"(/sessions/([0-9a-f]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const std::string format = req.has_param("format") ? req.get_param_value("format") : "unified";
        std::string text;
        store_.with(req.matches[1], [&](Session& session) {
            text = session.export_as(format);
            return json();
        });
        res.status = 200;
        res.set_content(text, format == "actions" ? "application/x-ndjson" : "text/x-diff");
    }));
}

}  // namespace idiff
