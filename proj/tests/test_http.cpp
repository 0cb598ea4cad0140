#include "doctest.h"

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "fixtures.hpp"
#include "idiff/http_service.hpp"

using namespace idiff;
using nlohmann::json;

namespace {

struct Server {
    SessionStore store;
    HttpService service{store};
    int port = -1;
    std::thread thread;

    Server() {
        port = service.bind("127.0.0.1", 0);
        REQUIRE(port > 0);
        thread = std::thread([this] { service.run(); });
        service.wait_until_ready();
    }
    ~Server() {
        service.stop();
        thread.join();
    }
};

json post(httplib::Client& c, const std::string& path, const json& body, int expect) {
    auto r = c.Post(path, body.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->status == expect);
    return json::parse(r->body);
}

}  // namespace

TEST_CASE("HTTP session round trip") {
    Server server;
    httplib::Client c("127.0.0.1", server.port);

    auto health = c.Get("/health");
    REQUIRE(health);
    CHECK(health->status == 200);

    auto created = post(c, "/sessions",
                        {{"old", fixtures::running_old}, {"new", fixtures::running_new}, {"old_name", "Blob.java"}}, 201);
    const std::string id = created["id"];
    auto fetched = c.Get("/sessions/" + id);
    REQUIRE(fetched);
    const std::string before = fetched->body;
    CHECK(json::parse(before) == created);

    // Clicking the deleted getCount line issues (2,*).
    auto reply = post(c, "/sessions/" + id + "/feedback", {{"revision", 0}, {"old", 2}, {"new", nullptr}}, 200);
    CHECK(reply["feasible"] == true);
    CHECK(reply["action"] == json({{"old", 2}, {"new", nullptr}}));
    CHECK(reply["payload"]["revision"] == 1);

    // The old revision is now stale.
    post(c, "/sessions/" + id + "/feedback", {{"revision", 0}, {"old", 1}, {"new", 1}}, 409);

    auto undone = post(c, "/sessions/" + id + "/undo", json::object(), 200);
    CHECK(undone["changed"] == true);
    CHECK(undone["can_redo"] == true);
    auto again = c.Get("/sessions/" + id);
    REQUIRE(again);
    CHECK(again->body == before);

    auto redone = post(c, "/sessions/" + id + "/redo", json::object(), 200);
    CHECK(redone["payload"] == reply["payload"]);

    auto exported = c.Get("/sessions/" + id + "/export?format=actions");
    REQUIRE(exported);
    CHECK(exported->body == "{\"old\":2,\"new\":null}\n");
    auto unified = c.Get("/sessions/" + id + "/export?format=unified");
    REQUIRE(unified);
    CHECK(unified->body.rfind("--- Blob.java\n+++ b\n", 0) == 0);
    auto bad = c.Get("/sessions/" + id + "/export?format=zip");
    REQUIRE(bad);
    CHECK(bad->status == 400);
}

TEST_CASE("HTTP errors") {
    Server server;
    httplib::Client c("127.0.0.1", server.port);
    auto missing = c.Get("/sessions/abc123");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto malformed = c.Post("/sessions", "{not json", "application/json");
    REQUIRE(malformed);
    CHECK(malformed->status == 400);
    post(c, "/sessions", {{"old", 1}}, 400);

    std::string big;
    for (int k = 0; k < 3001; ++k) big += "line\n";
    post(c, "/sessions", {{"old", big}, {"new", "x\n"}}, 413);

    const std::string id = post(c, "/sessions", {{"old", "x\n"}, {"new", "y\n"}}, 201)["id"];
    post(c, "/sessions/" + id + "/feedback", {{"old", 1}}, 400);
    post(c, "/sessions/" + id + "/feedback", {{"revision", 0}, {"old", 5}, {"new", nullptr}}, 409);
    auto conflict = post(c, "/sessions/" + id + "/feedback", {{"revision", 0}, {"old", 1}, {"new", nullptr}}, 200);
    CHECK(conflict["feasible"] == false);
    CHECK(conflict["conflict"].is_string());
    CHECK(conflict["payload"]["revision"] == 0);
    auto nothing = post(c, "/sessions/" + id + "/undo", json::object(), 200);
    CHECK(nothing["changed"] == false);
}

TEST_CASE("binding a taken port fails") {
    Server server;
    SessionStore store;
    HttpService second(store);
    CHECK(second.bind("127.0.0.1", server.port) == -1);
}
