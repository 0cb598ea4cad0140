#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "idiff/session.hpp"

namespace httplib {
class Server;
}

namespace idiff {

/// HTTP front end for a SessionStore.
///
///   POST /sessions                      {"old", "new", "strip_blank"?, "old_name"?, "new_name"?}
///   GET  /sessions/{id}                 current payload
///   POST /sessions/{id}/feedback        {"revision", "kind"?, "old", "new"}
///   POST /sessions/{id}/undo | /redo
///   GET  /sessions/{id}/export?format=unified|actions
///   GET  /health
///
/// Mutating endpoints answer {"payload": ..., plus operation fields}.
class HttpService {
public:
    explicit HttpService(SessionStore& store, std::filesystem::path static_dir = {});
    ~HttpService();

    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    /// Binds host:port (port 0 picks a free one). Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after a successful bind.
    void run();
    /// Blocks until run() is accepting connections.
    void wait_until_ready() const;
    void stop();

private:
    void routes();

    SessionStore& store_;
    std::filesystem::path static_dir_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace idiff
