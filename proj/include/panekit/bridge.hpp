#pragma once

#include "panekit/trace.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace panekit {

/// One live engine session driven by newline-delimited trace records.
/// Every inbound record yields its output events (one line each) followed
/// by a {"snapshot": ...} line. Malformed records become "error" events and
/// leave the engine untouched.
class BridgeSession {
public:
    explicit BridgeSession(DisplayBounds display = kDefaultDisplay);

    std::vector<std::string> handle_line(std::string_view line);

private:
    Session session_;
    std::size_t messages_ = 0;
};

/// Local TCP front end for a BridgeSession. Clients are read concurrently;
/// records are applied one at a time under a single lock, so no two clients
/// interleave within a record.
class BridgeServer {
public:
    explicit BridgeServer(DisplayBounds display = kDefaultDisplay);
    ~BridgeServer();

    BridgeServer(const BridgeServer&) = delete;
    BridgeServer& operator=(const BridgeServer&) = delete;

    /// Bind 127.0.0.1:`port` (0 picks a free port) and return the bound port.
    std::uint16_t listen(std::uint16_t port);

    /// Accept clients until stop(). Blocks.
    void run();
    void stop();

private:
    void serve_client(int fd);

    BridgeSession session_;
    std::mutex session_mutex_;
    int listen_fd_ = -1;
    std::atomic<bool> stopping_{false};
    std::mutex clients_mutex_;
    std::vector<std::thread> clients_;
    std::vector<int> client_fds_;
};

} // namespace panekit
