#include "panekit/bridge.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace panekit {

BridgeSession::BridgeSession(DisplayBounds display) : session_(display) {}

std::vector<std::string> BridgeSession::handle_line(std::string_view line) {
    const std::size_t index = ++messages_;
    std::vector<std::string> out;
    auto error_line = [&](std::string_view code, const std::string& message) {
        OrderedJson j;
        j["t"] = session_.desktop().clock();
        j["line"] = index;
        j["kind"] = "error";
        j["record"] = nullptr;
        j["code"] = code;
        j["message"] = message;
        out.push_back(j.dump());
    };
    try {
        const TraceRecord record = parse_record(line, index);
        for (const OrderedJson& e : session_.apply(record, index)) {
            out.push_back(e.dump());
        }
    } catch (const TraceError& e) {
        error_line(e.kind() == TraceErrorKind::ParseError ? "ParseError" : "ClockRegression", e.what());
    }
    OrderedJson snap;
    snap["snapshot"] = snapshot_json(session_.desktop());
    out.push_back(snap.dump());
    return out;
}

BridgeServer::BridgeServer(DisplayBounds display) : session_(display) {}

BridgeServer::~BridgeServer() {
    stop();
}

std::uint16_t BridgeServer::listen(std::uint16_t port) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) {
        throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
    }
    const int yes = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
        ::listen(listen_fd_, 16) != 0) {
        const std::string reason = std::strerror(errno);
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw std::runtime_error("bind/listen: " + reason);
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    return ntohs(addr.sin_port);
}

void BridgeServer::run() {
    while (!stopping_) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            if (stopping_ || errno == EBADF || errno == EINVAL) {
                break;
            }
            continue;
        }
        std::lock_guard lock(clients_mutex_);
        client_fds_.push_back(fd);
        clients_.emplace_back([this, fd] { serve_client(fd); });
    }
}

void BridgeServer::stop() {
    if (stopping_.exchange(true)) {
        return;
    }
    if (listen_fd_ >= 0) {
        ::shutdown(listen_fd_, SHUT_RDWR);
        ::close(listen_fd_);
        listen_fd_ = -1;
    }
    std::vector<std::thread> threads;
    {
        std::lock_guard lock(clients_mutex_);
        for (int fd : client_fds_) {
            ::shutdown(fd, SHUT_RDWR);
        }
        threads.swap(clients_);
    }
    for (auto& t : threads) {
        if (t.joinable()) {
            t.join();
        }
    }
}

namespace {

bool write_all(int fd, const std::string& data) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) {
            return false;
        }
        sent += static_cast<std::size_t>(n);
    }
    return true;
}

} // namespace

void BridgeServer::serve_client(int fd) {
    std::string buffer;
    char chunk[4096];
    bool open = true;
    while (open) {
        const ssize_t n = ::recv(fd, chunk, sizeof chunk, 0);
        if (n <= 0) {
            break;
        }
        buffer.append(chunk, static_cast<std::size_t>(n));
        std::size_t pos;
        while (open && (pos = buffer.find('\n')) != std::string::npos) {
            std::string line = buffer.substr(0, pos);
            buffer.erase(0, pos + 1);
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty()) {
                continue;
            }
            std::string reply;
            {
                std::lock_guard lock(session_mutex_);
                for (const std::string& out : session_.handle_line(line)) {
                    reply += out;
                    reply += '\n';
                }
            }
            open = write_all(fd, reply);
        }
    }
    ::close(fd);
    std::lock_guard lock(clients_mutex_);
    client_fds_.erase(std::remove(client_fds_.begin(), client_fds_.end(), fd), client_fds_.end());
}

} // namespace panekit
