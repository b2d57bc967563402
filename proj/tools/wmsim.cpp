// wmsim: replay, verify and serve window-management event traces.

#include "panekit/bridge.hpp"
#include "panekit/trace.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace panekit;

namespace {

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (const std::string& line : lines) {
        out << line << '\n';
    }
}

ReplayResult replay_file(const fs::path& trace) {
    std::ifstream in(trace);
    if (!in) {
        throw std::runtime_error("cannot open " + trace.string());
    }
    return replay(in);
}

int cmd_replay(const fs::path& trace, const fs::path& out_dir) {
    const ReplayResult result = replay_file(trace);
    fs::create_directories(out_dir);
    write_lines(out_dir / "snapshots.txt", result.snapshots);
    write_lines(out_dir / "events.txt", result.events);
    std::cout << "replayed " << trace.string() << ": " << result.snapshots.size() << " snapshots, "
              << result.events.size() << " events -> " << out_dir.string() << '\n';
    return 0;
}

int cmd_verify(const fs::path& trace, const fs::path& golden_dir) {
    const ReplayResult result = replay_file(trace);
    VerifyReport report = verify(result, read_lines(golden_dir / "snapshots.txt"));
    if (report.pass && fs::exists(golden_dir / "events.txt")) {
        const auto golden_events = read_lines(golden_dir / "events.txt");
        if (golden_events != result.events) {
            std::size_t i = 0;
            while (i < golden_events.size() && i < result.events.size() && golden_events[i] == result.events[i]) {
                ++i;
            }
            report = {false, "events differ at events.txt line " + std::to_string(i + 1)};
        }
    }
    std::cout << (report.pass ? "PASS " : "FAIL ") << trace.string() << ": " << report.message << '\n';
    return report.pass ? 0 : 1;
}

BridgeServer* g_server = nullptr;

int cmd_serve(std::uint16_t port) {
    BridgeServer server;
    const std::uint16_t bound = server.listen(port);
    std::cout << "wmsim bridge listening on 127.0.0.1:" << bound << std::endl;
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server != nullptr) {
            g_server->stop();
        }
    });
    server.run();
    g_server = nullptr;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wmsim - deterministic window-management trace simulator"};
    app.require_subcommand(1);

    std::string trace;
    std::string out_dir;
    auto* replay_cmd = app.add_subcommand("replay", "Replay a trace and write snapshots.txt and events.txt");
    replay_cmd->add_option("--trace", trace, "Trace file (one JSON record per line)")->required();
    replay_cmd->add_option("--out", out_dir, "Output directory")->required();

    std::string golden_dir;
    auto* verify_cmd = app.add_subcommand("verify", "Replay a trace and compare with golden output");
    verify_cmd->add_option("--trace", trace, "Trace file")->required();
    verify_cmd->add_option("--golden", golden_dir, "Directory holding golden snapshots.txt")->required();

    std::uint16_t port = 7878;
    auto* serve_cmd = app.add_subcommand("serve", "Run the line-protocol bridge for interactive clients");
    serve_cmd->add_option("--port", port, "TCP port on 127.0.0.1 (0 picks one)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*replay_cmd) {
            return cmd_replay(trace, out_dir);
        }
        if (*verify_cmd) {
            return cmd_verify(trace, golden_dir);
        }
        if (*serve_cmd) {
            return cmd_serve(port);
        }
    } catch (const TraceError& e) {
        std::cerr << "wmsim: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wmsim: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
