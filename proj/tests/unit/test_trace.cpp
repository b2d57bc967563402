#include "panekit/trace.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace panekit;

namespace {

std::string create_line(std::int64_t t, Rect r, std::string anchor = "fixed") {
    std::ostringstream s;
    s << R"({"t":)" << t << R"(,"kind":"create","min_w":8,"min_h":28,"max_w":2000,"max_h":2000,"x":)" << r.x
      << R"(,"y":)" << r.y << R"(,"w":)" << r.w << R"(,"h":)" << r.h << R"(,"anchor":")" << anchor
      << R"(","components":[{"name":"dot","w":4,"h":4,"required":true,"priority":0}]})";
    return s.str();
}

std::string line(std::int64_t t, const std::string& kind, const std::string& rest = "") {
    return R"({"t":)" + std::to_string(t) + R"(,"kind":")" + kind + "\"" + (rest.empty() ? "" : "," + rest) + "}";
}

std::string join(std::initializer_list<std::string> lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l + "\n";
    }
    return out;
}

TraceError trace_error(const std::string& text) {
    try {
        replay_string(text);
    } catch (const TraceError& e) {
        return e;
    }
    FAIL("expected TraceError");
    return TraceError(TraceErrorKind::ParseError, 0, "");
}

} // namespace

TEST_SUITE("trace-harness") {

TEST_CASE("empty trace") {
    const auto r = replay_string("");
    CHECK(r.snapshots.empty());
    CHECK(r.events.empty());
    CHECK(replay_string("\n  \n").snapshots.empty());
}

TEST_CASE("create then snapshot") {
    const auto r = replay_string(join({create_line(0, {10, 10, 100, 100}), line(0, "snapshot")}));
    REQUIRE(r.snapshots.size() == 1);
    CHECK(r.snapshots[0] ==
          R"({"clock":0,"display":{"w":800,"h":600},"windows":[{"id":1,"rect":[10,10,100,100],"z":0,)"
          R"("state":"exposed","mode":{"kind":"normal"},"components_visible":1}],"input":{"phase":"idle"}})");
    REQUIRE(r.events.size() == 1);
    CHECK(r.events[0] == R"({"t":0,"line":1,"kind":"created","id":1})");
    CHECK(r.snapshot_lines == std::vector<std::size_t>{2});
}

TEST_CASE("timed scenario") {
    const auto r = replay_string(join({create_line(0, {0, 0, 100, 100}),
                                       line(0, "set_mode", R"("id":1,"mode":"timed","t_show":1000)"),
                                       line(0, "expose", R"("id":1)"), line(1000, "tick"), line(1000, "snapshot")}));
    REQUIRE(r.snapshots.size() == 1);
    CHECK(r.snapshots[0].find(R"("state":"invisible","mode":{"kind":"timed","t_show":1000})") != std::string::npos);
    CHECK(r.snapshots[0].find(R"("clock":1000)") != std::string::npos);
    // expose on an exposed window is a soft error
    REQUIRE(r.events.size() == 3);
    CHECK(r.events[1].find(R"("kind":"error","record":"expose","code":"AlreadyExposed")") != std::string::npos);
    CHECK(r.events[2] ==
          R"({"t":1000,"line":4,"kind":"visibility_transition","window":1,"from":"exposed","to":"invisible","deadline":1000})");
}

TEST_CASE("parse errors are fatal and carry the line") {
    auto e = trace_error(join({create_line(0, {0, 0, 50, 50}), line(1, "teleport")}));
    CHECK(e.kind() == TraceErrorKind::ParseError);
    CHECK(e.line() == 2);
    e = trace_error(join({line(0, "tick", R"("extra":1)")}));
    CHECK(e.line() == 1);
    e = trace_error(join({line(0, "expose")}));
    CHECK(e.kind() == TraceErrorKind::ParseError);
    e = trace_error("\n" + line(0, "pointer", R"("x":1.5,"y":2)"));
    CHECK(e.line() == 2);
    e = trace_error("not json\n");
    CHECK(e.kind() == TraceErrorKind::ParseError);
    e = trace_error(line(0, "set_mode", R"("id":1,"mode":"normal","t_show":5)"));
    CHECK(e.kind() == TraceErrorKind::ParseError);
    e = trace_error(line(0, "resize", R"("id":1,"edge":"middle","dx":1,"dy":1)"));
    CHECK(e.kind() == TraceErrorKind::ParseError);
}

TEST_CASE("clock regression is fatal") {
    const auto e = trace_error(join({line(10, "tick"), line(20, "tick"), line(15, "snapshot")}));
    CHECK(e.kind() == TraceErrorKind::ClockRegression);
    CHECK(e.line() == 3);
}

TEST_CASE("records at the same t apply in file order") {
    const auto r = replay_string(join({create_line(5, {0, 0, 100, 100}), create_line(5, {20, 20, 100, 100}),
                                       line(5, "snapshot"), line(5, "destroy", R"("id":2)"), line(5, "snapshot")}));
    REQUIRE(r.snapshots.size() == 2);
    CHECK(r.snapshots[0].find(R"("id":2)") != std::string::npos);
    CHECK(r.snapshots[1].find(R"("id":2)") == std::string::npos);
}

TEST_CASE("module errors become events and replay continues") {
    const auto r = replay_string(join({line(0, "destroy", R"("id":4)"),
                                       line(0, "resize", R"("id":4,"edge":"right","dx":1,"dy":0)"),
                                       line(0, "snapshot")}));
    REQUIRE(r.events.size() == 2);
    CHECK(r.events[0].find(R"("code":"NoSuchWindow")") != std::string::npos);
    CHECK(r.snapshots.size() == 1);
}

TEST_CASE("resize emits limit feedback") {
    const auto r = replay_string(join({create_line(0, {0, 0, 100, 100}),
                                       line(1, "resize", R"("id":1,"edge":"left","dx":95,"dy":0)")}));
    REQUIRE(r.events.size() == 2);
    CHECK(r.events[1] == R"({"t":1,"line":2,"kind":"limit_feedback","window":1,"limited":["min_width"]})");
}

TEST_CASE("chord keys move the window under the pointer") {
    const auto r = replay_string(join({create_line(0, {0, 0, 100, 100}), line(1, "pointer", R"("x":50,"y":50)"),
                                       line(2, "key", R"("combo":"move")"), line(3, "pointer", R"("x":70,"y":45)"),
                                       line(4, "key", R"("combo":"escape")"), line(5, "snapshot")}));
    REQUIRE(r.snapshots.size() == 1);
    CHECK(r.snapshots[0].find(R"("rect":[20,-5,100,100])") != std::string::npos);
    CHECK(r.snapshots[0].find(R"("input":{"phase":"idle"})") != std::string::npos);
}

TEST_CASE("verify") {
    const std::string trace = join({create_line(0, {0, 0, 100, 100}), line(0, "snapshot"),
                                    line(10, "resize", R"("id":1,"edge":"right","dx":10,"dy":0)"),
                                    line(10, "snapshot")});
    const auto r = replay_string(trace);
    CHECK(verify(replay_string(trace), r.snapshots).pass);

    auto altered = r.snapshots;
    altered[1].replace(altered[1].find("110"), 3, "111");
    const auto bad = verify(replay_string(trace), altered);
    CHECK_FALSE(bad.pass);
    CHECK(bad.message.find("snapshot 2 (golden line 2, trace line 4)") != std::string::npos);

    auto shorter = r.snapshots;
    shorter.pop_back();
    const auto count = verify(replay_string(trace), shorter);
    CHECK_FALSE(count.pass);
    CHECK(count.message == "snapshot count mismatch: golden has 1, replay produced 2");
}

TEST_CASE("record_to_json round trips") {
    const std::vector<std::string> lines{
        create_line(3, {1, 2, 30, 40}, "proportional"),
        line(1, "destroy", R"("id":3)"),
        line(1, "pointer", R"("x":-4,"y":9)"),
        line(1, "button", R"("action":"both_down")"),
        line(1, "key", R"("combo":"resize")"),
        line(1, "display", R"("w":640,"h":480)"),
        line(1, "set_mode", R"("id":2,"mode":"timed_icon","t_show":40)"),
        line(1, "set_mode", R"("id":2,"mode":"locked")"),
        line(1, "expose", R"("id":2)"),
        line(1, "resize", R"("id":2,"edge":"bottom_left","dx":-3,"dy":7)"),
        line(1, "unobscure", R"("target":1,"protected":2,"strategy":"move_away")"),
        line(1, "begin_action", R"("target":1,"protected":2)"),
        line(1, "end_action", R"("target":1)"),
        line(1, "tick"),
        line(1, "snapshot"),
    };
    for (const auto& l : lines) {
        CAPTURE(l);
        CHECK(record_to_json(parse_record(l, 1)).dump() == l);
    }
}

TEST_CASE("replay is deterministic") {
    std::string trace = create_line(0, {0, 0, 200, 150}) + "\n" + create_line(0, {100, 100, 200, 150}) + "\n";
    for (int i = 1; i <= 40; ++i) {
        trace += line(i * 25, "pointer", "\"x\":" + std::to_string(150 + (i * 37) % 120) + ",\"y\":" +
                                             std::to_string(90 + (i * 53) % 90)) + "\n";
        if (i % 10 == 0) {
            trace += line(i * 25, "snapshot") + "\n";
        }
    }
    const auto a = replay_string(trace);
    const auto b = replay_string(trace);
    CHECK(a.snapshots == b.snapshots);
    CHECK(a.events == b.events);
    CHECK(a.snapshots.size() == 4);
}

}
