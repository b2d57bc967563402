#include "panekit/trace.hpp"

#include "panekit/chord.hpp"
#include "panekit/error.hpp"
#include "panekit/lasso.hpp"
#include "panekit/reflow.hpp"
#include "panekit/resize_limits.hpp"
#include "panekit/visibility.hpp"

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <sstream>

namespace panekit {

using nlohmann::json;

TraceError::TraceError(TraceErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error((kind == TraceErrorKind::ParseError ? "parse error" : "clock regression") +
                         std::string(" at line ") + std::to_string(line) + ": " + message),
      kind_(kind), line_(line) {}

std::string_view record_kind(const RecordPayload& payload) noexcept {
    struct Visitor {
        std::string_view operator()(const CreateRecord&) const { return "create"; }
        std::string_view operator()(const DestroyRecord&) const { return "destroy"; }
        std::string_view operator()(const PointerRecord&) const { return "pointer"; }
        std::string_view operator()(const ButtonRecord&) const { return "button"; }
        std::string_view operator()(const KeyRecord&) const { return "key"; }
        std::string_view operator()(const DisplayRecord&) const { return "display"; }
        std::string_view operator()(const SetModeRecord&) const { return "set_mode"; }
        std::string_view operator()(const ExposeRecord&) const { return "expose"; }
        std::string_view operator()(const ResizeRecord&) const { return "resize"; }
        std::string_view operator()(const UnobscureRecord&) const { return "unobscure"; }
        std::string_view operator()(const BeginActionRecord&) const { return "begin_action"; }
        std::string_view operator()(const EndActionRecord&) const { return "end_action"; }
        std::string_view operator()(const TickRecord&) const { return "tick"; }
        std::string_view operator()(const SnapshotRecord&) const { return "snapshot"; }
    };
    return std::visit(Visitor{}, payload);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Fields {
public:
    Fields(const json& obj, std::size_t line) : obj_(obj), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw TraceError(TraceErrorKind::ParseError, line_, message);
    }

    /// Every key present must be in `required` or `optional`, and every
    /// required key must be present.
    void expect_keys(std::initializer_list<std::string_view> required,
                     std::initializer_list<std::string_view> optional = {}) const {
        for (const auto& [key, value] : obj_.items()) {
            const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                               std::find(optional.begin(), optional.end(), key) != optional.end();
            if (!known) {
                fail("unexpected key '" + key + "'");
            }
        }
        for (std::string_view key : required) {
            if (!obj_.contains(key)) {
                fail("missing key '" + std::string(key) + "'");
            }
        }
    }

    bool has(std::string_view key) const { return obj_.contains(key); }

    std::int64_t integer(std::string_view key) const {
        const json& v = obj_.at(key);
        if (!v.is_number_integer()) {
            fail("'" + std::string(key) + "' must be an integer");
        }
        return v.get<std::int64_t>();
    }

    int coord(std::string_view key) const {
        const std::int64_t v = integer(key);
        if (v < -1'000'000 || v > 1'000'000) {
            fail("'" + std::string(key) + "' out of range");
        }
        return static_cast<int>(v);
    }

    WindowId id(std::string_view key) const {
        const std::int64_t v = integer(key);
        if (v <= 0 || v > 0xffffffffLL) {
            fail("'" + std::string(key) + "' must be a positive window id");
        }
        return WindowId{static_cast<std::uint32_t>(v)};
    }

    std::string string(std::string_view key) const {
        const json& v = obj_.at(key);
        if (!v.is_string()) {
            fail("'" + std::string(key) + "' must be a string");
        }
        return v.get<std::string>();
    }

    bool boolean(std::string_view key) const {
        const json& v = obj_.at(key);
        if (!v.is_boolean()) {
            fail("'" + std::string(key) + "' must be a boolean");
        }
        return v.get<bool>();
    }

    const json& raw(std::string_view key) const { return obj_.at(key); }
    std::size_t line() const { return line_; }

private:
    const json& obj_;
    std::size_t line_;
};

VisibilityMode parse_mode(const Fields& f) {
    const std::string name = f.string("mode");
    if (name == "normal" || name == "locked") {
        if (f.has("t_show")) {
            f.fail("t_show is only valid for timed modes");
        }
        return name == "normal" ? VisibilityMode::normal() : VisibilityMode::locked();
    }
    if (name == "timed" || name == "timed_icon") {
        if (!f.has("t_show")) {
            f.fail("timed modes need t_show");
        }
        const std::int64_t t_show = f.integer("t_show");
        return name == "timed" ? VisibilityMode::timed(t_show) : VisibilityMode::timed_icon(t_show);
    }
    f.fail("unknown mode '" + name + "'");
}

template <typename Fn>
auto translate(const Fields& f, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        f.fail(e.what());
    }
}

RecordPayload parse_payload(const std::string& kind, const Fields& f) {
    if (kind == "create") {
        f.expect_keys({"t", "kind", "min_w", "min_h", "max_w", "max_h", "x", "y", "w", "h", "anchor", "components"});
        CreateRecord r;
        r.min_size = {f.coord("min_w"), f.coord("min_h")};
        r.max_size = {f.coord("max_w"), f.coord("max_h")};
        r.rect = {f.coord("x"), f.coord("y"), f.coord("w"), f.coord("h")};
        const std::string anchor = f.string("anchor");
        if (anchor == "fixed") {
            r.anchor = Anchor::Fixed;
        } else if (anchor == "proportional") {
            r.anchor = Anchor::Proportional;
        } else {
            f.fail("unknown anchor '" + anchor + "'");
        }
        const json& comps = f.raw("components");
        if (!comps.is_array()) {
            f.fail("'components' must be an array");
        }
        for (const json& c : comps) {
            if (!c.is_object()) {
                f.fail("component must be an object");
            }
            const Fields cf(c, f.line());
            cf.expect_keys({"name", "w", "h", "required", "priority"});
            r.components.push_back(
                {cf.string("name"), cf.coord("w"), cf.coord("h"), cf.boolean("required"), cf.coord("priority")});
        }
        return r;
    }
    if (kind == "destroy") {
        f.expect_keys({"t", "kind", "id"});
        return DestroyRecord{f.id("id")};
    }
    if (kind == "pointer") {
        f.expect_keys({"t", "kind", "x", "y"});
        return PointerRecord{{f.coord("x"), f.coord("y")}};
    }
    if (kind == "button") {
        f.expect_keys({"t", "kind", "action"});
        const std::string action = f.string("action");
        if (action != "both_down" && action != "both_up") {
            f.fail("button action must be both_down or both_up");
        }
        return ButtonRecord{action == "both_down"};
    }
    if (kind == "key") {
        f.expect_keys({"t", "kind", "combo"});
        return KeyRecord{f.string("combo")};
    }
    if (kind == "display") {
        f.expect_keys({"t", "kind", "w", "h"});
        return DisplayRecord{{f.coord("w"), f.coord("h")}};
    }
    if (kind == "set_mode") {
        f.expect_keys({"t", "kind", "id", "mode"}, {"t_show"});
        return SetModeRecord{f.id("id"), parse_mode(f)};
    }
    if (kind == "expose") {
        f.expect_keys({"t", "kind", "id"});
        return ExposeRecord{f.id("id")};
    }
    if (kind == "resize") {
        f.expect_keys({"t", "kind", "id", "edge", "dx", "dy"});
        const std::string edge = f.string("edge");
        return ResizeRecord{f.id("id"), translate(f, [&] { return edge_from_string(edge); }), f.coord("dx"),
                            f.coord("dy")};
    }
    if (kind == "unobscure") {
        f.expect_keys({"t", "kind", "target", "protected", "strategy"});
        const std::string strategy = f.string("strategy");
        return UnobscureRecord{f.id("target"), f.id("protected"),
                               translate(f, [&] { return strategy_from_string(strategy); })};
    }
    if (kind == "begin_action") {
        f.expect_keys({"t", "kind", "target", "protected"});
        return BeginActionRecord{f.id("target"), f.id("protected")};
    }
    if (kind == "end_action") {
        f.expect_keys({"t", "kind", "target"});
        return EndActionRecord{f.id("target")};
    }
    if (kind == "tick") {
        f.expect_keys({"t", "kind"});
        return TickRecord{};
    }
    if (kind == "snapshot") {
        f.expect_keys({"t", "kind"});
        return SnapshotRecord{};
    }
    f.fail("unknown record kind '" + kind + "'");
}

OrderedJson rect_json(const Rect& r) { return OrderedJson::array({r.x, r.y, r.w, r.h}); }

OrderedJson display_json(const DisplayBounds& d) {
    OrderedJson j;
    j["w"] = d.w;
    j["h"] = d.h;
    return j;
}

OrderedJson mode_json(const VisibilityMode& m) {
    OrderedJson j;
    j["kind"] = to_string(m.kind);
    if (m.timed_class()) {
        j["t_show"] = m.t_show;
    }
    return j;
}

OrderedJson phase_json(const ChordPhase& phase) {
    OrderedJson j;
    switch (phase.kind) {
    case ChordPhaseKind::Idle:
        j["phase"] = "idle";
        break;
    case ChordPhaseKind::Moving:
        j["phase"] = "moving";
        j["window"] = phase.window.value;
        break;
    case ChordPhaseKind::Resizing:
        j["phase"] = "resizing";
        j["window"] = phase.window.value;
        j["part"] = to_string(phase.part);
        break;
    }
    return j;
}

} // namespace

TraceRecord parse_record(std::string_view text, std::size_t line) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        throw TraceError(TraceErrorKind::ParseError, line, e.what());
    }
    if (!obj.is_object()) {
        throw TraceError(TraceErrorKind::ParseError, line, "record must be an object");
    }
    const Fields f(obj, line);
    if (!obj.contains("t") || !obj.contains("kind")) {
        f.fail("record needs 't' and 'kind'");
    }
    TraceRecord record;
    record.t = f.integer("t");
    record.payload = parse_payload(f.string("kind"), f);
    return record;
}

OrderedJson record_to_json(const TraceRecord& record) {
    OrderedJson j;
    j["t"] = record.t;
    j["kind"] = record_kind(record.payload);
    struct Visitor {
        OrderedJson& j;
        void operator()(const CreateRecord& r) const {
            j["min_w"] = r.min_size.w;
            j["min_h"] = r.min_size.h;
            j["max_w"] = r.max_size.w;
            j["max_h"] = r.max_size.h;
            j["x"] = r.rect.x;
            j["y"] = r.rect.y;
            j["w"] = r.rect.w;
            j["h"] = r.rect.h;
            j["anchor"] = to_string(r.anchor);
            j["components"] = OrderedJson::array();
            for (const auto& c : r.components) {
                OrderedJson cj;
                cj["name"] = c.name;
                cj["w"] = c.w;
                cj["h"] = c.h;
                cj["required"] = c.required;
                cj["priority"] = c.priority;
                j["components"].push_back(cj);
            }
        }
        void operator()(const DestroyRecord& r) const { j["id"] = r.id.value; }
        void operator()(const PointerRecord& r) const {
            j["x"] = r.p.x;
            j["y"] = r.p.y;
        }
        void operator()(const ButtonRecord& r) const { j["action"] = r.down ? "both_down" : "both_up"; }
        void operator()(const KeyRecord& r) const { j["combo"] = r.combo; }
        void operator()(const DisplayRecord& r) const {
            j["w"] = r.bounds.w;
            j["h"] = r.bounds.h;
        }
        void operator()(const SetModeRecord& r) const {
            j["id"] = r.id.value;
            j["mode"] = to_string(r.mode.kind);
            if (r.mode.timed_class()) {
                j["t_show"] = r.mode.t_show;
            }
        }
        void operator()(const ExposeRecord& r) const { j["id"] = r.id.value; }
        void operator()(const ResizeRecord& r) const {
            j["id"] = r.id.value;
            j["edge"] = to_string(r.edge);
            j["dx"] = r.dx;
            j["dy"] = r.dy;
        }
        void operator()(const UnobscureRecord& r) const {
            j["target"] = r.target.value;
            j["protected"] = r.protected_window.value;
            j["strategy"] = to_string(r.strategy);
        }
        void operator()(const BeginActionRecord& r) const {
            j["target"] = r.target.value;
            j["protected"] = r.protected_window.value;
        }
        void operator()(const EndActionRecord& r) const { j["target"] = r.target.value; }
        void operator()(const TickRecord&) const {}
        void operator()(const SnapshotRecord&) const {}
    };
    std::visit(Visitor{j}, record.payload);
    return j;
}

// ---------------------------------------------------------------------------
// Snapshots

OrderedJson snapshot_json(const Desktop& desktop) {
    OrderedJson j;
    j["clock"] = desktop.clock();
    j["display"] = display_json(desktop.display());
    j["windows"] = OrderedJson::array();
    const Chrome& chrome = desktop.config().chrome;
    for (const auto& [id, w] : desktop.windows()) {
        OrderedJson wj;
        wj["id"] = id.value;
        wj["rect"] = rect_json(w.rect);
        wj["z"] = w.z;
        wj["state"] = to_string(w.state);
        wj["mode"] = mode_json(w.mode);
        wj["components_visible"] = components_visible(w.components, w.home_rect().size(), chrome);
        j["windows"].push_back(std::move(wj));
    }
    j["input"] = phase_json(desktop.input().phase);
    return j;
}

std::string serialize_snapshot(const Desktop& desktop) { return snapshot_json(desktop).dump(); }

// ---------------------------------------------------------------------------
// Session

namespace {

OrderedJson event(std::int64_t t, std::size_t line, std::string_view kind) {
    OrderedJson j;
    j["t"] = t;
    j["line"] = line;
    j["kind"] = kind;
    return j;
}

OrderedJson feedback_event(const LimitFeedback& fb, std::size_t line) {
    OrderedJson j = event(fb.at_clock, line, "limit_feedback");
    j["window"] = fb.window.value;
    j["limited"] = OrderedJson::array();
    for (Limit l : fb.limited) {
        j["limited"].push_back(to_string(l));
    }
    return j;
}

} // namespace

Session::Session(DisplayBounds display, EngineConfig config) : desktop_(display, std::move(config)) {}

std::vector<OrderedJson> Session::apply(const TraceRecord& record, std::size_t line, std::string* snapshot) {
    if (record.t < desktop_.clock()) {
        throw TraceError(TraceErrorKind::ClockRegression, line,
                         "t=" + std::to_string(record.t) + " is before clock " + std::to_string(desktop_.clock()));
    }
    std::vector<OrderedJson> events;
    for (const Transition& tr : tick(desktop_, record.t)) {
        OrderedJson j = event(record.t, line, "visibility_transition");
        j["window"] = tr.window.value;
        j["from"] = to_string(tr.from);
        j["to"] = to_string(tr.to);
        j["deadline"] = tr.deadline;
        events.push_back(std::move(j));
    }
    try {
        dispatch(record, line, events, snapshot);
    } catch (const Error& e) {
        OrderedJson j = event(record.t, line, "error");
        j["record"] = record_kind(record.payload);
        j["code"] = to_string(e.code());
        j["message"] = e.what();
        events.push_back(std::move(j));
    }
    return events;
}

void Session::on_chord(const InputEvent& input, std::size_t line, std::vector<OrderedJson>& events) {
    for (const StateChange& change : handle_chord_input(desktop_, input)) {
        if (const auto* pc = std::get_if<PhaseChanged>(&change)) {
            OrderedJson j = event(desktop_.clock(), line, "input_phase");
            j["from"] = phase_json(pc->from);
            j["to"] = phase_json(pc->to);
            events.push_back(std::move(j));
            if (pc->to.kind != ChordPhaseKind::Idle) {
                desktop_.lasso().clear();
            }
        } else if (const auto* rs = std::get_if<Resized>(&change); rs && rs->result.feedback) {
            events.push_back(feedback_event(*rs->result.feedback, line));
        }
    }
}

void Session::on_pointer(const TraceRecord& record, std::size_t line, std::vector<OrderedJson>& events) {
    const Point p = std::get<PointerRecord>(record.payload).p;
    const Point last = desktop_.pointer();
    desktop_.set_pointer(p);
    ChordPhase& phase = desktop_.input().phase;
    if (phase.kind != ChordPhaseKind::Idle) {
        on_chord(InputEvent::move(p.x - last.x, p.y - last.y), line, events);
        return;
    }
    const auto selection = push_sample(desktop_, record.t, p);
    if (!selection) {
        return;
    }
    OrderedJson j = event(record.t, line, "border_selected");
    j["window"] = selection->window.value;
    j["part"] = to_string(selection->part);
    j["span_start"] = selection->span_start;
    events.push_back(std::move(j));

    // A lasso arms resize mode on the selected part.
    const ChordPhase next = ChordPhase::resizing(selection->window, selection->part);
    OrderedJson pj = event(record.t, line, "input_phase");
    pj["from"] = phase_json(phase);
    pj["to"] = phase_json(next);
    events.push_back(std::move(pj));
    phase = next;
}

void Session::dispatch(const TraceRecord& record, std::size_t line, std::vector<OrderedJson>& events,
                       std::string* snapshot) {
    const std::int64_t t = record.t;
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, CreateRecord>) {
                const WindowId id = desktop_.create_window(r.rect, r.min_size, r.max_size, r.components, r.anchor);
                OrderedJson j = event(t, line, "created");
                j["id"] = id.value;
                events.push_back(std::move(j));
            } else if constexpr (std::is_same_v<R, DestroyRecord>) {
                desktop_.destroy(r.id);
            } else if constexpr (std::is_same_v<R, PointerRecord>) {
                on_pointer(record, line, events);
            } else if constexpr (std::is_same_v<R, ButtonRecord>) {
                on_chord(r.down ? InputEvent::both_down(desktop_.pointer()) : InputEvent::both_up(), line, events);
            } else if constexpr (std::is_same_v<R, KeyRecord>) {
                if (const auto input = key_event(desktop_.input().bindings, r.combo, desktop_.pointer())) {
                    on_chord(*input, line, events);
                }
            } else if constexpr (std::is_same_v<R, DisplayRecord>) {
                const ReflowReport report = reflow(desktop_, r.bounds);
                OrderedJson j = event(t, line, "reflow");
                j["old_display"] = display_json(report.old_display);
                j["new_display"] = display_json(report.new_display);
                j["windows"] = OrderedJson::array();
                for (const ReflowEntry& e : report.entries) {
                    OrderedJson ej;
                    ej["id"] = e.window.value;
                    ej["old_rect"] = rect_json(e.old_rect);
                    ej["new_rect"] = rect_json(e.new_rect);
                    ej["shrunk_to_min"] = e.shrunk_to_min;
                    ej["moved_into_area"] = e.moved_into_area;
                    ej["components_visible"] = e.components_visible;
                    j["windows"].push_back(std::move(ej));
                }
                events.push_back(std::move(j));
            } else if constexpr (std::is_same_v<R, SetModeRecord>) {
                set_mode(desktop_, r.id, r.mode);
            } else if constexpr (std::is_same_v<R, ExposeRecord>) {
                expose(desktop_, r.id);
            } else if constexpr (std::is_same_v<R, ResizeRecord>) {
                const ResizeResult result = resize_drag(desktop_, r.id, r.edge, r.dx, r.dy);
                if (result.feedback) {
                    events.push_back(feedback_event(*result.feedback, line));
                }
            } else if constexpr (std::is_same_v<R, UnobscureRecord> || std::is_same_v<R, BeginActionRecord>) {
                UnobscureStrategy strategy = UnobscureStrategy::Disappear;
                if constexpr (std::is_same_v<R, UnobscureRecord>) {
                    strategy = r.strategy;
                }
                const UnobscurePlan plan = plan_unobscure(desktop_, r.target, r.protected_window, strategy);
                apply_plan(desktop_, plan);
                desktop_.revalidate_input();
                OrderedJson j = event(t, line, "plan");
                j["target"] = plan.target.value;
                j["protected"] = plan.protected_window.value;
                j["strategy"] = to_string(plan.strategy);
                j["action"] = to_string(plan.action);
                j["rect"] = rect_json(plan.rect);
                j["residual_overlap"] = plan.residual_overlap;
                events.push_back(std::move(j));
            } else if constexpr (std::is_same_v<R, EndActionRecord>) {
                end_action(desktop_, r.target);
            } else if constexpr (std::is_same_v<R, TickRecord>) {
                // the clock already advanced
            } else if constexpr (std::is_same_v<R, SnapshotRecord>) {
                if (snapshot != nullptr) {
                    *snapshot = serialize_snapshot(desktop_);
                }
            }
        },
        record.payload);
}

// ---------------------------------------------------------------------------
// Replay and verify

namespace {

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

} // namespace

ReplayResult replay(std::istream& trace, DisplayBounds display, EngineConfig config) {
    Session session(display, std::move(config));
    ReplayResult result;
    std::string text;
    std::size_t line = 0;
    while (std::getline(trace, text)) {
        ++line;
        if (blank(text)) {
            continue;
        }
        const TraceRecord record = parse_record(text, line);
        std::string snapshot;
        const bool wants_snapshot = std::holds_alternative<SnapshotRecord>(record.payload);
        for (const OrderedJson& e : session.apply(record, line, wants_snapshot ? &snapshot : nullptr)) {
            result.events.push_back(e.dump());
        }
        if (wants_snapshot) {
            result.snapshots.push_back(std::move(snapshot));
            result.snapshot_lines.push_back(line);
        }
        if (const auto broken = session.desktop().check_invariants()) {
            throw std::logic_error("invariant violated after line " + std::to_string(line) + ": " + *broken);
        }
    }
    return result;
}

ReplayResult replay_string(std::string_view trace, DisplayBounds display) {
    std::istringstream in{std::string(trace)};
    return replay(in, display);
}

VerifyReport verify(const ReplayResult& replayed, const std::vector<std::string>& golden) {
    const std::size_t common = std::min(replayed.snapshots.size(), golden.size());
    for (std::size_t i = 0; i < common; ++i) {
        const std::string& got = replayed.snapshots[i];
        const std::string& want = golden[i];
        if (got == want) {
            continue;
        }
        const auto mismatch = std::mismatch(got.begin(), got.end(), want.begin(), want.end());
        std::ostringstream msg;
        msg << "snapshot " << (i + 1) << " (golden line " << (i + 1) << ", trace line "
            << replayed.snapshot_lines[i] << ") differs at byte " << (mismatch.first - got.begin());
        return {false, msg.str()};
    }
    if (replayed.snapshots.size() != golden.size()) {
        return {false, "snapshot count mismatch: golden has " + std::to_string(golden.size()) + ", replay produced " +
                           std::to_string(replayed.snapshots.size())};
    }
    return {true, "ok: " + std::to_string(common) + " snapshots match"};
}

} // namespace panekit
