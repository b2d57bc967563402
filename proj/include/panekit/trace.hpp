#pragma once

#include "panekit/chord.hpp"
#include "panekit/desktop.hpp"
#include "panekit/occlusion.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace panekit {

using OrderedJson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Records

struct CreateRecord {
    Rect rect;
    Size min_size;
    Size max_size;
    Anchor anchor = Anchor::Fixed;
    std::vector<WindowComponent> components;
};
struct DestroyRecord { WindowId id; };
struct PointerRecord { Point p; };
struct ButtonRecord { bool down = false; };
struct KeyRecord { std::string combo; };
struct DisplayRecord { DisplayBounds bounds; };
struct SetModeRecord { WindowId id; VisibilityMode mode; };
struct ExposeRecord { WindowId id; };
struct ResizeRecord { WindowId id; Edge edge = Edge::Right; int dx = 0; int dy = 0; };
struct UnobscureRecord { WindowId target; WindowId protected_window; UnobscureStrategy strategy{}; };
struct BeginActionRecord { WindowId target; WindowId protected_window; };
struct EndActionRecord { WindowId target; };
struct TickRecord {};
struct SnapshotRecord {};

using RecordPayload = std::variant<CreateRecord, DestroyRecord, PointerRecord, ButtonRecord, KeyRecord,
                                   DisplayRecord, SetModeRecord, ExposeRecord, ResizeRecord, UnobscureRecord,
                                   BeginActionRecord, EndActionRecord, TickRecord, SnapshotRecord>;

struct TraceRecord {
    std::int64_t t = 0;
    RecordPayload payload;
};

std::string_view record_kind(const RecordPayload& payload) noexcept;

enum class TraceErrorKind { ParseError, ClockRegression };

/// Fatal replay error tied to a 1-based trace line.
class TraceError : public std::runtime_error {
public:
    TraceError(TraceErrorKind kind, std::size_t line, const std::string& message);

    TraceErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    TraceErrorKind kind_;
    std::size_t line_;
};

/// Parse one line. Unknown kinds, missing keys, extra keys and wrongly typed
/// values all raise TraceError(ParseError).
TraceRecord parse_record(std::string_view text, std::size_t line);

/// Inverse of parse_record, for tools that generate traces.
OrderedJson record_to_json(const TraceRecord& record);

// ---------------------------------------------------------------------------
// Snapshots

OrderedJson snapshot_json(const Desktop& desktop);
/// Canonical single-line form: fixed key order, no whitespace.
std::string serialize_snapshot(const Desktop& desktop);

// ---------------------------------------------------------------------------
// Sessions

inline constexpr DisplayBounds kDefaultDisplay{800, 600};

/// Feeds records into one desktop and turns the results into output events.
class Session {
public:
    explicit Session(DisplayBounds display = kDefaultDisplay, EngineConfig config = {});

    const Desktop& desktop() const noexcept { return desktop_; }

    /// Apply one record. Returns the output events it produced; a snapshot
    /// record also fills `snapshot`. Module errors become "error" events.
    /// Throws TraceError(ClockRegression) if the record is older than the clock.
    std::vector<OrderedJson> apply(const TraceRecord& record, std::size_t line,
                                   std::string* snapshot = nullptr);

private:
    void dispatch(const TraceRecord& record, std::size_t line, std::vector<OrderedJson>& events,
                  std::string* snapshot);
    void on_pointer(const TraceRecord& record, std::size_t line, std::vector<OrderedJson>& events);
    void on_chord(const InputEvent& event, std::size_t line, std::vector<OrderedJson>& events);

    Desktop desktop_;
};

struct ReplayResult {
    std::vector<std::string> snapshots;
    std::vector<std::size_t> snapshot_lines; // trace line of each snapshot record
    std::vector<std::string> events;
};

/// Replay a line-delimited trace. Blank lines are skipped but still counted.
ReplayResult replay(std::istream& trace, DisplayBounds display = kDefaultDisplay, EngineConfig config = {});
ReplayResult replay_string(std::string_view trace, DisplayBounds display = kDefaultDisplay);

struct VerifyReport {
    bool pass = false;
    std::string message;
};

/// Byte comparison of replayed snapshots against golden ones.
VerifyReport verify(const ReplayResult& replayed, const std::vector<std::string>& golden);

} // namespace panekit
