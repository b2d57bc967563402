#pragma once

#include "panekit/geom.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>

namespace panekit {

struct WindowId {
    std::uint32_t value = 0;

    friend auto operator<=>(const WindowId&, const WindowId&) = default;
};

/// A border part. Corners act on both axes.
enum class Edge { Left, Right, Top, Bottom, TopLeft, TopRight, BottomLeft, BottomRight };

std::string_view to_string(Edge edge) noexcept;
Edge edge_from_string(std::string_view name);

enum class ChordPhaseKind { Idle, Moving, Resizing };

struct ChordPhase {
    ChordPhaseKind kind = ChordPhaseKind::Idle;
    WindowId window{};
    Edge part = Edge::BottomRight; // meaningful for Resizing only

    friend bool operator==(const ChordPhase&, const ChordPhase&) = default;

    static ChordPhase idle() { return {}; }
    static ChordPhase moving(WindowId id) { return {ChordPhaseKind::Moving, id, Edge::BottomRight}; }
    static ChordPhase resizing(WindowId id, Edge part) { return {ChordPhaseKind::Resizing, id, part}; }
};

/// Names of the key combinations in the trace vocabulary.
struct ChordBindings {
    std::string move_combo = "move";
    std::string resize_combo = "resize";
    std::string escape_combo = "escape";
};

struct ChordState {
    ChordPhase phase;
    ChordBindings bindings;
};

struct LassoConfig {
    std::size_t n_max = 32;
    std::int64_t t_lasso = 500;
    int proximity_d = 24;

    bool valid() const noexcept { return n_max >= 4 && t_lasso > 0 && proximity_d > 0; }
};

struct PointerSample {
    std::int64_t t = 0;
    Point p;

    friend bool operator==(const PointerSample&, const PointerSample&) = default;
};

/// Bounded, time-windowed history of pointer locations.
class PointerSampleQueue {
public:
    explicit PointerSampleQueue(LassoConfig config = {});

    const LassoConfig& config() const noexcept { return config_; }
    const std::deque<PointerSample>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    /// Time of the most recent push, which survives clear().
    std::optional<std::int64_t> last_time() const noexcept { return last_t_; }

    /// Appends and trims to the n_max newest samples that lie within
    /// t_lasso of the newest one. Throws NonMonotonicTime.
    void push(PointerSample sample);
    void clear() noexcept { samples_.clear(); }

private:
    LassoConfig config_;
    std::deque<PointerSample> samples_;
    std::optional<std::int64_t> last_t_;
};

} // namespace panekit
