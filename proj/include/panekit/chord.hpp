#pragma once

#include "panekit/desktop.hpp"
#include "panekit/resize_limits.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace panekit {

enum class InputKind { BothButtonsDown, BothButtonsUp, KeyMove, KeyResize, PointerMove, Escape };

struct InputEvent {
    InputKind kind = InputKind::PointerMove;
    Point p;    // pointer location for button and key events
    int dx = 0; // PointerMove only
    int dy = 0;

    static InputEvent both_down(Point p) { return {InputKind::BothButtonsDown, p, 0, 0}; }
    static InputEvent both_up() { return {InputKind::BothButtonsUp, {}, 0, 0}; }
    static InputEvent key_move(Point p) { return {InputKind::KeyMove, p, 0, 0}; }
    static InputEvent key_resize(Point p) { return {InputKind::KeyResize, p, 0, 0}; }
    static InputEvent move(int dx, int dy) { return {InputKind::PointerMove, {}, dx, dy}; }
    static InputEvent escape() { return {InputKind::Escape, {}, 0, 0}; }
};

/// Map a key combination name through the bindings. Unbound names give nullopt.
std::optional<InputEvent> key_event(const ChordBindings& bindings, std::string_view combo, Point pointer);

struct PhaseChanged {
    ChordPhase from;
    ChordPhase to;
};
struct Raised {
    WindowId window;
};
struct Moved {
    WindowId window;
    Rect from;
    Rect to;
};
struct Resized {
    WindowId window;
    ResizeResult result;
};

using StateChange = std::variant<PhaseChanged, Raised, Moved, Resized>;

/// Corner of `rect` closest to `p`; ties go TopLeft, TopRight, BottomLeft, BottomRight.
Edge nearest_corner(const Rect& rect, Point p) noexcept;

/// Advance the move/resize state machine. Unbound or out-of-phase events
/// are no-ops and return no changes.
std::vector<StateChange> handle_chord_input(Desktop& desktop, const InputEvent& event);

} // namespace panekit
