#include "panekit/chord.hpp"

#include <array>
#include <cstdint>

namespace panekit {

std::optional<InputEvent> key_event(const ChordBindings& bindings, std::string_view combo, Point pointer) {
    if (combo == bindings.move_combo) {
        return InputEvent::key_move(pointer);
    }
    if (combo == bindings.resize_combo) {
        return InputEvent::key_resize(pointer);
    }
    if (combo == bindings.escape_combo) {
        return InputEvent::escape();
    }
    return std::nullopt;
}

Edge nearest_corner(const Rect& rect, Point p) noexcept {
    const std::array<std::pair<Edge, Point>, 4> corners{{
        {Edge::TopLeft, {rect.x, rect.y}},
        {Edge::TopRight, {rect.right(), rect.y}},
        {Edge::BottomLeft, {rect.x, rect.bottom()}},
        {Edge::BottomRight, {rect.right(), rect.bottom()}},
    }};
    Edge best = Edge::TopLeft;
    std::int64_t best_d = -1;
    for (const auto& [edge, c] : corners) {
        const std::int64_t dx = c.x - p.x;
        const std::int64_t dy = c.y - p.y;
        const std::int64_t d = dx * dx + dy * dy;
        if (best_d < 0 || d < best_d) {
            best = edge;
            best_d = d;
        }
    }
    return best;
}

namespace {

void enter(Desktop& desktop, ChordPhase next, std::vector<StateChange>& changes) {
    ChordPhase& phase = desktop.input().phase;
    changes.push_back(PhaseChanged{phase, next});
    phase = next;
    const std::vector<WindowId> before = desktop.z_order();
    desktop.raise(next.window);
    if (desktop.z_order() != before) {
        changes.push_back(Raised{next.window});
    }
}

} // namespace

std::vector<StateChange> handle_chord_input(Desktop& desktop, const InputEvent& event) {
    std::vector<StateChange> changes;
    ChordPhase& phase = desktop.input().phase;

    switch (event.kind) {
    case InputKind::BothButtonsDown:
    case InputKind::KeyMove:
    case InputKind::KeyResize: {
        if (phase.kind != ChordPhaseKind::Idle) {
            break;
        }
        const auto hit = desktop.hit_test(event.p);
        if (!hit) {
            break;
        }
        if (event.kind == InputKind::KeyResize) {
            enter(desktop, ChordPhase::resizing(*hit, nearest_corner(desktop.window(*hit).rect, event.p)), changes);
        } else {
            enter(desktop, ChordPhase::moving(*hit), changes);
        }
        break;
    }
    case InputKind::BothButtonsUp:
    case InputKind::Escape:
        if (phase.kind != ChordPhaseKind::Idle) {
            changes.push_back(PhaseChanged{phase, ChordPhase::idle()});
            phase = ChordPhase::idle();
        }
        break;
    case InputKind::PointerMove:
        if (phase.kind == ChordPhaseKind::Moving) {
            Window& w = desktop.window_mut(phase.window);
            const Rect from = w.rect;
            w.rect.x += event.dx;
            w.rect.y += event.dy;
            if (w.rect != from) {
                changes.push_back(Moved{w.id, from, w.rect});
            }
        } else if (phase.kind == ChordPhaseKind::Resizing) {
            changes.push_back(Resized{phase.window, resize_drag(desktop, phase.window, phase.part, event.dx, event.dy)});
        }
        break;
    }
    return changes;
}

} // namespace panekit
