#pragma once

#include "panekit/desktop.hpp"

#include <optional>
#include <vector>

namespace panekit {

enum class Limit { MaxWidth, MaxHeight, MinWidth, MinHeight };

std::string_view to_string(Limit limit) noexcept;

/// Emitted when a drag asks for a size the window's limits forbid.
struct LimitFeedback {
    WindowId window;
    std::vector<Limit> limited; // never empty, in enum order
    std::int64_t at_clock = 0;

    friend bool operator==(const LimitFeedback&, const LimitFeedback&) = default;
};

struct ResizeResult {
    Rect requested; // may carry a negative extent when the drag inverts the window
    Rect applied;
    std::optional<LimitFeedback> feedback;
};

/// Rect obtained by moving `edge` by (dx, dy) with the opposite edges held.
Rect requested_resize(const Rect& rect, Edge edge, int dx, int dy) noexcept;

/// Drag a border of an exposed window. Each axis is clamped into
/// [min_size, max_size]; the edge opposite the dragged one stays put.
/// Throws NoSuchWindow, NotExposed.
ResizeResult resize_drag(Desktop& desktop, WindowId id, Edge edge, int dx, int dy);

} // namespace panekit
