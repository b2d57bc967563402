#pragma once

#include "panekit/desktop.hpp"

#include <span>
#include <vector>

namespace panekit {

/// Order in which components are laid out (stacked top to bottom in the
/// content region): required components first, then by priority, then by
/// declaration order. Returns indices into `components`.
std::vector<std::size_t> layout_order(std::span<const WindowComponent> components);

/// Smallest window size that shows the highest-priority required component
/// plus chrome. Throws NoRequiredComponent.
Size min_rect(std::span<const WindowComponent> components, const Chrome& chrome);
Size min_rect(const Window& window, const Chrome& chrome);

/// Length of the longest prefix of layout_order() that fits in a window of
/// `size`: widest component within content width, stacked heights within
/// content height.
int components_visible(std::span<const WindowComponent> components, Size size, const Chrome& chrome);

struct ReflowEntry {
    WindowId window;
    Rect old_rect;
    Rect new_rect;
    bool shrunk_to_min = false;
    bool moved_into_area = false;
    int components_visible = 0;

    friend bool operator==(const ReflowEntry&, const ReflowEntry&) = default;
};

/// One entry per live window, bottom of the z-order first.
struct ReflowReport {
    DisplayBounds old_display;
    DisplayBounds new_display;
    std::vector<ReflowEntry> entries;
};

/// Replaces the display and re-fits every window to it. All-or-nothing:
/// throws DisplayTooSmall (desktop untouched) if some window's minimum size
/// cannot fit.
ReflowReport reflow(Desktop& desktop, DisplayBounds new_display);

} // namespace panekit
