#pragma once

#include "panekit/desktop.hpp"

#include <vector>

namespace panekit {

struct Transition {
    WindowId window;
    WindowState from = WindowState::Exposed;
    WindowState to = WindowState::Invisible;
    std::int64_t deadline = 0; // exposure_started + t_show

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Replace a window's mode. Timed modes restart their exposure timer;
/// Locked raises the window into the always-on-top layer.
/// Throws NoSuchWindow, BadMode.
void set_mode(Desktop& desktop, WindowId id, VisibilityMode mode);

/// Show an invisible or iconified window. Throws NoSuchWindow,
/// AlreadyExposed, BadState (window hidden for an action).
void expose(Desktop& desktop, WindowId id);

/// Advance the logical clock to `t` and expire every timed exposure whose
/// deadline is at or before `t`. Transitions come back in window-id order.
/// Throws ClockRegression.
std::vector<Transition> tick(Desktop& desktop, std::int64_t t);

} // namespace panekit
