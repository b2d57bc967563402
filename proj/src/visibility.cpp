#include "panekit/visibility.hpp"

#include "panekit/error.hpp"

namespace panekit {

void set_mode(Desktop& desktop, WindowId id, VisibilityMode mode) {
    if (mode.timed_class() && mode.t_show <= 0) {
        throw Error(ErrorCode::BadMode, "timed modes need t_show > 0");
    }
    Window& w = desktop.window_mut(id);
    const bool was_locked = w.locked();
    w.mode = mode;
    if (mode.timed_class() && (w.exposed() || w.state == WindowState::HiddenForAction)) {
        w.exposure_started = desktop.clock();
    } else {
        w.exposure_started.reset();
    }
    if (w.locked() || was_locked) {
        desktop.restack(id);
    }
}

void expose(Desktop& desktop, WindowId id) {
    Window& w = desktop.window_mut(id);
    switch (w.state) {
    case WindowState::Exposed:
        throw Error(ErrorCode::AlreadyExposed, "window is already exposed");
    case WindowState::HiddenForAction:
        throw Error(ErrorCode::BadState, "window is hidden until its action ends");
    case WindowState::Icon:
        w.rect = *w.saved_rect;
        w.saved_rect.reset();
        break;
    case WindowState::Invisible:
        break;
    }
    const bool was_icon = w.state == WindowState::Icon;
    desktop.set_state(id, WindowState::Exposed);
    if (was_icon) {
        desktop.repack_icons();
    }
}

std::vector<Transition> tick(Desktop& desktop, std::int64_t t) {
    desktop.advance_clock(t);
    std::vector<Transition> out;
    bool iconified = false;
    for (const auto& [id, w] : desktop.windows()) {
        if (!w.exposed() || !w.mode.timed_class() || !w.exposure_started) {
            continue;
        }
        const std::int64_t deadline = *w.exposure_started + w.mode.t_show;
        if (deadline > t) {
            continue;
        }
        const WindowState to = w.mode.kind == ModeKind::Timed ? WindowState::Invisible : WindowState::Icon;
        out.push_back({id, WindowState::Exposed, to, deadline});
    }
    for (const Transition& tr : out) {
        if (tr.to == WindowState::Icon) {
            Window& w = desktop.window_mut(tr.window);
            if (!w.saved_rect) {
                w.saved_rect = w.rect;
            }
            iconified = true;
        }
        desktop.set_state(tr.window, tr.to);
    }
    if (iconified) {
        desktop.repack_icons();
    }
    if (!out.empty()) {
        desktop.revalidate_input();
    }
    return out;
}

} // namespace panekit
