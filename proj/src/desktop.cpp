#include "panekit/desktop.hpp"

#include "panekit/error.hpp"
#include "panekit/reflow.hpp"

#include <algorithm>
#include <set>

namespace panekit {

std::string_view to_string(Anchor anchor) noexcept {
    return anchor == Anchor::Fixed ? "fixed" : "proportional";
}

std::string_view to_string(WindowState state) noexcept {
    switch (state) {
    case WindowState::Exposed: return "exposed";
    case WindowState::Invisible: return "invisible";
    case WindowState::Icon: return "icon";
    case WindowState::HiddenForAction: return "hidden_for_action";
    }
    return "?";
}

std::string_view to_string(ModeKind kind) noexcept {
    switch (kind) {
    case ModeKind::Normal: return "normal";
    case ModeKind::Timed: return "timed";
    case ModeKind::Locked: return "locked";
    case ModeKind::TimedIcon: return "timed_icon";
    }
    return "?";
}

namespace {

std::string id_text(WindowId id) { return "window " + std::to_string(id.value); }

bool within_limits(Size s, const Window& w) {
    return w.min_size.fits_within(s) && s.fits_within(w.max_size);
}

} // namespace

Desktop::Desktop(DisplayBounds display, EngineConfig config)
    : config_(std::move(config)), display_(display), lasso_(config_.lasso) {
    if (!display_.valid()) {
        throw Error(ErrorCode::BadDisplay, "display bounds must be positive");
    }
    input_.bindings = config_.bindings;
}

WindowId Desktop::create_window(const Rect& rect, Size min_size, Size max_size,
                                std::vector<WindowComponent> components, Anchor anchor) {
    if (min_size.w < 0 || min_size.h < 0 || !min_size.fits_within(max_size)) {
        throw Error(ErrorCode::BadLimits, "min_size must not exceed max_size");
    }
    for (const auto& c : components) {
        if (c.w <= 0 || c.h <= 0) {
            throw Error(ErrorCode::BadComponent, "component '" + c.name + "' has non-positive size");
        }
    }
    const Size floor = min_rect(components, config_.chrome);
    if (!floor.fits_within(min_size)) {
        throw Error(ErrorCode::BadLimits, "min_size is smaller than chrome plus the governing required component");
    }
    if (!min_size.fits_within(rect.size()) || !rect.size().fits_within(max_size)) {
        throw Error(ErrorCode::BadRect, "rect size outside [min_size, max_size]");
    }

    Window w;
    w.id = WindowId{next_id_++};
    w.rect = rect;
    w.min_size = min_size;
    w.max_size = max_size;
    w.components = std::move(components);
    w.anchor = anchor;
    const WindowId id = w.id;
    windows_.emplace(id, std::move(w));
    z_order_.push_back(id);
    restack(id);
    return id;
}

void Desktop::destroy(WindowId id) {
    if (windows_.erase(id) == 0) {
        throw Error(ErrorCode::NoSuchWindow, "no such " + id_text(id));
    }
    z_order_.erase(std::find(z_order_.begin(), z_order_.end(), id));
    redensify();
    repack_icons();
    revalidate_input();
}

void Desktop::raise(WindowId id) {
    if (!contains(id)) {
        throw Error(ErrorCode::NoSuchWindow, "no such " + id_text(id));
    }
    restack(id);
}

void Desktop::restack(WindowId id) {
    z_order_.erase(std::find(z_order_.begin(), z_order_.end(), id));
    if (windows_.at(id).locked()) {
        z_order_.push_back(id);
    } else {
        const auto first_locked = std::find_if(z_order_.begin(), z_order_.end(),
                                               [this](WindowId other) { return windows_.at(other).locked(); });
        z_order_.insert(first_locked, id);
    }
    redensify();
}

void Desktop::redensify() noexcept {
    for (std::size_t i = 0; i < z_order_.size(); ++i) {
        windows_.at(z_order_[i]).z = static_cast<int>(i);
    }
}

std::optional<WindowId> Desktop::hit_test(Point p) const {
    for (auto it = z_order_.rbegin(); it != z_order_.rend(); ++it) {
        const Window& w = windows_.at(*it);
        if (w.exposed() && w.rect.contains(p)) {
            return *it;
        }
    }
    return std::nullopt;
}

std::vector<Rect> Desktop::exposed_rects_above(WindowId id) const {
    const auto pos = std::find(z_order_.begin(), z_order_.end(), id);
    std::vector<Rect> out;
    for (auto it = pos == z_order_.end() ? pos : std::next(pos); it != z_order_.end(); ++it) {
        const Window& w = windows_.at(*it);
        if (w.exposed()) {
            out.push_back(w.rect);
        }
    }
    return out;
}

Fraction Desktop::occluded_fraction(WindowId id) const {
    const Window& w = window(id);
    if (!w.exposed()) {
        throw Error(ErrorCode::NotExposed, id_text(id) + " is not exposed");
    }
    if (w.rect.area() == 0) {
        throw Error(ErrorCode::ZeroArea, id_text(id) + " has zero area");
    }
    std::vector<Rect> clipped;
    for (const Rect& r : exposed_rects_above(id)) {
        if (auto part = intersection(r, w.rect)) {
            clipped.push_back(*part);
        }
    }
    return Fraction::make(union_area(clipped), w.rect.area());
}

const Window* Desktop::find(WindowId id) const noexcept {
    const auto it = windows_.find(id);
    return it == windows_.end() ? nullptr : &it->second;
}

const Window& Desktop::window(WindowId id) const {
    if (const Window* w = find(id)) {
        return *w;
    }
    throw Error(ErrorCode::NoSuchWindow, "no such " + id_text(id));
}

Window& Desktop::window_mut(WindowId id) {
    const auto it = windows_.find(id);
    if (it == windows_.end()) {
        throw Error(ErrorCode::NoSuchWindow, "no such " + id_text(id));
    }
    return it->second;
}

void Desktop::set_display(DisplayBounds display) {
    if (!display.valid()) {
        throw Error(ErrorCode::BadDisplay, "display bounds must be positive");
    }
    display_ = display;
}

void Desktop::advance_clock(std::int64_t t) {
    if (t < clock_) {
        throw Error(ErrorCode::ClockRegression,
                    "clock would go back from " + std::to_string(clock_) + " to " + std::to_string(t));
    }
    clock_ = t;
}

void Desktop::set_state(WindowId id, WindowState state) {
    Window& w = window_mut(id);
    // A window hidden for the duration of an action keeps its exposure timer.
    if (state == WindowState::Exposed || state == WindowState::HiddenForAction) {
        if (!w.exposure_started && w.mode.timed_class()) {
            w.exposure_started = clock_;
        }
    } else {
        w.exposure_started.reset();
    }
    w.state = state;
}

Rect Desktop::icon_slot(std::size_t index) const noexcept {
    const int size = config_.icon_size;
    const auto per_row = static_cast<std::size_t>(std::max(1, display_.w / size));
    const int col = static_cast<int>(index % per_row);
    const int row = static_cast<int>(index / per_row);
    return {col * size, display_.h - size * (row + 1), size, size};
}

void Desktop::repack_icons() {
    std::size_t slot = 0;
    for (auto& [id, w] : windows_) {
        if (w.state == WindowState::Icon) {
            w.rect = icon_slot(slot++);
        }
    }
}

void Desktop::revalidate_input() noexcept {
    ChordPhase& phase = input_.phase;
    if (phase.kind == ChordPhaseKind::Idle) {
        return;
    }
    const Window* w = find(phase.window);
    if (w == nullptr || !w->exposed()) {
        phase = ChordPhase::idle();
    }
}

std::optional<std::string> Desktop::check_invariants() const {
    if (z_order_.size() != windows_.size()) {
        return "z_order size differs from window count";
    }
    std::set<WindowId> seen;
    bool in_locked_layer = false;
    for (std::size_t i = 0; i < z_order_.size(); ++i) {
        const WindowId id = z_order_[i];
        const Window* w = find(id);
        if (w == nullptr || !seen.insert(id).second) {
            return "z_order is not a permutation of live ids";
        }
        if (w->z != static_cast<int>(i)) {
            return id_text(id) + " has a stale z rank";
        }
        if (in_locked_layer && !w->locked()) {
            return id_text(id) + " is stacked above a locked window";
        }
        in_locked_layer = in_locked_layer || w->locked();
    }
    for (const auto& [id, w] : windows_) {
        if (!w.min_size.fits_within(w.max_size)) {
            return id_text(id) + " has min_size > max_size";
        }
        if (w.exposed() && !within_limits(w.rect.size(), w)) {
            return id_text(id) + " is exposed with a size outside its limits";
        }
        const bool timer_expected = (w.exposed() || w.state == WindowState::HiddenForAction) && w.mode.timed_class();
        if (w.exposure_started.has_value() != timer_expected) {
            return id_text(id) + " has inconsistent exposure_started";
        }
        if (w.state == WindowState::Icon && !w.saved_rect) {
            return id_text(id) + " is an icon without a saved rect";
        }
        if (w.mode.timed_class() && w.mode.t_show <= 0) {
            return id_text(id) + " has non-positive t_show";
        }
    }
    const ChordPhase& phase = input_.phase;
    if (phase.kind != ChordPhaseKind::Idle) {
        const Window* w = find(phase.window);
        if (w == nullptr || !w->exposed()) {
            return "input phase references a non-live or hidden window";
        }
    }
    return std::nullopt;
}

} // namespace panekit
