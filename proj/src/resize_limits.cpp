#include "panekit/resize_limits.hpp"

#include "panekit/error.hpp"

#include <algorithm>

namespace panekit {

std::string_view to_string(Limit limit) noexcept {
    switch (limit) {
    case Limit::MaxWidth: return "max_width";
    case Limit::MaxHeight: return "max_height";
    case Limit::MinWidth: return "min_width";
    case Limit::MinHeight: return "min_height";
    }
    return "?";
}

namespace {

bool moves_left(Edge e) { return e == Edge::Left || e == Edge::TopLeft || e == Edge::BottomLeft; }
bool moves_right(Edge e) { return e == Edge::Right || e == Edge::TopRight || e == Edge::BottomRight; }
bool moves_top(Edge e) { return e == Edge::Top || e == Edge::TopLeft || e == Edge::TopRight; }
bool moves_bottom(Edge e) { return e == Edge::Bottom || e == Edge::BottomLeft || e == Edge::BottomRight; }

} // namespace

Rect requested_resize(const Rect& rect, Edge edge, int dx, int dy) noexcept {
    Rect r = rect;
    if (moves_left(edge)) {
        r.x += dx;
        r.w -= dx;
    } else if (moves_right(edge)) {
        r.w += dx;
    }
    if (moves_top(edge)) {
        r.y += dy;
        r.h -= dy;
    } else if (moves_bottom(edge)) {
        r.h += dy;
    }
    return r;
}

ResizeResult resize_drag(Desktop& desktop, WindowId id, Edge edge, int dx, int dy) {
    Window& w = desktop.window_mut(id);
    if (!w.exposed()) {
        throw Error(ErrorCode::NotExposed, "cannot resize a window that is not exposed");
    }

    ResizeResult result;
    result.requested = requested_resize(w.rect, edge, dx, dy);
    Rect applied = result.requested;
    applied.w = std::clamp(applied.w, w.min_size.w, w.max_size.w);
    applied.h = std::clamp(applied.h, w.min_size.h, w.max_size.h);
    // Keep the fixed edge where it was.
    if (moves_left(edge)) {
        applied.x = w.rect.right() - applied.w;
    }
    if (moves_top(edge)) {
        applied.y = w.rect.bottom() - applied.h;
    }
    result.applied = applied;

    if (applied != result.requested) {
        LimitFeedback fb{id, {}, desktop.clock()};
        const Rect& req = result.requested;
        if (req.w > w.max_size.w) fb.limited.push_back(Limit::MaxWidth);
        if (req.h > w.max_size.h) fb.limited.push_back(Limit::MaxHeight);
        if (req.w < w.min_size.w) fb.limited.push_back(Limit::MinWidth);
        if (req.h < w.min_size.h) fb.limited.push_back(Limit::MinHeight);
        result.feedback = std::move(fb);
    }
    w.rect = applied;
    return result;
}

} // namespace panekit
