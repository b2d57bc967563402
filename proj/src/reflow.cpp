#include "panekit/reflow.hpp"

#include "panekit/error.hpp"

#include <algorithm>
#include <numeric>

namespace panekit {

std::vector<std::size_t> layout_order(std::span<const WindowComponent> components) {
    std::vector<std::size_t> order(components.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = components[a];
        const auto& cb = components[b];
        if (ca.required != cb.required) {
            return ca.required;
        }
        return ca.priority < cb.priority;
    });
    return order;
}

Size min_rect(std::span<const WindowComponent> components, const Chrome& chrome) {
    const auto order = layout_order(components);
    if (order.empty() || !components[order.front()].required) {
        throw Error(ErrorCode::NoRequiredComponent, "window has no required component");
    }
    const WindowComponent& c = components[order.front()];
    return {c.w + 2 * chrome.border, c.h + chrome.title_bar + 2 * chrome.border};
}

Size min_rect(const Window& window, const Chrome& chrome) {
    return min_rect(window.components, chrome);
}

int components_visible(std::span<const WindowComponent> components, Size size, const Chrome& chrome) {
    const int content_w = size.w - 2 * chrome.border;
    const int content_h = size.h - chrome.title_bar - 2 * chrome.border;
    int used_h = 0;
    int count = 0;
    for (std::size_t i : layout_order(components)) {
        const WindowComponent& c = components[i];
        used_h += c.h;
        if (c.w > content_w || used_h > content_h) {
            break;
        }
        ++count;
    }
    return count;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

struct Placement {
    Rect rect;
    bool shrunk_to_min = false;
    bool moved_into_area = false;
};

// Anchor, fit and relocate.
Placement place(const Rect& home, const Window& w, DisplayBounds from, DisplayBounds to) {
    Placement out{home};
    Rect& r = out.rect;
    if (w.anchor == Anchor::Proportional) {
        r.x = static_cast<int>(floor_div(std::int64_t{r.x} * to.w, from.w));
        r.y = static_cast<int>(floor_div(std::int64_t{r.y} * to.h, from.h));
    }
    if (r.w > to.w) {
        r.w = std::max(to.w, w.min_size.w);
        out.shrunk_to_min = out.shrunk_to_min || r.w == w.min_size.w;
    }
    if (r.h > to.h) {
        r.h = std::max(to.h, w.min_size.h);
        out.shrunk_to_min = out.shrunk_to_min || r.h == w.min_size.h;
    }
    if (!to.contains(r)) {
        r = translate_into(r, to);
        out.moved_into_area = true;
    }
    return out;
}

// Grow right/down one component at a time while display and max_size allow.
Rect grow(Rect r, const Window& w, DisplayBounds to, const Chrome& chrome) {
    const auto order = layout_order(w.components);
    auto shown = static_cast<std::size_t>(components_visible(w.components, r.size(), chrome));
    while (shown < order.size()) {
        int content_w = 0;
        int content_h = 0;
        for (std::size_t i = 0; i <= shown; ++i) {
            const WindowComponent& c = w.components[order[i]];
            content_w = std::max(content_w, c.w);
            content_h += c.h;
        }
        const Size need{std::max(r.w, content_w + 2 * chrome.border),
                        std::max(r.h, content_h + chrome.title_bar + 2 * chrome.border)};
        if (!need.fits_within(w.max_size) || r.x + need.w > to.w || r.y + need.h > to.h) {
            break;
        }
        r.w = need.w;
        r.h = need.h;
        ++shown;
    }
    return r;
}

} // namespace

ReflowReport reflow(Desktop& desktop, DisplayBounds new_display) {
    if (!new_display.valid()) {
        throw Error(ErrorCode::BadDisplay, "display bounds must be positive");
    }
    const DisplayBounds old_display = desktop.display();
    const Chrome& chrome = desktop.config().chrome;

    for (const auto& [id, w] : desktop.windows()) {
        if (!w.min_size.fits_within(new_display.size())) {
            throw Error(ErrorCode::DisplayTooSmall,
                        "window " + std::to_string(id.value) + " cannot fit its minimum size on the new display");
        }
    }

    ReflowReport report{old_display, new_display, {}};
    struct Staged {
        WindowId id;
        Rect home;
        std::optional<Rect> saved;
    };
    std::vector<Staged> staged;
    for (WindowId id : desktop.z_order()) {
        const Window& w = desktop.window(id);
        const Rect& home = w.home_rect();
        const Placement p = place(home, w, old_display, new_display);
        const Rect fitted = p.rect != home ? grow(p.rect, w, new_display, chrome) : p.rect;

        Staged s{id, fitted, std::nullopt};
        if (w.state != WindowState::Icon && w.saved_rect) {
            s.saved = place(*w.saved_rect, w, old_display, new_display).rect;
        }
        staged.push_back(s);
        report.entries.push_back({id, home, fitted, p.shrunk_to_min, p.moved_into_area,
                                  components_visible(w.components, fitted.size(), chrome)});
    }

    desktop.set_display(new_display);
    for (const Staged& s : staged) {
        Window& w = desktop.window_mut(s.id);
        if (w.state == WindowState::Icon) {
            w.saved_rect = s.home;
        } else {
            w.rect = s.home;
            if (s.saved) {
                w.saved_rect = s.saved;
            }
        }
    }
    desktop.repack_icons();
    return report;
}

} // namespace panekit
