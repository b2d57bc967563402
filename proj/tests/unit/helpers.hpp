#pragma once

#include "panekit/desktop.hpp"
#include "panekit/error.hpp"

#include <doctest.h>

namespace testing {

/// A single required 4x4 component: min_rect is 8x28 with default chrome.
inline std::vector<panekit::WindowComponent> tiny() { return {{"dot", 4, 4, true, 0}}; }

/// One required 40x20 button: min_rect is 44x44.
inline std::vector<panekit::WindowComponent> button() { return {{"ok", 40, 20, true, 1}}; }

inline panekit::WindowId add(panekit::Desktop& d, panekit::Rect r, panekit::Size min = {8, 28},
                             panekit::Size max = {2000, 2000},
                             panekit::Anchor anchor = panekit::Anchor::Fixed) {
    return d.create_window(r, min, max, tiny(), anchor);
}

template <typename Fn>
panekit::ErrorCode error_of(Fn&& fn) {
    try {
        fn();
    } catch (const panekit::Error& e) {
        return e.code();
    }
    FAIL("expected panekit::Error");
    return panekit::ErrorCode::BadConfig;
}

inline std::vector<std::uint32_t> z_ids(const panekit::Desktop& d) {
    std::vector<std::uint32_t> out;
    for (auto id : d.z_order()) {
        out.push_back(id.value);
    }
    return out;
}

} // namespace testing
