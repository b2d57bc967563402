#pragma once

// Brute-force MoveAway reference: every 1-px position where the target fits.

#include "panekit/desktop.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>

namespace oracle {

struct PlacementScan {
    /// Smallest L-infinity displacement among zero-overlap placements.
    std::optional<int> best_zero_distance;
    /// Some zero-overlap placement sits on the 8-px grid.
    bool zero_on_grid = false;
    /// Least achievable overlap with the protected window.
    std::int64_t min_overlap = -1;
};

inline std::int64_t box_overlap(int ax, int ay, int aw, int ah, const panekit::Rect& b) {
    const int x0 = std::max(ax, b.x);
    const int x1 = std::min(ax + aw, b.x + b.w);
    const int y0 = std::max(ay, b.y);
    const int y1 = std::min(ay + ah, b.y + b.h);
    if (x1 <= x0 || y1 <= y0) {
        return 0;
    }
    return std::int64_t{x1 - x0} * (y1 - y0);
}

inline PlacementScan scan_placements(const panekit::Desktop& desk, panekit::WindowId target,
                                     panekit::WindowId guard, int grid = 8) {
    const auto& t = desk.window(target).rect;
    const auto& g = desk.window(guard).rect;
    const auto display = desk.display();
    PlacementScan out;
    for (int y = 0; y + t.h <= display.h; ++y) {
        for (int x = 0; x + t.w <= display.w; ++x) {
            const std::int64_t ov = box_overlap(x, y, t.w, t.h, g);
            if (out.min_overlap < 0 || ov < out.min_overlap) {
                out.min_overlap = ov;
            }
            if (ov != 0) {
                continue;
            }
            const int d = std::max(std::abs(x - t.x), std::abs(y - t.y));
            if (!out.best_zero_distance || d < *out.best_zero_distance) {
                out.best_zero_distance = d;
            }
            if (x % grid == 0 && y % grid == 0) {
                out.zero_on_grid = true;
            }
        }
    }
    return out;
}

} // namespace oracle
