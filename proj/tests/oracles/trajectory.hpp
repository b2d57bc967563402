#pragma once

// Synthetic pointer paths for lasso tests.

#include "random_desk.hpp"

#include <cmath>
#include <numbers>

namespace gen {

struct Sample {
    std::int64_t t;
    panekit::Point p;
};

enum class PathKind { Loop, Straight, SlowLoop, Shaky };

inline panekit::Point border_point(Rng& rng, const panekit::Rect& r) {
    switch (uniform(rng, 0, 3)) {
    case 0: return {r.x, r.y + uniform(rng, 0, r.h)};
    case 1: return {r.right(), r.y + uniform(rng, 0, r.h)};
    case 2: return {r.x + uniform(rng, 0, r.w), r.y};
    default: return {r.x + uniform(rng, 0, r.w), r.bottom()};
    }
}

/// Circle of `n` samples around `c`, starting at a random phase.
inline std::vector<panekit::Point> loop_points(Rng& rng, panekit::Point c, int radius, int n) {
    std::vector<panekit::Point> out;
    const double phase = uniform(rng, 0, 359) * std::numbers::pi / 180.0;
    const double turns = 1.0 + uniform(rng, 0, 4) * 0.25;
    for (int i = 0; i <= n; ++i) {
        const double a = phase + turns * 2.0 * std::numbers::pi * i / n;
        out.push_back({c.x + static_cast<int>(std::lround(radius * std::cos(a))),
                       c.y + static_cast<int>(std::lround(radius * std::sin(a)))});
    }
    return out;
}

/// Timestamped path starting at `t0`; time always strictly increases.
inline std::vector<Sample> trajectory(Rng& rng, PathKind kind, const panekit::Desktop& desk, std::int64_t t0) {
    std::vector<panekit::Point> pts;
    int dt_lo = 5, dt_hi = 40;
    const auto& wins = desk.windows();
    panekit::Rect target{uniform(rng, 0, 150), uniform(rng, 0, 150), 50, 50};
    if (!wins.empty()) {
        auto it = wins.begin();
        std::advance(it, uniform(rng, 0, static_cast<int>(wins.size()) - 1));
        target = it->second.rect;
    }
    const panekit::Point anchor = border_point(rng, target);
    switch (kind) {
    case PathKind::Loop:
        pts = loop_points(rng, anchor, uniform(rng, 4, 30), uniform(rng, 6, 16));
        break;
    case PathKind::SlowLoop:
        pts = loop_points(rng, anchor, uniform(rng, 4, 30), uniform(rng, 6, 12));
        dt_lo = 60;
        dt_hi = 200;
        break;
    case PathKind::Straight: {
        const bool horizontal = uniform(rng, 0, 1) != 0;
        const int n = uniform(rng, 3, 12);
        const int len = uniform(rng, 20, 160);
        for (int i = 0; i <= n; ++i) {
            const int off = -len / 2 + len * i / n;
            pts.push_back(horizontal ? panekit::Point{anchor.x + off, anchor.y + uniform(rng, -1, 1)}
                                     : panekit::Point{anchor.x + uniform(rng, -1, 1), anchor.y + off});
        }
        break;
    }
    case PathKind::Shaky: {
        panekit::Point p{anchor.x + uniform(rng, -20, 20), anchor.y + uniform(rng, -20, 20)};
        const int n = uniform(rng, 8, 40);
        for (int i = 0; i < n; ++i) {
            pts.push_back(p);
            // drift back toward the border point with jitter
            p.x += (anchor.x - p.x) / 4 + uniform(rng, -9, 9);
            p.y += (anchor.y - p.y) / 4 + uniform(rng, -9, 9);
        }
        dt_lo = 1;
        dt_hi = 60;
        break;
    }
    }
    std::vector<Sample> out;
    std::int64_t t = t0;
    for (const auto& p : pts) {
        t += uniform(rng, dt_lo, dt_hi);
        out.push_back({t, p});
    }
    return out;
}

} // namespace gen
