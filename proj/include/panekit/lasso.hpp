#pragma once

#include "panekit/desktop.hpp"

#include <optional>
#include <span>
#include <vector>

namespace panekit {

/// Point with exact rational coordinates (x/den, y/den), den > 0, reduced.
/// Crossings of a sampled path with a border generally fall between pixels.
struct RationalPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t den = 1;

    static RationalPoint make(std::int64_t x, std::int64_t y, std::int64_t den);
    static RationalPoint from(Point p) { return {p.x, p.y, 1}; }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Horizontal or vertical border segment, endpoints inclusive.
struct EdgeSegment {
    Point a;
    Point b;
};

/// Intersections of the path with `edge`, in path order. Consecutive
/// duplicate samples are collapsed first. A path segment parallel to the edge
/// contributes nothing; a hit exactly on a sample shared by two path segments
/// counts once. Throws BadConfig if `edge` is not axis-aligned.
std::vector<RationalPoint> crossings(std::span<const Point> polyline, const EdgeSegment& edge);

/// The four borders of `rect` as segments, keyed by Left, Right, Top, Bottom.
EdgeSegment border_segment(const Rect& rect, Edge side);

struct BorderSelection {
    WindowId window;
    Edge part = Edge::Left;
    std::int64_t at_clock = 0;
    std::int64_t span_start = 0; // time of the oldest sample in the gesture

    friend bool operator==(const BorderSelection&, const BorderSelection&) = default;
};

/// Decide whether the recent crossings of one border form a lasso: at least
/// two crossings, the last two within `proximity_d`. Returns the part (the
/// edge, or an adjacent corner if both crossings sit near it).
std::optional<Edge> lasso_part(std::span<const RationalPoint> hits, const Rect& rect, Edge side, int proximity_d);

/// Record a pointer sample and look for a lasso over the border of the
/// topmost exposed window near the gesture. On selection the queue is
/// cleared. Throws NonMonotonicTime.
std::optional<BorderSelection> push_sample(Desktop& desktop, std::int64_t t, Point p);

} // namespace panekit
