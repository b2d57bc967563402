#include "panekit/lasso.hpp"

#include "panekit/error.hpp"

#include <algorithm>
#include <numeric>

namespace panekit {

RationalPoint RationalPoint::make(std::int64_t x, std::int64_t y, std::int64_t den) {
    if (den < 0) {
        x = -x;
        y = -y;
        den = -den;
    }
    const std::int64_t g = std::gcd(std::gcd(x, y), den);
    return g > 1 ? RationalPoint{x / g, y / g, den / g} : RationalPoint{x, y, den};
}

EdgeSegment border_segment(const Rect& r, Edge side) {
    switch (side) {
    case Edge::Left: return {{r.x, r.y}, {r.x, r.bottom()}};
    case Edge::Right: return {{r.right(), r.y}, {r.right(), r.bottom()}};
    case Edge::Top: return {{r.x, r.y}, {r.right(), r.y}};
    case Edge::Bottom: return {{r.x, r.bottom()}, {r.right(), r.bottom()}};
    default: break;
    }
    throw Error(ErrorCode::BadConfig, "corners have no single border segment");
}

namespace {

struct AxisHit {
    RationalPoint point;
    bool at_start = false;
    bool at_end = false;
};

// Segment p->q against the line `along == fixed`, with the other coordinate
// limited to [lo, hi]. Coordinates are swapped so the edge is always vertical.
std::optional<AxisHit> hit_vertical(Point p, Point q, int fixed, int lo, int hi) {
    std::int64_t den = std::int64_t{q.x} - p.x;
    std::int64_t s = std::int64_t{fixed} - p.x;
    if (den == 0) {
        return std::nullopt;
    }
    if (den < 0) {
        den = -den;
        s = -s;
    }
    if (s < 0 || s > den) {
        return std::nullopt;
    }
    const std::int64_t y_num = std::int64_t{p.y} * den + s * (std::int64_t{q.y} - p.y);
    if (y_num < std::int64_t{lo} * den || y_num > std::int64_t{hi} * den) {
        return std::nullopt;
    }
    return AxisHit{RationalPoint::make(std::int64_t{fixed} * den, y_num, den), s == 0, s == den};
}

std::vector<Point> collapse(std::span<const Point> polyline) {
    std::vector<Point> pts(polyline.begin(), polyline.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Along-edge coordinate of a hit.
struct Along {
    std::int64_t num;
    std::int64_t den;
};

__extension__ using Wide = __int128;

bool within(const Along& a, const Along& b, int d) {
    const Wide lhs = static_cast<Wide>(a.num) * b.den - static_cast<Wide>(b.num) * a.den;
    const Wide rhs = static_cast<Wide>(d) * a.den * b.den;
    return (lhs < 0 ? -lhs : lhs) <= rhs;
}

} // namespace

std::vector<RationalPoint> crossings(std::span<const Point> polyline, const EdgeSegment& edge) {
    const bool vertical = edge.a.x == edge.b.x;
    if (!vertical && edge.a.y != edge.b.y) {
        throw Error(ErrorCode::BadConfig, "edge segment must be axis-aligned");
    }
    auto swap_xy = [](Point p) { return Point{p.y, p.x}; };
    const int fixed = vertical ? edge.a.x : edge.a.y;
    const int lo = vertical ? std::min(edge.a.y, edge.b.y) : std::min(edge.a.x, edge.b.x);
    const int hi = vertical ? std::max(edge.a.y, edge.b.y) : std::max(edge.a.x, edge.b.x);

    const std::vector<Point> pts = collapse(polyline);
    std::vector<RationalPoint> out;
    bool prev_hit_at_end = false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point p = vertical ? pts[i] : swap_xy(pts[i]);
        const Point q = vertical ? pts[i + 1] : swap_xy(pts[i + 1]);
        const auto hit = hit_vertical(p, q, fixed, lo, hi);
        if (hit && !(hit->at_start && prev_hit_at_end)) {
            const RationalPoint& h = hit->point;
            out.push_back(vertical ? h : RationalPoint{h.y, h.x, h.den});
        }
        prev_hit_at_end = hit && hit->at_end;
    }
    return out;
}

std::optional<Edge> lasso_part(std::span<const RationalPoint> hits, const Rect& rect, Edge side, int proximity_d) {
    if (hits.size() < 2) {
        return std::nullopt;
    }
    const bool vertical = side == Edge::Left || side == Edge::Right;
    auto along = [vertical](const RationalPoint& h) { return Along{vertical ? h.y : h.x, h.den}; };
    const Along a = along(hits[hits.size() - 2]);
    const Along b = along(hits[hits.size() - 1]);
    if (!within(a, b, proximity_d)) {
        return std::nullopt;
    }

    const Along low{vertical ? rect.y : rect.x, 1};
    const Along high{vertical ? rect.bottom() : rect.right(), 1};
    const bool near_low = within(a, low, proximity_d) && within(b, low, proximity_d);
    const bool near_high = within(a, high, proximity_d) && within(b, high, proximity_d);
    switch (side) {
    case Edge::Left:
        return near_low ? Edge::TopLeft : near_high ? Edge::BottomLeft : Edge::Left;
    case Edge::Right:
        return near_low ? Edge::TopRight : near_high ? Edge::BottomRight : Edge::Right;
    case Edge::Top:
        return near_low ? Edge::TopLeft : near_high ? Edge::TopRight : Edge::Top;
    case Edge::Bottom:
        return near_low ? Edge::BottomLeft : near_high ? Edge::BottomRight : Edge::Bottom;
    default:
        return std::nullopt;
    }
}

std::optional<BorderSelection> push_sample(Desktop& desktop, std::int64_t t, Point p) {
    PointerSampleQueue& queue = desktop.lasso();
    queue.push({t, p});
    if (queue.size() < 2) {
        return std::nullopt;
    }

    std::vector<Point> path;
    path.reserve(queue.size());
    Rect box{p.x, p.y, 0, 0};
    for (const PointerSample& s : queue.samples()) {
        path.push_back(s.p);
        const int x1 = std::max(box.right(), s.p.x);
        const int y1 = std::max(box.bottom(), s.p.y);
        box.x = std::min(box.x, s.p.x);
        box.y = std::min(box.y, s.p.y);
        box.w = x1 - box.x;
        box.h = y1 - box.y;
    }

    // Closed-interval test: the gesture box may be degenerate.
    const auto& z = desktop.z_order();
    const Window* candidate = nullptr;
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        const Window& w = desktop.window(*it);
        if (w.exposed() && box.x <= w.rect.right() && w.rect.x <= box.right() && box.y <= w.rect.bottom() &&
            w.rect.y <= box.bottom()) {
            candidate = &w;
            break;
        }
    }
    if (candidate == nullptr) {
        return std::nullopt;
    }

    const int d = queue.config().proximity_d;
    for (Edge side : {Edge::Left, Edge::Right, Edge::Top, Edge::Bottom}) {
        const auto hits = crossings(path, border_segment(candidate->rect, side));
        if (const auto part = lasso_part(hits, candidate->rect, side, d)) {
            BorderSelection sel{candidate->id, *part, t, queue.samples().front().t};
            queue.clear();
            return sel;
        }
    }
    return std::nullopt;
}

} // namespace panekit
