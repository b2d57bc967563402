#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace panekit {

/// Square pixels. Coordinates are 32-bit; products are carried in 64 bits.
using Area = std::int64_t;

struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Size {
    int w = 0;
    int h = 0;

    friend bool operator==(const Size&, const Size&) = default;

    /// Componentwise partial order.
    bool fits_within(const Size& other) const noexcept { return w <= other.w && h <= other.h; }
};

// Half-open: covers columns [x, x+w) and rows [y, y+h).
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    friend bool operator==(const Rect&, const Rect&) = default;

    int right() const noexcept { return x + w; }
    int bottom() const noexcept { return y + h; }
    Size size() const noexcept { return {w, h}; }
    Point top_left() const noexcept { return {x, y}; }
    Area area() const noexcept { return Area{w} * Area{h}; }
    bool empty() const noexcept { return w <= 0 || h <= 0; }

    bool contains(Point p) const noexcept {
        return p.x >= x && p.x < right() && p.y >= y && p.y < bottom();
    }
    bool contains(const Rect& r) const noexcept {
        return r.x >= x && r.y >= y && r.right() <= right() && r.bottom() <= bottom();
    }
};

struct DisplayBounds {
    int w = 0;
    int h = 0;

    friend bool operator==(const DisplayBounds&, const DisplayBounds&) = default;

    bool valid() const noexcept { return w > 0 && h > 0; }
    Rect rect() const noexcept { return {0, 0, w, h}; }
    Size size() const noexcept { return {w, h}; }
    bool contains(const Rect& r) const noexcept { return rect().contains(r); }
};

/// Exact non-negative rational, always stored reduced with den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction make(std::int64_t num, std::int64_t den);
    friend bool operator==(const Fraction&, const Fraction&) = default;
    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

std::optional<Rect> intersection(const Rect& a, const Rect& b) noexcept;

Area overlap_area(const Rect& a, const Rect& b) noexcept;

/// Area of the union of `rects`, by coordinate compression.
Area union_area(std::span<const Rect> rects);

/// Translate `r` by the smallest L-infinity displacement that puts it inside
/// `bounds`. Throws Error(DoesNotFit) if `r` is larger than `bounds`.
Rect translate_into(const Rect& r, const DisplayBounds& bounds);

/// Chebyshev distance between the top-left corners of two rects.
int linf_distance(Point a, Point b) noexcept;

} // namespace panekit
