#include "panekit/geom.hpp"

#include "panekit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace panekit {

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw Error(ErrorCode::ZeroArea, "fraction with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::optional<Rect> intersection(const Rect& a, const Rect& b) noexcept {
    const int x0 = std::max(a.x, b.x);
    const int y0 = std::max(a.y, b.y);
    const int x1 = std::min(a.right(), b.right());
    const int y1 = std::min(a.bottom(), b.bottom());
    if (x1 <= x0 || y1 <= y0) {
        return std::nullopt;
    }
    return Rect{x0, y0, x1 - x0, y1 - y0};
}

Area overlap_area(const Rect& a, const Rect& b) noexcept {
    const auto r = intersection(a, b);
    return r ? r->area() : 0;
}

Area union_area(std::span<const Rect> rects) {
    std::vector<int> xs;
    std::vector<int> ys;
    xs.reserve(rects.size() * 2);
    ys.reserve(rects.size() * 2);
    for (const Rect& r : rects) {
        if (r.empty()) {
            continue;
        }
        xs.push_back(r.x);
        xs.push_back(r.right());
        ys.push_back(r.y);
        ys.push_back(r.bottom());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (xs.size() < 2 || ys.size() < 2) {
        return 0;
    }

    // Each compressed cell is either fully covered by some rect or not at all.
    const std::size_t nx = xs.size() - 1;
    const std::size_t ny = ys.size() - 1;
    std::vector<char> covered(nx * ny, 0);
    for (const Rect& r : rects) {
        if (r.empty()) {
            continue;
        }
        const auto ix0 = std::lower_bound(xs.begin(), xs.end(), r.x) - xs.begin();
        const auto ix1 = std::lower_bound(xs.begin(), xs.end(), r.right()) - xs.begin();
        const auto iy0 = std::lower_bound(ys.begin(), ys.end(), r.y) - ys.begin();
        const auto iy1 = std::lower_bound(ys.begin(), ys.end(), r.bottom()) - ys.begin();
        for (auto iy = iy0; iy < iy1; ++iy) {
            for (auto ix = ix0; ix < ix1; ++ix) {
                covered[static_cast<std::size_t>(iy) * nx + static_cast<std::size_t>(ix)] = 1;
            }
        }
    }

    Area total = 0;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            if (covered[iy * nx + ix]) {
                total += Area{xs[ix + 1] - xs[ix]} * Area{ys[iy + 1] - ys[iy]};
            }
        }
    }
    return total;
}

Rect translate_into(const Rect& r, const DisplayBounds& bounds) {
    if (r.w > bounds.w || r.h > bounds.h) {
        throw Error(ErrorCode::DoesNotFit, "rect larger than display");
    }
    return {std::clamp(r.x, 0, bounds.w - r.w), std::clamp(r.y, 0, bounds.h - r.h), r.w, r.h};
}

int linf_distance(Point a, Point b) noexcept {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

} // namespace panekit
