#include "panekit/error.hpp"
#include "panekit/geom.hpp"

#include "../oracles/random_desk.hpp"

#include <doctest.h>

using namespace panekit;

TEST_SUITE("geom") {

TEST_CASE("overlap_area examples") {
    CHECK(overlap_area({0, 0, 10, 10}, {20, 20, 5, 5}) == 0);
    CHECK(overlap_area({0, 0, 10, 10}, {0, 0, 10, 10}) == 100);
    CHECK(overlap_area({0, 0, 10, 10}, {5, 5, 15, 15}) == 25);
}

TEST_CASE("adjacent rects do not overlap") {
    CHECK(overlap_area({0, 0, 10, 10}, {10, 0, 10, 10}) == 0);
    CHECK(overlap_area({0, 0, 10, 10}, {0, 10, 10, 10}) == 0);
}

TEST_CASE("translate_into examples") {
    const DisplayBounds b{800, 600};
    CHECK(translate_into({10, 10, 50, 50}, b) == Rect{10, 10, 50, 50});
    CHECK(translate_into({790, 590, 50, 50}, b) == Rect{750, 550, 50, 50});
    CHECK(translate_into({-20, 5, 50, 50}, b) == Rect{0, 5, 50, 50});
}

TEST_CASE("translate_into rejects oversized rects") {
    try {
        translate_into({0, 0, 801, 10}, {800, 600});
        FAIL("expected DoesNotFit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DoesNotFit);
    }
    CHECK_THROWS_AS(translate_into({0, 0, 10, 601}, {800, 600}), Error);
}

TEST_CASE("overlap and translate properties") {
    gen::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Rect a{gen::uniform(rng, -50, 250), gen::uniform(rng, -50, 250), gen::uniform(rng, 0, 120),
                     gen::uniform(rng, 0, 120)};
        const Rect b{gen::uniform(rng, -50, 250), gen::uniform(rng, -50, 250), gen::uniform(rng, 0, 120),
                     gen::uniform(rng, 0, 120)};
        CHECK(overlap_area(a, b) == overlap_area(b, a));
        CHECK(overlap_area(a, a) == a.area());
        CHECK(overlap_area(a, b) <= std::min(a.area(), b.area()));

        const DisplayBounds d{200, 200};
        const Rect once = translate_into(a, d);
        CHECK(d.contains(once));
        CHECK(once.size() == a.size());
        CHECK(translate_into(once, d) == once);
        // No smaller L-infinity move exists: each axis moved by its own minimum.
        const int need_x = a.x < 0 ? -a.x : std::max(0, a.right() - d.w);
        const int need_y = a.y < 0 ? -a.y : std::max(0, a.bottom() - d.h);
        CHECK(linf_distance(once.top_left(), a.top_left()) == std::max(need_x, need_y));
    }
}

TEST_CASE("union_area matches pixel count") {
    gen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rect> rects;
        const int n = gen::uniform(rng, 0, 6);
        for (int k = 0; k < n; ++k) {
            rects.push_back({gen::uniform(rng, 0, 30), gen::uniform(rng, 0, 30), gen::uniform(rng, 0, 20),
                             gen::uniform(rng, 0, 20)});
        }
        Area pixels = 0;
        for (int y = 0; y < 60; ++y) {
            for (int x = 0; x < 60; ++x) {
                for (const Rect& r : rects) {
                    if (r.contains(Point{x, y})) {
                        ++pixels;
                        break;
                    }
                }
            }
        }
        CHECK(union_area(rects) == pixels);
    }
}

TEST_CASE("fractions are reduced") {
    CHECK(Fraction::make(50, 100) == Fraction{1, 2});
    CHECK(Fraction::make(0, 7) == Fraction{0, 1});
    CHECK(Fraction::make(9, 9) == Fraction{1, 1});
}

}
