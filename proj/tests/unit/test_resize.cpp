#include "panekit/resize_limits.hpp"

#include "../oracles/random_desk.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace panekit;
using testing::error_of;

TEST_SUITE("resize-limits") {

TEST_CASE("drag within limits gives no feedback") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {0, 0, 100, 100}, {80, 80}, {200, 200});
    const auto r = resize_drag(d, id, Edge::Right, 50, 0);
    CHECK(r.applied == Rect{0, 0, 150, 100});
    CHECK_FALSE(r.feedback);
    CHECK(d.window(id).rect == r.applied);
}

TEST_CASE("drag past max width clamps and reports MaxWidth") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {0, 0, 100, 100}, {80, 80}, {200, 200});
    const auto r = resize_drag(d, id, Edge::Right, 150, 0);
    CHECK(r.applied.w == 200);
    REQUIRE(r.feedback);
    CHECK(r.feedback->limited == std::vector<Limit>{Limit::MaxWidth});
    CHECK(r.feedback->window == id);
}

TEST_CASE("corner drag below min clamps both axes") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {0, 0, 100, 100}, {80, 80}, {200, 200});
    const auto r = resize_drag(d, id, Edge::BottomRight, -50, -50);
    CHECK(r.applied == Rect{0, 0, 80, 80});
    REQUIRE(r.feedback);
    CHECK(r.feedback->limited == std::vector<Limit>{Limit::MinWidth, Limit::MinHeight});
}

TEST_CASE("left and top drags keep the opposite edge fixed") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {100, 100, 100, 100}, {80, 80}, {200, 200});
    auto r = resize_drag(d, id, Edge::Left, 50, 0); // would shrink to 50
    CHECK(r.applied == Rect{120, 100, 80, 100});
    CHECK(r.applied.right() == 200);
    r = resize_drag(d, id, Edge::TopLeft, -500, -500);
    CHECK(r.applied.right() == 200);
    CHECK(r.applied.bottom() == 200);
    CHECK(r.applied.size() == Size{200, 200});
    REQUIRE(r.feedback);
    CHECK(r.feedback->limited == std::vector<Limit>{Limit::MaxWidth, Limit::MaxHeight});
}

TEST_CASE("feedback carries the clock") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {0, 0, 100, 100}, {80, 80}, {200, 200});
    d.advance_clock(1234);
    const auto r = resize_drag(d, id, Edge::Bottom, 0, 999);
    REQUIRE(r.feedback);
    CHECK(r.feedback->at_clock == 1234);
    CHECK(r.feedback->limited == std::vector<Limit>{Limit::MaxHeight});
}

TEST_CASE("errors") {
    Desktop d({800, 600});
    const auto id = testing::add(d, {0, 0, 100, 100});
    CHECK(error_of([&] { resize_drag(d, WindowId{9}, Edge::Left, 1, 1); }) == ErrorCode::NoSuchWindow);
    d.set_state(id, WindowState::Invisible);
    CHECK(error_of([&] { resize_drag(d, id, Edge::Left, 1, 1); }) == ErrorCode::NotExposed);
}

TEST_CASE("random drags: clamp, iff-feedback, idempotence, anchoring") {
    gen::Rng rng(99);
    const Edge edges[] = {Edge::Left, Edge::Right, Edge::Top, Edge::Bottom,
                          Edge::TopLeft, Edge::TopRight, Edge::BottomLeft, Edge::BottomRight};
    for (int i = 0; i < 3000; ++i) {
        Desktop d({800, 600});
        const auto id = gen::add(d, gen::window(rng, d.display()));
        const Window before = d.window(id);
        const Edge edge = edges[gen::uniform(rng, 0, 7)];
        const auto r = resize_drag(d, id, edge, gen::uniform(rng, -500, 500), gen::uniform(rng, -500, 500));
        const Window& w = d.window(id);
        CHECK(w.min_size.fits_within(r.applied.size()));
        CHECK(r.applied.size().fits_within(w.max_size));
        CHECK(r.feedback.has_value() == (r.applied != r.requested));
        if (r.feedback) {
            CHECK_FALSE(r.feedback->limited.empty());
        }
        const bool horizontal_left = edge == Edge::Left || edge == Edge::TopLeft || edge == Edge::BottomLeft;
        const bool vertical_top = edge == Edge::Top || edge == Edge::TopLeft || edge == Edge::TopRight;
        if (horizontal_left) {
            CHECK(r.applied.right() == before.rect.right());
        } else {
            CHECK(r.applied.x == before.rect.x);
        }
        if (vertical_top) {
            CHECK(r.applied.bottom() == before.rect.bottom());
        } else {
            CHECK(r.applied.y == before.rect.y);
        }
        const auto again = resize_drag(d, id, edge, 0, 0);
        CHECK(again.applied == r.applied);
        CHECK_FALSE(again.feedback);
    }
}

}
