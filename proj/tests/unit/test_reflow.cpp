#include "panekit/reflow.hpp"
#include "panekit/visibility.hpp"

#include "../oracles/random_desk.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace panekit;
using testing::error_of;

TEST_SUITE("display-reflow") {

TEST_CASE("min_rect examples") {
    const Chrome chrome;
    CHECK(min_rect(std::vector<WindowComponent>{{"ok", 40, 20, true, 1}}, chrome) == Size{44, 44});
    CHECK(min_rect(std::vector<WindowComponent>{{"ok", 40, 20, true, 1}, {"wide", 100, 20, true, 2}}, chrome) ==
          Size{44, 44});
    CHECK(min_rect(std::vector<WindowComponent>{{"wide", 100, 20, true, 2}, {"ok", 40, 20, true, 1}}, chrome) ==
          Size{44, 44});
    CHECK(error_of([] { min_rect(std::vector<WindowComponent>{{"opt", 10, 10, false, 0}}, Chrome{}); }) ==
          ErrorCode::NoRequiredComponent);
}

TEST_CASE("layout order puts required components first") {
    const std::vector<WindowComponent> c{
        {"a", 1, 1, false, 0}, {"b", 1, 1, true, 5}, {"c", 1, 1, true, 2}, {"d", 1, 1, false, 0}};
    CHECK(layout_order(c) == std::vector<std::size_t>{2, 1, 0, 3});
}

TEST_CASE("components_visible counts the fitting prefix") {
    const std::vector<WindowComponent> c{{"ok", 40, 20, true, 1}, {"list", 60, 50, false, 2}};
    CHECK(components_visible(c, {44, 44}, Chrome{}) == 1);
    CHECK(components_visible(c, {64, 94}, Chrome{}) == 2);
    CHECK(components_visible(c, {63, 94}, Chrome{}) == 1);
    CHECK(components_visible(c, {43, 94}, Chrome{}) == 0);
}

TEST_CASE("fixed window off the new display is moved, not shrunk") {
    Desktop d({1600, 1200});
    const auto id = d.create_window({1200, 900, 300, 200}, {44, 44}, {1000, 1000}, testing::button(), Anchor::Fixed);
    const auto report = reflow(d, {800, 600});
    CHECK(d.window(id).rect == Rect{500, 400, 300, 200});
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].moved_into_area);
    CHECK_FALSE(report.entries[0].shrunk_to_min);
    CHECK(d.display().contains(d.window(id).rect));
}

TEST_CASE("oversized window is shrunk to the display width") {
    Desktop d({800, 600});
    const auto id = d.create_window({0, 0, 600, 100}, {44, 44}, {1000, 1000}, testing::button(), Anchor::Fixed);
    const auto report = reflow(d, {400, 300});
    CHECK(d.window(id).rect == Rect{0, 0, 400, 100});
    CHECK_FALSE(report.entries[0].shrunk_to_min);
    CHECK_FALSE(report.entries[0].moved_into_area);
}

TEST_CASE("shrinking to the minimum is reported") {
    Desktop d({800, 600});
    const auto id = d.create_window({0, 0, 600, 100}, {400, 44}, {1000, 1000}, testing::button(), Anchor::Fixed);
    const auto report = reflow(d, {400, 300});
    CHECK(d.window(id).rect == Rect{0, 0, 400, 100});
    CHECK(report.entries[0].shrunk_to_min);
}

TEST_CASE("proportional window scales position and grows into new space") {
    Desktop d({800, 600});
    const std::vector<WindowComponent> comps{
        {"ok", 40, 20, true, 1}, {"list", 60, 50, false, 2}, {"preview", 200, 100, false, 3}};
    const auto id = d.create_window({100, 100, 100, 100}, {44, 44}, {500, 500}, comps, Anchor::Proportional);
    CHECK(components_visible(comps, {100, 100}, Chrome{}) == 2);
    const auto report = reflow(d, {1600, 1200});
    // content for all three: 200 wide, 20+50+100 tall; plus 4 + 24 of chrome
    CHECK(d.window(id).rect == Rect{200, 200, 204, 194});
    CHECK(report.entries[0].components_visible == 3);
}

TEST_CASE("growth respects max_size") {
    Desktop d({800, 600});
    const std::vector<WindowComponent> comps{
        {"ok", 40, 20, true, 1}, {"list", 60, 50, false, 2}, {"preview", 200, 100, false, 3}};
    const auto id = d.create_window({100, 100, 100, 100}, {44, 44}, {150, 500}, comps, Anchor::Proportional);
    reflow(d, {1600, 1200});
    CHECK(d.window(id).rect == Rect{200, 200, 100, 100});
}

TEST_CASE("DisplayTooSmall leaves the desktop untouched") {
    Desktop d({800, 600});
    d.create_window({0, 0, 300, 300}, {300, 300}, {1000, 1000}, testing::button(), Anchor::Fixed);
    const auto before = d.windows();
    CHECK(error_of([&] { reflow(d, {200, 200}); }) == ErrorCode::DisplayTooSmall);
    CHECK(d.windows() == before);
    CHECK(d.display() == DisplayBounds{800, 600});
    CHECK(error_of([&] { reflow(d, {0, 200}); }) == ErrorCode::BadDisplay);
}

TEST_CASE("icons follow the bottom edge and keep their home rect in range") {
    Desktop d({800, 600});
    const auto id = d.create_window({600, 400, 150, 150}, {44, 44}, {1000, 1000}, testing::button(), Anchor::Fixed);
    set_mode(d, id, VisibilityMode::timed_icon(10));
    tick(d, 10);
    REQUIRE(d.window(id).state == WindowState::Icon);
    CHECK(d.window(id).rect == Rect{0, 536, 64, 64});
    reflow(d, {400, 300});
    CHECK(d.window(id).rect == Rect{0, 236, 64, 64});
    CHECK(d.window(id).saved_rect == Rect{250, 150, 150, 150});
    expose(d, id);
    CHECK(d.window(id).rect == Rect{250, 150, 150, 150});
}

TEST_CASE("random reflows: containment, minimums, identity, fixed windows, monotone growth") {
    gen::Rng rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        Desktop d = gen::desk(rng, {200, 200}, gen::uniform(rng, 1, 6));

        Desktop same = d;
        reflow(same, d.display());
        CHECK(same.windows() == d.windows());

        const DisplayBounds next{gen::uniform(rng, 60, 400), gen::uniform(rng, 60, 400)};
        Desktop after = d;
        try {
            reflow(after, next);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DisplayTooSmall);
            continue;
        }
        for (const auto& [id, w] : after.windows()) {
            CHECK(next.contains(w.rect));
            CHECK(min_rect(w, Chrome{}).fits_within(w.rect.size()));
            const Window& old = d.window(id);
            if (old.anchor == Anchor::Fixed && next.contains(old.rect)) {
                CHECK(w == old);
            }
        }
        CHECK_FALSE(after.check_invariants());
    }
}

TEST_CASE("growing the display never hides components") {
    gen::Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Desktop d = gen::desk(rng, {200, 200}, gen::uniform(rng, 1, 5));
        DisplayBounds size = d.display();
        for (int step = 0; step < 4; ++step) {
            std::map<WindowId, int> before;
            for (const auto& [id, w] : d.windows()) {
                before[id] = components_visible(w.components, w.rect.size(), Chrome{});
            }
            size = {size.w + gen::uniform(rng, 0, 150), size.h + gen::uniform(rng, 0, 150)};
            const auto report = reflow(d, size);
            for (const auto& e : report.entries) {
                CHECK(e.components_visible >= before[e.window]);
            }
        }
    }
}

}
