#include "panekit/occlusion.hpp"

#include "panekit/error.hpp"

#include <array>
#include <tuple>
#include <vector>

namespace panekit {

std::string_view to_string(UnobscureStrategy strategy) noexcept {
    switch (strategy) {
    case UnobscureStrategy::MoveAway: return "move_away";
    case UnobscureStrategy::Disappear: return "disappear";
    case UnobscureStrategy::Reduce: return "reduce";
    case UnobscureStrategy::Auto: return "auto";
    }
    return "?";
}

std::string_view to_string(PlanAction action) noexcept {
    switch (action) {
    case PlanAction::MoveTo: return "move_to";
    case PlanAction::HideUntilActionEnd: return "hide_until_action_end";
    case PlanAction::ReduceTo: return "reduce_to";
    }
    return "?";
}

UnobscureStrategy strategy_from_string(std::string_view name) {
    for (auto s : {UnobscureStrategy::MoveAway, UnobscureStrategy::Disappear, UnobscureStrategy::Reduce,
                   UnobscureStrategy::Auto}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error(ErrorCode::BadConfig, "unknown strategy '" + std::string(name) + "'");
}

namespace {

UnobscurePlan base_plan(const Window& target, WindowId protected_window) {
    UnobscurePlan plan;
    plan.target = target.id;
    plan.protected_window = protected_window;
    plan.rect = target.rect;
    plan.basis_rect = target.rect;
    plan.basis_z = target.z;
    return plan;
}

UnobscurePlan plan_move_away(const Desktop& desktop, const Window& target, const Window& guard) {
    const DisplayBounds& display = desktop.display();
    std::vector<Rect> others;
    for (const auto& [id, w] : desktop.windows()) {
        if (id != target.id && id != guard.id && w.exposed()) {
            others.push_back(w.rect);
        }
    }
    auto score = [&](const Rect& r) {
        std::vector<Rect> clipped;
        for (const Rect& o : others) {
            if (auto part = intersection(o, r)) {
                clipped.push_back(*part);
            }
        }
        return std::tuple{overlap_area(r, guard.rect), union_area(clipped),
                          linf_distance(r.top_left(), target.rect.top_left()), r.y, r.x};
    };

    const Area current_overlap = overlap_area(target.rect, guard.rect);
    std::optional<Rect> best;
    decltype(score(target.rect)) best_score{};
    auto consider = [&](const Rect& r) {
        const auto s = score(r);
        if (!best || s < best_score) {
            best = r;
            best_score = s;
        }
    };
    if (display.contains(target.rect)) {
        consider(target.rect);
    }
    const int w = target.rect.w;
    const int h = target.rect.h;
    for (int y = 0; y + h <= display.h; y += kMoveAwayGridStep) {
        for (int x = 0; x + w <= display.w; x += kMoveAwayGridStep) {
            consider(Rect{x, y, w, h});
        }
    }

    UnobscurePlan plan = base_plan(target, guard.id);
    plan.strategy = UnobscureStrategy::MoveAway;
    plan.action = PlanAction::MoveTo;
    if (best && std::get<0>(best_score) <= current_overlap) {
        plan.rect = *best;
        plan.residual_overlap = std::get<0>(best_score);
    } else {
        plan.residual_overlap = current_overlap;
    }
    return plan;
}

UnobscurePlan plan_reduce(const Window& target, const Window& guard) {
    const Rect& cur = target.rect;
    const Rect& p = guard.rect;
    UnobscurePlan plan = base_plan(target, guard.id);
    plan.strategy = UnobscureStrategy::Reduce;
    plan.action = PlanAction::ReduceTo;

    // With the top-left fixed, zero overlap means ending before the protected
    // rect starts on at least one axis.
    std::optional<Rect> best;
    const std::array<Rect, 2> options{
        Rect{cur.x, cur.y, std::min(cur.w, p.x - cur.x), cur.h},
        Rect{cur.x, cur.y, cur.w, std::min(cur.h, p.y - cur.y)},
    };
    for (const Rect& r : options) {
        if (!target.min_size.fits_within(r.size()) || overlap_area(r, p) != 0) {
            continue;
        }
        if (!best || r.area() > best->area()) {
            best = r;
        }
    }
    plan.rect = best.value_or(Rect{cur.x, cur.y, target.min_size.w, target.min_size.h});
    plan.residual_overlap = overlap_area(plan.rect, p);
    return plan;
}

UnobscurePlan plan_disappear(const Window& target, WindowId guard) {
    UnobscurePlan plan = base_plan(target, guard);
    plan.strategy = UnobscureStrategy::Disappear;
    plan.action = PlanAction::HideUntilActionEnd;
    plan.residual_overlap = 0;
    return plan;
}

} // namespace

UnobscurePlan plan_unobscure(const Desktop& desktop, WindowId target_id, WindowId protected_id,
                             UnobscureStrategy strategy) {
    if (target_id == protected_id) {
        throw Error(ErrorCode::SameWindow, "target and protected window are the same");
    }
    const Window& target = desktop.window(target_id);
    const Window& guard = desktop.window(protected_id);
    if (!target.exposed() || !guard.exposed()) {
        throw Error(ErrorCode::NotExposed, "both windows must be exposed to plan");
    }
    if (target.locked()) {
        throw Error(ErrorCode::LockedTarget, "locked windows cannot be unobscured away");
    }

    if (overlap_area(target.rect, guard.rect) == 0) {
        UnobscurePlan plan = base_plan(target, protected_id);
        plan.strategy = strategy == UnobscureStrategy::Auto ? UnobscureStrategy::MoveAway : strategy;
        plan.action = PlanAction::MoveTo;
        return plan;
    }

    switch (strategy) {
    case UnobscureStrategy::MoveAway: return plan_move_away(desktop, target, guard);
    case UnobscureStrategy::Reduce: return plan_reduce(target, guard);
    case UnobscureStrategy::Disappear: return plan_disappear(target, protected_id);
    case UnobscureStrategy::Auto: break;
    }
    if (auto moved = plan_move_away(desktop, target, guard); moved.residual_overlap == 0) {
        return moved;
    }
    if (auto reduced = plan_reduce(target, guard); reduced.residual_overlap == 0) {
        return reduced;
    }
    return plan_disappear(target, protected_id);
}

void apply_plan(Desktop& desktop, const UnobscurePlan& plan) {
    const Window& current = desktop.window(plan.target);
    if (current.rect != plan.basis_rect || current.z != plan.basis_z || !current.exposed()) {
        throw Error(ErrorCode::StalePlan, "target changed since the plan was made");
    }
    Window& w = desktop.window_mut(plan.target);
    switch (plan.action) {
    case PlanAction::MoveTo:
        w.rect = plan.rect;
        break;
    case PlanAction::ReduceTo:
        if (!w.saved_rect) {
            w.saved_rect = w.rect;
        }
        w.rect = plan.rect;
        break;
    case PlanAction::HideUntilActionEnd:
        if (!w.saved_rect) {
            w.saved_rect = w.rect;
        }
        desktop.set_state(plan.target, WindowState::HiddenForAction);
        desktop.revalidate_input();
        break;
    }
}

void end_action(Desktop& desktop, WindowId target) {
    Window& w = desktop.window_mut(target);
    const bool hidden = w.state == WindowState::HiddenForAction;
    if (!hidden && !(w.exposed() && w.saved_rect)) {
        throw Error(ErrorCode::NothingToRestore, "window has nothing to restore");
    }
    if (w.saved_rect) {
        w.rect = *w.saved_rect;
        w.saved_rect.reset();
    }
    if (hidden) {
        desktop.set_state(target, WindowState::Exposed);
    }
}

} // namespace panekit
