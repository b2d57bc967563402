#pragma once

#include "panekit/desktop.hpp"

namespace panekit {

enum class UnobscureStrategy { MoveAway, Disappear, Reduce, Auto };
enum class PlanAction { MoveTo, HideUntilActionEnd, ReduceTo };

std::string_view to_string(UnobscureStrategy strategy) noexcept;
std::string_view to_string(PlanAction action) noexcept;
UnobscureStrategy strategy_from_string(std::string_view name);

/// Candidate positions for MoveAway lie on this grid.
inline constexpr int kMoveAwayGridStep = 8;

struct UnobscurePlan {
    WindowId target;
    WindowId protected_window;
    UnobscureStrategy strategy = UnobscureStrategy::MoveAway; // concrete, never Auto
    PlanAction action = PlanAction::MoveTo;
    Rect rect;              // destination for MoveTo/ReduceTo; current rect for Hide
    Area residual_overlap = 0;

    // State the plan was computed against.
    Rect basis_rect;
    int basis_z = 0;

    friend bool operator==(const UnobscurePlan&, const UnobscurePlan&) = default;
};

/// Work out how to stop `target` covering `protected_window`. Pure read.
///
/// MoveAway scans the grid for on-screen positions and ranks them by overlap
/// with the protected window, then by area of the other exposed windows
/// covered, then by L-infinity distance from the current position, then
/// row-major. Reduce keeps the top-left corner and picks the largest
/// zero-overlap size not below min_size, falling back to min_size itself.
/// Auto takes the first of MoveAway, Reduce, Disappear that clears all
/// overlap. A target already clear of the protected window gets a no-op
/// MoveTo whatever the strategy.
///
/// Throws NoSuchWindow, SameWindow, NotExposed, LockedTarget.
UnobscurePlan plan_unobscure(const Desktop& desktop, WindowId target, WindowId protected_window,
                             UnobscureStrategy strategy);

/// Throws StalePlan when the target moved, resized, restacked or changed
/// state since planning.
void apply_plan(Desktop& desktop, const UnobscurePlan& plan);

/// Undo a Disappear or Reduce: re-expose at the saved rect. Throws
/// NothingToRestore.
void end_action(Desktop& desktop, WindowId target);

} // namespace panekit
