#pragma once

#include "panekit/geom.hpp"
#include "panekit/input_state.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace panekit {

enum class Anchor { Proportional, Fixed };
enum class WindowState { Exposed, Invisible, Icon, HiddenForAction };

std::string_view to_string(Anchor anchor) noexcept;
std::string_view to_string(WindowState state) noexcept;

/// A content element whose visibility defines the window's useful size.
/// Lower priority values are more integral.
struct WindowComponent {
    std::string name;
    int w = 0;
    int h = 0;
    bool required = false;
    int priority = 0;

    friend bool operator==(const WindowComponent&, const WindowComponent&) = default;
};

enum class ModeKind { Normal, Timed, Locked, TimedIcon };

std::string_view to_string(ModeKind kind) noexcept;

struct VisibilityMode {
    ModeKind kind = ModeKind::Normal;
    std::int64_t t_show = 0; // Timed and TimedIcon only

    friend bool operator==(const VisibilityMode&, const VisibilityMode&) = default;

    static VisibilityMode normal() { return {}; }
    static VisibilityMode locked() { return {ModeKind::Locked, 0}; }
    static VisibilityMode timed(std::int64_t t_show) { return {ModeKind::Timed, t_show}; }
    static VisibilityMode timed_icon(std::int64_t t_show) { return {ModeKind::TimedIcon, t_show}; }

    bool timed_class() const noexcept { return kind == ModeKind::Timed || kind == ModeKind::TimedIcon; }
};

struct Window {
    WindowId id;
    Rect rect;
    int z = 0; // dense rank, 0 = bottom
    Size min_size;
    Size max_size;
    std::vector<WindowComponent> components;
    VisibilityMode mode;
    std::optional<std::int64_t> exposure_started;
    WindowState state = WindowState::Exposed;
    std::optional<Rect> saved_rect;
    Anchor anchor = Anchor::Fixed;

    friend bool operator==(const Window&, const Window&) = default;

    bool exposed() const noexcept { return state == WindowState::Exposed; }
    bool locked() const noexcept { return mode.kind == ModeKind::Locked; }

    /// The rect the window occupies when shown: icons keep theirs in saved_rect.
    const Rect& home_rect() const noexcept {
        return state == WindowState::Icon && saved_rect ? *saved_rect : rect;
    }
};

/// Window decoration. Content region = rect minus borders and title bar.
struct Chrome {
    int title_bar = 20;
    int border = 2;
};

struct EngineConfig {
    Chrome chrome;
    int icon_size = 64;
    LassoConfig lasso;
    ChordBindings bindings;
};

class Desktop {
public:
    explicit Desktop(DisplayBounds display, EngineConfig config = {});

    const EngineConfig& config() const noexcept { return config_; }
    const DisplayBounds& display() const noexcept { return display_; }
    std::int64_t clock() const noexcept { return clock_; }

    WindowId create_window(const Rect& rect, Size min_size, Size max_size,
                           std::vector<WindowComponent> components, Anchor anchor = Anchor::Fixed);
    void destroy(WindowId id);

    /// Moves `id` to the top of its layer. Locked windows form a layer above
    /// all others.
    void raise(WindowId id);

    std::optional<WindowId> hit_test(Point p) const;
    Fraction occluded_fraction(WindowId id) const;

    bool contains(WindowId id) const noexcept { return windows_.count(id) != 0; }
    const Window* find(WindowId id) const noexcept;
    const Window& window(WindowId id) const;
    Window& window_mut(WindowId id);
    const std::map<WindowId, Window>& windows() const noexcept { return windows_; }

    /// Bottom to top.
    const std::vector<WindowId>& z_order() const noexcept { return z_order_; }

    /// Rects of exposed windows stacked above `id`.
    std::vector<Rect> exposed_rects_above(WindowId id) const;

    ChordState& input() noexcept { return input_; }
    const ChordState& input() const noexcept { return input_; }
    PointerSampleQueue& lasso() noexcept { return lasso_; }
    const PointerSampleQueue& lasso() const noexcept { return lasso_; }

    /// Last absolute pointer location seen by the engine.
    Point pointer() const noexcept { return pointer_; }
    void set_pointer(Point p) noexcept { pointer_ = p; }

    // Mutators used by the policy modules.
    void set_display(DisplayBounds display);
    void advance_clock(std::int64_t t);
    void set_state(WindowId id, WindowState state);
    void restack(WindowId id);
    void repack_icons();
    Rect icon_slot(std::size_t index) const noexcept;
    /// Drops the input phase if it no longer names a live exposed window.
    void revalidate_input() noexcept;

    /// Empty when every structural invariant holds; otherwise the first violation.
    std::optional<std::string> check_invariants() const;

private:
    void redensify() noexcept;

    EngineConfig config_;
    DisplayBounds display_;
    std::int64_t clock_ = 0;
    std::uint32_t next_id_ = 1;
    std::map<WindowId, Window> windows_;
    std::vector<WindowId> z_order_;
    ChordState input_;
    PointerSampleQueue lasso_;
    Point pointer_;
};

} // namespace panekit
