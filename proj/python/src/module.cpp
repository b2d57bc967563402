#include "panekit/bridge.hpp"
#include "panekit/chord.hpp"
#include "panekit/error.hpp"
#include "panekit/lasso.hpp"
#include "panekit/occlusion.hpp"
#include "panekit/reflow.hpp"
#include "panekit/resize_limits.hpp"
#include "panekit/trace.hpp"
#include "panekit/visibility.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace panekit;

// Window ids cross the boundary as plain ints.
namespace pybind11::detail {
template <>
struct type_caster<WindowId> {
    PYBIND11_TYPE_CASTER(WindowId, const_name("int"));

    bool load(handle src, bool convert) {
        make_caster<std::uint32_t> inner;
        if (!inner.load(src, convert)) {
            return false;
        }
        value = WindowId{cast_op<std::uint32_t>(inner)};
        return true;
    }
    static handle cast(WindowId id, return_value_policy, handle) { return PyLong_FromUnsignedLong(id.value); }
};
} // namespace pybind11::detail

namespace {

std::string repr_of(const char* name, std::initializer_list<int> fields) {
    std::ostringstream s;
    s << name << "(";
    bool first = true;
    for (int f : fields) {
        s << (first ? "" : ", ") << f;
        first = false;
    }
    s << ")";
    return s.str();
}

py::dict window_dict(const Window& w) {
    py::dict d;
    d["id"] = w.id;
    d["rect"] = w.rect;
    d["z"] = w.z;
    d["min_size"] = w.min_size;
    d["max_size"] = w.max_size;
    d["state"] = w.state;
    d["mode"] = w.mode;
    d["exposure_started"] = w.exposure_started;
    d["saved_rect"] = w.saved_rect;
    d["anchor"] = w.anchor;
    d["components"] = w.components;
    return d;
}

} // namespace

PYBIND11_MODULE(_panekit, m) {
    m.doc() = "panekit window policy engine";

    // args are (code, message)
    static PyObject* error_type = PyErr_NewException("panekit.PanekitError", PyExc_RuntimeError, nullptr);
    m.attr("PanekitError") = py::reinterpret_borrow<py::object>(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const panekit::Error& e) {
            py::object args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
            PyErr_SetObject(error_type, args.ptr());
        } catch (const TraceError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // geometry
    py::class_<Point>(m, "Point")
        .def(py::init<int, int>(), py::arg("x"), py::arg("y"))
        .def(py::init([](py::tuple t) { return Point{t[0].cast<int>(), t[1].cast<int>()}; }))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def(py::self == py::self)
        .def("__repr__", [](const Point& p) { return repr_of("Point", {p.x, p.y}); });
    py::implicitly_convertible<py::tuple, Point>();

    py::class_<Size>(m, "Size")
        .def(py::init<int, int>(), py::arg("w"), py::arg("h"))
        .def(py::init([](py::tuple t) { return Size{t[0].cast<int>(), t[1].cast<int>()}; }))
        .def_readwrite("w", &Size::w)
        .def_readwrite("h", &Size::h)
        .def(py::self == py::self)
        .def("__repr__", [](const Size& s) { return repr_of("Size", {s.w, s.h}); });
    py::implicitly_convertible<py::tuple, Size>();

    py::class_<Rect>(m, "Rect")
        .def(py::init<int, int, int, int>(), py::arg("x"), py::arg("y"), py::arg("w"), py::arg("h"))
        .def(py::init([](py::tuple t) {
            return Rect{t[0].cast<int>(), t[1].cast<int>(), t[2].cast<int>(), t[3].cast<int>()};
        }))
        .def_readwrite("x", &Rect::x)
        .def_readwrite("y", &Rect::y)
        .def_readwrite("w", &Rect::w)
        .def_readwrite("h", &Rect::h)
        .def_property_readonly("area", &Rect::area)
        .def(py::self == py::self)
        .def("__repr__", [](const Rect& r) { return repr_of("Rect", {r.x, r.y, r.w, r.h}); });
    py::implicitly_convertible<py::tuple, Rect>();

    py::class_<DisplayBounds>(m, "DisplayBounds")
        .def(py::init<int, int>(), py::arg("w"), py::arg("h"))
        .def(py::init([](py::tuple t) { return DisplayBounds{t[0].cast<int>(), t[1].cast<int>()}; }))
        .def_readwrite("w", &DisplayBounds::w)
        .def_readwrite("h", &DisplayBounds::h)
        .def(py::self == py::self)
        .def("__repr__", [](const DisplayBounds& d) { return repr_of("DisplayBounds", {d.w, d.h}); });
    py::implicitly_convertible<py::tuple, DisplayBounds>();

    m.def("union_area", [](const std::vector<Rect>& rects) { return union_area(rects); });
    m.def("translate_into", &translate_into, py::arg("rect"), py::arg("display"));

    // enums
    py::enum_<Edge>(m, "Edge")
        .value("LEFT", Edge::Left)
        .value("RIGHT", Edge::Right)
        .value("TOP", Edge::Top)
        .value("BOTTOM", Edge::Bottom)
        .value("TOP_LEFT", Edge::TopLeft)
        .value("TOP_RIGHT", Edge::TopRight)
        .value("BOTTOM_LEFT", Edge::BottomLeft)
        .value("BOTTOM_RIGHT", Edge::BottomRight);
    py::enum_<WindowState>(m, "WindowState")
        .value("EXPOSED", WindowState::Exposed)
        .value("INVISIBLE", WindowState::Invisible)
        .value("ICON", WindowState::Icon)
        .value("HIDDEN_FOR_ACTION", WindowState::HiddenForAction);
    py::enum_<Anchor>(m, "Anchor").value("PROPORTIONAL", Anchor::Proportional).value("FIXED", Anchor::Fixed);
    py::enum_<ModeKind>(m, "ModeKind")
        .value("NORMAL", ModeKind::Normal)
        .value("TIMED", ModeKind::Timed)
        .value("LOCKED", ModeKind::Locked)
        .value("TIMED_ICON", ModeKind::TimedIcon);
    py::enum_<UnobscureStrategy>(m, "UnobscureStrategy")
        .value("MOVE_AWAY", UnobscureStrategy::MoveAway)
        .value("DISAPPEAR", UnobscureStrategy::Disappear)
        .value("REDUCE", UnobscureStrategy::Reduce)
        .value("AUTO", UnobscureStrategy::Auto);
    py::enum_<PlanAction>(m, "PlanAction")
        .value("MOVE_TO", PlanAction::MoveTo)
        .value("HIDE_UNTIL_ACTION_END", PlanAction::HideUntilActionEnd)
        .value("REDUCE_TO", PlanAction::ReduceTo);
    py::enum_<Limit>(m, "Limit")
        .value("MAX_WIDTH", Limit::MaxWidth)
        .value("MAX_HEIGHT", Limit::MaxHeight)
        .value("MIN_WIDTH", Limit::MinWidth)
        .value("MIN_HEIGHT", Limit::MinHeight);

    // wm-core
    py::class_<WindowComponent>(m, "WindowComponent")
        .def(py::init([](std::string name, int w, int h, bool required, int priority) {
                 return WindowComponent{std::move(name), w, h, required, priority};
             }),
             py::arg("name"), py::arg("w"), py::arg("h"), py::arg("required") = false, py::arg("priority") = 0)
        .def_readwrite("name", &WindowComponent::name)
        .def_readwrite("w", &WindowComponent::w)
        .def_readwrite("h", &WindowComponent::h)
        .def_readwrite("required", &WindowComponent::required)
        .def_readwrite("priority", &WindowComponent::priority)
        .def(py::self == py::self);

    py::class_<VisibilityMode>(m, "VisibilityMode")
        .def_static("normal", &VisibilityMode::normal)
        .def_static("locked", &VisibilityMode::locked)
        .def_static("timed", &VisibilityMode::timed, py::arg("t_show"))
        .def_static("timed_icon", &VisibilityMode::timed_icon, py::arg("t_show"))
        .def_readonly("kind", &VisibilityMode::kind)
        .def_readonly("t_show", &VisibilityMode::t_show)
        .def(py::self == py::self);

    py::class_<LassoConfig>(m, "LassoConfig")
        .def(py::init([](std::size_t n_max, std::int64_t t_lasso, int proximity_d) {
                 return LassoConfig{n_max, t_lasso, proximity_d};
             }),
             py::arg("n_max") = 32, py::arg("t_lasso") = 500, py::arg("proximity_d") = 24)
        .def_readwrite("n_max", &LassoConfig::n_max)
        .def_readwrite("t_lasso", &LassoConfig::t_lasso)
        .def_readwrite("proximity_d", &LassoConfig::proximity_d);

    py::class_<Desktop>(m, "Desktop")
        .def(py::init([](DisplayBounds display, std::optional<LassoConfig> lasso) {
                 EngineConfig config;
                 if (lasso) {
                     config.lasso = *lasso;
                 }
                 return Desktop(display, config);
             }),
             py::arg("display"), py::arg("lasso") = py::none())
        .def_property_readonly("display", &Desktop::display)
        .def_property_readonly("clock", &Desktop::clock)
        .def(
            "create_window",
            [](Desktop& d, const Rect& rect, Size min_size, Size max_size, std::vector<WindowComponent> components,
               Anchor anchor) { return d.create_window(rect, min_size, max_size, std::move(components), anchor); },
            py::arg("rect"), py::arg("min_size"), py::arg("max_size"), py::arg("components"),
            py::arg("anchor") = Anchor::Fixed)
        .def("destroy", &Desktop::destroy, py::arg("id"))
        .def("raise_window", &Desktop::raise, py::arg("id"))
        .def("hit_test", &Desktop::hit_test, py::arg("point"))
        .def(
            "occluded_fraction",
            [](const Desktop& d, WindowId id) {
                const Fraction f = d.occluded_fraction(id);
                return py::module_::import("fractions").attr("Fraction")(f.num, f.den);
            },
            py::arg("id"))
        .def("window", [](const Desktop& d, WindowId id) { return window_dict(d.window(id)); }, py::arg("id"))
        .def("window_ids",
             [](const Desktop& d) {
                 std::vector<WindowId> ids;
                 for (const auto& [id, w] : d.windows()) {
                     ids.push_back(id);
                 }
                 return ids;
             })
        .def_property_readonly("z_order", &Desktop::z_order)
        .def("check_invariants", &Desktop::check_invariants)
        .def("snapshot", [](const Desktop& d) { return serialize_snapshot(d); })
        .def("copy", [](const Desktop& d) { return Desktop(d); })
        .def("__copy__", [](const Desktop& d) { return Desktop(d); });

    // resize-limits
    py::class_<LimitFeedback>(m, "LimitFeedback")
        .def_readonly("window", &LimitFeedback::window)
        .def_readonly("limited", &LimitFeedback::limited)
        .def_readonly("at_clock", &LimitFeedback::at_clock);
    py::class_<ResizeResult>(m, "ResizeResult")
        .def_readonly("requested", &ResizeResult::requested)
        .def_readonly("applied", &ResizeResult::applied)
        .def_readonly("feedback", &ResizeResult::feedback);
    m.def("resize_drag", &resize_drag, py::arg("desktop"), py::arg("id"), py::arg("edge"), py::arg("dx"),
          py::arg("dy"));

    // occlusion-policy
    py::class_<UnobscurePlan>(m, "UnobscurePlan")
        .def_readonly("target", &UnobscurePlan::target)
        .def_readonly("protected_window", &UnobscurePlan::protected_window)
        .def_readonly("strategy", &UnobscurePlan::strategy)
        .def_readonly("action", &UnobscurePlan::action)
        .def_readonly("rect", &UnobscurePlan::rect)
        .def_readonly("residual_overlap", &UnobscurePlan::residual_overlap)
        .def(py::self == py::self);
    m.def("plan_unobscure", &plan_unobscure, py::arg("desktop"), py::arg("target"), py::arg("protected_window"),
          py::arg("strategy") = UnobscureStrategy::Auto);
    m.def("apply_plan", &apply_plan, py::arg("desktop"), py::arg("plan"));
    m.def("end_action", &end_action, py::arg("desktop"), py::arg("target"));

    // chord-control
    py::class_<InputEvent>(m, "InputEvent")
        .def_static("both_down", &InputEvent::both_down, py::arg("pointer"))
        .def_static("both_up", &InputEvent::both_up)
        .def_static("key_move", &InputEvent::key_move, py::arg("pointer"))
        .def_static("key_resize", &InputEvent::key_resize, py::arg("pointer"))
        .def_static("move", &InputEvent::move, py::arg("dx"), py::arg("dy"))
        .def_static("escape", &InputEvent::escape);
    m.def(
        "handle_chord_input",
        [](Desktop& d, const InputEvent& e) {
            handle_chord_input(d, e);
            const ChordPhase& p = d.input().phase;
            py::dict out;
            out["phase"] = p.kind == ChordPhaseKind::Idle     ? "idle"
                           : p.kind == ChordPhaseKind::Moving ? "moving"
                                                              : "resizing";
            if (p.kind != ChordPhaseKind::Idle) {
                out["window"] = p.window;
            }
            if (p.kind == ChordPhaseKind::Resizing) {
                out["part"] = p.part;
            }
            return out;
        },
        py::arg("desktop"), py::arg("event"), "Feed one input event; returns the resulting phase.");

    // display-reflow
    m.def("min_rect", [](const std::vector<WindowComponent>& c) { return min_rect(c, Chrome{}); },
          py::arg("components"));
    py::class_<ReflowEntry>(m, "ReflowEntry")
        .def_readonly("window", &ReflowEntry::window)
        .def_readonly("old_rect", &ReflowEntry::old_rect)
        .def_readonly("new_rect", &ReflowEntry::new_rect)
        .def_readonly("shrunk_to_min", &ReflowEntry::shrunk_to_min)
        .def_readonly("moved_into_area", &ReflowEntry::moved_into_area)
        .def_readonly("components_visible", &ReflowEntry::components_visible);
    py::class_<ReflowReport>(m, "ReflowReport")
        .def_readonly("old_display", &ReflowReport::old_display)
        .def_readonly("new_display", &ReflowReport::new_display)
        .def_readonly("entries", &ReflowReport::entries);
    m.def("reflow", &reflow, py::arg("desktop"), py::arg("display"));

    // lasso-select
    py::class_<RationalPoint>(m, "RationalPoint")
        .def_readonly("x", &RationalPoint::x)
        .def_readonly("y", &RationalPoint::y)
        .def_readonly("den", &RationalPoint::den)
        .def(py::self == py::self)
        .def("__repr__", [](const RationalPoint& p) {
            return "RationalPoint(" + std::to_string(p.x) + "/" + std::to_string(p.den) + ", " +
                   std::to_string(p.y) + "/" + std::to_string(p.den) + ")";
        });
    py::class_<BorderSelection>(m, "BorderSelection")
        .def_readonly("window", &BorderSelection::window)
        .def_readonly("part", &BorderSelection::part)
        .def_readonly("at_clock", &BorderSelection::at_clock)
        .def_readonly("span_start", &BorderSelection::span_start);
    m.def(
        "crossings",
        [](const std::vector<Point>& path, Point a, Point b) { return crossings(path, EdgeSegment{a, b}); },
        py::arg("polyline"), py::arg("a"), py::arg("b"));
    m.def("push_sample", &push_sample, py::arg("desktop"), py::arg("t"), py::arg("point"));

    // visibility-modes
    py::class_<Transition>(m, "Transition")
        .def_readonly("window", &Transition::window)
        .def_readonly("from_state", &Transition::from)
        .def_readonly("to_state", &Transition::to)
        .def_readonly("deadline", &Transition::deadline);
    m.def("set_mode", &set_mode, py::arg("desktop"), py::arg("id"), py::arg("mode"));
    m.def("expose", &expose, py::arg("desktop"), py::arg("id"));
    m.def("tick", &tick, py::arg("desktop"), py::arg("t"));

    // trace-harness
    m.def(
        "replay",
        [](const std::string& trace) {
            const ReplayResult r = replay_string(trace);
            py::dict out;
            out["snapshots"] = r.snapshots;
            out["events"] = r.events;
            return out;
        },
        py::arg("trace"), "Replay JSONL trace text; returns snapshot and event lines.");
    m.def(
        "verify",
        [](const std::string& trace, const std::vector<std::string>& golden) {
            const VerifyReport report = verify(replay_string(trace), golden);
            return py::make_tuple(report.pass, report.message);
        },
        py::arg("trace"), py::arg("golden"));

    py::class_<BridgeSession>(m, "BridgeSession")
        .def(py::init<DisplayBounds>(), py::arg("display") = kDefaultDisplay)
        .def("handle_line", &BridgeSession::handle_line, py::arg("line"));
}
