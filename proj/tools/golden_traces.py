#!/usr/bin/env python3
"""Write the golden trace corpus (trace.jsonl per case).

Expected outputs are produced afterwards with `wmsim replay` and reviewed by
hand before committing:

    python3 tools/golden_traces.py tests/golden
    for d in tests/golden/*/; do build/tools/wmsim replay --trace $d/trace.jsonl --out $d; done
"""

import json
import sys
from pathlib import Path

DOT = [{"name": "dot", "w": 4, "h": 4, "required": True, "priority": 0}]
FORM = [
    {"name": "buttons", "w": 120, "h": 30, "required": True, "priority": 1},
    {"name": "list", "w": 160, "h": 80, "required": False, "priority": 2},
    {"name": "preview", "w": 300, "h": 120, "required": False, "priority": 3},
]


def rec(t, kind, **fields):
    out = {"t": t, "kind": kind}
    out.update(fields)
    return out


def create(t, x, y, w, h, min_w=8, min_h=28, max_w=2000, max_h=2000, anchor="fixed", components=DOT):
    return rec(t, "create", min_w=min_w, min_h=min_h, max_w=max_w, max_h=max_h,
               x=x, y=y, w=w, h=h, anchor=anchor, components=components)


def snap(t):
    return rec(t, "snapshot")


def pointer(t, x, y):
    return rec(t, "pointer", x=x, y=y)


def stack_basics():
    return [
        create(0, 10, 10, 200, 150),
        create(0, 100, 80, 200, 150),
        create(0, 500, 300, 120, 90),
        snap(0),
        rec(5, "destroy", id=2),
        snap(5),
        rec(6, "destroy", id=2),
        create(7, 50, 50, 100, 100),
        snap(7),
    ]


def resize_limits():
    return [
        create(0, 100, 100, 200, 150, min_w=80, min_h=60, max_w=300, max_h=200),
        rec(1, "resize", id=1, edge="right", dx=50, dy=0),
        snap(1),
        rec(2, "resize", id=1, edge="right", dx=200, dy=0),
        snap(2),
        rec(3, "resize", id=1, edge="left", dx=400, dy=0),
        snap(3),
        rec(4, "resize", id=1, edge="bottom_right", dx=-500, dy=500),
        snap(4),
        rec(5, "resize", id=1, edge="top", dx=0, dy=0),
        rec(6, "resize", id=1, edge="top_left", dx=-30, dy=-30),
        snap(6),
    ]


def occlusion_three_strategies():
    # window 1 is the protected editor; a dialog pops up over it
    return [
        create(0, 100, 100, 300, 200, min_w=100, min_h=80),
        create(0, 250, 200, 200, 150, min_w=80, min_h=60),
        snap(0),
        rec(10, "unobscure", target=2, protected=1, strategy="move_away"),
        snap(10),
        rec(20, "destroy", id=2),
        create(20, 250, 200, 200, 150, min_w=80, min_h=60),
        rec(30, "unobscure", target=3, protected=1, strategy="reduce"),
        snap(30),
        rec(40, "end_action", target=3),
        snap(40),
        rec(50, "begin_action", target=3, protected=1),
        snap(50),
        rec(60, "end_action", target=3),
        snap(60),
        rec(70, "unobscure", target=3, protected=1, strategy="disappear"),
        rec(80, "end_action", target=3),
        snap(80),
    ]


def occlusion_auto():
    # window 1 is a protected band across the bottom half
    return [
        rec(0, "display", w=400, h=300),
        create(0, 0, 150, 400, 150, min_w=100, min_h=100),
        create(0, 50, 50, 200, 200, min_w=60, min_h=80),
        rec(1, "unobscure", target=2, protected=1, strategy="auto"),
        snap(1),
        rec(2, "end_action", target=2),
        create(3, 300, 100, 80, 100, min_w=40, min_h=40),
        rec(4, "unobscure", target=3, protected=1, strategy="auto"),
        snap(4),
        create(5, 100, 140, 150, 160, min_w=150, min_h=160),
        rec(6, "unobscure", target=4, protected=1, strategy="auto"),
        snap(6),
        rec(7, "end_action", target=4),
        rec(8, "set_mode", id=4, mode="locked"),
        rec(9, "unobscure", target=4, protected=1, strategy="auto"),
        rec(10, "unobscure", target=1, protected=1, strategy="auto"),
        snap(10),
    ]


def chord_move():
    return [
        create(0, 100, 100, 200, 150),
        create(0, 400, 100, 200, 150),
        pointer(10, 150, 150),
        rec(11, "button", action="both_down"),
        snap(11),
        pointer(20, 180, 170),
        pointer(30, 90, 40),
        pointer(40, -100, -80),
        snap(40),
        rec(50, "button", action="both_up"),
        snap(50),
        pointer(60, 450, 150),
        rec(61, "key", combo="move"),
        pointer(70, 500, 200),
        rec(71, "key", combo="escape"),
        snap(71),
    ]


def chord_resize():
    return [
        create(0, 100, 100, 100, 100, min_w=80, min_h=80, max_w=300, max_h=300),
        pointer(10, 190, 190),
        rec(11, "key", combo="resize"),
        snap(11),
        pointer(20, 160, 160),
        snap(20),
        pointer(30, 400, 400),
        snap(30),
        rec(40, "key", combo="escape"),
        pointer(50, 105, 110),
        rec(51, "key", combo="resize"),
        pointer(60, 95, 100),
        rec(70, "button", action="both_up"),
        snap(70),
        rec(80, "key", combo="bogus"),
        snap(80),
    ]


def display_reflow():
    return [
        rec(0, "display", w=1600, h=1200),
        create(0, 1200, 900, 300, 200, min_w=124, min_h=54, components=FORM),
        create(0, 100, 100, 150, 100, min_w=124, min_h=54, max_w=400, max_h=400, anchor="proportional",
               components=FORM),
        create(0, 0, 0, 1000, 120, min_w=124, min_h=54, components=FORM),
        snap(0),
        rec(10, "display", w=800, h=600),
        snap(10),
        rec(20, "display", w=800, h=600),
        snap(20),
        rec(30, "display", w=1600, h=1200),
        snap(30),
        rec(40, "display", w=100, h=100),
        snap(40),
    ]


def lasso_letter_o():
    out = [
        create(0, 100, 100, 200, 150, min_w=50, min_h=50),
        create(0, 600, 300, 100, 100),
    ]
    o = [(310, 171), (307, 178), (300, 181), (293, 178), (290, 171),
         (293, 164), (300, 161), (307, 164), (310, 171)]
    t = 1000
    for x, y in o:
        out.append(pointer(t, x, y))
        t += 20
    out.append(snap(t))
    # the armed right-edge resize follows the pointer
    out.append(pointer(t + 20, 340, 171))
    out.append(pointer(t + 40, 360, 160))
    out.append(snap(t + 40))
    out.append(rec(t + 60, "button", action="both_up"))
    out.append(snap(t + 60))
    return out


def lasso_misses():
    out = [create(0, 100, 100, 200, 150)]
    # straight pass over the left edge
    for i, x in enumerate(range(40, 200, 20)):
        out.append(pointer(100 + 10 * i, x, 150))
    # the same loop as a gesture, but far too slow
    t = 2000
    for x, y in [(190, 148), (210, 152), (210, 164), (190, 160)]:
        out.append(pointer(t, x, y))
        t += 400
    # crossings of the top edge 160 px apart, once the slow loop has aged out
    t += 1000
    for x, y in [(120, 90), (130, 110), (280, 110), (290, 90)]:
        out.append(pointer(t, x, y))
        t += 10
    out.append(snap(t))
    return out


def lasso_corner():
    out = [create(0, 100, 100, 200, 150, min_w=50, min_h=50)]
    t = 500
    for x, y in [(92, 105), (108, 110), (108, 118), (92, 114)]:
        out.append(pointer(t, x, y))
        t += 30
    out.append(snap(t))
    out.append(pointer(t + 10, 80, 90))
    out.append(rec(t + 20, "key", combo="escape"))
    out.append(snap(t + 20))
    return out


def visibility_timed():
    return [
        create(0, 0, 0, 100, 100),
        rec(0, "set_mode", id=1, mode="timed", t_show=1000),
        rec(0, "expose", id=1),
        rec(1000, "tick"),
        snap(1000),
        rec(1100, "expose", id=1),
        rec(2099, "tick"),
        snap(2099),
        rec(2100, "tick"),
        snap(2100),
    ]


def visibility_icons():
    return [
        create(0, 300, 200, 120, 90),
        create(0, 50, 50, 200, 200),
        create(0, 500, 100, 150, 150),
        rec(0, "set_mode", id=1, mode="timed_icon", t_show=200),
        rec(0, "set_mode", id=3, mode="timed_icon", t_show=300),
        rec(1000, "tick"),
        snap(1000),
        rec(1200, "expose", id=1),
        snap(1200),
        rec(1300, "display", w=400, h=300),
        snap(1300),
        rec(1500, "expose", id=3),
        snap(1500),
        rec(1600, "expose", id=3),
    ]


def visibility_locked():
    return [
        create(0, 0, 0, 300, 200),
        create(0, 100, 100, 300, 200),
        rec(10, "set_mode", id=1, mode="locked"),
        snap(10),
        create(20, 50, 50, 100, 100),
        pointer(30, 120, 120),
        rec(31, "button", action="both_down"),
        rec(32, "button", action="both_up"),
        snap(32),
        rec(40, "begin_action", target=1, protected=2),
        rec(50, "tick"),
        rec(60, "set_mode", id=1, mode="normal"),
        snap(60),
    ]


def composite_session():
    out = [
        create(0, 50, 50, 400, 300, min_w=124, min_h=54, max_w=700, max_h=500, components=FORM),
        create(0, 300, 200, 250, 200, min_w=80, min_h=60, anchor="proportional"),
        create(0, 600, 50, 150, 120),
        rec(0, "set_mode", id=3, mode="timed", t_show=800),
        rec(100, "unobscure", target=2, protected=1, strategy="auto"),
        snap(100),
        rec(200, "resize", id=1, edge="bottom_right", dx=400, dy=400),
        snap(200),
    ]
    # lasso the bottom edge of window 2 (y=552), which sits above window 1
    t = 300
    for x, y in [(240, 540), (244, 560), (256, 560), (252, 540)]:
        out.append(pointer(t, x, y))
        t += 25
    out.append(pointer(t, 250, 500))
    out.append(rec(t + 5, "button", action="both_up"))
    out.append(snap(t + 5))
    out += [
        rec(900, "tick"),
        snap(900),
        rec(950, "display", w=640, h=480),
        snap(950),
        rec(1000, "expose", id=3),
        rec(1100, "begin_action", target=3, protected=1),
        rec(1900, "tick"),
        rec(2000, "end_action", target=3),
        snap(2000),
        rec(2800, "tick"),
        snap(2800),
    ]
    return out


def soft_errors():
    return [
        create(0, 0, 0, 100, 100),
        create(0, 0, 0, 0, 100),
        create(0, 0, 0, 100, 100, min_w=300, min_h=20, max_w=200, max_h=200),
        create(0, 0, 0, 100, 100, components=[{"name": "opt", "w": 4, "h": 4, "required": False, "priority": 0}]),
        rec(1, "destroy", id=9),
        rec(2, "set_mode", id=1, mode="timed", t_show=0),
        rec(3, "expose", id=1),
        rec(4, "unobscure", target=1, protected=1, strategy="reduce"),
        rec(5, "end_action", target=1),
        rec(6, "display", w=0, h=100),
        rec(7, "display", w=20, h=20),
        snap(7),
    ]


CASES = {
    "stack_basics": stack_basics,
    "resize_limits": resize_limits,
    "occlusion_three_strategies": occlusion_three_strategies,
    "occlusion_auto": occlusion_auto,
    "chord_move": chord_move,
    "chord_resize": chord_resize,
    "display_reflow": display_reflow,
    "lasso_letter_o": lasso_letter_o,
    "lasso_misses": lasso_misses,
    "lasso_corner": lasso_corner,
    "visibility_timed": visibility_timed,
    "visibility_icons": visibility_icons,
    "visibility_locked": visibility_locked,
    "composite_session": composite_session,
    "soft_errors": soft_errors,
}


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
    for name, build in CASES.items():
        d = root / name
        d.mkdir(parents=True, exist_ok=True)
        lines = [json.dumps(r, separators=(",", ":")) for r in build()]
        (d / "trace.jsonl").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
