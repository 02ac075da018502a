"""Bisecting windows for two-colored points on a circle.

Colors are strings over ``"R"``/``"B"``, one character per circle position.
For a sequence of length 2n the balance of the window starting at ``i`` is
the number of reds among positions ``i .. i+n-1`` minus half of all reds.
Its values move by at most one per step and flip sign after n steps, so a
zero always exists among the first n+1 starts.
"""

from __future__ import annotations

from .diagram import ChordDiagram, Window
from .errors import OddClass
from .graph import BLUE, RED

__all__ = [
    "balance_profile",
    "find_bisecting_window",
    "brute_force_bisecting_windows",
    "is_transversal",
    "check_color_sequence",
]


def check_color_sequence(colors: str) -> int:
    """Validate ``colors`` and return its red count."""
    bad = set(colors) - {RED, BLUE}
    if bad:
        raise ValueError(f"unexpected color symbols {sorted(bad)}")
    reds = colors.count(RED)
    if reds % 2 or (len(colors) - reds) % 2:
        raise OddClass(f"{reds} red and {len(colors) - reds} blue positions; both must be even")
    return reds


def balance_profile(colors: str) -> list[int]:
    reds = check_color_sequence(colors)
    size = len(colors)
    n = size // 2
    is_red = [c == RED for c in colors]
    count = sum(is_red[:n])
    profile = []
    for i in range(size):
        profile.append(count - reds // 2)
        # slide: drop position i, take position i + n
        count += is_red[(i + n) % size] - is_red[i]
    return profile


def find_bisecting_window(colors: str, profile: list[int] | None = None) -> Window:
    """Window of length n with the smallest start whose balance is zero."""
    if profile is None:
        profile = balance_profile(colors)
    size = len(colors)
    if size == 0:
        return Window(0, 0, 0)
    for i, f in enumerate(profile):
        if f == 0:
            return Window(i, size // 2, size)
    raise AssertionError(f"no balanced window for {colors!r}")


def brute_force_bisecting_windows(colors: str) -> set[int]:
    """All balanced window starts, counting each window from scratch."""
    check_color_sequence(colors)
    size = len(colors)
    n = size // 2
    total = colors.count(RED)
    out = set()
    for i in range(size):
        inside = sum(1 for k in range(n) if colors[(i + k) % size] == RED)
        if 2 * inside == total:
            out.add(i)
    return out


def is_transversal(d: ChordDiagram, w: Window) -> bool:
    """True iff every chord has exactly one endpoint inside ``w``."""
    if w.size != d.size:
        return False
    return all((p in w) != (q in w) for p, q in enumerate(d.pairing))
