"""Turn a circle representation of a graph into one of its complement.

Input: a chord diagram whose interlacement graph H has a bipartite
complement G.  Color the chords so that each color class pairwise crosses,
pick a window of n consecutive positions holding half of each class, and
reverse it.  Every chord crosses the window boundary, so every crossing
relation flips and the new diagram represents G.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .bisector import balance_profile, find_bisecting_window, is_transversal
from .diagram import ChordDiagram, Window, reverse_arc
from .errors import ChordflipError, TransversalViolation
from .graph import (
    BLUE,
    RED,
    InterlacementGraph,
    complement,
    graphs_equal,
    interlacement_graph,
    two_color_complement,
)

__all__ = [
    "FlipCertificate",
    "Verdict",
    "complement_representation",
    "color_sequence",
    "verify_certificate",
]


@dataclass(frozen=True)
class FlipCertificate:
    coloring: Mapping[str, str]
    window: Window
    profile: tuple[int, ...]
    transversal_ok: bool
    input_interlacement: InterlacementGraph
    output_interlacement: InterlacementGraph

    def to_json(self) -> dict:
        return {
            "coloring": dict(sorted(self.coloring.items())),
            "window": {"start": self.window.start, "length": self.window.length},
            "profile": list(self.profile),
            "transversal_ok": self.transversal_ok,
            "input_graph": self.input_interlacement.to_json(),
            "output_graph": self.output_interlacement.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict, size: int) -> FlipCertificate:
        """Rebuild a certificate; ``size`` is the circle size 2n of its diagram."""
        try:
            coloring = dict(obj["coloring"])
            win = obj["window"]
            window = Window(int(win["start"]), int(win["length"]), size)
            profile = tuple(int(f) for f in obj["profile"])
            return cls(
                coloring=coloring,
                window=window,
                profile=profile,
                transversal_ok=bool(obj.get("transversal_ok", True)),
                input_interlacement=InterlacementGraph.from_json(obj["input_graph"]),
                output_interlacement=InterlacementGraph.from_json(obj["output_graph"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ChordflipError):
                raise
            raise ChordflipError(f"malformed certificate: {exc!r}") from None


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_certificate`; falsy when a clause failed.

    ``clause`` is one of ``"a"`` .. ``"e"`` for the first failed check:
    a) color classes pairwise cross, b) window halves both classes,
    c) window is transversal, d) reversal reproduces the output,
    e) output interlacement is the complement of the input's.
    """

    ok: bool
    clause: str | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "OK" if self.ok else f"FAIL ({self.clause}): {self.reason}"


def color_sequence(d: ChordDiagram, coloring: Mapping[str, str]) -> str:
    """Color of the chord owning each position, as an R/B string."""
    return "".join(coloring[lab] for lab in d.labels)


def complement_representation(d: ChordDiagram) -> tuple[ChordDiagram, FlipCertificate]:
    h = interlacement_graph(d)
    coloring = two_color_complement(h)
    colors = color_sequence(d, coloring)
    profile = balance_profile(colors)
    window = find_bisecting_window(colors, profile)
    if not is_transversal(d, window):
        raise TransversalViolation(f"window {window} misses a chord of {d}")
    out = reverse_arc(d, window)
    cert = FlipCertificate(
        coloring=coloring,
        window=window,
        profile=tuple(profile),
        transversal_ok=True,
        input_interlacement=h,
        output_interlacement=interlacement_graph(out),
    )
    return out, cert


def verify_certificate(d: ChordDiagram, out: ChordDiagram, cert: FlipCertificate) -> Verdict:
    """Recheck a flip from scratch, reporting the first failing clause."""
    h = interlacement_graph(d)
    coloring = cert.coloring
    labels = h.vertices
    if set(coloring) != set(labels) or not set(coloring.values()) <= {RED, BLUE}:
        return Verdict(False, "a", "coloring does not assign R/B to exactly the diagram's chords")
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            if coloring[u] == coloring[v] and not h.has_edge(u, v):
                return Verdict(False, "a", f"{u} and {v} share a color but do not cross")

    w = cert.window
    if w.size != d.size:
        return Verdict(False, "b", f"window is on {w.size} positions, diagram has {d.size}")
    for color in (RED, BLUE):
        total = sum(1 for lab in d.labels if coloring[lab] == color)
        inside = sum(1 for p in w.positions() if coloring[d.labels[p]] == color)
        if 2 * inside != total:
            return Verdict(False, "b", f"window {w} holds {inside} of {total} {color} endpoints")

    if not is_transversal(d, w):
        return Verdict(False, "c", f"some chord does not cross the boundary of window {w}")

    if reverse_arc(d, w) != out:
        return Verdict(False, "d", f"reversing window {w} does not give the output diagram")

    if not graphs_equal(interlacement_graph(out), complement(h)):
        return Verdict(False, "e", "output interlacement is not the complement of the input's")
    return Verdict(True)
