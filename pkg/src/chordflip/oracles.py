"""Brute-force generators and oracles for small diagrams.

Nothing here goes through the fast paths in :mod:`chordflip.graph` or
:mod:`chordflip.bisector`; the tests compare the two.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .diagram import ChordDiagram
from .errors import BadParity, ChordflipError, EmptyInput, TooLarge
from .graph import BLUE, RED, InterlacementGraph

__all__ = [
    "ColoredDiagram",
    "enumerate_matchings",
    "all_pairings",
    "unique_crossing_matching",
    "gen_bicrossing_diagram",
    "random_color_sequence",
    "bipartite_complement_bruteforce",
    "pairwise_crossing",
    "geometric_interlacement",
    "double_factorial",
]


@dataclass(frozen=True)
class ColoredDiagram:
    diagram: ChordDiagram
    coloring: dict[str, str]


def double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2))


def all_pairings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Every perfect matching of ``items``; the first item is paired first."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    rest = items[1:]
    for i, partner in enumerate(rest):
        for pairing in all_pairings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + pairing


def enumerate_matchings(n: int) -> Iterator[ChordDiagram]:
    """All fixed-point-free involutions on ``2n`` positions, canonically labelled.

    Order: the lowest unmatched position is paired with each free partner in
    increasing order, recursively.  Yields ``(2n-1)!!`` diagrams.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for pairs in all_pairings(range(2 * n)):
        yield ChordDiagram.from_chords(pairs)


def _interleaved(a: int, b: int, c: int, d: int) -> bool:
    if a > b:
        a, b = b, a
    return (a < c < b) != (a < d < b)


def pairwise_crossing(chords: Iterable[tuple[int, int]]) -> bool:
    return all(_interleaved(*x, *y) for x, y in combinations(list(chords), 2))


def unique_crossing_matching(points: Iterable[int]) -> list[tuple[int, int]]:
    """The only pairwise-crossing perfect matching on ``points``.

    With the points sorted, the j-th one is paired with the (j+r)-th.
    """
    pts = sorted(set(points))
    if not pts:
        raise EmptyInput("need at least two points")
    if len(pts) % 2:
        raise BadParity(f"{len(pts)} points cannot be perfectly matched")
    r = len(pts) // 2
    return [(pts[j], pts[j + r]) for j in range(r)]


def gen_bicrossing_diagram(n: int, red_set: Iterable[int]) -> ColoredDiagram:
    """The unique valid colored diagram whose red endpoints are ``red_set``."""
    red = set(red_set)
    if n < 0:
        raise ChordflipError("n must be nonnegative")
    if any(not 0 <= p < 2 * n for p in red):
        raise ChordflipError(f"red positions must lie in 0..{2 * n - 1}")
    if len(red) % 2:
        raise BadParity(f"red set has odd size {len(red)}")
    blue = set(range(2 * n)) - red
    red_chords = unique_crossing_matching(red) if red else []
    blue_chords = unique_crossing_matching(blue) if blue else []
    d = ChordDiagram.from_chords(red_chords + blue_chords)
    coloring = {d.labels[a]: RED for a, _ in red_chords}
    coloring.update({d.labels[a]: BLUE for a, _ in blue_chords})
    return ColoredDiagram(d, {lab: coloring[lab] for lab in d.label_order()})


def random_color_sequence(length: int, seed: int) -> str:
    """Reproducible R/B string with an even number of reds.

    Generator contract: ``random.Random(seed)``; position k is red iff
    ``getrandbits(1)`` returns 1 on the k-th call; if the red count is odd the
    last position is toggled.
    """
    if length % 2:
        raise BadParity(f"length {length} is odd")
    rng = random.Random(seed)
    colors = [RED if rng.getrandbits(1) else BLUE for _ in range(length)]
    if colors.count(RED) % 2:
        colors[-1] = BLUE if colors[-1] == RED else RED
    return "".join(colors)


def bipartite_complement_bruteforce(g: InterlacementGraph) -> bool:
    """Try all 2^|V| colorings for one whose classes are cliques of ``g``."""
    verts = list(g.vertices)
    if len(verts) > 12:
        raise TooLarge(f"{len(verts)} vertices; the exhaustive search stops at 12")
    for mask in range(1 << len(verts)):
        classes = ([], [])
        for i, v in enumerate(verts):
            classes[(mask >> i) & 1].append(v)
        if all(g.has_edge(u, v) for cls in classes for u, v in combinations(cls, 2)):
            return True
    return False


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def geometric_interlacement(d: ChordDiagram) -> InterlacementGraph:
    """Interlacement computed by segment intersection on a unit circle."""
    size = d.size
    pts = [(math.cos(2 * math.pi * k / size), math.sin(2 * math.pi * k / size))
           for k in range(size)]
    chords = d.chords()
    edges = []
    for u, v in combinations(d.label_order(), 2):
        a, b = (pts[k] for k in chords[u])
        c, e = (pts[k] for k in chords[v])
        if _orient(a, b, c) * _orient(a, b, e) < 0 and _orient(c, e, a) * _orient(c, e, b) < 0:
            edges.append((u, v))
    return InterlacementGraph.from_edges(d.label_order(), edges)
