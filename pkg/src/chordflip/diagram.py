"""Chord diagrams on 2n cyclically ordered positions.

A diagram is stored as a fixed-point-free involution ``pairing`` on the
positions ``0 .. 2n-1`` together with the chord label written at each
position.  Reading ``labels`` left to right gives the double occurrence
word of the diagram.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BadMultiplicity, ChordflipError, OddLength, UnknownLabel

__all__ = [
    "ChordDiagram",
    "Window",
    "Status",
    "parse_dow",
    "emit_dow",
    "diagram_from_json",
    "diagram_to_json",
    "chords_cross",
    "boundary_status",
    "reverse_arc",
    "chord_label",
]


def chord_label(rank: int) -> str:
    """Canonical label for the ``rank``-th chord: a..z, then aa, ab, ..."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    out = ""
    rank += 1
    while rank:
        rank, rem = divmod(rank - 1, 26)
        out = chr(ord("a") + rem) + out
    return out


@dataclass(frozen=True)
class ChordDiagram:
    pairing: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        size = len(self.pairing)
        if size % 2:
            raise OddLength(f"diagram has {size} positions")
        if len(self.labels) != size:
            raise ChordflipError("labels and pairing differ in length")
        for p, q in enumerate(self.pairing):
            if not 0 <= q < size or q == p or self.pairing[q] != p:
                raise ChordflipError(f"pairing is not a fixed-point-free involution at {p}")
            if self.labels[p] != self.labels[q]:
                raise ChordflipError(f"positions {p} and {q} are paired but labelled differently")
        counts = Counter(self.labels)
        bad = [lab for lab, c in counts.items() if c != 2]
        if bad:
            raise BadMultiplicity(f"label {bad[0]!r} occurs {counts[bad[0]]} times")

    @classmethod
    def from_word(cls, word: Sequence[str]) -> ChordDiagram:
        word = tuple(word)
        if len(word) % 2:
            raise OddLength(f"word has odd length {len(word)}")
        seen: dict[str, int] = {}
        pairing = [-1] * len(word)
        for pos, tok in enumerate(word):
            if not tok or any(ch.isspace() for ch in tok):
                raise ChordflipError(f"label {tok!r} is empty or contains whitespace")
            if tok not in seen:
                seen[tok] = pos
            elif pairing[seen[tok]] != -1:
                raise BadMultiplicity(f"label {tok!r} occurs more than twice")
            else:
                pairing[pos] = seen[tok]
                pairing[seen[tok]] = pos
        for tok, pos in seen.items():
            if pairing[pos] == -1:
                raise BadMultiplicity(f"label {tok!r} occurs once")
        return cls(tuple(pairing), word)

    @classmethod
    def from_chords(cls, chords: Iterable[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> ChordDiagram:
        """Build a diagram from endpoint pairs covering ``0 .. 2n-1``.

        Without explicit ``labels`` chords are named canonically by the rank
        of their smaller endpoint.
        """
        chords = [tuple(sorted(c)) for c in chords]
        size = 2 * len(chords)
        pairing = [-1] * size
        for a, b in chords:
            if not (0 <= a < size and 0 <= b < size) or pairing[a] != -1 or pairing[b] != -1:
                raise ChordflipError(f"chord {(a, b)} is out of range or reuses a position")
            pairing[a], pairing[b] = b, a
        if labels is None:
            order = sorted(range(len(chords)), key=lambda k: chords[k][0])
            labels = [""] * len(chords)
            for rank, k in enumerate(order):
                labels[k] = chord_label(rank)
        word = [""] * size
        for (a, b), lab in zip(chords, labels):
            word[a] = word[b] = lab
        return cls(tuple(pairing), tuple(word))

    @property
    def num_chords(self) -> int:
        return len(self.pairing) // 2

    @property
    def size(self) -> int:
        """Number of positions on the circle (2n)."""
        return len(self.pairing)

    def label_order(self) -> list[str]:
        """Chord labels in order of first occurrence."""
        return list(dict.fromkeys(self.labels))

    def endpoints(self, label: str) -> tuple[int, int]:
        try:
            a = self._first[label]
        except KeyError:
            raise UnknownLabel(f"no chord labelled {label!r}") from None
        return a, self.pairing[a]

    @cached_property
    def _first(self) -> dict[str, int]:
        first: dict[str, int] = {}
        for pos, lab in enumerate(self.labels):
            first.setdefault(lab, pos)
        return first

    def chords(self) -> dict[str, tuple[int, int]]:
        """Map each label to its (smaller, larger) endpoint pair."""
        out = {}
        for p, q in enumerate(self.pairing):
            if p < q:
                out[self.labels[p]] = (p, q)
        return out

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __str__(self) -> str:
        return emit_dow(self)


@dataclass(frozen=True)
class Window:
    """The cyclic run ``start, start+1, ..., start+length-1`` modulo ``size``."""

    start: int
    length: int
    size: int

    def __post_init__(self):
        if self.size == 0:
            if self.start or self.length:
                raise ChordflipError("the only window on an empty circle is 0:0")
            return
        if not 0 <= self.start < self.size:
            raise ChordflipError(f"window start {self.start} outside 0..{self.size - 1}")
        if not 1 <= self.length < self.size:
            raise ChordflipError(f"window length {self.length} outside 1..{self.size - 1}")

    def positions(self) -> list[int]:
        return [(self.start + k) % self.size for k in range(self.length)]

    def __contains__(self, pos: int) -> bool:
        return (pos - self.start) % self.size < self.length if self.size else False

    def __str__(self) -> str:
        return f"{self.start}:{self.length}"

    @classmethod
    def parse(cls, text: str, size: int) -> Window:
        start, _, length = text.partition(":")
        try:
            return cls(int(start), int(length), size)
        except ValueError as exc:
            raise ChordflipError(f"bad window {text!r}: {exc}") from None


class Status(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    CROSSING = "crossing"


def parse_dow(text: str) -> ChordDiagram:
    """Parse a whitespace-separated double occurrence word."""
    return ChordDiagram.from_word(text.split())


def emit_dow(d: ChordDiagram) -> str:
    return " ".join(d.labels)


def diagram_to_json(d: ChordDiagram) -> dict:
    return {"n": d.num_chords, "word": list(d.labels)}


def diagram_from_json(obj) -> ChordDiagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        n, word = obj["n"], obj["word"]
    except (KeyError, TypeError):
        raise ChordflipError('diagram JSON needs keys "n" and "word"') from None
    if not isinstance(word, list) or not all(isinstance(t, str) for t in word):
        raise ChordflipError('"word" must be an array of strings')
    if not isinstance(n, int) or len(word) != 2 * n:
        raise ChordflipError(f'"n" = {n!r} does not match word length {len(word)}')
    return ChordDiagram.from_word(word)


def chords_cross(d: ChordDiagram, u: str, v: str) -> bool:
    a, b = sorted(d.endpoints(u))
    c, e = d.endpoints(v)
    return (a < c < b) != (a < e < b)


def boundary_status(d: ChordDiagram, w: Window, u: str) -> Status:
    a, b = d.endpoints(u)
    inside = (a in w) + (b in w)
    return (Status.OUTSIDE, Status.CROSSING, Status.INSIDE)[inside]


def reverse_arc(d: ChordDiagram, w: Window) -> ChordDiagram:
    """Reverse the order of the positions inside ``w``; labels travel with endpoints."""
    if w.size != d.size:
        raise ChordflipError(f"window is for {w.size} positions, diagram has {d.size}")
    rho = list(range(d.size))
    for k in range(w.length):
        rho[(w.start + k) % d.size] = (w.start + w.length - 1 - k) % d.size
    pairing = [0] * d.size
    labels = [""] * d.size
    for p in range(d.size):
        pairing[rho[p]] = rho[d.pairing[p]]
        labels[rho[p]] = d.labels[p]
    return ChordDiagram(tuple(pairing), tuple(labels))
