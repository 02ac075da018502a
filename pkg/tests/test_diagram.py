import itertools

import pytest
from hypothesis import given

from chordflip.diagram import (
    ChordDiagram,
    Status,
    Window,
    boundary_status,
    chord_label,
    chords_cross,
    diagram_from_json,
    diagram_to_json,
    emit_dow,
    parse_dow,
    reverse_arc,
)
from chordflip.errors import BadMultiplicity, ChordflipError, OddLength, UnknownLabel
from chordflip.graph import interlacement_graph
from chordflip.oracles import enumerate_matchings, geometric_interlacement

from conftest import diagrams

P4 = "a b a c b d c d"


def test_parse_reads_token_positions():
    d = parse_dow("a b a b")
    assert d.chords() == {"a": (0, 2), "b": (1, 3)}
    assert parse_dow("a a b b").chords() == {"a": (0, 1), "b": (2, 3)}
    assert d.num_chords == 2


@pytest.mark.parametrize("text, exc", [
    ("a b a", OddLength),
    ("a b a c", BadMultiplicity),
    ("a a a a", BadMultiplicity),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_dow(text)


def test_parse_p4_is_a_path():
    g = geometric_interlacement(parse_dow(P4))
    assert g.edges() == [("a", "b"), ("b", "c"), ("c", "d")]


def test_emit():
    assert emit_dow(ChordDiagram.from_chords([(0, 2), (1, 3)])) == "a b a b"
    assert emit_dow(parse_dow("")) == ""


@given(diagrams())
def test_emit_parse_round_trip(d):
    assert parse_dow(emit_dow(d)) == d
    assert diagram_from_json(diagram_to_json(d)) == d


def test_json_rejects_mismatched_n():
    with pytest.raises(ChordflipError):
        diagram_from_json({"n": 3, "word": ["a", "a"]})


def test_chord_labels():
    assert [chord_label(k) for k in (0, 1, 25, 26, 27, 701, 702)] == \
        ["a", "b", "z", "aa", "ab", "zz", "aaa"]


def test_chords_cross_examples():
    assert chords_cross(parse_dow("a b a b"), "a", "b")
    assert not chords_cross(parse_dow("a a b b"), "a", "b")
    nested = ChordDiagram.from_chords([(0, 5), (1, 3), (2, 6), (4, 7)], labels="uvwx")
    assert not chords_cross(nested, "u", "v")
    with pytest.raises(UnknownLabel):
        chords_cross(nested, "u", "zz")


@given(diagrams())
def test_crossing_symmetric_and_matches_geometry(d):
    geo = geometric_interlacement(d)
    for u, v in itertools.combinations(d.label_order(), 2):
        assert chords_cross(d, u, v) == chords_cross(d, v, u) == geo.has_edge(u, v)


def test_reverse_arc_examples():
    d = parse_dow("a b a b")
    flipped = reverse_arc(d, Window(1, 2, 4))
    assert emit_dow(flipped) == "a a b b"
    assert not chords_cross(flipped, "a", "b")

    p4 = parse_dow(P4)
    out = reverse_arc(p4, Window(2, 4, 8))
    assert emit_dow(out) == "a b d b c a c d"
    assert geometric_interlacement(out).edges() == [("a", "c"), ("a", "d"), ("b", "d")]


def test_reverse_wraps_around():
    d = parse_dow("a b c a b c")
    # window {5, 0, 1}: 5<->1, 0 fixed
    assert emit_dow(reverse_arc(d, Window(5, 3, 6))) == "a c c a b b"


@given(diagrams(max_chords=6))
def test_reverse_arc_involution_and_singleton(d):
    for start in range(d.size):
        for length in range(1, d.size):
            w = Window(start, length, d.size)
            assert reverse_arc(reverse_arc(d, w), w) == d
        if d.size > 1:
            assert reverse_arc(d, Window(start, 1, d.size)) == d


def test_boundary_status_examples():
    w = Window(0, 2, 4)
    assert boundary_status(parse_dow("a a b b"), w, "a") is Status.INSIDE
    assert boundary_status(parse_dow("a a b b"), w, "b") is Status.OUTSIDE
    assert boundary_status(parse_dow("a b a b"), w, "a") is Status.CROSSING


def test_inside_and_outside_never_cross():
    for n in range(5):
        for d in enumerate_matchings(n):
            for start in range(d.size):
                for length in range(1, d.size):
                    w = Window(start, length, d.size)
                    st = {u: boundary_status(d, w, u) for u in d.label_order()}
                    ins = [u for u in st if st[u] is Status.INSIDE]
                    outs = [u for u in st if st[u] is Status.OUTSIDE]
                    assert not any(chords_cross(d, u, v) for u in ins for v in outs)


def test_flip_law_all_window_lengths():
    for n in range(5):
        for d in enumerate_matchings(n):
            before = interlacement_graph(d)
            for start in range(d.size):
                for length in range(1, d.size):
                    w = Window(start, length, d.size)
                    after = geometric_interlacement(reverse_arc(d, w))
                    for u, v in itertools.combinations(d.label_order(), 2):
                        both = (boundary_status(d, w, u) is Status.CROSSING
                                and boundary_status(d, w, v) is Status.CROSSING)
                        assert after.has_edge(u, v) == (before.has_edge(u, v) != both)


@pytest.mark.parametrize("start, length, size", [(4, 1, 4), (0, 0, 4), (0, 4, 4), (1, 0, 0)])
def test_window_bounds(start, length, size):
    with pytest.raises(ChordflipError):
        Window(start, length, size)


def test_window_membership_and_text():
    w = Window(3, 3, 6)
    assert w.positions() == [3, 4, 5]
    assert 5 in w and 0 not in w
    w = Window(5, 2, 6)
    assert w.positions() == [5, 0]
    assert str(w) == "5:2"
    assert Window.parse("5:2", 6) == w
    assert Window(0, 0, 0).positions() == []


def test_invalid_pairing_rejected():
    with pytest.raises(ChordflipError):
        ChordDiagram((1, 0, 2, 3), ("a", "a", "b", "b"))
    with pytest.raises(ChordflipError):
        ChordDiagram((1, 0, 3, 2), ("a", "a", "a", "a"))
