"""Chord diagrams and the complement flip for co-bipartite circle graphs."""

from .bisector import (
    balance_profile,
    brute_force_bisecting_windows,
    find_bisecting_window,
    is_transversal,
)
from .diagram import (
    ChordDiagram,
    Status,
    Window,
    boundary_status,
    chords_cross,
    diagram_from_json,
    diagram_to_json,
    emit_dow,
    parse_dow,
    reverse_arc,
)
from .errors import (
    BadMultiplicity,
    BadParity,
    ChordflipError,
    EmptyInput,
    NotBipartite,
    OddClass,
    OddLength,
    TooLarge,
    TransversalViolation,
    UnknownLabel,
)
from .graph import (
    BLUE,
    RED,
    InterlacementGraph,
    complement,
    graphs_equal,
    interlacement_graph,
    two_color_complement,
)
from .pipeline import FlipCertificate, Verdict, complement_representation, verify_certificate

__version__ = "0.1.0"
