import pytest
from hypothesis import strategies as st

from chordflip.diagram import ChordDiagram

_acceptance_lines = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def report(number, title, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f" -- {len(failures)} failure(s), first: {failures[0]}"
        _acceptance_lines.append(line)
        print(line)
        return not failures
    return report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@st.composite
def diagrams(draw, max_chords=7):
    n = draw(st.integers(0, max_chords))
    perm = draw(st.permutations(range(2 * n)))
    return ChordDiagram.from_chords(zip(perm[::2], perm[1::2]))
