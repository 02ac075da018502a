"""Command line entry point.

    chordflip flip [INPUT] [--format dow|json] [--certificate PATH]
    chordflip check INPUT OUTPUT CERTIFICATE
    chordflip gen N (--red LIST | --seed INT) [--format json|dow]
    chordflip interlace [INPUT] [--format dot|json]
    chordflip render [INPUT] [--window START] [--certificate PATH]

INPUT is a file of double occurrence words (one per line) or diagram JSON
(an object, or an array of objects); ``-`` reads standard input.

Exit codes: 0 ok, 1 verification failed, 2 parse or usage error,
3 not bipartite, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import (
    ChordDiagram,
    Window,
    diagram_from_json,
    diagram_to_json,
    emit_dow,
    parse_dow,
)
from .errors import ChordflipError, NotBipartite, TransversalViolation
from .graph import BLUE, RED, interlacement_graph
from .oracles import gen_bicrossing_diagram, random_color_sequence
from .pipeline import FlipCertificate, complement_representation, verify_certificate
from .render import render_svg

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_NOT_BIPARTITE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(text: str, path: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def load_diagrams(path: str) -> list[tuple[ChordDiagram, dict | None]]:
    """Read diagrams with their optional colorings from ``path``."""
    text = _read_text(path)
    stripped = text.strip()
    try:
        if stripped.startswith(("{", "[")):
            obj = _load_json(stripped, path)
            objs = obj if isinstance(obj, list) else [obj]
            out = []
            for o in objs:
                d = diagram_from_json(o)
                coloring = o.get("coloring")
                if coloring is not None:
                    if (not isinstance(coloring, dict) or set(coloring) != set(d.labels)
                            or not set(coloring.values()) <= {RED, BLUE}):
                        raise ChordflipError("coloring must map every chord to R or B")
                    coloring = dict(coloring)
                out.append((d, coloring))
            return out
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            return [(parse_dow(""), None)]
        return [(parse_dow(ln), None) for ln in lines]
    except ChordflipError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _single_or_list(items: list):
    return items[0] if len(items) == 1 else items


def cmd_flip(args) -> int:
    diagrams = load_diagrams(args.input)
    outputs, certs = [], []
    for d, _ in diagrams:
        try:
            out, cert = complement_representation(d)
        except NotBipartite:
            print(f"G is not bipartite (input {emit_dow(d)!r})", file=sys.stderr)
            return EXIT_NOT_BIPARTITE
        except TransversalViolation as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        outputs.append(out)
        certs.append(cert.to_json())
    if args.format == "json":
        text = _dump(_single_or_list([diagram_to_json(o) for o in outputs]))
    else:
        text = "".join(emit_dow(o) + "\n" for o in outputs)
    _write(args.output, text)
    if args.certificate:
        _write(args.certificate, _dump(_single_or_list(certs)))
    return EXIT_OK


def cmd_check(args) -> int:
    inputs = load_diagrams(args.input)
    outputs = load_diagrams(args.output_diagram)
    raw = _load_json(_read_text(args.certificate), args.certificate)
    certs = raw if isinstance(raw, list) else [raw]
    if not (len(inputs) == len(outputs) == len(certs)):
        raise UsageError(
            f"{len(inputs)} inputs, {len(outputs)} outputs and {len(certs)} certificates do not line up"
        )
    for k, ((d, _), (out, _), c) in enumerate(zip(inputs, outputs, certs)):
        try:
            cert = FlipCertificate.from_json(c, d.size)
        except ChordflipError as exc:
            raise UsageError(f"{args.certificate}: {exc}") from None
        verdict = verify_certificate(d, out, cert)
        if not verdict:
            where = f"diagram {k}: " if len(inputs) > 1 else ""
            print(f"{where}clause ({verdict.clause}) failed: {verdict.reason}")
            return EXIT_VERIFY
    print("OK")
    return EXIT_OK


def _parse_positions(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"--red expects comma-separated integers, got {text!r}") from None


def cmd_gen(args) -> int:
    if args.n < 0:
        raise UsageError("N must be nonnegative")
    if args.red is not None:
        red = _parse_positions(args.red)
        if len(set(red)) != len(red):
            raise UsageError("--red lists a position twice")
    else:
        colors = random_color_sequence(2 * args.n, args.seed)
        red = [k for k, c in enumerate(colors) if c == RED]
    try:
        cd = gen_bicrossing_diagram(args.n, red)
    except ChordflipError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dow":
        text = emit_dow(cd.diagram) + "\n"
    else:
        text = _dump({**diagram_to_json(cd.diagram), "coloring": cd.coloring})
    _write(args.output, text)
    return EXIT_OK


def cmd_interlace(args) -> int:
    diagrams = load_diagrams(args.input)
    graphs = [interlacement_graph(d) for d, _ in diagrams]
    if args.format == "json":
        text = _dump(_single_or_list([g.to_json() for g in graphs]))
    else:
        text = "".join(g.to_dot(f"G{k}" if len(graphs) > 1 else "G") for k, g in enumerate(graphs))
    _write(args.output, text)
    return EXIT_OK


def cmd_render(args) -> int:
    diagrams = load_diagrams(args.input)
    if len(diagrams) != 1:
        raise UsageError(f"render takes exactly one diagram, got {len(diagrams)}")
    d, coloring = diagrams[0]
    window = None
    if args.certificate:
        raw = _load_json(_read_text(args.certificate), args.certificate)
        try:
            cert = FlipCertificate.from_json(raw, d.size)
        except ChordflipError as exc:
            raise UsageError(f"{args.certificate}: {exc}") from None
        coloring = dict(cert.coloring)
        window = cert.window
    if args.window is not None:
        try:
            window = Window(args.window, d.num_chords, d.size)
        except ChordflipError as exc:
            raise UsageError(str(exc)) from None
    _write(args.output, render_svg(d, coloring, window, size=args.size))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordflip",
        description="Represent the bipartite complement of a circle graph by chord reversal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flip", help="chord diagram of the complement graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--format", choices=("dow", "json"), default="dow")
    p.add_argument("--certificate", metavar="PATH", help="write the JSON certificate here")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("check", help="verify a flip certificate")
    p.add_argument("input")
    p.add_argument("output_diagram", metavar="output")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a diagram whose color classes pairwise cross")
    p.add_argument("n", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--red", metavar="LIST", help="comma-separated red endpoint positions")
    src.add_argument("--seed", type=int, help="draw the red positions from this seed")
    p.add_argument("--format", choices=("json", "dow"), default="json")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("interlace", help="print the interlacement graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("render", help="draw the diagram as SVG")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--window", type=int, metavar="START", help="highlight the window START:n")
    p.add_argument("--certificate", metavar="PATH", help="take coloring and window from a certificate")
    p.add_argument("--size", type=int, default=400)
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chordflip: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
