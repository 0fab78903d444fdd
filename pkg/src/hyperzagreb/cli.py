"""Command-line front end: ``index``, ``gen``, ``compose`` and ``verify``.

Exit codes: 0 success, 1 I/O failure, 2 invalid user input, 3 a corrected
closed form disagreed with brute force (an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .compose import AnchoredComponent, CompositeKind, compose
from .errors import CompositionError, HyperZagrebError
from .families import FAMILIES, Family, FamilySpec, build_graph
from .graph import Graph, emit_edge_list, index_report, parse_edge_list
from .verify import (
    RECORD_COLUMNS,
    SWEEP_FAMILIES,
    ledger_rows,
    ledger_to_csv,
    record_tuple,
    records_to_csv,
    summarize_records,
    sweep_family,
    sweep_theorems,
)

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

PARAM_FLAGS = ("d", "n", "m", "h", "k", "l", "extra")


class CLIError(HyperZagrebError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` or ``"a"`` into an inclusive integer range."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise CLIError(f"malformed range {text!r}; expected an integer or 'a..b'") from None
    if hi_i < lo_i:
        raise CLIError(f"empty range {text!r}")
    return lo_i, hi_i


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _graph_json(g: Graph) -> str:
    return json.dumps({"n": g.vertex_count, "m": g.edge_count, "edges": [list(e) for e in g.edges()]}) + "\n"


def _report_json(g: Graph) -> str:
    report = index_report(g)
    return json.dumps({"n": g.vertex_count, "m": g.edge_count, "indices": report.as_dict()}) + "\n"


def cmd_index(args) -> int:
    g = parse_edge_list(_read_text(args.input))
    _write(_report_json(g), args.out)
    return 0


def _resolve_family(name: str, kind: str | None) -> Family:
    if name == "poly":
        if kind not in ("ortho", "meta", "para"):
            raise CLIError("poly needs --kind ortho, meta or para")
        return Family(f"poly_{kind}")
    try:
        return Family(name)
    except ValueError:
        raise CLIError(f"unknown family {name!r}") from None


def cmd_gen(args) -> int:
    family = _resolve_family(args.family, args.kind)
    values = {}
    for p in FAMILIES[family].params:
        raw = getattr(args, p)
        if raw is None:
            raise CLIError(f"{family.value} needs --{p}")
        lo, hi = parse_range(raw)
        if lo != hi:
            raise CLIError(f"gen takes a single value for --{p}, got {raw!r}")
        values[p] = lo
    g = build_graph(FamilySpec(family, values))
    _write(_graph_json(g) if args.format == "json" else emit_edge_list(g), args.out)
    return 0


def _parse_component(text: str, index: int, two_anchors: bool) -> AnchoredComponent:
    path, sep, anchors = text.rpartition(":")
    if not sep:
        raise CLIError(f"component {index}: expected FILE:V or FILE:V,W, got {text!r}")
    try:
        ids = [int(a) for a in anchors.split(",")]
    except ValueError:
        raise CLIError(f"component {index}: malformed anchors {anchors!r}") from None
    if len(ids) > 2 or (two_anchors and len(ids) != 2) or (not two_anchors and len(ids) != 1):
        expected = "two anchors V,W" if two_anchors else "one anchor V"
        raise CLIError(f"component {index}: expected {expected}, got {anchors!r}")
    g = parse_edge_list(_read_text(path))
    try:
        return AnchoredComponent(g, *ids)
    except CompositionError as exc:
        raise type(exc)(str(exc), component=index) from None
    except HyperZagrebError as exc:
        raise CLIError(f"component {index}: {exc}") from None


def cmd_compose(args) -> int:
    kind = CompositeKind(args.kind)
    comps = [
        _parse_component(text, i, kind is not CompositeKind.B1)
        for i, text in enumerate(args.components)
    ]
    result = compose(kind, comps)
    anchor_map = [{str(k): v for k, v in m.items()} for m in result.anchor_map]
    if args.format == "json":
        payload = json.loads(_graph_json(result.graph))
        payload["kind"] = kind.value
        payload["anchor_map"] = anchor_map
        _write(json.dumps(payload) + "\n", args.out)
    else:
        _write(emit_edge_list(result.graph), args.out)
    if args.anchors_out:
        _write(json.dumps({"kind": kind.value, "anchor_map": anchor_map}) + "\n", args.anchors_out)
    return 0


def cmd_verify(args) -> int:
    if args.target == "ledger":
        text = ledger_to_csv(ledger_rows(include_random=args.seeds or 21, seed=args.seed))
        _write(text, args.out)
        return 0

    if args.target == "theorems":
        try:
            kinds = [CompositeKind(args.kind)] if args.kind else list(CompositeKind)
        except ValueError:
            raise CLIError(f"--kind for theorems must be b1, b2 or chain, got {args.kind!r}") from None
        d_range = parse_range(args.d) if args.d else (2, 8)
        records = []
        for kind in kinds:
            records.extend(sweep_theorems(kind, args.seeds or 100, d_range, args.seed))
    else:
        if args.target == "all":
            families = list(SWEEP_FAMILIES)
        elif args.target == "poly" and args.kind is None:
            families = [Family.POLY_ORTHO, Family.POLY_META, Family.POLY_PARA]
        else:
            families = [_resolve_family(args.target, args.kind)]
        records = []
        for family in families:
            info = FAMILIES[family]
            if info.formula is None:
                raise CLIError(f"{family.value} has no closed form to verify")
            ranges = {p: parse_range(getattr(args, p)) for p in info.params
                      if getattr(args, p, None) is not None}
            records.extend(sweep_family(family, ranges, args.include_out_of_range))
        if args.target == "all":
            for kind in CompositeKind:
                records.extend(sweep_theorems(kind, args.seeds or 100, seed=args.seed))

    if args.format == "json":
        text = json.dumps([dict(zip(RECORD_COLUMNS, record_tuple(r))) for r in records], indent=1) + "\n"
    else:
        text = records_to_csv(records)
    _write(text, args.out)
    counts = summarize_records(records)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_VERIFY if counts["corrected_mismatches"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperzagreb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="degree-based indices of an edge-list file as JSON")
    p.add_argument("input", help="edge-list file, or - for standard input")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_index)

    gen_names = sorted({f.value for f in Family if not f.value.startswith("poly_")} | {"poly"})
    p = sub.add_parser("gen", help="generate a family member as an edge list")
    p.add_argument("family", choices=gen_names)
    p.add_argument("--kind", choices=["ortho", "meta", "para"])
    for flag in PARAM_FLAGS + ("seed",):
        p.add_argument(f"--{flag}")
    p.add_argument("--out")
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compose", help="compose edge-list components into B1, B2 or a chain")
    p.add_argument("kind", choices=[k.value for k in CompositeKind])
    p.add_argument("components", nargs="+", metavar="FILE:V[,W]")
    p.add_argument("--out")
    p.add_argument("--anchors-out", help="write the anchor id remap as JSON here")
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    p.set_defaults(func=cmd_compose)

    targets = sorted({f.value for f in SWEEP_FAMILIES} | {"poly", "theorems", "ledger", "all"})
    p = sub.add_parser("verify", help="sweep closed forms against brute force, CSV out")
    p.add_argument("target", choices=targets)
    p.add_argument("--kind", help="b1/b2/chain for theorems; ortho/meta/para for poly")
    for flag in PARAM_FLAGS:
        p.add_argument(f"--{flag}", help="a or a..b")
    p.add_argument("--seeds", type=int, help="number of random trials")
    p.add_argument("--seed", type=int, default=0, help="base seed (unsigned 64-bit)")
    p.add_argument("--include-out-of-range", action="store_true")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HyperZagrebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
