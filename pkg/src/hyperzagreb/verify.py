"""Sweeps that compare closed forms against brute force on composed graphs.

Two report shapes are produced:

* :class:`VerificationRecord` rows (one per sweep point) for family and
  random-theorem sweeps;
* :class:`~hyperzagreb.closed_form.LedgerRow` rows, the discrepancy ledger,
  pairing every printed statement with its corrected form.

Rows are generated serially in parameter order, so output is deterministic.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import closed_form as cf
from .compose import AnchoredComponent, CompositeKind, compose
from .errors import BadParameter
from .families import DOMAIN_MIN, FAMILIES, Family, FamilySpec, composition, example_hm, random_component
from .graph import hyper_zagreb

RECORD_COLUMNS = (
    "structure", "params", "oracle", "printed", "corrected", "example_formula",
    "printed_matches", "corrected_matches", "formula_matches",
)

SWEEP_FAMILIES = (
    Family.COMB_T, Family.BRIDGE_B, Family.COMB_A, Family.VAN_HOVE,
    Family.POLY_ORTHO, Family.POLY_META, Family.POLY_PARA, Family.SPIRO,
)


@dataclass(frozen=True)
class VerificationRecord:
    structure: str
    params: dict[str, int]
    oracle: int
    printed: int | None = None
    corrected: int | None = None
    example_formula: int | None = None

    @property
    def printed_matches(self) -> bool:
        return self.printed == self.oracle

    @property
    def corrected_matches(self) -> bool:
        return self.corrected == self.oracle

    @property
    def formula_matches(self) -> bool | None:
        if self.example_formula is None:
            return None
        return self.example_formula == self.oracle


def theorem_values(kind: CompositeKind, components: Sequence[AnchoredComponent]) -> tuple[int, int] | None:
    """``(printed, corrected)`` general-theorem values; ``None`` when ``d < 2``.

    For the B2 bridge the "printed" value is the statement with its original
    index ranges and the "corrected" one is the range-repaired statement.
    """
    if len(components) < 2:
        return None
    s = [cf.summarize(c) for c in components]
    if kind is CompositeKind.B1:
        return cf.hm_b1_printed(s), cf.hm_b1_corrected(s)
    if kind is CompositeKind.B2:
        return cf.hm_b2_verbatim(s), cf.hm_b2_printed(s)
    return cf.hm_chain_printed(s), cf.hm_chain_corrected(s)


# -- parameter grids -------------------------------------------------------------


def _spiro_positions(n: int, ks: Iterable[int] | None, ls: Iterable[int] | None):
    ks = range(n) if ks is None else ks
    for k in ks:
        for l in (range(n) if ls is None else ls):
            if 0 <= k < n and 0 <= l < n and (k - l) % n not in (0, 1, n - 1):
                yield k, l


def family_points(family: Family, ranges: dict[str, tuple[int, int]] | None = None,
                  include_out_of_range: bool = False) -> list[FamilySpec]:
    """Expand per-parameter ``(lo, hi)`` ranges into sweep points.

    Missing ranges fall back to the family's default in-range grid, extended
    down to the smallest in-domain value when ``include_out_of_range`` is set.
    Without that flag a point outside the closed form's validity range is an
    error. For spiro chains, unspecified ``k``/``l`` enumerate every
    non-adjacent position pair and adjacent pairs are skipped.
    """
    family = Family(family)
    info = FAMILIES[family]
    if info.formula is None:
        raise BadParameter(f"{family.value} has no closed form to verify")
    ranges = dict(ranges or {})
    unknown = set(ranges) - set(info.params)
    if unknown:
        raise BadParameter(f"{family.value} takes parameters {', '.join(info.params)}, not {', '.join(sorted(unknown))}")
    mins = DOMAIN_MIN[family]
    grid: dict[str, tuple[int, int]] = {}
    for p, default in info.defaults.items():
        lo, hi = ranges.get(p, default)
        if p not in ranges and include_out_of_range:
            lo = mins[p]
        if lo > hi:
            raise BadParameter(f"empty range {lo}..{hi} for {p}")
        if lo < mins[p]:
            raise BadParameter(f"{family.value} needs {p} >= {mins[p]}, got range {lo}..{hi}")
        grid[p] = (lo, hi)

    points = []
    if family is Family.SPIRO:
        k_rng = ranges.get("k")
        l_rng = ranges.get("l")
        for n in range(grid["n"][0], grid["n"][1] + 1):
            pos = _spiro_positions(
                n,
                None if k_rng is None else range(k_rng[0], k_rng[1] + 1),
                None if l_rng is None else range(l_rng[0], l_rng[1] + 1),
            )
            for k, l in pos:
                for d in range(grid["d"][0], grid["d"][1] + 1):
                    points.append(FamilySpec(family, {"n": n, "k": k, "l": l, "d": d}))
    else:
        names = list(grid)
        for combo in itertools.product(*(range(lo, hi + 1) for lo, hi in grid.values())):
            points.append(FamilySpec(family, dict(zip(names, combo))))

    if not include_out_of_range:
        for spec in points:
            if not example_hm(spec).valid:
                raise BadParameter(
                    f"{family.value} at {format_params(spec.params)} is outside the closed form's "
                    "validity range; pass --include-out-of-range to chart it"
                )
    return points


def sweep_family(family: Family, ranges: dict[str, tuple[int, int]] | None = None,
                 include_out_of_range: bool = False) -> Iterator[VerificationRecord]:
    for spec in family_points(family, ranges, include_out_of_range):
        kind, parts = composition(spec)
        oracle = hyper_zagreb(compose(kind, parts).graph)
        theorem = theorem_values(kind, parts)
        printed, corrected = theorem if theorem else (None, None)
        yield VerificationRecord(
            Family(spec.family).value, spec.params, oracle, printed, corrected, example_hm(spec).value
        )


def random_trials(kind: CompositeKind, trials: int, d_range: tuple[int, int] = (2, 8),
                  seed: int = 0, n_range: tuple[int, int] = (3, 9)):
    """Yield ``(trial, d, components)`` for seeded random composites.

    ``d`` cycles through ``d_range`` so every value gets equal coverage; all
    components are drawn from one ``random.Random(seed)`` stream.
    """
    kind = CompositeKind(kind)
    lo, hi = d_range
    if lo < 2 or hi < lo:
        raise BadParameter(f"d range must satisfy 2 <= lo <= hi, got {lo}..{hi}")
    if n_range[0] < 3 or n_range[1] < n_range[0]:
        raise BadParameter(f"n range must satisfy 3 <= lo <= hi, got {n_range[0]}..{n_range[1]}")
    rng = random.Random(seed)
    for t in range(trials):
        d = lo + t % (hi - lo + 1)
        comps = [
            random_component(rng, n_range[0], n_range[1], two_anchors=kind is not CompositeKind.B1)
            for _ in range(d)
        ]
        yield t, d, comps


def sweep_theorems(kind: CompositeKind, trials: int, d_range: tuple[int, int] = (2, 8),
                   seed: int = 0, n_range: tuple[int, int] = (3, 9)) -> Iterator[VerificationRecord]:
    kind = CompositeKind(kind)
    for t, d, comps in random_trials(kind, trials, d_range, seed, n_range):
        oracle = hyper_zagreb(compose(kind, comps).graph)
        printed, corrected = theorem_values(kind, comps)
        yield VerificationRecord(f"theorem_{kind.value}", {"trial": t, "d": d, "seed": seed},
                                 oracle, printed, corrected)


# -- discrepancy ledger -------------------------------------------------------------

_THEOREM_VARIANT = {CompositeKind.B1: "theorem1", CompositeKind.B2: "theorem2", CompositeKind.CHAIN: "theorem3"}


def ledger_rows(include_random: int = 21, seed: int = 0) -> Iterator[cf.LedgerRow]:
    """Discrepancy ledger over every family grid (out-of-range points included).

    Per family point: the general theorem (printed vs corrected), the uniform
    corollary where the family is uniform, and the family's own closed form
    (recorded as printed, with the corrected theorem alongside). Then
    ``include_random`` random composites per composition kind.
    """
    for family in SWEEP_FAMILIES:
        for spec in family_points(family, include_out_of_range=True):
            kind, parts = composition(spec)
            name = Family(spec.family).value
            oracle = hyper_zagreb(compose(kind, parts).graph)
            theorem = theorem_values(kind, parts)
            if theorem:
                yield cf.LedgerRow(name, _THEOREM_VARIANT[kind], spec.params, *theorem, oracle)
            uniform = all(p == parts[0] for p in parts)
            if uniform:
                s, d = cf.summarize(parts[0]), len(parts)
                evaluator, variant = {
                    CompositeKind.B1: (cf.hm_b1_uniform, "corollary1"),
                    CompositeKind.B2: (cf.hm_b2_uniform, "corollary2"),
                    CompositeKind.CHAIN: (cf.hm_chain_uniform, "corollary3"),
                }[kind]
                yield cf.LedgerRow(
                    name, variant, spec.params,
                    evaluator(s, d, cf.FormulaVariant.PRINTED),
                    evaluator(s, d, cf.FormulaVariant.CORRECTED),
                    oracle,
                )
            corrected = theorem[1] if theorem else hyper_zagreb(parts[0].graph)
            yield cf.LedgerRow(name, "example", spec.params, example_hm(spec).value, corrected, oracle)
    for kind in CompositeKind:
        for record in sweep_theorems(kind, include_random, seed=seed):
            yield cf.LedgerRow(record.structure, _THEOREM_VARIANT[kind], record.params,
                               record.printed, record.corrected, record.oracle)


# -- serialisation ----------------------------------------------------------------------


def format_params(params: dict[str, int]) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return format_params(value)
    return str(value)


def _write_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def record_tuple(r: VerificationRecord) -> tuple:
    return (r.structure, r.params, r.oracle, r.printed, r.corrected, r.example_formula,
            r.printed_matches, r.corrected_matches, r.formula_matches)


def records_to_csv(records: Iterable[VerificationRecord]) -> str:
    return _write_csv(RECORD_COLUMNS, (record_tuple(r) for r in records))


def ledger_tuple(r: cf.LedgerRow) -> tuple:
    return (r.structure, r.variant, r.params, r.printed_value, r.corrected_value,
            r.oracle_value, r.printed_matches, r.corrected_matches)


def ledger_to_csv(rows: Iterable[cf.LedgerRow]) -> str:
    return _write_csv(cf.LEDGER_COLUMNS, (ledger_tuple(r) for r in rows))


def summarize_records(records: Sequence[VerificationRecord]) -> dict[str, int]:
    """Match/mismatch counts; a corrected mismatch is an implementation bug."""
    with_printed = [r for r in records if r.printed is not None]
    with_corrected = [r for r in records if r.corrected is not None]
    with_formula = [r for r in records if r.example_formula is not None]
    return {
        "rows": len(records),
        "printed_matches": sum(r.printed_matches for r in with_printed),
        "printed_mismatches": sum(not r.printed_matches for r in with_printed),
        "corrected_matches": sum(r.corrected_matches for r in with_corrected),
        "corrected_mismatches": sum(not r.corrected_matches for r in with_corrected),
        "formula_matches": sum(bool(r.formula_matches) for r in with_formula),
        "formula_mismatches": sum(not r.formula_matches for r in with_formula),
    }
