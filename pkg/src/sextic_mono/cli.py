"""Command-line interface: ``sextic-mono <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .arith import ArithmeticDomainError
from .classify import Classification, chunked, classify_direct, classify_theorem_main, parallel_map
from .config import BoxConfig
from .families import FAMILIES, CLAIMED_GROUP, admissible_members, verify_family
from .mordell import DEFAULT_X_BOUND, integral_points_bounded, verify_tables
from .trinomial import Trinomial, TrinomialError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

CSV_FIELDS = ("k", "A", "B", "irreducible", "galois_familiar", "galois_t", "monogenic", "delta", "disc_f", "disc_g")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    k: int
    A: int
    B: int
    irreducible: bool
    galois_familiar: str | None
    galois_t: str | None
    monogenic: bool | None
    delta: str
    disc_f: str
    disc_g: str
    method: str
    notes: list[str] = field(default_factory=list)

    @classmethod
    def from_classification(cls, c: Classification, method: str | None = None, extra_notes: Sequence[str] = ()) -> "OutputRecord":
        T = c.trinomial
        return cls(
            k=T.k,
            A=T.A,
            B=T.B,
            irreducible=c.irreducible,
            galois_familiar=c.galois.familiar_name if c.galois else None,
            galois_t=c.galois.t_notation if c.galois else None,
            monogenic=c.monogenic,
            delta=str(c.delta),
            disc_f=str(c.disc_f),
            disc_g=str(c.disc_g),
            method=method or c.method,
            notes=list(c.notes) + list(extra_notes),
        )

    def to_json(self) -> str:
        return json.dumps(self.__dict__, separators=(",", ":"))

    def csv_row(self) -> list[str]:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return [cell(getattr(self, f)) for f in CSV_FIELDS]


def _agree(a: Classification, b: Classification) -> bool:
    return a.outcome() == b.outcome()


def classify_both(T: Trinomial) -> tuple[OutputRecord, bool]:
    d, fast = classify_direct(T), classify_theorem_main(T)
    ok = _agree(d, fast)
    if ok:
        note = "agreement: direct and theorem_main give the same outcome"
    else:
        note = f"disagreement: theorem_main gives monogenic={fast.monogenic} galois={fast.galois and fast.galois.familiar_name}"
    return OutputRecord.from_classification(d, "both", [note]), ok


# ---------------------------------------------------------------- argument parsing


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"malformed integer list {text!r}") from None
    if not vals:
        raise UsageError("empty list")
    return vals


def parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        lo, hi = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected lo:hi") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        # let "-5:-5" and "-3,1" parse as values rather than option names
        self._negative_number_matcher = re.compile(r"^-\d+([:,]-?\d+)*$")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sextic-mono", description="Galois groups and monogenicity of x^6 + A x^(2k) + B.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify one trinomial")
    c.add_argument("--k", type=int, required=True, choices=(1, 2))
    c.add_argument("--A", type=int, required=True)
    c.add_argument("--B", type=int, required=True)
    c.add_argument("--method", choices=("direct", "theorem", "both"), default="direct")

    s = sub.add_parser("scan", help="classify every cell of a box")
    s.add_argument("--k", default="1,2", help="comma separated subset of {1,2}")
    s.add_argument("--A-range", required=True, help="lo:hi, inclusive")
    s.add_argument("--B-range", required=True, help="lo:hi, inclusive")
    s.add_argument("--cross-validate", action="store_true")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default $SEXTIC_MONO_JOBS or 1)")
    s.add_argument("--out", default=None, help="output file (default stdout)")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    f = sub.add_parser("families", help="list or verify members of a parametric family")
    f.add_argument("--family", required=True, choices=FAMILIES)
    f.add_argument("--count", type=int, default=25)
    f.add_argument("--verify", action="store_true")
    f.add_argument("--jobs", type=int, default=None)

    m = sub.add_parser("mordell", help="integral points on Y^2 = X^3 + N with |X| bounded")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--x-bound", type=int, default=DEFAULT_X_BOUND)

    v = sub.add_parser("verify-tables", help="recompute the exceptional-pair tables")
    v.add_argument("--x-bound", type=int, default=DEFAULT_X_BOUND)
    return p


# ---------------------------------------------------------------- commands


def cmd_classify(args, out, err) -> int:
    T = Trinomial(args.k, args.A, args.B)
    if args.method == "both":
        rec, ok = classify_both(T)
        print(rec.to_json(), file=out)
        return EXIT_OK if ok else EXIT_MISMATCH
    c = classify_direct(T) if args.method == "direct" else classify_theorem_main(T)
    print(OutputRecord.from_classification(c).to_json(), file=out)
    return EXIT_OK


def _scan_chunk(payload: tuple[list[tuple[int, int, int]], bool]) -> list[tuple[OutputRecord, bool]]:
    cells, cross = payload
    out = []
    for k, A, B in cells:
        T = Trinomial(k, A, B)
        if cross:
            out.append(classify_both(T))
        else:
            out.append((OutputRecord.from_classification(classify_direct(T)), True))
    return out


def _cells(cfg: BoxConfig, err) -> list[tuple[int, int, int]]:
    cells = []
    for k in sorted(set(cfg.k_set)):
        for A in cfg.A_range:
            for B in cfg.B_range:
                if A == 0 or B == 0:
                    print(f"note: skipped k={k} A={A} B={B} (A and B must be nonzero)", file=err)
                    continue
                cells.append((k, A, B))
    return cells


def cmd_scan(args, out, err) -> int:
    k_set = parse_int_list(args.k)
    if any(k not in (1, 2) for k in k_set):
        raise UsageError("--k values must be 1 or 2")
    (A_lo, A_hi), (B_lo, B_hi) = parse_range(args.A_range), parse_range(args.B_range)
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be positive")
    cfg = BoxConfig(tuple(k_set), A_lo, A_hi, B_lo, B_hi, jobs=args.jobs)
    cells = _cells(cfg, err)

    sink = open(args.out, "w", newline="") if args.out else out
    writer = csv.writer(sink, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(CSV_FIELDS)
    checked = irreducible = mismatches = 0
    mono: dict[str, int] = {}
    try:
        payloads = ((chunk, args.cross_validate) for chunk in chunked(cells, cfg.chunk_size))
        for part in parallel_map(_scan_chunk, payloads, cfg.workers):
            for rec, ok in part:
                checked += 1
                irreducible += rec.irreducible
                mismatches += not ok
                if rec.monogenic:
                    mono[rec.galois_familiar] = mono.get(rec.galois_familiar, 0) + 1
                if writer:
                    writer.writerow(rec.csv_row())
                else:
                    print(rec.to_json(), file=sink)
    finally:
        if args.out:
            sink.close()
    counts = " ".join(f"{g}={n}" for g, n in sorted(mono.items()))
    summary = f"summary: checked={checked} irreducible={irreducible} monogenic[{counts}]"
    if args.cross_validate:
        summary += f" mismatches={mismatches}"
    print(summary, file=err)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_families(args, out, err) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    if not args.verify:
        members, skipped, capped = admissible_members(args.family, args.count)
        for m in members:
            T = m.trinomial
            print(json.dumps({"family": m.family, "parameter": m.parameter, "k": T.k, "A": T.A, "B": T.B}, separators=(",", ":")), file=out)
        if skipped:
            print(f"note: inadmissible parameters {skipped}", file=err)
        return EXIT_MISMATCH if capped else EXIT_OK
    rep = verify_family(args.family, args.count, jobs=args.jobs)
    want = CLAIMED_GROUP[args.family].familiar_name
    for c in rep.checks:
        T = c.member.trinomial
        row = {"family": rep.family, "parameter": c.member.parameter, "k": T.k, "A": T.A, "B": T.B, "group": want, "verified": c.ok}
        print(json.dumps(row, separators=(",", ":")), file=out)
    if rep.inadmissible:
        print(f"note: inadmissible parameters {rep.inadmissible}", file=err)
    status = "PASS" if rep.ok else "FAIL"
    print(
        f"{status} {rep.family}: {len(rep.checks) - len(rep.failures)}/{rep.requested} monogenic {want}, "
        f"distinct discriminants={rep.discriminants_distinct}, monotone={rep.discriminants_monotone}",
        file=out,
    )
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_mordell(args, out, err) -> int:
    res = integral_points_bounded(args.N, args.x_bound)
    for X, Y in res.points:
        print(f"X={X} Y={Y}", file=out)
    print(f"note: complete within |X| <= {args.x_bound} only", file=err)
    return EXIT_OK


def cmd_verify_tables(args, out, err) -> int:
    rep = verify_tables(args.x_bound)
    for c in rep.checks:
        extra = ""
        if c.non_viable:
            extra += f" non-viable={c.non_viable}"
        if c.filtered:
            extra += f" filtered={c.filtered}"
        print(f"  {'ok' if c.ok else 'MISMATCH'} {c.table} {c.row}: {sorted(c.found)}{extra}", file=out)
    for t in rep.tables:
        print(f"{'PASS' if rep.table_ok(t) else 'FAIL'} {t}", file=out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


COMMANDS = {
    "classify": cmd_classify,
    "scan": cmd_scan,
    "families": cmd_families,
    "mordell": cmd_mordell,
    "verify-tables": cmd_verify_tables,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except (UsageError, TrinomialError, ArithmeticDomainError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Invoke ``main`` capturing stdout and stderr."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()
