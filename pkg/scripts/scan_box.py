"""Audit a box of trinomials: classifier agreement, prime-engine agreement and structural checks.

    python3 scripts/scan_box.py --bound 200 --jobs 4
"""

import argparse
import time

from sextic_mono.audit import CHECKS, audit_box
from sextic_mono.config import BoxConfig


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=200, help="scan 1 <= |A|, |B| <= bound")
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()

    cfg = BoxConfig.symmetric(args.bound, k_set=tuple(args.k), jobs=args.jobs)
    start = time.perf_counter()
    rep = audit_box(cfg.k_set, cfg.A_range, cfg.B_range, jobs=cfg.workers, chunk_size=cfg.chunk_size)
    cross = rep.cross
    print(f"checked {cross.checked} cells, {cross.irreducible} irreducible in {time.perf_counter() - start:.1f}s")
    print(f"classifier mismatches: {len(cross.mismatches)}")
    for name in CHECKS:
        print(f"  {name}: {rep.count(name)}")
    print(f"(trinomial, prime) pairs checked: {rep.primes_checked}")
    print(f"irreducible by group: {dict(sorted(cross.group_counts.items()))}")
    print(f"monogenic by group:   {dict(sorted(cross.monogenic_counts.items()))}")
    print(f"literal condition-3 divergences: {rep.literal_condition3_divergences}")
    print(f"C2xS4-condition overlaps: {[(T.k, T.A, T.B) for T in rep.c2xs4_overlaps]}")
    for T, note in sorted(set(cross.notes), key=lambda tn: (tn[0].k, tn[0].A, tn[0].B)):
        print(f"note ({T.k},{T.A},{T.B}): {note}")


if __name__ == "__main__":
    main()
