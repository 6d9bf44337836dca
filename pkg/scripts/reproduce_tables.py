"""Recompute the exceptional-pair tables and the six infinite families.

    python3 scripts/reproduce_tables.py --x-bound 100000 --count 25
"""

import argparse
import time

from sextic_mono.config import FamilyConfig, TablesConfig
from sextic_mono.families import FAMILIES, verify_family
from sextic_mono.mordell import verify_tables


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x-bound", type=int, default=TablesConfig.x_bound)
    ap.add_argument("--count", type=int, default=FamilyConfig.count)
    args = ap.parse_args()

    tables, families = TablesConfig(x_bound=args.x_bound), FamilyConfig(count=args.count)
    start = time.perf_counter()
    rep = verify_tables(tables.x_bound, jobs=tables.jobs)
    for c in rep.checks:
        extra = f" non-viable {c.non_viable}" if c.non_viable else ""
        print(f"{'ok  ' if c.ok else 'FAIL'} {c.table:16} {c.row:14} {sorted(c.found)}{extra}")
    print(f"tables {'PASS' if rep.ok else 'FAIL'} in {time.perf_counter() - start:.1f}s")

    for family in FAMILIES:
        fr = verify_family(family, families.count, jobs=families.jobs, cap=families.parameter_cap)
        params = [m.parameter for m in fr.members]
        print(
            f"{'PASS' if fr.ok else 'FAIL'} {family}: {len(fr.checks) - len(fr.failures)}/{families.count}"
            f" parameters {params[0]}..{params[-1]} skipped {fr.inadmissible}"
        )


if __name__ == "__main__":
    main()
