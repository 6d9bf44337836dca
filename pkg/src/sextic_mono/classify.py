"""Classification of x^6 + A x^(2k) + B by irreducibility, Galois group and monogenicity.

``classify_direct`` runs the general machinery: factorization, the Galois
decision table, then per-prime monogenicity.  ``classify_theorem_main`` uses
only the closed-form conditions that characterise the monogenic trinomials
for each group.  ``cross_validate`` compares the two over a box.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .arith import is_perfect_square, is_squarefree, mmod, prime_divisors, radical, strip_primes
from .galois import GaloisGroup, f_is_irreducible, galois_group
from .monogenic import MonogenicVerdict, R, is_monogenic
from .trinomial import Trinomial, delta, disc_f, disc_g

DIRECT = "direct"
THEOREM_MAIN = "theorem_main"

# The A4 exceptional pairs.  The stated list has (2, -3, -1); the derivation
# gives (2, 3, -1), which is what the direct pipeline confirms.
A4_PAIRS_STATED = frozenset({(1, -3, -1), (2, -3, -1)})
A4_PAIRS = frozenset({(1, -3, -1), (2, 3, -1)})
A4_NOTE = "A4 exceptional pair stated as (2,-3,-1) is corrected to (2,3,-1); resolution confirmed by the direct pipeline"

C2xS3_PAIRS = frozenset({(-2, 2), (2, -2)})
C2xA4_PAIRS_K2 = frozenset({(-3, 1), (-3, 3), (3, -3)})
F1_RESIDUES = frozenset({(6, 1), (6, 4), (6, 5), (6, 8)})


@dataclass(frozen=True)
class Classification:
    trinomial: Trinomial
    irreducible: bool
    galois: GaloisGroup | None
    monogenic_verdict: MonogenicVerdict | None
    delta: int
    disc_f: int
    disc_g: int
    method: str
    notes: tuple[str, ...] = ()

    @property
    def monogenic(self) -> bool | None:
        return None if self.monogenic_verdict is None else self.monogenic_verdict.monogenic

    def outcome(self) -> tuple[bool | None, GaloisGroup | None]:
        return self.monogenic, self.galois


def _base(T: Trinomial, method: str, notes: Sequence[str] = ()) -> dict:
    return dict(trinomial=T, delta=delta(T), disc_f=disc_f(T), disc_g=disc_g(T), method=method, notes=tuple(notes))


def _a4_notes(T: Trinomial) -> tuple[str, ...]:
    return (A4_NOTE,) if (T.k, T.A, T.B) in A4_PAIRS_STATED ^ A4_PAIRS else ()


def classify_direct(T: Trinomial) -> Classification:
    if not f_is_irreducible(T):
        return Classification(irreducible=False, galois=None, monogenic_verdict=None, **_base(T, DIRECT))
    return Classification(
        irreducible=True,
        galois=galois_group(T),
        monogenic_verdict=is_monogenic(T),
        **_base(T, DIRECT, _a4_notes(T)),
    )


# ---------------------------------------------------------------- explicit conditions


def _f1(T: Trinomial) -> bool:
    A, B = T.A, T.B
    d = delta(T)
    if T.k != 1 or d == 0:
        return False
    if (A * B) % 2 == 0 or not is_squarefree(B) or B == -1:
        return False
    if A % radical(d):
        return False
    return A % 3 != 0 or (mmod(A, 9), mmod(B, 9)) in F1_RESIDUES


def _f2(T: Trinomial) -> bool:
    A, B = T.A, T.B
    d = delta(T)
    if B != -1 or A == (-1) ** T.k * 3 or A % 4 == 0 or A % 9 == 0 or d == 0:
        return False
    return is_squarefree(strip_primes(d, (3,)))


def _f3(T: Trinomial) -> bool:
    A, B = T.A, T.B
    if T.k != 2 or A % 3 or A % 4 == 0 or B == -1:
        return False
    return B == 3 - 4 * (A // 3) ** 3 and is_squarefree(B)


_FAMILIES = {"F1": _f1, "F2": _f2, "F3": _f3}


def in_family(T: Trinomial, which: str) -> bool:
    """Membership in F1, F2 or F3, including the side conditions of the enclosing case."""
    try:
        return _FAMILIES[which](T)
    except KeyError:
        raise ValueError(f"unknown family {which!r}") from None


def _c2xs4_conditions(T: Trinomial) -> bool:
    A, B, k = T.A, T.B, T.k
    d = delta(T)
    if d == 0 or B == -1 or not is_squarefree(B):
        return False
    core = strip_primes(d, prime_divisors(2 * A * B))
    if not is_squarefree(core):
        return False
    if is_perfect_square(-(B ** (k - 1)) * d):
        return False
    pair4 = (mmod(A, 4), mmod(B, 4))
    if A % 2 and B % 2 == 0 and pair4 != (3, 2):
        return False
    if A % 2 == 0 and B % 2 and pair4 not in {(0, 1), (2, 3)}:
        return False
    if k == 2 and ((A, B) in C2xS3_PAIRS or _f3(T)):
        return False
    if A % 3 == 0 and B % 3 and (mmod(A, 9), mmod(B, 9)) not in R[k]:
        return False
    return True


def theorem_main_match(T: Trinomial) -> GaloisGroup | None:
    """The group whose explicit monogenic conditions T meets, or None.

    Cases are tried in the order C2xS3, A4, C2xA4, S4+, S4-, C2xS4; the
    first hit wins.  C6 and S3 never carry monogenic trinomials.
    """
    k, A, B = T.k, T.A, T.B
    if k == 2 and (A, B) in C2xS3_PAIRS:
        return GaloisGroup.C2xS3
    if (k, A, B) in A4_PAIRS:
        return GaloisGroup.A4
    if k == 1 and _f1(T):
        return GaloisGroup.C2xA4
    if (
        k == 2
        and (A, B) in C2xA4_PAIRS_K2
        and (A * B) % 2
        and is_squarefree(B)
        and B != -1
        and A % radical(delta(T)) == 0
    ):
        return GaloisGroup.C2xA4
    if _f2(T):
        return GaloisGroup.S4plus
    if (k == 1 and (A, B) == (-9, -6)) or _f3(T):
        return GaloisGroup.S4minus
    if _c2xs4_conditions(T):
        return GaloisGroup.C2xS4
    return None


def classify_theorem_main(T: Trinomial) -> Classification:
    if not f_is_irreducible(T):
        return Classification(irreducible=False, galois=None, monogenic_verdict=None, **_base(T, THEOREM_MAIN))
    notes = list(_a4_notes(T))
    group = theorem_main_match(T)
    if group is not None:
        verdict = MonogenicVerdict(True, basis="explicit-conditions")
    else:
        # the explicit conditions only characterise monogenic inputs
        group = galois_group(T)
        verdict = MonogenicVerdict(False, basis="explicit-conditions")
        notes.append("group taken from the direct Galois stage")
    return Classification(irreducible=True, galois=group, monogenic_verdict=verdict, **_base(T, THEOREM_MAIN, notes))


# ---------------------------------------------------------------- cross validation


@dataclass
class Mismatch:
    trinomial: Trinomial
    direct: tuple[bool | None, str | None]
    theorem_main: tuple[bool | None, str | None]


EXAMPLES_PER_GROUP = 50


@dataclass
class CrossValidationReport:
    checked: int = 0
    irreducible: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    monogenic_counts: Counter = field(default_factory=Counter)
    group_counts: Counter = field(default_factory=Counter)
    notes: list[tuple[Trinomial, str]] = field(default_factory=list)
    # the first few irreducible inputs seen per group, in scan order
    group_examples: dict[str, list[Trinomial]] = field(default_factory=dict)

    def record(self, group: str, T: Trinomial) -> None:
        self.group_counts[group] += 1
        examples = self.group_examples.setdefault(group, [])
        if len(examples) < EXAMPLES_PER_GROUP:
            examples.append(T)

    def merge(self, other: "CrossValidationReport") -> None:
        self.checked += other.checked
        self.irreducible += other.irreducible
        self.mismatches += other.mismatches
        self.monogenic_counts.update(other.monogenic_counts)
        self.group_counts.update(other.group_counts)
        self.notes += other.notes
        for group, examples in other.group_examples.items():
            mine = self.group_examples.setdefault(group, [])
            mine.extend(examples[: EXAMPLES_PER_GROUP - len(mine)])

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _outcome_key(c: Classification) -> tuple[bool | None, str | None]:
    return c.monogenic, c.galois.familiar_name if c.galois else None


def compare(T: Trinomial) -> tuple[Classification, Classification]:
    return classify_direct(T), classify_theorem_main(T)


def _validate_chunk(cells: list[tuple[int, int, int]]) -> CrossValidationReport:
    rep = CrossValidationReport()
    for k, A, B in cells:
        T = Trinomial(k, A, B)
        d, fast = compare(T)
        rep.checked += 1
        if not d.irreducible:
            continue
        rep.irreducible += 1
        rep.record(d.galois.familiar_name, T)
        if d.monogenic:
            rep.monogenic_counts[d.galois.familiar_name] += 1
        if _outcome_key(d) != _outcome_key(fast):
            rep.mismatches.append(Mismatch(T, _outcome_key(d), _outcome_key(fast)))
        for note in d.notes:
            rep.notes.append((T, note))
    return rep


def grid(k_set: Iterable[int], A_range: Iterable[int], B_range: Iterable[int]) -> Iterator[tuple[int, int, int]]:
    """Cells of the box in canonical (k, A, B) order, skipping A = 0 and B = 0."""
    B_values = [B for B in B_range if B != 0]
    for k in sorted(set(k_set)):
        for A in sorted(set(A_range)):
            if A == 0:
                continue
            for B in sorted(set(B_values)):
                yield k, A, B


def default_jobs() -> int:
    env = os.environ.get("SEXTIC_MONO_JOBS")
    return int(env) if env else 1


def chunked(cells: Iterable, size: int) -> Iterator[list]:
    chunk: list = []
    for c in cells:
        chunk.append(c)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def parallel_map(fn, chunks: Iterable[list], jobs: int | None = None) -> Iterator:
    """Apply ``fn`` to each chunk, in order, optionally across worker processes."""
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1:
        for c in chunks:
            yield fn(c)
        return
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        yield from pool.imap(fn, chunks)


def cross_validate(k_set, A_range, B_range, jobs: int | None = None, chunk_size: int = 400) -> CrossValidationReport:
    report = CrossValidationReport()
    for part in parallel_map(_validate_chunk, chunked(grid(k_set, A_range, B_range), chunk_size), jobs):
        report.merge(part)
    return report
