"""Single-parameter families of monogenic even sextic trinomials.

T1, T2 give C2xA4, S gives S4plus, U gives S4minus, V1 and V2 give C2xS4.
Each member is admissible when its squarefree side condition holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import ArithmeticDomainError, is_squarefree, strip_primes
from .classify import chunked, classify_direct, classify_theorem_main, parallel_map
from .galois import GaloisGroup
from .trinomial import Trinomial, delta, disc_f, disc_g

FAMILIES = ("T1", "T2", "S", "U", "V1", "V2")
MIN_PARAMETER = {"T1": 0, "T2": 0, "S": 0, "U": 1, "V1": 0, "V2": 0}
CLAIMED_GROUP = {
    "T1": GaloisGroup.C2xA4,
    "T2": GaloisGroup.C2xA4,
    "S": GaloisGroup.S4plus,
    "U": GaloisGroup.S4minus,
    "V1": GaloisGroup.C2xS4,
    "V2": GaloisGroup.C2xS4,
}
# Factoring cost grows with the parameter; scans stop here.
DEFAULT_PARAMETER_CAP = 10**4


class UnknownFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyMember:
    family: str
    parameter: int
    trinomial: Trinomial
    admissible: bool


def closed_form(family: str, n: int) -> tuple[int, int, int]:
    if family == "T1":
        A = -(27 * n * n + 27 * n + 7)
        return 1, A, (2 * n + 1) * A
    if family == "T2":
        A = -3 * (9 * n * n - 21 * n + 13)
        # (6n - 7) A / 3: the reading under which disc(g) = 9 A^2
        return 1, A, (6 * n - 7) * (A // 3)
    if family == "S":
        return 1, 6 * n + 1, -1
    if family == "U":
        return 2, 6 * n + 3, 3 - 4 * (2 * n + 1) ** 3
    if family == "V1":
        return 1, 6 * n + 1, 1
    if family == "V2":
        return 2, 36 * n + 12, 1
    raise UnknownFamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _admissible(family: str, T: Trinomial) -> bool:
    if family in ("T1", "T2", "U"):
        return is_squarefree(T.B)
    if family == "V2":
        return is_squarefree(strip_primes(delta(T), (3,)))
    return is_squarefree(delta(T))


def generate(family: str, parameter: int) -> FamilyMember:
    k, A, B = closed_form(family, parameter)
    if parameter < MIN_PARAMETER[family]:
        raise ArithmeticDomainError(f"{family} needs parameter >= {MIN_PARAMETER[family]}")
    T = Trinomial(k, A, B)
    return FamilyMember(family, parameter, T, _admissible(family, T))


@dataclass
class MemberCheck:
    member: FamilyMember
    direct_ok: bool
    theorem_ok: bool
    identity_ok: bool

    @property
    def ok(self) -> bool:
        return self.direct_ok and self.theorem_ok and self.identity_ok


@dataclass
class FamilyReport:
    family: str
    requested: int
    checks: list[MemberCheck] = field(default_factory=list)
    inadmissible: list[int] = field(default_factory=list)
    discriminants_distinct: bool = True
    discriminants_monotone: bool = True
    cap_reached: bool = False

    @property
    def members(self) -> list[FamilyMember]:
        return [c.member for c in self.checks]

    @property
    def failures(self) -> list[MemberCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return (
            len(self.checks) == self.requested
            and not self.failures
            and self.discriminants_distinct
            and self.discriminants_monotone
        )


def _identity_holds(member: FamilyMember) -> bool:
    T = member.trinomial
    if member.family == "T1":
        return disc_g(T) == T.A**2
    if member.family == "T2":
        return disc_g(T) == 9 * T.A**2
    if member.family == "U":
        return T.B != -1
    return True


def _check_members(members: list[FamilyMember]) -> list[MemberCheck]:
    out = []
    for m in members:
        want = CLAIMED_GROUP[m.family]
        d = classify_direct(m.trinomial)
        fast = classify_theorem_main(m.trinomial)
        out.append(
            MemberCheck(
                m,
                direct_ok=bool(d.irreducible and d.monogenic and d.galois is want),
                theorem_ok=bool(fast.monogenic and fast.galois is want),
                identity_ok=_identity_holds(m),
            )
        )
    return out


def admissible_members(family: str, count: int, cap: int = DEFAULT_PARAMETER_CAP) -> tuple[list[FamilyMember], list[int], bool]:
    """First ``count`` admissible members, the skipped parameters, and whether the cap cut the scan short."""
    found: list[FamilyMember] = []
    skipped: list[int] = []
    n = MIN_PARAMETER[family]
    while len(found) < count:
        if n > cap:
            return found, skipped, True
        m = generate(family, n)
        if m.admissible:
            found.append(m)
        else:
            skipped.append(n)
        n += 1
    return found, skipped, False


def verify_family(family: str, count: int, jobs: int | None = None, cap: int = DEFAULT_PARAMETER_CAP) -> FamilyReport:
    if family not in FAMILIES:
        raise UnknownFamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if count < 1:
        raise ArithmeticDomainError("count must be positive")
    members, skipped, capped = admissible_members(family, count, cap)
    report = FamilyReport(family, count, inadmissible=skipped, cap_reached=capped)
    for part in parallel_map(_check_members, chunked(members, 8), jobs):
        report.checks.extend(part)
    discs = [disc_f(m.trinomial) for m in members]
    report.discriminants_distinct = len(set(discs)) == len(discs)
    steps = [b - a for a, b in zip(discs, discs[1:])]
    report.discriminants_monotone = all(s > 0 for s in steps) or all(s < 0 for s in steps)
    return report
