"""Run configurations shared by the CLI, the scripts and the test suite."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import default_jobs
from .families import DEFAULT_PARAMETER_CAP
from .mordell import DEFAULT_X_BOUND


@dataclass(frozen=True)
class BoxConfig:
    """The scan box k in k_set, A_lo <= A <= A_hi, B_lo <= B <= B_hi (A = 0, B = 0 skipped)."""

    k_set: tuple[int, ...] = (1, 2)
    A_lo: int = -200
    A_hi: int = 200
    B_lo: int = -200
    B_hi: int = 200
    jobs: int | None = None
    chunk_size: int = 400

    @classmethod
    def symmetric(cls, bound: int, **kw) -> "BoxConfig":
        return cls(A_lo=-bound, A_hi=bound, B_lo=-bound, B_hi=bound, **kw)

    @property
    def A_range(self) -> range:
        return range(self.A_lo, self.A_hi + 1)

    @property
    def B_range(self) -> range:
        return range(self.B_lo, self.B_hi + 1)

    @property
    def workers(self) -> int:
        return default_jobs() if self.jobs is None else self.jobs


@dataclass(frozen=True)
class FamilyConfig:
    count: int = 25
    parameter_cap: int = DEFAULT_PARAMETER_CAP
    jobs: int | None = None


@dataclass(frozen=True)
class TablesConfig:
    x_bound: int = DEFAULT_X_BOUND
    jobs: int | None = 1
