"""SU(2) at level k = r - 2: twist factors, S-matrix rows and fusion counts."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exactnum import CycloInt


class LabelOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class TqftParams:
    r: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"r must be at least 3, got {self.r}")

    @property
    def level(self) -> int:
        return self.r - 2

    @property
    def labels(self) -> range:
        return range(self.r - 1)

    @property
    def exceptional(self) -> bool:
        """q = exp(2 pi i / r) satisfies q^4 = 1 or q^6 = 1."""
        return self.r < 5 or self.r == 6


def theta(a: int, r: int) -> CycloInt:
    """Twist factor ``beta^(a^2 + 2a)`` with ``beta = exp(2 pi i / 4r)``."""
    if not 0 <= a <= r - 2:
        raise LabelOutOfRange(f"label {a} outside 0..{r - 2}")
    return CycloInt.zeta(4 * r, a * a + 2 * a)


@dataclass(frozen=True)
class SRow:
    """``S[row, i] = sqrt(2/r) * sin((row+1)(i+1) pi / r)`` for ``i = 0..r-2``."""

    r: int
    row: int
    values: tuple[float, ...]

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def s_entry(r: int, row: int, i: int) -> float:
    return math.sqrt(2 / r) * math.sin((row + 1) * (i + 1) * math.pi / r)


def s_row(r: int, row: int = 0) -> SRow:
    TqftParams(r)
    return SRow(r, row, tuple(s_entry(r, row, i) for i in range(r - 1)))


def verlinde_bound(r: int, g: int) -> float:
    """``sum_i S[0, i] ** -g``; bounds the slice dimension for girth ``g``."""
    return math.fsum(s ** -g for s in s_row(r).values)


def fusion_dim(r: int, n: int) -> int:
    """Walks of length ``n`` from 0 back to 0 on the labels ``0..r-2`` with
    steps of one: the fusion channels of ``n`` fundamental points on a sphere."""
    TqftParams(r)
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = r - 2
    vec = [0] * (top + 1)
    vec[0] = 1
    for _ in range(n):
        nxt = [0] * (top + 1)
        for a, v in enumerate(vec):
            if v:
                if a > 0:
                    nxt[a - 1] += v
                if a < top:
                    nxt[a + 1] += v
        vec = nxt
    return vec[0]


def fusion_dim_verlinde(r: int, n: int) -> float:
    """``sum_i S[0,i]^2 (S[1,i] / S[0,i])^n``."""
    s0, s1 = s_row(r, 0), s_row(r, 1)
    return math.fsum(a * a * (b / a) ** n for a, b in zip(s0.values, s1.values))
