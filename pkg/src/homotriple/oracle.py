"""Exhaustive 2^n enumeration: the deliberately dumb ground truth.

Every coloring of [1, n] is visited as an integer bitmask (bit p-1 = C(p)),
with no pruning beyond early exit once a valid coloring proves N < f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .core import CapacityError, Coloring, Instance


@dataclass(frozen=True)
class OracleLimit:
    """Hard cap on the exhaustive enumeration domain size."""

    n_max: int = 26

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}")


def _mask_valid(mask: int, n: int, s: int, t: int) -> bool:
    """No monochromatic triple in the coloring with 1-class bitmask `mask`."""
    full = (1 << n) - 1
    b0 = full ^ mask
    per = s + t
    for y in range(1, (n - 1) // per + 1):
        ys = y * s
        yp = y * per
        if mask & (mask >> ys) & (mask >> yp):
            return False
        if b0 & (b0 >> ys) & (b0 >> yp):
            return False
    return True


def oracle_f(inst: Instance, limit: OracleLimit = OracleLimit()) -> int:
    """Least N such that no coloring of [1, N] is valid, by full enumeration.

    Probes N upward from 1+s+t (below that every coloring is vacuously
    valid); by monotonicity the first infeasible N is f(s, t).
    """
    s, t = inst.s, inst.t
    n = 1 + s + t
    while True:
        if n > limit.n_max:
            raise CapacityError(
                f"oracle needs domain size {n}, above the n_max={limit.n_max} cap"
            )
        if not any(_mask_valid(mask, n, s, t) for mask in range(1 << n)):
            return n
        n += 1


def oracle_enumerate(inst: Instance, n: int, limit: OracleLimit = OracleLimit()) -> List[Coloring]:
    """All valid colorings of [1, n], sorted by their text representation."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit.n_max:
        raise CapacityError(
            f"oracle enumeration at n={n} is above the n_max={limit.n_max} cap"
        )
    s, t = inst.s, inst.t
    full = (1 << n) - 1
    found = [
        Coloring(n=n, bits0=full ^ mask, bits1=mask)
        for mask in range(1 << n)
        if _mask_valid(mask, n, s, t)
    ]
    found.sort(key=lambda c: c.text)
    return found
