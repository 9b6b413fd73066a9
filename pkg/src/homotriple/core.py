"""Domain types for 2-colorings of [1, n] and homothetic triple instances.

Positions are 1-based throughout: a coloring of [1, n] stores the color of
position p at bit p-1 of its two class bitmasks.  Colors are 0 and 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

#: Default hard cap on coloring length; everything of interest is far smaller.
DEFAULT_MAX_N = 1 << 20

#: Quadruple of colors (C(a), C(a+s), C(a+2s), C(a+3s)).
VPattern = Tuple[int, int, int, int]


class CapacityError(Exception):
    """A computation would exceed a configured size bound."""


class UnsupportedInstanceError(Exception):
    """No explicit construction covers the given instance."""


class ConstructionError(Exception):
    """A generated coloring failed its own validity check (internal bug)."""


@dataclass(frozen=True)
class Instance:
    """Normalized homothetic-triple parameters: steps s >= t >= 1, g = gcd(s, t)."""

    s: int
    t: int
    g: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        if self.s < self.t:
            raise ValueError(f"instance not normalized: s={self.s} < t={self.t}")
        if self.g != math.gcd(self.s, self.t):
            raise ValueError(f"g={self.g} is not gcd({self.s}, {self.t})")


def normalize_instance(a: int, b: int) -> Instance:
    """Order (a, b) as s >= t and attach the gcd.  f is symmetric in s and t."""
    if a < 1 or b < 1:
        raise ValueError(f"steps must be positive, got ({a}, {b})")
    return Instance(s=max(a, b), t=min(a, b), g=math.gcd(a, b))


@dataclass(frozen=True)
class CopyWitness:
    """Base point x and dilation y of the triple {x, x+ys, x+ys+yt}."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 1 or self.y < 1:
            raise ValueError(f"witness coordinates must be positive: {self}")


def triple_of(w: CopyWitness, inst: Instance) -> Tuple[int, int, int]:
    """The homothetic copy identified by w: (x, x+ys, x+ys+yt), increasing."""
    mid = w.x + w.y * inst.s
    return (w.x, mid, mid + w.y * inst.t)


@dataclass(frozen=True)
class Coloring:
    """A 2-coloring of [1, n] as a pair of class bitmasks partitioning [1, n]."""

    n: int
    bits0: int
    bits1: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if self.bits0 & self.bits1 or (self.bits0 | self.bits1) != full:
            raise ValueError("bits0 and bits1 must partition [1, n]")

    @classmethod
    def from_text(cls, text: str, max_n: int = DEFAULT_MAX_N) -> "Coloring":
        """Parse the canonical one-line format: character p (1-based) = C(p)."""
        text = text.strip()
        n = len(text)
        if n == 0:
            raise ValueError("empty coloring text")
        if n > max_n:
            raise CapacityError(f"coloring length {n} exceeds cap {max_n}")
        bits1 = 0
        for idx, ch in enumerate(text):
            if ch == "1":
                bits1 |= 1 << idx
            elif ch != "0":
                raise ValueError(f"invalid character {ch!r} at position {idx + 1}")
        return cls(n=n, bits0=((1 << n) - 1) ^ bits1, bits1=bits1)

    @classmethod
    def from_colors(cls, colors: Iterable[int], max_n: int = DEFAULT_MAX_N) -> "Coloring":
        """Build from an iterable of 0/1 values for positions 1..n."""
        bits1 = 0
        n = 0
        for c in colors:
            if c not in (0, 1):
                raise ValueError(f"color must be 0 or 1, got {c!r}")
            bits1 |= c << n
            n += 1
        if n == 0:
            raise ValueError("empty color sequence")
        if n > max_n:
            raise CapacityError(f"coloring length {n} exceeds cap {max_n}")
        return cls(n=n, bits0=((1 << n) - 1) ^ bits1, bits1=bits1)

    def color_of(self, p: int) -> int:
        """C(p) for 1 <= p <= n."""
        if not 1 <= p <= self.n:
            raise ValueError(f"position {p} outside [1, {self.n}]")
        return (self.bits1 >> (p - 1)) & 1

    def colors(self) -> Tuple[int, ...]:
        """All colors (C(1), ..., C(n))."""
        b = self.bits1
        return tuple((b >> i) & 1 for i in range(self.n))

    @property
    def text(self) -> str:
        b = self.bits1
        return "".join("1" if (b >> i) & 1 else "0" for i in range(self.n))


def complement(c: Coloring) -> Coloring:
    """Swap the two color classes; an involution."""
    return Coloring(n=c.n, bits0=c.bits1, bits1=c.bits0)


def restrict(c: Coloring, m: int) -> Coloring:
    """The coloring on [1, m] agreeing with c, for 1 <= m <= c.n."""
    if not 1 <= m <= c.n:
        raise ValueError(f"restriction length {m} outside [1, {c.n}]")
    mask = (1 << m) - 1
    return Coloring(n=m, bits0=c.bits0 & mask, bits1=c.bits1 & mask)
