"""Detect monochromatic homothetic copies of {1, 1+s, 1+s+t} in a coloring.

Two independent routes are provided: a bit-parallel shift-and-intersect scan
(`find_violation`) and a plain triple loop (`verify_naive`) used as the
differential-testing oracle.  Both return the lexicographically least (y, x)
witness, smallest dilation first.
"""

from __future__ import annotations

from typing import Optional

from .core import Coloring, CopyWitness, Instance


def find_violation(c: Coloring, inst: Instance, max_y: Optional[int] = None) -> Optional[CopyWitness]:
    """Least (y, x) with C constant on {x, x+ys, x+ys+yt}, or None.

    For each dilation y the candidate base points are the nonzero bits of
    B & (B >> ys) & (B >> y(s+t)) for each class bitmask B; the lowest set
    bit gives the least x.  All y with 1 + y(s+t) <= n are scanned unless
    max_y caps the range.
    """
    s, t, n = inst.s, inst.t, c.n
    per = s + t
    b0, b1 = c.bits0, c.bits1
    y_top = (n - 1) // per
    if max_y is not None:
        y_top = min(y_top, max_y)
    for y in range(1, y_top + 1):
        ys = y * s
        yp = y * per
        hits = (b0 & (b0 >> ys) & (b0 >> yp)) | (b1 & (b1 >> ys) & (b1 >> yp))
        if hits:
            x = (hits & -hits).bit_length()
            return CopyWitness(x=x, y=y)
    return None


def is_valid(c: Coloring, inst: Instance) -> bool:
    """True iff c contains no monochromatic homothetic copy."""
    return find_violation(c, inst) is None


def verify_naive(c: Coloring, inst: Instance, max_y: Optional[int] = None) -> Optional[CopyWitness]:
    """Same contract as find_violation, via direct per-position color reads."""
    s, t, n = inst.s, inst.t, c.n
    per = s + t
    colors = c.colors()
    y_top = (n - 1) // per
    if max_y is not None:
        y_top = min(y_top, max_y)
    for y in range(1, y_top + 1):
        ys = y * s
        yp = y * per
        for x in range(1, n - yp + 1):
            if colors[x - 1] == colors[x - 1 + ys] == colors[x - 1 + yp]:
                return CopyWitness(x=x, y=y)
    return None
