"""Closed-form values of f(s,t) and classification into the proved cases.

f(s,t) = 4(s+t)-t+1 exactly when t | s and s/t = 0 (mod 4); every other
pair has f(s,t) = 4(s+t)+1.  classify records which proved theorem covers
a given normalized instance, for audit output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance

KIND_QUAD_RATIO = "QuadRatio"
KIND_GENERIC = "Generic"

DETAIL_QUAD_RATIO = "Thm4mt-quad-ratio"
DETAIL_DIVIDES_NONQUAD = "divides-nonquad"
DETAIL_THM3 = "Thm3-coprime-residues"
DETAIL_THM5 = "Thm5-floor-even"
DETAIL_INTERVAL = "ThmNew-interval"
DETAIL_OTHER = "other-generic"


@dataclass(frozen=True)
class CaseTag:
    kind: str
    detail: str


def classify(inst: Instance) -> CaseTag:
    """Which proved case covers the (normalized) instance.

    QuadRatio iff t divides s and s/t = 0 (mod 4).  Generic instances are
    tagged by the theorem that settles them, after reducing by g = gcd(s,t):
    coprime residues both nonzero mod 4, a divisible-but-nonquad ratio, an
    even floor of s/t or 2s/t, the ratio interval (1.5, 2), or the
    remaining both-floors-odd case outside that interval.
    """
    s, t = inst.s, inst.t
    if s % t == 0:
        if (s // t) % 4 == 0:
            return CaseTag(KIND_QUAD_RATIO, DETAIL_QUAD_RATIO)
        return CaseTag(KIND_GENERIC, DETAIL_DIVIDES_NONQUAD)
    g = inst.g
    rs, rt = s // g, t // g
    if rs % 4 != 0 and rt % 4 != 0:
        return CaseTag(KIND_GENERIC, DETAIL_THM3)
    # t does not divide s, so rt > 1 and exactly one of rs, rt is 0 mod 4.
    if (rs // rt) % 2 == 0 or ((2 * rs) // rt) % 2 == 0:
        return CaseTag(KIND_GENERIC, DETAIL_THM5)
    if 3 * rt < 2 * rs and rs < 2 * rt:  # 1.5 < s/t < 2, exact arithmetic
        return CaseTag(KIND_GENERIC, DETAIL_INTERVAL)
    return CaseTag(KIND_GENERIC, DETAIL_OTHER)


def formula_f(inst: Instance) -> int:
    """Closed-form f(s,t) for a normalized instance."""
    s, t = inst.s, inst.t
    if classify(inst).kind == KIND_QUAD_RATIO:
        return 4 * (s + t) - t + 1
    return 4 * (s + t) + 1


def scaling_f(f_base: int, c: int) -> int:
    """f(cs, ct) from f(s, t): the scaling identity c*(f-1)+1."""
    if f_base < 2:
        raise ValueError(f"f_base must be at least 2, got {f_base}")
    if c < 1:
        raise ValueError(f"scale factor must be positive, got {c}")
    return c * (f_base - 1) + 1
