"""Structural rules obeyed by copy-free colorings, as executable checks.

Both checkers first gate on the hypothesis that the coloring has no
monochromatic triple with dilation y in {1, 2, 3}; otherwise they raise
rather than report rule violations.  On any valid coloring both checkers
must return empty lists - that is the machine check of the rules.

Quantifier ranges are implemented exactly as stated for each sub-rule and
are never widened.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .core import Coloring, Instance, VPattern, triple_of
from .verifier import find_violation


class LemmaHypothesisError(Exception):
    """The coloring has a monochromatic triple with dilation y <= 3."""


@dataclass(frozen=True)
class RuleViolation:
    """A failed implication: rule label, base point a, color instantiation u."""

    rule: str
    a: int
    u: int


@dataclass(frozen=True)
class PeriodicityViolation:
    """A failed periodic schedule entry: part, base point a, offset index j."""

    part: int
    a: int
    j: int


def v_pattern(c: Coloring, a: int, inst: Instance) -> VPattern:
    """(C(a), C(a+s), C(a+2s), C(a+3s)) for 1 <= a <= n - 3s."""
    s = inst.s
    if not 1 <= a <= c.n - 3 * s:
        raise ValueError(f"a={a} outside [1, {c.n - 3 * s}]")
    return (
        c.color_of(a),
        c.color_of(a + s),
        c.color_of(a + 2 * s),
        c.color_of(a + 3 * s),
    )


def _gate(c: Coloring, inst: Instance) -> None:
    bad = find_violation(c, inst, max_y=3)
    if bad is not None:
        raise LemmaHypothesisError(
            f"hypothesis not met: monochromatic triple {triple_of(bad, inst)} "
            f"with dilation y={bad.y}"
        )


def check_lemma1_rules(c: Coloring, inst: Instance) -> List[RuleViolation]:
    """Evaluate the five local rules at every admissible base point.

    Returns every (rule, a, u) whose conclusion fails, sorted; an empty list
    means all rules hold on c.
    """
    _gate(c, inst)
    s, t, n = inst.s, inst.t, c.n
    col = (None,) + c.colors()  # 1-based reads
    out: List[RuleViolation] = []

    def V(a: int) -> VPattern:
        return (col[a], col[a + s], col[a + 2 * s], col[a + 3 * s])

    for u in (0, 1):
        w = 1 - u
        # Rule 1: two-in-a-row forces the neighbor, in both step sizes and
        # both directions.
        for a in range(1, n - 2 * s - 2 * t + 1):
            if col[a] == col[a + s] == u and col[a + 2 * s] != w:
                out.append(RuleViolation("1a", a, u))
        for a in range(s + 1, n - s - 2 * t + 1):
            if col[a] == col[a + s] == u and col[a - s] != w:
                out.append(RuleViolation("1b", a, u))
        for a in range(2 * s + 1, n - 2 * t + 1):
            if col[a] == col[a + t] == u and col[a + 2 * t] != w:
                out.append(RuleViolation("1c", a, u))
        for a in range(2 * s + t + 1, n - t + 1):
            if col[a] == col[a + t] == u and col[a - t] != w:
                out.append(RuleViolation("1d", a, u))
        # Rule 2: (u,w,w,u) steps to one of two successors.
        for a in range(1, n - 3 * s - 4 * t + 1):
            if V(a) == (u, w, w, u) and V(a + t) not in ((w, w, u, u), (w, u, u, w)):
                out.append(RuleViolation("2", a, u))
        # Rule 3: (u,u,w,u) forces the next three patterns.
        for a in range(1, n - 3 * s - 6 * t + 1):
            if V(a) == (u, u, w, u) and not (
                V(a + t) == (w, w, u, u)
                and V(a + 2 * t) == (w, u, u, w)
                and V(a + 3 * t) == (u, u, w, w)
            ):
                out.append(RuleViolation("3", a, u))
        # Rule 4: (u,w,u,u) forces the patterns two and three steps on.
        for a in range(1, n - 3 * s - 5 * t + 1):
            if V(a) == (u, w, u, u) and not (
                V(a + 2 * t) == (u, w, w, u) and V(a + 3 * t) == (w, u, u, w)
            ):
                out.append(RuleViolation("4", a, u))
        # Rule 5: the two-pattern triggers and their continuations.
        for a in range(1, n - 3 * s - 4 * t + 1):
            if V(a) == (u, w, w, u) and V(a + t) == (w, w, u, u):
                if V(a + 2 * t) != (w, u, u, w):
                    out.append(RuleViolation("5a", a, u))
                if a <= n - 3 * s - 6 * t and V(a + 3 * t) != (u, u, w, w):
                    out.append(RuleViolation("5a+", a, u))
            if V(a) == (u, w, w, u) and V(a + t) == (w, u, u, w):
                if V(a + 2 * t) != (u, w, w, u):
                    out.append(RuleViolation("5b", a, u))
    out.sort(key=lambda r: (r.rule, r.a, r.u))
    return out


def check_lemma2_periodicity(c: Coloring, inst: Instance) -> List[PeriodicityViolation]:
    """Check the periodic V-pattern schedules triggered by a pattern pair.

    Part 1: the pair (u,w,w,u), (w,w,u,u) at a, a+t launches a 4-periodic
    schedule of patterns; part 2: the pair (u,w,w,u), (w,u,u,w) launches a
    2-periodic one.  Each schedule is checked up to its stated bound.
    """
    _gate(c, inst)
    s, t, n = inst.s, inst.t, c.n
    col = (None,) + c.colors()
    out: List[PeriodicityViolation] = []

    def V(a: int) -> VPattern:
        return (col[a], col[a + s], col[a + 2 * s], col[a + 3 * s])

    for u in (0, 1):
        w = 1 - u
        sched4 = ((u, w, w, u), (w, w, u, u), (w, u, u, w), (u, u, w, w))
        sched2 = ((u, w, w, u), (w, u, u, w))
        for a in range(1, n - 3 * s - t + 1):
            if V(a) != (u, w, w, u):
                continue
            nxt = V(a + t)
            if nxt == (w, w, u, u):
                j_max = 2 * ((n - a - 3 * s - 2 * t) // (2 * t))
                for j in range(0, j_max + 1):
                    if V(a + j * t) != sched4[j % 4]:
                        out.append(PeriodicityViolation(1, a, j))
            elif nxt == (w, u, u, w):
                j_max = (n - a - 3 * s - 2 * t) // t
                for j in range(0, j_max + 1):
                    if V(a + j * t) != sched2[j % 2]:
                        out.append(PeriodicityViolation(2, a, j))
    out.sort(key=lambda r: (r.part, r.a, r.j))
    return out
