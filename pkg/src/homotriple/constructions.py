"""Explicit extremal colorings: the remark family for (4m,1), the scaling
lift, and the five CRT-grid constructions for coprime ratios in (1.5, 2).

The grid constructions color [1, 4s+4t] cell by cell in the coordinates
(i, j) with n = 1 + i*s + j*t, 0 <= j < s.  Each case is an ordered rule
set: explicit exceptional cells first, then region rows keyed on the parity
of j and the residue of i mod 4, with a final membership fallback.  Every
generated coloring is re-verified with the naive verifier before return;
a failure is a transcription bug, not a caller error.

All ratio comparisons (5/3 boundary, coordinate bounds) use exact integer
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .core import (
    Coloring,
    ConstructionError,
    Instance,
    UnsupportedInstanceError,
    complement,
    normalize_instance,
    triple_of,
)
from .formula import formula_f
from .search import SearchConfig, search_f
from .verifier import verify_naive

CASE_1A = "C1a"
CASE_1B = "C1b"
CASE_2A = "C2a"
CASE_2B = "C2b"
CASE_3 = "C3"


@dataclass(frozen=True)
class GridIndex:
    """Coordinates (i, j) of n = 1 + i*s + j*t with 0 <= j < s."""

    i: int
    j: int


def index_to_grid(n: int, inst: Instance) -> GridIndex:
    """The unique (i, j) with n = 1 + i*s + j*t, for coprime (s, t).

    Solves (n-1) = j*t (mod s) for j in [0, s), then i = (n-1-j*t)/s.
    """
    s, t = inst.s, inst.t
    if inst.g != 1:
        raise ValueError(f"grid coordinates need gcd(s,t)=1, got gcd={inst.g}")
    if not 1 <= n <= 4 * s + 4 * t:
        raise ValueError(f"n={n} outside [1, {4 * s + 4 * t}]")
    j = ((n - 1) * pow(t, -1, s)) % s if s > 1 else 0
    i = (n - 1 - j * t) // s if s > 1 else n - 1
    return GridIndex(i=i, j=j)


def grid_to_index(g: GridIndex, inst: Instance) -> int:
    """Inverse of index_to_grid: 1 + i*s + j*t, validated against the bounds."""
    s, t = inst.s, inst.t
    if inst.g != 1:
        raise ValueError(f"grid coordinates need gcd(s,t)=1, got gcd={inst.g}")
    if not 0 <= g.j < s:
        raise ValueError(f"j={g.j} outside [0, {s})")
    offset = g.i * s + g.j * t
    if not 0 <= offset < 4 * s + 4 * t:  # i >= -jt/s and i < 4+(4-j)t/s, cleared of fractions
        raise ValueError(f"(i={g.i}, j={g.j}) outside the coordinate bounds for {inst}")
    return 1 + offset


def remark_parameters(m: int) -> List[int]:
    """Admissible phase parameters k for the (4m, 1) extremal family."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return list(range(3, 4 * m, 4))


def remark_coloring(m: int, k: int, swap: bool = False) -> Coloring:
    """The extremal coloring of [1, 16m+3] for (4m, 1) with phase k.

    Column j (1 <= j <= 4m) fixes (C(j), C(j+4m), C(j+8m), C(j+12m)):
    alternating (0,0,1,1)/(1,1,0,0) below k, then a 4-periodic schedule
    from k on; the three positions past 16m get 0, 0, 1.  swap complements
    the result.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if k % 4 != 3 or not 3 <= k <= 4 * m - 1:
        raise ValueError(f"k={k} must be 3 mod 4 within [3, {4 * m - 1}]")
    n = 16 * m + 3
    values = [0] * (n + 1)
    for j in range(1, 4 * m + 1):
        if j < k:
            quad = (0, 0, 1, 1) if j % 2 == 1 else (1, 1, 0, 0)
        else:
            quad = {
                3: (1, 0, 0, 1),
                0: (0, 0, 1, 1),
                1: (0, 1, 1, 0),
                2: (1, 1, 0, 0),
            }[j % 4]
        for slot, color in enumerate(quad):
            values[j + 4 * m * slot] = color
    values[16 * m + 1] = 0
    values[16 * m + 2] = 0
    values[16 * m + 3] = 1
    out = Coloring.from_colors(values[1:])
    if swap:
        out = complement(out)
    inst = normalize_instance(4 * m, 1)
    bad = verify_naive(out, inst)
    if bad is not None:
        raise ConstructionError(
            f"remark coloring (m={m}, k={k}) contains triple {triple_of(bad, inst)}"
        )
    return out


def lift(c: Coloring, cfactor: int, base: Optional[Instance] = None) -> Coloring:
    """Block-expand a coloring: C'(x) = C(ceil(x / cfactor)).

    A valid coloring for (s, t) lifts to a valid one for (cfactor*s,
    cfactor*t); when the base instance is supplied, the lifted coloring is
    verified against the scaled instance and a failure raises.
    """
    if cfactor < 1:
        raise ValueError(f"cfactor must be positive, got {cfactor}")
    values = []
    for color in c.colors():
        values.extend([color] * cfactor)
    out = Coloring.from_colors(values)
    if base is not None:
        scaled = normalize_instance(base.s * cfactor, base.t * cfactor)
        bad = verify_naive(out, scaled)
        if bad is not None:
            raise ConstructionError(
                f"lift by {cfactor} of a valid ({base.s},{base.t}) coloring contains "
                f"triple {triple_of(bad, scaled)}"
            )
    return out


def match_grid_case(inst: Instance) -> Optional[str]:
    """The grid-construction case tag covering inst, or None.

    All cases need gcd(s,t)=1 and 1.5 < s/t < 2; the residues of (s, t)
    mod 4 select the case and the 5/3 boundary the subcase.
    """
    s, t = inst.s, inst.t
    if inst.g != 1 or not (3 * t < 2 * s and s < 2 * t):
        return None
    sub_a = 3 * s >= 5 * t  # s/t >= 5/3
    if s % 4 == 0 and t % 4 == 3:
        return CASE_1A if sub_a else CASE_1B
    if s % 4 == 0 and t % 4 == 1:
        return CASE_2A if sub_a else CASE_2B
    if s % 2 == 1 and t % 4 == 0:
        return CASE_3
    return None


# A region row colors a cell 0 when (j even and i mod 4 in even_set) or
# (j odd and i mod 4 in odd_set), and 1 otherwise.
_Row = Tuple[str, Set[int], Set[int]]


def _row_color(i: int, j: int, even_set: Set[int], odd_set: Set[int]) -> int:
    residues = even_set if j % 2 == 0 else odd_set
    return 0 if i % 4 in residues else 1


def _case_rules(case: str, s: int, t: int):
    """Exceptional cells (as raw linear-form coefficients), region rows, and
    the final membership fallback for one construction case."""
    exceptions: List[Tuple[int, int, int]] = []  # (a, b, color) for 1 + a*s + b*t
    rows: List[Tuple[object, Set[int], Set[int]]] = []
    fallback_zeros: Set[Tuple[int, int]] = set()

    if case == CASE_1A:
        rows = [
            (lambda i, j: i >= -t + 7 or j <= s - 4, {0, 1}, {2, 3}),
            (lambda i, j: True, {1, 2}, {0, 3}),
        ]
    elif case == CASE_1B:
        exceptions = [(4, 2, 1), (5, 2, 0), (4, 3, 0)]
        # Rows j < 2 are colored by the membership list below (it pins cells
        # like (0,0) and (1,1) that the parity rule would otherwise cover),
        # so the parity region is restricted to j >= 2.
        rows = [(lambda i, j: j >= 2 and (i >= -t + 7 or j <= s - 5), {0, 3}, {1, 2})]
        fallback_zeros = {
            (0, 0), (2, 0), (5, 0), (0, 1), (1, 1), (4, 1),
            (-t + 4, s - 4),
            (-t + 3, s - 3), (-t + 5, s - 3), (-t + 6, s - 3),
            (-t + 2, s - 2), (-t + 4, s - 2), (-t + 5, s - 2),
            (-t + 1, s - 1), (-t + 3, s - 1), (-t + 4, s - 1), (-t + 6, s - 1),
        }
    elif case == CASE_2A:
        # (6, 0) -> 1 mirrors the same cell in case C3; 0 there makes the
        # column-0 wraparound triples monochromatic.
        exceptions = [(3, 4, 1), (3, 5, 0), (6, 0, 1)]
        rows = [
            (lambda i, j: 4 <= j <= s - 4, {2, 3}, {0, 1}),
            (lambda i, j: j <= 3, {1, 2}, {0, 3}),
        ]
        fallback_zeros = {
            (-t + 2, s - 3), (-t + 3, s - 3), (-t + 6, s - 3),
            (-t + 4, s - 2), (-t + 5, s - 2), (-t + 7, s - 2),
            (-t + 3, s - 1), (-t + 4, s - 1), (-t + 6, s - 1),
        }
    elif case == CASE_2B:
        exceptions = [
            (-t + 4, s - 6, 1), (-t + 4, s - 5, 0),
            (-t + 8, s - 4, 0), (-t + 8, s - 3, 1),
        ]
        rows = [
            (lambda i, j: i <= 3 and 2 <= j <= s - 5, {0, 3}, {1, 2}),
            (lambda i, j: j >= s - 4, {0, 1}, {2, 3}),
        ]
        fallback_zeros = {
            (0, 0), (2, 0), (5, 0), (6, 0), (1, 1), (3, 1), (4, 1), (5, 2), (4, 3),
        }
    elif case == CASE_3:
        exceptions = [
            (3, 4, 1), (3, 5, 0), (6, 0, 1),
            (1, -1, 1), (2, -1, 1), (3, -1, 0), (4, -1, 0),
            (5, -1, 1), (6, -1, 0), (7, -1, 0),
        ]
        rows = [
            (lambda i, j: 4 <= j <= s - 2, {2, 3}, {0, 1}),
            (lambda i, j: j <= 3, {1, 2}, {0, 3}),
        ]
    else:
        raise ValueError(f"unknown case {case!r}")
    return exceptions, rows, fallback_zeros


def grid_coloring(inst: Instance) -> Coloring:
    """The explicit extremal coloring of [1, 4s+4t] for a matching instance.

    Raises UnsupportedInstanceError when no case covers the instance, and
    ConstructionError (with the failing triple) if the generated coloring
    does not verify.
    """
    s, t = inst.s, inst.t
    case = match_grid_case(inst)
    if case is None:
        raise UnsupportedInstanceError(
            f"no grid construction for (s,t)=({s},{t}): needs gcd 1, "
            f"1.5 < s/t < 2, and a matching residue pattern mod 4"
        )
    exceptions, rows, fallback_zeros = _case_rules(case, s, t)

    n_total = 4 * s + 4 * t
    # Canonicalize the exceptional cells; linear forms landing outside
    # [1, 4s+4t] are the "@" positions and are skipped.
    exc: Dict[Tuple[int, int], int] = {}
    for a, b, color in exceptions:
        val = 1 + a * s + b * t
        if 1 <= val <= n_total:
            g = index_to_grid(val, inst)
            exc[(g.i, g.j)] = color

    values = []
    for n in range(1, n_total + 1):
        g = index_to_grid(n, inst)
        cell = (g.i, g.j)
        if cell in exc:
            values.append(exc[cell])
            continue
        for pred, even_set, odd_set in rows:
            if pred(g.i, g.j):
                values.append(_row_color(g.i, g.j, even_set, odd_set))
                break
        else:
            values.append(0 if cell in fallback_zeros else 1)
    out = Coloring.from_colors(values)
    bad = verify_naive(out, inst)
    if bad is not None:
        tr = triple_of(bad, inst)
        cells = [index_to_grid(p, inst) for p in tr]
        raise ConstructionError(
            f"case {case} coloring for ({s},{t}) contains monochromatic triple "
            f"{tr} at cells {[(c.i, c.j) for c in cells]}"
        )
    return out


def extremal_witness(inst: Instance, cfg: SearchConfig = SearchConfig()) -> Coloring:
    """A verified valid coloring of [1, formula_f(inst) - 1].

    Reduces by the gcd and lifts; uses the remark family for (4m, 1) and the
    grid construction where one matches, falling back to the search witness.
    """
    g = inst.g
    base_inst = normalize_instance(inst.s // g, inst.t // g)
    s0, t0 = base_inst.s, base_inst.t
    if t0 == 1 and s0 % 4 == 0:
        base = remark_coloring(s0 // 4, 3, swap=False)
    elif match_grid_case(base_inst) is not None:
        base = grid_coloring(base_inst)
    else:
        base = search_f(base_inst, cfg).witness
        assert base is not None
    out = lift(base, g, base_inst) if g > 1 else base
    expected = formula_f(inst) - 1
    bad = verify_naive(out, inst)
    if out.n != expected or bad is not None:
        raise ConstructionError(
            f"extremal witness for ({inst.s},{inst.t}) invalid: length {out.n}, "
            f"expected {expected}, violation={bad}"
        )
    return out
