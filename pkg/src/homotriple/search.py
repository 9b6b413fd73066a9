"""Backtracking computation of f(s,t) and of all extremal colorings.

f is located by an assumption-free upward scan: for N = 1+s+t, 1+s+t+1, ...
decide whether a valid coloring of [1, N] exists; by monotonicity the first
infeasible N is f, and the witness is the lexicographically least valid
coloring found at N-1.

Each decision is a depth-first search assigning positions 1..N left to
right, 0 before 1, with C(1)=0 fixed (the complement half is restored on
output).  Assigning position p completes a triple only if {p-y(s+t),
p-yt, p} is monochromatic, which is tracked incrementally: placing color v
at the middle element of a triple whose base already has color v blocks v
at the triple's last element.  A position with both colors blocked kills
the branch immediately, which prunes subtrees long before the frontier
reaches the contradiction.

A numba-jitted twin of the Python engine is used when available; both
implement the identical algorithm.  Parallel runs shard the tree on a
fixed-length assigned prefix with a deterministic merge, so f, witnesses
and enumerations are identical for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import CapacityError, Coloring, Instance, complement

try:
    import numpy as np
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional accelerator
    _HAVE_NUMBA = False

#: Prefix length used to shard the tree across workers.
_SHARD_DEPTH = 12

#: Smallest decision target worth dispatching to a pool; below this the
#: sharding and serialization overhead dominates the subtree work.
_PARALLEL_MIN_N = 56


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for search_f; n_cap defaults to 4(s+t)+2 (one past the known bound)."""

    n_cap: Optional[int] = None
    parallel_workers: int = 0
    count_all: bool = False

    def cap_for(self, inst: Instance) -> int:
        cap = self.n_cap if self.n_cap is not None else 4 * (inst.s + inst.t) + 2
        if cap < 1 + inst.s + inst.t:
            raise ValueError(f"n_cap={cap} below minimum {1 + inst.s + inst.t}")
        return cap


@dataclass(frozen=True)
class SearchResult:
    f: int
    witness: Optional[Coloring]
    nodes: int
    duration_ms: float


def _forward_pairs(n_target: int, s: int, t: int) -> List[Tuple[Tuple[int, int], ...]]:
    """fwd[p] = pairs (x, last) with {x, p, last} a triple having middle p:
    x = p - y*s, last = p + y*t, both inside [1, n_target]."""
    fwd: List[Tuple[Tuple[int, int], ...]] = [()] * (n_target + 1)
    for p in range(1, n_target + 1):
        y_max = min((p - 1) // s, (n_target - p) // t)
        fwd[p] = tuple((p - y * s, p + y * t) for y in range(1, y_max + 1))
    return fwd


def _dfs_py(
    n_target: int,
    s: int,
    t: int,
    prefix: bytes,
    collect: bool,
) -> Tuple[Optional[bytes], int, List[bytes]]:
    """DFS over valid extensions of a valid prefix up to length n_target.

    Decision mode (collect=False) stops at the first coloring of length
    n_target and returns it; collect mode gathers all of them.  Returns
    (first_witness, nodes, collected).
    """
    fwd = _forward_pairs(n_target, s, t)
    p0 = len(prefix)
    colors = bytearray(n_target + 1)
    colors[1 : p0 + 1] = prefix
    cnt = bytearray(2 * (n_target + 2))  # per position, per color: blocking triples
    for q in range(1, min(p0, n_target) + 1):
        vq = colors[q]
        for x, last in fwd[q]:
            if colors[x] == vq:
                cnt[2 * last + vq] += 1
    if p0 >= n_target:
        found = bytes(prefix[:n_target])
        return found, 0, [found] if collect else []
    nodes = 0
    collected: List[bytes] = []
    first: Optional[bytes] = None
    stack = bytearray()
    pend = 0
    while True:
        p = p0 + len(stack) + 1
        v = pend
        placed = False
        while v <= 1:
            if cnt[2 * p + v] == 0:
                placed = True
                break
            v += 1
        if placed:
            nodes += 1
            colors[p] = v
            if p == n_target:
                found = bytes(colors[1 : p + 1])
                if first is None:
                    first = found
                if not collect:
                    return first, nodes, collected
                collected.append(found)
                pend = v + 1
                continue
            dead = False
            for x, last in fwd[p]:
                if colors[x] == v:
                    cnt[2 * last + v] += 1
                    if cnt[2 * last + 1 - v]:
                        dead = True
            if dead:
                for x, last in fwd[p]:
                    if colors[x] == v:
                        cnt[2 * last + v] -= 1
                pend = v + 1
            else:
                stack.append(v)
                pend = 0
        else:
            if not stack:
                break
            v2 = stack.pop()
            q = p0 + len(stack) + 1
            for x, last in fwd[q]:
                if colors[x] == v2:
                    cnt[2 * last + v2] -= 1
            pend = v2 + 1
    return first, nodes, collected


if _HAVE_NUMBA:

    @njit(cache=True)
    def _dfs_jit(n_target, fx, fl, fstart, prefix):  # pragma: no cover - jitted
        """Decision-mode twin of _dfs_py: first valid coloring of [1, n_target]."""
        colors = np.zeros(n_target + 1, np.uint8)
        p0 = prefix.shape[0]
        for i in range(p0):
            colors[i + 1] = prefix[i]
        cnt = np.zeros(2 * (n_target + 2), np.uint8)
        for q in range(1, p0 + 1):
            vq = colors[q]
            for k in range(fstart[q], fstart[q + 1]):
                if colors[fx[k]] == vq:
                    cnt[2 * fl[k] + vq] += 1
        out = np.zeros(n_target, np.uint8)
        nodes = 0
        if p0 >= n_target:
            for i in range(n_target):
                out[i] = colors[i + 1]
            return True, out, nodes
        stack = np.zeros(n_target + 1, np.uint8)
        sp = 0
        pend = 0
        while True:
            p = p0 + sp + 1
            v = pend
            placed = False
            while v <= 1:
                if cnt[2 * p + v] == 0:
                    placed = True
                    break
                v += 1
            if placed:
                nodes += 1
                colors[p] = v
                if p == n_target:
                    for i in range(n_target):
                        out[i] = colors[i + 1]
                    return True, out, nodes
                dead = False
                for k in range(fstart[p], fstart[p + 1]):
                    if colors[fx[k]] == v:
                        cnt[2 * fl[k] + v] += 1
                        if cnt[2 * fl[k] + 1 - v] > 0:
                            dead = True
                if dead:
                    for k in range(fstart[p], fstart[p + 1]):
                        if colors[fx[k]] == v:
                            cnt[2 * fl[k] + v] -= 1
                    pend = v + 1
                else:
                    stack[sp] = v
                    sp += 1
                    pend = 0
            else:
                if sp == 0:
                    break
                sp -= 1
                v2 = stack[sp]
                q = p0 + sp + 1
                for k in range(fstart[q], fstart[q + 1]):
                    if colors[fx[k]] == v2:
                        cnt[2 * fl[k] + v2] -= 1
                pend = v2 + 1
        return False, out, nodes

    def _flatten_fwd(n_target: int, s: int, t: int):
        fwd = _forward_pairs(n_target, s, t)
        fstart = np.zeros(n_target + 2, np.int64)
        xs: List[int] = []
        ls: List[int] = []
        for p in range(1, n_target + 1):
            fstart[p] = len(xs)
            for x, last in fwd[p]:
                xs.append(x)
                ls.append(last)
        fstart[0] = 0
        fstart[n_target + 1] = len(xs)
        return (
            np.array(xs or [0], np.int64),
            np.array(ls or [0], np.int64),
            fstart,
        )

    def _decide(n_target: int, s: int, t: int, prefix: bytes) -> Tuple[Optional[bytes], int]:
        fx, fl, fstart = _flatten_fwd(n_target, s, t)
        found, out, nodes = _dfs_jit(n_target, fx, fl, fstart, np.frombuffer(prefix, np.uint8))
        return (bytes(out) if found else None), int(nodes)

else:

    def _decide(n_target: int, s: int, t: int, prefix: bytes) -> Tuple[Optional[bytes], int]:
        first, nodes, _ = _dfs_py(n_target, s, t, prefix, collect=False)
        return first, nodes


def _decide_task(args: Tuple[int, int, int, bytes]):
    n_target, s, t, prefix = args
    return _decide(n_target, s, t, prefix)


def _collect_task(args: Tuple[int, int, int, bytes]):
    n_target, s, t, prefix = args
    _, nodes, collected = _dfs_py(n_target, s, t, prefix, collect=True)
    return nodes, collected


def _shard_prefixes(n_target: int, s: int, t: int) -> Tuple[List[bytes], int]:
    """All valid prefixes (C(1)=0) of the shard length, in lexicographic order."""
    depth = min(_SHARD_DEPTH, n_target)
    _, nodes, prefixes = _dfs_py(depth, s, t, bytes([0]), collect=True)
    return prefixes, nodes


def _feasible(
    inst: Instance,
    n_target: int,
    pool: Optional[ProcessPoolExecutor],
    workers: int,
) -> Tuple[Optional[bytes], int]:
    """Lexicographically least valid coloring of [1, n_target] with C(1)=0."""
    s, t = inst.s, inst.t
    if pool is None or n_target < max(_PARALLEL_MIN_N, _SHARD_DEPTH + 1):
        return _decide(n_target, s, t, bytes([0]))
    prefixes, nodes = _shard_prefixes(n_target, s, t)
    witness: Optional[bytes] = None
    chunk = 4 * workers
    for lo in range(0, len(prefixes), chunk):
        batch = [(n_target, s, t, pfx) for pfx in prefixes[lo : lo + chunk]]
        for found, sub_nodes in pool.map(_decide_task, batch):
            nodes += sub_nodes
            if witness is None and found is not None:
                witness = found
        if witness is not None:
            break
    return witness, nodes


def search_f(inst: Instance, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Compute f(s,t) by the upward feasibility scan, formula-free."""
    n_cap = cfg.cap_for(inst)
    start = time.perf_counter()
    nodes = 0
    witness_bytes = bytes(inst.s + inst.t)  # all-zero coloring of [1, s+t]
    workers = cfg.parallel_workers
    pool = ProcessPoolExecutor(max_workers=workers) if workers >= 2 else None
    try:
        for n in range(1 + inst.s + inst.t, n_cap + 1):
            found, sub_nodes = _feasible(inst, n, pool, workers)
            nodes += sub_nodes
            if found is None:
                duration_ms = (time.perf_counter() - start) * 1000.0
                return SearchResult(
                    f=n,
                    witness=Coloring.from_colors(witness_bytes),
                    nodes=nodes,
                    duration_ms=duration_ms,
                )
            witness_bytes = found
    finally:
        if pool is not None:
            pool.shutdown()
    raise CapacityError(
        f"valid colorings persist up to n_cap={n_cap}; "
        f"f({inst.s},{inst.t}) exceeds the configured bound"
    )


def enumerate_valid(inst: Instance, n: int, cfg: SearchConfig = SearchConfig()) -> List[Coloring]:
    """All valid colorings of [1, n], lexicographically sorted by text.

    The tree is searched with C(1)=0 only; the C(1)=1 half is restored by
    complementation.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    s, t = inst.s, inst.t
    workers = cfg.parallel_workers
    if workers < 2 or n <= _SHARD_DEPTH:
        _, _, collected = _dfs_py(n, s, t, bytes([0]), collect=True)
    else:
        prefixes, _ = _shard_prefixes(n, s, t)
        tasks = [(n, s, t, pfx) for pfx in prefixes]
        collected = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for _, sub in pool.map(_collect_task, tasks):
                collected.extend(sub)
    out = [Coloring.from_colors(values) for values in collected]
    out.extend(complement(c) for c in list(out))
    out.sort(key=lambda c: c.text)
    return out


def count_extremal(inst: Instance, cfg: SearchConfig = SearchConfig()) -> int:
    """Number of valid colorings of [1, f-1], f computed by search."""
    f = search_f(inst, cfg).f
    if f <= 1:
        return 0
    return len(enumerate_valid(inst, f - 1, cfg))
