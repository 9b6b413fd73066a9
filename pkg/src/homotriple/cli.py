"""Command-line surface: compute f, verify and enumerate colorings, emit
constructions, and run the structural-rule checkers.

Exit codes are uniform: 0 = property holds, 1 = counterexample found,
2 = usage or capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from typing import List, Optional

from .core import CapacityError, Coloring, Instance, UnsupportedInstanceError, normalize_instance, triple_of
from .constructions import extremal_witness, grid_coloring, lift, remark_coloring
from .formula import classify, formula_f
from .lemmas import LemmaHypothesisError, check_lemma1_rules, check_lemma2_periodicity
from .oracle import OracleLimit, oracle_enumerate, oracle_f
from .search import SearchConfig, enumerate_valid, search_f
from .verifier import find_violation, is_valid, verify_naive


@dataclass(frozen=True)
class CertificateRecord:
    """Machine-readable result of one f computation."""

    s: int
    t: int
    f: int
    method: str
    case: str
    witness: Optional[str] = None
    nodes: Optional[int] = None
    elapsed_ms: Optional[float] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _read_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="ascii") as fh:
        return Coloring.from_text(fh.read())


def _cmd_f(args: argparse.Namespace) -> int:
    inst = normalize_instance(args.s, args.t)
    cfg = SearchConfig(parallel_workers=args.workers)
    case = classify(inst).detail
    witness_text: Optional[str] = None
    nodes: Optional[int] = None
    elapsed: Optional[float] = None

    if args.method == "formula":
        f = formula_f(inst)
    elif args.method == "search":
        res = search_f(inst, cfg)
        f = res.f
        nodes = res.nodes
        elapsed = res.duration_ms
        if args.witness and res.witness is not None:
            witness_text = res.witness.text
    else:  # oracle
        start = time.perf_counter()
        f = oracle_f(inst, OracleLimit())
        elapsed = (time.perf_counter() - start) * 1000.0

    if args.check and args.method != "search":
        f_search = search_f(inst, cfg).f
        if f_search != f:
            print(f"cross-check failed: {args.method} gives {f}, search gives {f_search}", file=sys.stderr)
            return 1
    if args.witness and witness_text is None:
        witness_text = extremal_witness(inst, cfg).text

    record = CertificateRecord(
        s=args.s, t=args.t, f=f, method=args.method, case=case,
        witness=witness_text, nodes=nodes, elapsed_ms=elapsed,
    )
    if args.json:
        print(record.to_json())
    else:
        print(f"f({args.s},{args.t}) = {f}  [{args.method}, case {case}]")
        if witness_text is not None:
            print(f"witness: {witness_text}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = normalize_instance(args.s, args.t)
    c = _read_coloring(args.file)
    check = verify_naive if args.naive else find_violation
    bad = check(c, inst)
    if bad is None:
        print("VALID")
        return 0
    p1, p2, p3 = triple_of(bad, inst)
    print(f"{bad.x} {bad.y} : ({p1},{p2},{p3})")
    return 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    inst = normalize_instance(args.s, args.t)
    if args.engine == "oracle":
        found = oracle_enumerate(inst, args.n, OracleLimit())
    else:
        found = enumerate_valid(inst, args.n, SearchConfig(parallel_workers=args.workers))
    print(len(found))
    if not args.count_only:
        for c in found:
            print(c.text)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.kind != "remark" and (args.s is None or args.t is None):
        raise ValueError(f"construct --kind {args.kind} needs --s and --t")
    if args.kind == "remark":
        if args.m is None or args.k is None:
            raise ValueError("construct --kind remark needs --m and --k")
        c = remark_coloring(args.m, args.k, swap=args.swap)
        inst = normalize_instance(4 * args.m, 1)
    elif args.kind == "grid":
        inst = normalize_instance(args.s, args.t)
        c = grid_coloring(inst)
    elif args.kind == "lift":
        if args.c is None or args.file is None:
            raise ValueError("construct --kind lift needs --c and --file")
        base_inst = normalize_instance(args.s, args.t)
        c = lift(_read_coloring(args.file), args.c, base_inst)
        inst = normalize_instance(args.s * args.c, args.t * args.c)
    else:  # auto
        inst = normalize_instance(args.s, args.t)
        c = extremal_witness(inst, SearchConfig(parallel_workers=args.workers))
    print(c.text)
    print("VALID" if is_valid(c, inst) else "INVALID")
    return 0


def _cmd_check_lemmas(args: argparse.Namespace) -> int:
    inst = normalize_instance(args.s, args.t)
    if args.engine == "oracle":
        found = oracle_enumerate(inst, args.n, OracleLimit())
    else:
        found = enumerate_valid(inst, args.n, SearchConfig(parallel_workers=args.workers))
    for c in found:
        violations = check_lemma1_rules(c, inst) + check_lemma2_periodicity(c, inst)
        if violations:
            print(f"VIOLATION on {c.text}: {violations[0]}")
            return 1
    print(f"ALL LEMMAS HOLD over {len(found)} colorings")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homotriple",
        description="Exact solver and verifier for the 2-coloring Ramsey "
        "function of homothetic triples {1, 1+s, 1+s+t}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_f = sub.add_parser("f", help="compute f(s,t)")
    p_f.add_argument("--s", type=_positive_int, required=True)
    p_f.add_argument("--t", type=_positive_int, required=True)
    p_f.add_argument("--method", choices=("formula", "search", "oracle"), default="formula")
    p_f.add_argument("--witness", action="store_true", help="attach an extremal coloring")
    p_f.add_argument("--json", action="store_true", help="emit a one-line JSON certificate")
    p_f.add_argument("--check", action="store_true", help="cross-check against search")
    p_f.add_argument("--workers", type=int, default=0)
    p_f.set_defaults(func=_cmd_f)

    p_v = sub.add_parser("verify", help="verify a coloring file")
    p_v.add_argument("--s", type=_positive_int, required=True)
    p_v.add_argument("--t", type=_positive_int, required=True)
    p_v.add_argument("--file", required=True)
    p_v.add_argument("--naive", action="store_true", help="use the naive verifier")
    p_v.set_defaults(func=_cmd_verify)

    p_e = sub.add_parser("enumerate", help="list all valid colorings of [1, n]")
    p_e.add_argument("--s", type=_positive_int, required=True)
    p_e.add_argument("--t", type=_positive_int, required=True)
    p_e.add_argument("--n", type=_positive_int, required=True)
    p_e.add_argument("--count-only", action="store_true")
    p_e.add_argument("--engine", choices=("search", "oracle"), default="search")
    p_e.add_argument("--workers", type=int, default=0)
    p_e.set_defaults(func=_cmd_enumerate)

    p_c = sub.add_parser("construct", help="emit an explicit extremal coloring")
    p_c.add_argument("--kind", choices=("remark", "grid", "lift", "auto"), required=True)
    p_c.add_argument("--s", type=_positive_int)
    p_c.add_argument("--t", type=_positive_int)
    p_c.add_argument("--m", type=_positive_int)
    p_c.add_argument("--k", type=_positive_int)
    p_c.add_argument("--swap", action="store_true")
    p_c.add_argument("--c", type=_positive_int, help="lift factor")
    p_c.add_argument("--file", help="base coloring file for --kind lift")
    p_c.add_argument("--workers", type=int, default=0)
    p_c.set_defaults(func=_cmd_construct)

    p_l = sub.add_parser("check-lemmas", help="run both rule checkers over all valid colorings")
    p_l.add_argument("--s", type=_positive_int, required=True)
    p_l.add_argument("--t", type=_positive_int, required=True)
    p_l.add_argument("--n", type=_positive_int, required=True)
    p_l.add_argument("--engine", choices=("search", "oracle"), default="search")
    p_l.add_argument("--workers", type=int, default=0)
    p_l.set_defaults(func=_cmd_check_lemmas)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, CapacityError, UnsupportedInstanceError, LemmaHypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
