"""Exact solver, certificate generator and verifier for the 2-coloring
Ramsey function of homothetic triples {1, 1+s, 1+s+t}."""

from .core import (
    CapacityError,
    Coloring,
    ConstructionError,
    CopyWitness,
    Instance,
    UnsupportedInstanceError,
    complement,
    normalize_instance,
    restrict,
    triple_of,
)
from .constructions import (
    GridIndex,
    extremal_witness,
    grid_coloring,
    grid_to_index,
    index_to_grid,
    lift,
    match_grid_case,
    remark_coloring,
    remark_parameters,
)
from .formula import CaseTag, classify, formula_f, scaling_f
from .lemmas import (
    LemmaHypothesisError,
    check_lemma1_rules,
    check_lemma2_periodicity,
    v_pattern,
)
from .oracle import OracleLimit, oracle_enumerate, oracle_f
from .search import SearchConfig, SearchResult, count_extremal, enumerate_valid, search_f
from .verifier import find_violation, is_valid, verify_naive

__all__ = [
    "CapacityError",
    "CaseTag",
    "Coloring",
    "ConstructionError",
    "CopyWitness",
    "GridIndex",
    "Instance",
    "LemmaHypothesisError",
    "OracleLimit",
    "SearchConfig",
    "SearchResult",
    "UnsupportedInstanceError",
    "check_lemma1_rules",
    "check_lemma2_periodicity",
    "classify",
    "complement",
    "count_extremal",
    "enumerate_valid",
    "extremal_witness",
    "find_violation",
    "formula_f",
    "grid_coloring",
    "grid_to_index",
    "index_to_grid",
    "is_valid",
    "lift",
    "match_grid_case",
    "normalize_instance",
    "oracle_enumerate",
    "oracle_f",
    "remark_coloring",
    "remark_parameters",
    "restrict",
    "scaling_f",
    "search_f",
    "triple_of",
    "v_pattern",
    "verify_naive",
]
