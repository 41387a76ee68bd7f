"""End-to-end satisfiability check by fully-populated-clause elimination.

A formula is satisfiable exactly when some fully populated clause over its
variables has none of its subsets in the formula; the falsifying assignment
of such a clause satisfies every formula clause.  The procedure registers
variables into the clause tree as they first appear, eliminates the
superset paths of each clause, and reads the survivors off the tree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import cardinality
from .core import (
    Clause,
    Formula,
    canonical_literals,
    effective_clauses,
    elimination_order_key,
    is_tautology,
    normalize,
)
from .tree import BUDGET_EXCEEDED, CLOSED, FpcTree, WorkLimitExceeded

SAT = "SAT"
UNSAT = "UNSAT"
RESOURCE_EXCEEDED = "RESOURCE_EXCEEDED"


@dataclass
class SolveConfig:
    node_budget: int = 1 << 24
    report_all_models: bool = False
    enable_cardinality_preprocessing: bool = False
    sort_clauses: bool = True
    # deterministic effort cap in tree pointer visits; None = unlimited
    work_budget: int | None = None
    # called after each processed clause, for debug dumps
    trace: Callable[[Clause, FpcTree], None] | None = None

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")


@dataclass
class SolveStats:
    clauses_processed: int = 0
    tautologies_skipped: int = 0
    duplicates_removed: int = 0
    peak_nodes: int = 0
    eliminations: int = 0
    elapsed_time: float = 0.0
    work: int = 0
    exceeded: str | None = None  # "nodes" or "work" when budget tripped
    preprocess_unsat: bool = False


@dataclass
class SolveResult:
    verdict: str
    models: list[dict[int, bool]] = field(default_factory=list)
    absent_fpcs: list[Clause] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)


def model_from_fpc(c: Clause) -> dict[int, bool]:
    """The assignment that makes every literal of the clause false."""
    if is_tautology(c):
        raise ValueError("a tautology clause has no falsifying assignment")
    return {abs(lit): lit < 0 for lit in c}


def check_sat(f: Formula, cfg: SolveConfig | None = None) -> SolveResult:
    cfg = cfg or SolveConfig()
    start = time.perf_counter()
    stats = SolveStats()

    _, report = normalize(f)
    stats.duplicates_removed = report.duplicates_removed

    def finish(verdict: str, models=None, absent=None, tree: FpcTree | None = None):
        if tree is not None:
            stats.peak_nodes = tree.peak_nodes
            stats.eliminations = tree.eliminations
            stats.work = tree.work
        stats.elapsed_time = time.perf_counter() - start
        return SolveResult(
            verdict=verdict,
            models=models or [],
            absent_fpcs=absent or [],
            stats=stats,
        )

    if report.has_empty_clause:
        return finish(UNSAT)

    if cfg.enable_cardinality_preprocessing:
        pre = cardinality.preprocess(f)
        if pre.proves_unsat:
            stats.preprocess_unsat = True
            return finish(UNSAT)

    clauses = effective_clauses(f)
    stats.tautologies_skipped = len(f.clauses) - len(clauses)
    if cfg.sort_clauses:
        clauses.sort(key=elimination_order_key)
    else:
        # deterministic but cardinality-blind order
        clauses.sort(key=canonical_literals)

    tree = FpcTree(node_budget=cfg.node_budget, work_limit=cfg.work_budget)
    try:
        for c in clauses:
            for lit in canonical_literals(c):
                var = abs(lit)
                if tree.is_registered(var):
                    continue
                status = tree.register_variable(var)
                if status == CLOSED:
                    return finish(UNSAT, tree=tree)
                if status == BUDGET_EXCEEDED:
                    stats.exceeded = "nodes"
                    return finish(RESOURCE_EXCEEDED, tree=tree)
            tree.eliminate(c)
            stats.clauses_processed += 1
            if cfg.trace is not None:
                cfg.trace(c, tree)
            if tree.is_closed():
                return finish(UNSAT, tree=tree)

        survivors = tree.open_fpcs()
    except WorkLimitExceeded:
        stats.exceeded = "work"
        return finish(RESOURCE_EXCEEDED, tree=tree)

    if not survivors:
        return finish(UNSAT, tree=tree)
    absent = survivors if cfg.report_all_models else survivors[:1]
    models = [model_from_fpc(c) for c in absent]
    return finish(SAT, models=models, absent=absent, tree=tree)
