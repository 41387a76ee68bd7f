"""Instance generators: random k-SAT, pigeonhole, and the guaranteed-SAT
complete-formula-minus-one-power-set family."""

from __future__ import annotations

import random

from .core import Formula
from .oracle import complete_formula, enumerate_fpcs, power_set


def random_3sat(n: int, m: int, rng: random.Random) -> Formula:
    """``m`` clauses of 3 distinct variables with random polarities."""
    if n < 3:
        raise ValueError("random 3-SAT needs at least 3 variables")
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), 3)
        clauses.append([v if rng.random() < 0.5 else -v for v in variables])
    return Formula.from_clauses(clauses)


def random_formula(
    rng: random.Random,
    n: int,
    m: int,
    max_len: int = 3,
    tautology_prob: float = 0.0,
    empty_clause_prob: float = 0.0,
    duplicate_prob: float = 0.0,
) -> Formula:
    """Small mixed-length corpus generator for cross-checking runs.

    Optional knobs inject tautology clauses, the empty clause, and duplicate
    clauses so normalization paths get exercised too.
    """
    clauses: list[list[int]] = []
    for _ in range(m):
        if clauses and rng.random() < duplicate_prob:
            clauses.append(list(rng.choice(clauses)))
            continue
        if rng.random() < empty_clause_prob:
            clauses.append([])
            continue
        size = rng.randint(1, max(1, min(max_len, n)))
        variables = rng.sample(range(1, n + 1), size)
        lits = [v if rng.random() < 0.5 else -v for v in variables]
        if rng.random() < tautology_prob:
            lits.append(-lits[0])
        clauses.append(lits)
    return Formula.from_clauses(clauses)


def pigeonhole(k: int) -> Formula:
    """PHP(k+1, k): k+1 pigeons into k holes; unsatisfiable for k >= 1.

    Variable (p, h) -> (p-1)*k + h says pigeon p sits in hole h.
    """
    if k < 1:
        raise ValueError("need at least one hole")

    def var(p: int, h: int) -> int:
        return (p - 1) * k + h

    clauses = []
    for p in range(1, k + 2):
        clauses.append([var(p, h) for h in range(1, k + 1)])
    for h in range(1, k + 1):
        for p in range(1, k + 2):
            for q in range(p + 1, k + 2):
                clauses.append([-var(p, h), -var(q, h)])
    return Formula.from_clauses(clauses)


def complete_minus_one(n: int, fpc_index: int = 0) -> Formula:
    """The complete formula over n variables minus the power set of one
    fully populated clause; satisfiable exactly by that clause's falsifying
    assignment.  Has 3^n - 2^n clauses."""
    v = frozenset(range(1, n + 1))
    fpcs = enumerate_fpcs(v)
    target = fpcs[fpc_index % len(fpcs)]
    remaining = complete_formula(v).clauses - power_set(target)
    return Formula(clauses=remaining, original_count=len(remaining))
