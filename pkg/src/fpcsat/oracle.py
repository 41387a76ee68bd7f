"""Brute-force ground truth: truth-table SAT, FPC enumeration, the
satisfiability condition checker, and complete-formula generation.

Everything here is deliberately independent of the tree-based solver so the
two can cross-check each other.  Truth tables are evaluated as big-integer
bit columns (one bit per assignment), which keeps exhaustive runs up to the
variable limits cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Clause,
    Formula,
    VariableSet,
    is_tautology,
    variables_of,
)


class VariableLimitError(ValueError):
    """A brute-force operation was asked to scale past its hard limit."""


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise VariableLimitError(f"{what}: {n} variables exceeds limit {limit}")


@lru_cache(maxsize=None)
def _columns(n: int) -> tuple[int, ...]:
    """Bit column per variable slot: bit a of column j is (a >> j) & 1."""
    cols = []
    total = 1 << n
    for j in range(n):
        col = ((1 << (1 << j)) - 1) << (1 << j)  # 2^j zeros then 2^j ones
        width = 1 << (j + 1)
        while width < total:
            col |= col << width
            width <<= 1
        cols.append(col)
    return tuple(cols)


def _truth_column(f: Formula, ordered_vars: list[int]) -> int:
    n = len(ordered_vars)
    full = (1 << (1 << n)) - 1
    cols = _columns(n)
    slot = {v: j for j, v in enumerate(ordered_vars)}
    result = full
    for c in f.clauses:
        col = 0
        for lit in c:
            vc = cols[slot[abs(lit)]]
            col |= vc if lit > 0 else (full ^ vc)
        result &= col
        if result == 0:
            break
    return result


@dataclass(frozen=True)
class OracleResult:
    satisfiable: bool
    models: tuple[dict[int, bool], ...]
    falsified_fpc_per_model: tuple[Clause, ...]


def falsified_fpc(model: dict[int, bool]) -> Clause:
    """The unique fully populated clause every literal of which is false
    under the given total assignment."""
    return frozenset(-v if value else v for v, value in model.items())


def brute_force_sat(
    f: Formula,
    limit_vars: int = 20,
    collect_models: bool = True,
    variables: VariableSet | None = None,
) -> OracleResult:
    """Evaluate ``f`` under all 2^n total assignments over its variables.

    ``collect_models=False`` skips materializing the (possibly exponential)
    model list; the verdict is unaffected.
    """
    varset = variables_of(f) if variables is None else frozenset(variables)
    if not varset >= variables_of(f):
        raise ValueError("explicit variable set must cover the formula's variables")
    ordered = sorted(varset)
    _check_limit(len(ordered), limit_vars, "brute_force_sat")
    column = _truth_column(f, ordered)
    if not collect_models:
        return OracleResult(satisfiable=column != 0, models=(), falsified_fpc_per_model=())
    models = []
    fpcs = []
    rest = column
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        rest ^= low
        model = {v: bool((a >> j) & 1) for j, v in enumerate(ordered)}
        models.append(model)
        fpcs.append(falsified_fpc(model))
    return OracleResult(
        satisfiable=bool(models),
        models=tuple(models),
        falsified_fpc_per_model=tuple(fpcs),
    )


def enumerate_fpcs(v: VariableSet, limit_vars: int = 20) -> list[Clause]:
    """All 2^n fully populated clauses over ``v``; over the empty set the
    single FPC is the empty clause.  Positive polarity enumerates first."""
    ordered = sorted(v)
    _check_limit(len(ordered), limit_vars, "enumerate_fpcs")
    out = []
    for signs in itertools.product((1, -1), repeat=len(ordered)):
        out.append(frozenset(s * var for s, var in zip(signs, ordered)))
    return out


def power_set(c: Clause) -> set[Clause]:
    """Every subset of a clause, the empty clause included."""
    lits = sorted(c)
    out = set()
    for r in range(len(lits) + 1):
        for combo in itertools.combinations(lits, r):
            out.add(frozenset(combo))
    return out


def condition_check(
    f: Formula,
    variables: VariableSet | None = None,
    limit_vars: int = 20,
) -> list[Clause]:
    """Fully populated clauses over the formula's variables none of whose
    subsets occur in the formula (tautology clauses ignored).

    A clause D is a subset of an FPC exactly when the FPC agrees with D on
    all of D's variables, so one subset test per formula clause replaces
    power-set enumeration.
    """
    varset = variables_of(f) if variables is None else frozenset(variables)
    if not varset >= variables_of(f):
        raise ValueError("explicit variable set must cover the formula's variables")
    ordered = sorted(varset)
    n = len(ordered)
    _check_limit(n, limit_vars, "condition_check")
    slot = {v: j for j, v in enumerate(ordered)}

    masks = []
    for c in f.clauses:
        if is_tautology(c):
            continue
        vmask = pmask = 0
        for lit in c:
            bit = 1 << slot[abs(lit)]
            vmask |= bit
            if lit > 0:
                pmask |= bit
        masks.append((vmask, pmask))

    out = []
    for i in range(1 << n):
        # enumerate in the same order as enumerate_fpcs: first variable
        # flips slowest, positive polarity first
        spos = 0
        for j in range(n):
            if not (i >> (n - 1 - j)) & 1:
                spos |= 1 << j
        if any((spos & vm) == pm for vm, pm in masks):
            continue
        out.append(
            frozenset(v if (spos >> j) & 1 else -v for j, v in enumerate(ordered))
        )
    return out


def complete_formula(v: VariableSet, limit_vars: int = 12) -> Formula:
    """All 3^n non-tautology clauses over ``v``, the empty clause included.

    Built twice, by the per-variable three-way choice and as the union of
    the power sets of all FPCs, and the two constructions are asserted
    equal before returning.
    """
    ordered = sorted(v)
    _check_limit(len(ordered), limit_vars, "complete_formula")
    direct = set()
    for choice in itertools.product((1, -1, 0), repeat=len(ordered)):
        direct.add(frozenset(s * var for s, var in zip(choice, ordered) if s != 0))
    via_powersets: set[Clause] = set()
    for fpc in enumerate_fpcs(v, limit_vars=limit_vars):
        via_powersets |= power_set(fpc)
    assert direct == via_powersets, "complete formula constructions disagree"
    return Formula(clauses=frozenset(direct), original_count=len(direct))
