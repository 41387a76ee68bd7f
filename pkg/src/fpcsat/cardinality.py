"""Clause counting through the integer indicator function, plus the
preprocessing bounds and forced-literal rules derived from it.

The counting function replaces each clause (a disjunction) by a product of
0/1 indicators, one per literal, and the formula (a conjunction) by the sum
of those products.  With all indicators at 1 it counts clauses; zeroing one
polarity's indicator makes exactly the clauses containing that literal
vanish, which turns differences of evaluations into per-literal counts.
Direct clause scans are provided alongside as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Clause,
    Formula,
    is_tautology,
    variables_of,
)


@dataclass
class IndicatorVectors:
    """0/1 indicator per variable for the positive (x) and negative (xc)
    literal.  Only 0/1 entries are meaningful to the counting algorithms."""

    x: dict[int, int]
    xc: dict[int, int]

    @staticmethod
    def ones(variables) -> "IndicatorVectors":
        return IndicatorVectors(x={v: 1 for v in variables}, xc={v: 1 for v in variables})


def eval_f(f: Formula, vectors: IndicatorVectors) -> int:
    """Sum over clauses of the product of their literals' indicators.

    The empty clause contributes an empty product, i.e. 1.
    """
    total = 0
    for c in f.clauses:
        term = 1
        for lit in c:
            v = abs(lit)
            try:
                term *= vectors.x[v] if lit > 0 else vectors.xc[v]
            except KeyError:
                raise KeyError(f"indicator vectors do not cover variable {v}") from None
            if term == 0:
                break
        total += term
    return total


def total_clauses(f: Formula) -> int:
    """Evaluate with all indicators at 1: every product is 1, so the sum is
    the clause count."""
    return eval_f(f, IndicatorVectors.ones(variables_of(f)))


def count_pos(f: Formula, i: int) -> int:
    """Number of clauses containing the positive literal of variable ``i``."""
    variables = variables_of(f)
    if i not in variables:
        return 0
    t = total_clauses(f)
    vectors = IndicatorVectors.ones(variables)
    vectors.x[i] = 0
    return t - eval_f(f, vectors)


def count_neg(f: Formula, i: int) -> int:
    """Number of clauses containing the negative literal of variable ``i``."""
    variables = variables_of(f)
    if i not in variables:
        return 0
    t = total_clauses(f)
    vectors = IndicatorVectors.ones(variables)
    vectors.xc[i] = 0
    return t - eval_f(f, vectors)


def count_either(f: Formula, i: int) -> int:
    """Number of clauses containing variable ``i`` in either polarity."""
    variables = variables_of(f)
    if i not in variables:
        return 0
    t = total_clauses(f)
    vectors = IndicatorVectors.ones(variables)
    vectors.x[i] = 0
    vectors.xc[i] = 0
    return t - eval_f(f, vectors)


# direct scans: the independent route used to validate the function-based counts

def scan_count_pos(f: Formula, i: int) -> int:
    return sum(1 for c in f.clauses if i in c)


def scan_count_neg(f: Formula, i: int) -> int:
    return sum(1 for c in f.clauses if -i in c)


def scan_count_either(f: Formula, i: int) -> int:
    return sum(1 for c in f.clauses if i in c or -i in c)


def check_tautology_clauses(f: Formula) -> bool:
    """True iff some clause holds a complemented pair: a clause counts once
    in the either-polarity total but twice across the per-polarity totals."""
    for i in sorted(variables_of(f)):
        if count_pos(f, i) + count_neg(f, i) > count_either(f, i):
            return True
    return False


@dataclass(frozen=True)
class VariableCounts:
    n_pos: int
    n_neg: int
    n_either: int


@dataclass(frozen=True)
class CardinalityProfile:
    total: int
    n: int
    n_effective: int
    per_variable: dict[int, VariableCounts]


def profile(f: Formula) -> CardinalityProfile:
    variables = sorted(variables_of(f))
    per = {
        i: VariableCounts(count_pos(f, i), count_neg(f, i), count_either(f, i))
        for i in variables
    }
    effective = sum(1 for c in f.clauses if not is_tautology(c))
    return CardinalityProfile(
        total=total_clauses(f),
        n=len(variables),
        n_effective=effective,
        per_variable=per,
    )


@dataclass(frozen=True)
class PreprocessReport:
    n: int
    effective_count: int
    has_tautology: bool
    effective_bound: int | None  # 3^n - 2^n, only when tautology-free
    general_bound: int  # 2^(2n) - 2^n
    unsat_by_total_bound: bool
    unsat_by_general_bound: bool
    unsat_by_variable_bound: tuple[int, ...]
    forced_literals: tuple[tuple[int, bool], ...]  # (variable, forced value)

    @property
    def proves_unsat(self) -> bool:
        return (
            self.unsat_by_total_bound
            or self.unsat_by_general_bound
            or bool(self.unsat_by_variable_bound)
        )


def preprocess(f: Formula) -> PreprocessReport:
    """Apply the counting bounds to a normalized formula.

    A satisfiable formula leaves the power set of some fully populated
    clause untouched, so its size and per-literal counts cannot exceed the
    complete formula's minus that power set's.  Exceeding the total bound or
    both polarities' bound for one variable therefore proves UNSAT; exceeding
    it for only one polarity forces the other in every solution.  The
    3^n - 2^n bound presumes a tautology-free formula and is only applied
    after confirming that; the 2^(2n) - 2^n bound holds for any CNF.
    """
    variables = sorted(variables_of(f))
    n = len(variables)
    effective = [c for c in f.clauses if not is_tautology(c)]
    has_tautology = check_tautology_clauses(f)

    general_bound = (1 << (2 * n)) - (1 << n)
    unsat_by_general = len(f.clauses) > general_bound

    effective_bound: int | None = None
    unsat_by_total = False
    if not has_tautology:
        effective_bound = 3**n - 2**n
        unsat_by_total = len(effective) > effective_bound

    var_bound = 3 ** (n - 1) - 2 ** (n - 1) if n >= 1 else 0
    effective_formula = Formula(clauses=frozenset(effective), original_count=len(effective))
    unsat_vars = []
    forced = []
    for i in variables:
        pos = count_pos(effective_formula, i)
        neg = count_neg(effective_formula, i)
        if min(pos, neg) > var_bound:
            unsat_vars.append(i)
        elif pos <= var_bound < neg:
            forced.append((i, False))
        elif neg <= var_bound < pos:
            forced.append((i, True))

    return PreprocessReport(
        n=n,
        effective_count=len(effective),
        has_tautology=has_tautology,
        effective_bound=effective_bound,
        general_bound=general_bound,
        unsat_by_total_bound=unsat_by_total,
        unsat_by_general_bound=unsat_by_general,
        unsat_by_variable_bound=tuple(unsat_vars),
        forced_literals=tuple(forced),
    )


def apply_forced_literals(f: Formula, report: PreprocessReport) -> Formula:
    """Unit-style simplification from forced literals: drop clauses the
    forced values satisfy and remove falsified literals from the rest.
    Optional; the reference solving path never calls this."""
    fixed = dict(report.forced_literals)
    out = []
    for c in f.clauses:
        satisfied = False
        kept = []
        for lit in c:
            v = abs(lit)
            if v in fixed:
                if fixed[v] == (lit > 0):
                    satisfied = True
                    break
            else:
                kept.append(lit)
        if not satisfied:
            out.append(frozenset(kept))
    return Formula(clauses=frozenset(out), original_count=len(out))
