"""Core CNF vocabulary: literals, clauses, formulas, assignments.

Literals are nonzero ints in the DIMACS convention: ``v`` is the positive
literal of variable ``v`` (v >= 1), ``-v`` its negation.  A clause is a
frozenset of literals (disjunction; the empty clause is always false) and a
formula is a deduplicated frozenset of clauses (conjunction; the empty
formula is always true).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Literal = int
Clause = frozenset[int]
VariableSet = frozenset[int]
Assignment = Mapping[int, bool]

EMPTY_CLAUSE: Clause = frozenset()


class TautologyError(ValueError):
    """Raised when an operation defined only for non-tautology clauses gets one."""


class UnassignedVariableError(KeyError):
    """Raised when an evaluation touches a variable the assignment omits."""


def literal(var: int, negative: bool = False) -> Literal:
    if var < 1:
        raise ValueError(f"variable index must be >= 1, got {var}")
    return -var if negative else var


def negate(lit: Literal) -> Literal:
    """Complement of a literal; an involution."""
    if lit == 0:
        raise ValueError("0 is not a literal")
    return -lit


def clause(lits: Iterable[int]) -> Clause:
    c = frozenset(lits)
    if 0 in c:
        raise ValueError("0 is not a literal")
    return c


def literal_key(lit: Literal) -> tuple[int, int]:
    """Sort key: by variable, positive polarity first."""
    return (abs(lit), 0 if lit > 0 else 1)


def canonical_literals(c: Clause) -> tuple[Literal, ...]:
    return tuple(sorted(c, key=literal_key))


def clause_key(c: Clause) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Sort key: ascending cardinality, lexicographic literals within a size."""
    return (len(c), tuple(literal_key(lit) for lit in canonical_literals(c)))


def elimination_order_key(c: Clause) -> tuple[int, int, tuple[tuple[int, int], ...]]:
    """Clause processing order for the solver: ascending cardinality, then by
    the clause's largest variable, then lexicographic.

    The max-variable tie-break makes every clause eliminate as soon as its
    last variable registers; deferring a clause past the registration of
    unrelated variables multiplies the uneliminated subtrees under it.
    """
    return (
        len(c),
        max((abs(lit) for lit in c), default=0),
        tuple(literal_key(lit) for lit in canonical_literals(c)),
    )


@dataclass(frozen=True)
class Formula:
    """A CNF formula with set semantics.

    ``original_count`` remembers how many clauses were supplied before
    deduplication, so normalization can report what it dropped.
    """

    clauses: frozenset[Clause]
    original_count: int

    @staticmethod
    def from_clauses(cs: Iterable[Iterable[int]]) -> "Formula":
        seen = [clause(c) for c in cs]
        return Formula(clauses=frozenset(seen), original_count=len(seen))

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)


EMPTY_FORMULA = Formula(clauses=frozenset(), original_count=0)


def is_tautology(c: Clause) -> bool:
    """True iff the clause contains some variable in both polarities."""
    return any(-lit in c for lit in c)


def variables_of_clause(c: Clause) -> VariableSet:
    return frozenset(abs(lit) for lit in c)


def variables_of(f: Formula) -> VariableSet:
    """The minimal variable set the formula ranges over (occurring variables)."""
    out: set[int] = set()
    for c in f.clauses:
        for lit in c:
            out.add(abs(lit))
    return frozenset(out)


def evaluate_clause(c: Clause, a: Assignment) -> bool:
    """Disjunction of the clause's literals; the empty clause is false."""
    for lit in c:
        if abs(lit) not in a:
            raise UnassignedVariableError(abs(lit))
    return any(a[abs(lit)] == (lit > 0) for lit in c)


def evaluate_formula(f: Formula, a: Assignment) -> bool:
    """Conjunction of clause values; the empty formula is true."""
    missing = [v for v in variables_of(f) if v not in a]
    if missing:
        raise UnassignedVariableError(min(missing))
    return all(evaluate_clause(c, a) for c in f.clauses)


def is_fully_populated(c: Clause, v: VariableSet) -> bool:
    """True iff ``c`` holds every variable of ``v`` in exactly one polarity and
    nothing else.  Defined only for non-tautology clauses."""
    if is_tautology(c):
        raise TautologyError(f"fully populated is undefined for tautologies: {sorted(c)}")
    return len(c) == len(v) and all(abs(lit) in v for lit in c)


def are_siblings(a: Clause, b: Clause, v: VariableSet) -> bool:
    """Two unequal fully populated clauses over the same variable set."""
    if is_tautology(a) or is_tautology(b):
        return False
    if not (is_fully_populated(a, v) and is_fully_populated(b, v)):
        return False
    return any(-lit in b for lit in a)


def is_subset(c: Clause, d: Clause) -> bool:
    """Polarity-sensitive literal inclusion."""
    return c <= d


@dataclass(frozen=True)
class NormalizeReport:
    duplicates_removed: int
    tautologies: tuple[Clause, ...]
    has_empty_clause: bool


def normalize(f: Formula) -> tuple[Formula, NormalizeReport]:
    """Deduplicate (already guaranteed by Formula) and mark structural facts.

    Tautology clauses are kept but listed so callers can skip them; the
    presence of the empty clause is flagged because it decides everything.
    """
    tautologies = tuple(sorted((c for c in f.clauses if is_tautology(c)), key=clause_key))
    report = NormalizeReport(
        duplicates_removed=f.original_count - len(f.clauses),
        tautologies=tautologies,
        has_empty_clause=EMPTY_CLAUSE in f.clauses,
    )
    return f, report


def effective_clauses(f: Formula) -> list[Clause]:
    """The non-tautology clauses, in canonical order."""
    return sorted((c for c in f.clauses if not is_tautology(c)), key=clause_key)
