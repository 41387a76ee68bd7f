import random

from hypothesis import strategies as st

from fpcsat.core import Formula
from fpcsat.instances import random_formula


def literals(max_var: int = 8):
    return st.builds(lambda v, neg: -v if neg else v, st.integers(1, max_var), st.booleans())


def clauses(max_var: int = 8, max_size: int = 5):
    return st.frozensets(literals(max_var), max_size=max_size)


def variable_sets(max_var: int = 8, min_size: int = 0, max_size: int = 6):
    return st.frozensets(st.integers(1, max_var), min_size=min_size, max_size=max_size)


def formulas(max_var: int = 6, max_clauses: int = 10, max_size: int = 4):
    return st.lists(
        st.lists(literals(max_var), max_size=max_size), max_size=max_clauses
    ).map(Formula.from_clauses)


@st.composite
def assignments_over(draw, varset_strategy):
    v = draw(varset_strategy)
    values = draw(
        st.fixed_dictionaries({var: st.booleans() for var in sorted(v)})
    )
    return frozenset(v), values


def corpus(seed: int, count: int, n_max: int = 12, m_factor: int = 4,
           max_len: int = 3, tautology_prob: float = 0.05,
           empty_clause_prob: float = 0.01, duplicate_prob: float = 0.05):
    """Seeded stream of random formulas for cross-check runs."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        m = rng.randint(1, m_factor * n)
        yield random_formula(
            rng, n, m,
            max_len=max_len,
            tautology_prob=tautology_prob,
            empty_clause_prob=empty_clause_prob,
            duplicate_prob=duplicate_prob,
        )
