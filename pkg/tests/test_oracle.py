import itertools
import random

import pytest

from conftest import corpus
from fpcsat.core import Formula, evaluate_formula, is_tautology, variables_of
from fpcsat.oracle import (
    VariableLimitError,
    brute_force_sat,
    complete_formula,
    condition_check,
    enumerate_fpcs,
    falsified_fpc,
    power_set,
)


def fs(*lits):
    return frozenset(lits)


ILLUSTRATION = Formula.from_clauses([[-1, -2], [3], [-1], [1, -2, -3]])


def test_illustration_has_unique_model():
    result = brute_force_sat(ILLUSTRATION)
    assert result.satisfiable
    assert result.models == ({1: False, 2: False, 3: True},)
    assert result.falsified_fpc_per_model == (fs(-3, 1, 2),)


def test_empty_clause_unsat():
    assert not brute_force_sat(Formula.from_clauses([[]])).satisfiable


def test_empty_formula_sat_with_empty_model():
    result = brute_force_sat(Formula.from_clauses([]))
    assert result.satisfiable
    assert result.models == ({},)


def test_collect_models_flag():
    result = brute_force_sat(ILLUSTRATION, collect_models=False)
    assert result.satisfiable
    assert result.models == ()


def test_brute_force_respects_limit():
    f = Formula.from_clauses([[v] for v in range(1, 6)])
    with pytest.raises(VariableLimitError):
        brute_force_sat(f, limit_vars=4)


def test_explicit_variables_must_cover():
    with pytest.raises(ValueError):
        brute_force_sat(Formula.from_clauses([[1, 2]]), variables=frozenset({1}))


def test_enumerate_fpcs_order_and_counts():
    assert enumerate_fpcs(fs(1, 2)) == [fs(1, 2), fs(1, -2), fs(-1, 2), fs(-1, -2)]
    assert enumerate_fpcs(frozenset()) == [frozenset()]
    assert len(enumerate_fpcs(fs(1, 2, 3))) == 8
    for n in range(0, 11):
        assert len(enumerate_fpcs(frozenset(range(1, n + 1)))) == 2**n


def test_power_set():
    p = power_set(fs(1, -2))
    assert p == {frozenset(), fs(1), fs(-2), fs(1, -2)}
    for n in range(0, 8):
        assert len(power_set(frozenset(range(1, n + 1)))) == 2**n


def test_condition_check_examples():
    assert condition_check(Formula.from_clauses([[-1], [1, -2]])) == [fs(1, 2)]
    assert condition_check(
        Formula.from_clauses([]), variables=fs(1)
    ) == [fs(1), fs(-1)]
    all_fpcs = Formula.from_clauses(enumerate_fpcs(fs(1, 2)))
    assert condition_check(all_fpcs) == []


def test_condition_check_ignores_tautologies():
    f = Formula.from_clauses([[1, -1]])
    assert set(condition_check(f)) == {fs(1), fs(-1)}


def test_complete_formula_matches_listing():
    f2 = complete_formula(fs(1, 2))
    assert f2.clauses == {
        fs(1, 2), fs(1, -2), fs(-1, 2), fs(-1, -2),
        fs(1), fs(-1), fs(2), fs(-2), frozenset(),
    }
    assert complete_formula(frozenset()).clauses == {frozenset()}
    assert len(complete_formula(fs(1, 2, 3))) == 27
    assert all(not is_tautology(c) for c in f2.clauses)


def test_oracle_condition_equivalence_exhaustive_small():
    # every effective formula over one and two variables
    for n in (1, 2):
        v = frozenset(range(1, n + 1))
        non_null = sorted(
            (c for c in complete_formula(v).clauses if c), key=sorted
        )
        for mask in range(1 << len(non_null)):
            chosen = [c for i, c in enumerate(non_null) if (mask >> i) & 1]
            f = Formula(clauses=frozenset(chosen), original_count=len(chosen))
            sat = brute_force_sat(f, variables=v, collect_models=False).satisfiable
            assert sat == bool(condition_check(f, variables=v))


def test_oracle_condition_equivalence_sampled_n3():
    # random subsets of the complete formula over three variables
    rng = random.Random(3)
    v = fs(1, 2, 3)
    non_null = sorted((c for c in complete_formula(v).clauses if c), key=sorted)
    for _ in range(1500):
        chosen = [c for c in non_null if rng.random() < rng.random()]
        f = Formula(clauses=frozenset(chosen), original_count=len(chosen))
        sat = brute_force_sat(f, variables=v, collect_models=False).satisfiable
        assert sat == bool(condition_check(f, variables=v))


def test_oracle_condition_equivalence_random():
    for f in corpus(seed=11, count=400, n_max=12):
        sat = brute_force_sat(f, collect_models=False).satisfiable
        assert sat == bool(condition_check(f))


def test_model_fpc_bijection():
    for f in corpus(seed=13, count=200, n_max=10):
        result = brute_force_sat(f)
        survivors = set(condition_check(f))
        assert set(result.falsified_fpc_per_model) == survivors
        for model, fpc in zip(result.models, result.falsified_fpc_per_model):
            assert falsified_fpc(model) == fpc


def test_satisfiable_complete_minus_powerset():
    # removing one FPC's power set from the complete formula leaves exactly
    # that FPC's falsifying assignment as the unique model
    for n in range(0, 5):
        v = frozenset(range(1, n + 1))
        fn = complete_formula(v)
        for fpc in enumerate_fpcs(v):
            remaining = fn.clauses - power_set(fpc)
            f = Formula(clauses=remaining, original_count=len(remaining))
            result = brute_force_sat(f, variables=v)
            assert result.satisfiable
            assert result.models == ({var: not (var in fpc) for var in sorted(v)},)
            assert result.falsified_fpc_per_model == (fpc,)


def test_adding_back_any_subset_makes_unsat():
    for n in range(0, 4):
        v = frozenset(range(1, n + 1))
        fn = complete_formula(v)
        for fpc in enumerate_fpcs(v):
            remaining = fn.clauses - power_set(fpc)
            for extra in power_set(fpc):
                clauses = remaining | {extra}
                f = Formula(clauses=clauses, original_count=len(clauses))
                assert not brute_force_sat(f, variables=v, collect_models=False).satisfiable


def test_subsets_of_satisfiable_stay_satisfiable():
    rng = random.Random(17)
    checked = 0
    for f in corpus(seed=19, count=200, n_max=8):
        result = brute_force_sat(f, collect_models=False)
        if not result.satisfiable:
            continue
        clauses = sorted(f.clauses, key=sorted)
        for _ in range(3):
            kept = [c for c in clauses if rng.random() < 0.6]
            sub = Formula(clauses=frozenset(kept), original_count=len(kept))
            assert brute_force_sat(sub, collect_models=False).satisfiable
            checked += 1
    assert checked > 100
