import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus
from fpcsat.core import effective_clauses, variables_of
from fpcsat.oracle import condition_check
from fpcsat.tree import (
    BUDGET_EXCEEDED,
    CLOSED,
    OK,
    OPEN,
    DuplicateVariableError,
    FpcTree,
    NULL,
    UnregisteredVariableError,
    WorkLimitExceeded,
)


def fs(*lits):
    return frozenset(lits)


def count_nodes(tree):
    if tree.root in (OPEN, NULL):
        return 0
    total = 0
    stack = [tree.root]
    while stack:
        node = stack.pop()
        total += 1
        for child in (node.left, node.right):
            if child not in (OPEN, NULL):
                stack.append(child)
    return total


def test_fresh_tree():
    t = FpcTree(node_budget=10**6)
    assert t.root is OPEN
    assert t.node_count == 0
    assert t.open_count == 1
    assert not t.is_closed()
    assert t.open_fpcs() == [frozenset()]


def test_register_doubles_open_pointers():
    t = FpcTree()
    assert t.register_variable(1) == OK
    assert (t.node_count, t.open_count) == (1, 2)
    assert t.register_variable(2) == OK
    assert (t.node_count, t.open_count) == (3, 4)
    assert t.open_fpcs() == [fs(-1, -2), fs(-1, 2), fs(1, -2), fs(1, 2)]


def test_register_duplicate_raises():
    t = FpcTree()
    t.register_variable(1)
    with pytest.raises(DuplicateVariableError):
        t.register_variable(1)


def test_register_on_closed_tree():
    t = FpcTree()
    t.register_variable(1)
    t.eliminate(fs(1))
    t.eliminate(fs(-1))
    assert t.is_closed()
    assert t.register_variable(2) == CLOSED


def test_eliminate_fig2_sequence():
    # F = {{-x1}, {x1, -x2}} leaves exactly the path (x1, x2) open
    t = FpcTree()
    t.register_variable(1)
    t.eliminate(fs(-1))
    assert t.open_fpcs() == [fs(1)]
    t.register_variable(2)
    assert t.open_fpcs() == [fs(1, -2), fs(1, 2)]
    t.eliminate(fs(1, -2))
    assert t.open_fpcs() == [fs(1, 2)]
    assert not t.is_closed()


def test_eliminate_empty_clause_closes_tree():
    t = FpcTree()
    t.register_variable(1)
    t.register_variable(2)
    t.eliminate(frozenset())
    assert t.is_closed()
    assert t.open_fpcs() == []
    assert t.node_count == 0


def test_eliminate_unregistered_variable():
    t = FpcTree()
    t.register_variable(1)
    with pytest.raises(UnregisteredVariableError):
        t.eliminate(fs(2))


def test_eliminate_both_polarities_closes():
    t = FpcTree()
    t.register_variable(1)
    t.eliminate(fs(1))
    assert not t.is_closed()
    t.eliminate(fs(-1))
    assert t.is_closed()


def test_budget_exceeded_leaves_tree_unchanged():
    t = FpcTree(node_budget=1)
    assert t.register_variable(1) == OK
    before = (t.node_count, t.open_count, t.open_fpcs(), t.insertion_order[:])
    assert t.register_variable(2) == BUDGET_EXCEEDED
    after = (t.node_count, t.open_count, t.open_fpcs(), t.insertion_order[:])
    assert before == after


def test_node_count_tracks_real_nodes():
    t = FpcTree()
    for var in (1, 2, 3):
        t.register_variable(var)
    assert t.node_count == count_nodes(t) == 7
    t.eliminate(fs(-1))
    assert t.node_count == count_nodes(t) == 4
    assert t.peak_nodes == 7
    t.eliminate(fs(1, 2, 3))
    assert t.node_count == count_nodes(t)
    assert t.open_count == len(t.open_fpcs())


def test_eliminate_is_idempotent():
    t = FpcTree()
    for var in (1, 2, 3):
        t.register_variable(var)
    t.eliminate(fs(1, -2))
    snapshot = t.open_fpcs()
    t.eliminate(fs(1, -2))
    assert t.open_fpcs() == snapshot


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.frozensets(
            st.builds(lambda v, neg: -v if neg else v, st.integers(1, 5), st.booleans()),
            max_size=4,
        ),
        max_size=6,
    ),
    st.randoms(use_true_random=False),
)
def test_elimination_order_independent(clause_list, rng):
    def build(order):
        t = FpcTree()
        for var in range(1, 6):
            t.register_variable(var)
        for c in order:
            t.eliminate(c)
        return t.open_fpcs()

    shuffled = clause_list[:]
    rng.shuffle(shuffled)
    assert build(clause_list) == build(shuffled + clause_list)


def test_open_fpcs_matches_condition_check_n12():
    for f in corpus(seed=8, count=20, n_max=12, m_factor=3):
        t = FpcTree()
        for var in sorted(variables_of(f)):
            t.register_variable(var)
        for c in effective_clauses(f):
            t.eliminate(c)
        assert set(t.open_fpcs()) == set(condition_check(f))


def test_open_fpcs_matches_condition_check():
    # the surviving paths are exactly the FPCs no formula clause is a subset of
    for f in corpus(seed=7, count=150, n_max=9, m_factor=3):
        variables = sorted(variables_of(f))
        t = FpcTree()
        for var in variables:
            t.register_variable(var)
        for c in effective_clauses(f):
            t.eliminate(c)
        survivors = set(t.open_fpcs())
        expected = set(condition_check(f))
        assert survivors == expected
        assert t.is_closed() == (not expected)


def test_work_limit_aborts():
    t = FpcTree(work_limit=4)
    t.register_variable(1)
    t.register_variable(2)
    assert t.work <= 4
    with pytest.raises(WorkLimitExceeded):
        t.register_variable(3)


def test_dump_format():
    t = FpcTree()
    assert t.dump() == "root=OPEN\n"
    t.register_variable(1)
    t.register_variable(2)
    t.eliminate(fs(-1))
    dump = t.dump()
    assert "x1" in dump and "x2" in dump
    assert "left=NULL" in dump and "right=OPEN" in dump
