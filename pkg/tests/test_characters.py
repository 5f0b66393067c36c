import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from superweight.acceptance import SWEEP_CONSTANTS
from superweight.characters import (DEFAULT_BUDGET, budget_limit, hook_multiplicities, max_multiplicity_sweep,
                                    super_ext_dim, super_sym_dim)
from superweight.errors import BadPartition, BudgetExceeded
from superweight.weights import Weight


def test_sym_dim_examples():
    assert super_sym_dim(0, 3, 2) == 1
    assert super_sym_dim(2, 1, 1) == 2
    assert super_sym_dim(3, 2, 1) == 7


def test_ext_dim_examples():
    assert super_ext_dim(2, 1, 1) == 2
    for n in range(6):
        assert super_ext_dim(n, n, 0) == 1
    # i = 0..3 even factors, each paired with one odd monomial
    assert super_ext_dim(8, 3, 1) == 8


def test_hook_examples():
    for a in range(5):
        t = hook_multiplicities((a,) if a else (), 2, 2)
        assert set(t.entries.values()) <= {1}
        assert t.total == super_sym_dim(a, 2, 2)
    assert hook_multiplicities((1, 1), 1, 1).total == 2
    t = hook_multiplicities((1,), 2, 3)
    assert len(t.entries) == 5 and set(t.entries.values()) == {1}
    assert t.total_dim == (2, 3)


def test_hook_weights_use_left_first_layout():
    t = hook_multiplicities((1,), 3, 0)
    # letter 0 is the first unprimed letter, stored at the delta_1 slot (last left coordinate)
    assert set(t.entries) == {Weight([0, 0, 1], []), Weight([0, 1, 0], []), Weight([1, 0, 0], [])}


def test_sweep_examples():
    assert max_multiplicity_sweep((4,), range(1, 6), 2) == [1] * 5
    assert max_multiplicity_sweep((1,), range(2, 7), 1) == [1] * 5


def test_sweep_constants_are_frozen():
    assert max_multiplicity_sweep((2, 1), range(2, 9), 1) == [2] * 7
    assert max_multiplicity_sweep((2, 2), range(2, 9), 1) == [1, 2, 2, 2, 2, 2, 2]
    assert max_multiplicity_sweep((3, 1), range(2, 9), 1) == [2, 3, 3, 3, 3, 3, 3]
    assert SWEEP_CONSTANTS == {(2, 1): 2, (2, 2): 2, (3, 1): 3}


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceeded):
        hook_multiplicities((7, 6), 1, 1)
    monkeypatch.setenv("SUPERWEIGHT_BUDGET", "3")
    assert budget_limit() == 3
    with pytest.raises(BudgetExceeded):
        hook_multiplicities((2, 2), 2, 1)
    monkeypatch.setenv("SUPERWEIGHT_BUDGET", "999")
    assert budget_limit() == DEFAULT_BUDGET


def test_bad_partition():
    with pytest.raises(BadPartition):
        hook_multiplicities((1, 2), 2, 1)


@given(st.integers(0, 6), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_convolution(a, n1, m1, n2, m2):
    split = sum(super_sym_dim(k, n1, m1) * super_sym_dim(a - k, n2, m2) for k in range(a + 1))
    assert super_sym_dim(a, n1 + n2, m1 + m2) == split


@given(st.integers(0, 7), st.integers(0, 4), st.integers(0, 4))
def test_sym_and_ext_swap_roles(a, n, m):
    assert super_sym_dim(a, n, m) == super_ext_dim(a, m, n)


def ssyt_count(mu, n):
    """Count semistandard fillings by trying every assignment of letters 1..n."""
    cells = [(r, c) for r, k in enumerate(mu) for c in range(k)]
    total = 0
    for vals in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(r, c)] <= t[(r, c + 1)] for r, c in cells if (r, c + 1) in t) and \
                all(t[(r, c)] < t[(r + 1, c)] for r, c in cells if (r + 1, c) in t):
            total += 1
    return total


def partitions(size):
    def rec(left, cap):
        if left == 0:
            yield ()
        for p in range(min(left, cap), 0, -1):
            for rest in rec(left - p, p):
                yield (p,) + rest
    return list(rec(size, size))


@pytest.mark.parametrize("size", range(1, 6))
def test_even_case_matches_ssyt_enumeration(size):
    for mu in partitions(size):
        for n in range(1, 5):
            assert hook_multiplicities(mu, n, 0).total == ssyt_count(mu, n), (mu, n)


def test_kostka_numbers():
    # K_{(2,1),(1,1,1)} = 2 and K_{(3,2),(2,2,1)} = 2
    t = hook_multiplicities((2, 1), 3, 0)
    assert t.entries[Weight([1, 1, 1], [])] == 2
    t = hook_multiplicities((3, 2), 3, 0)
    assert t.entries[Weight([1, 2, 2], [])] == 2


@given(st.integers(1, 6), st.integers(0, 3), st.integers(0, 3))
def test_columns_match_ext_dim(a, n, m):
    assert hook_multiplicities((1,) * a, n, m).total == super_ext_dim(a, n, m)


@given(st.integers(0, 6), st.integers(0, 3), st.integers(0, 3))
def test_rows_match_sym_dim(a, n, m):
    t = hook_multiplicities((a,) if a else (), n, m)
    assert t.total == super_sym_dim(a, n, m)
    assert t.max_multiplicity <= 1


@given(st.sampled_from([(2, 1), (2, 2), (3, 1), (1, 1, 1)]), st.integers(1, 3), st.integers(0, 2))
def test_table_totals_consistent(mu, n, m):
    t = hook_multiplicities(mu, n, m)
    assert sum(t.entries.values()) == t.total
    assert all(v >= 1 for v in t.entries.values())
    odd = sum(v for w, v in t.entries.items() if sum(w.right) % 2)
    assert t.total_dim[1] == odd
