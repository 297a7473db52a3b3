import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pdtest.bigraph import GramBigraph, InputMatrix, coefficient_precheck, eval_form, symmetrize, triangularise
from pdtest.errors import BudgetExceeded
from pdtest.generators import random_positive_bigraph
from pdtest.oracle import brute_force_roots, gauss_pos_def_test, has_positive_sincere_root

from conftest import EXAMPLE_A, path_bigraph
from test_bigraph import uti_matrices


def enumerate_roots(G, values):
    return {v for v in itertools.product(values, repeat=G.n) if eval_form(G, v) == 1}


def sympy_pd(A):
    return sympy.Matrix(A.tolist()).is_positive_definite


def test_gauss_examples():
    assert gauss_pos_def_test(InputMatrix([[1, -1], [0, 1]]))
    assert not gauss_pos_def_test(EXAMPLE_A)
    assert not gauss_pos_def_test(triangularise(EXAMPLE_A))
    for n in (1, 3, 6):
        assert gauss_pos_def_test(InputMatrix([[int(i == j) for j in range(n)] for i in range(n)]))


def test_gauss_zero_pivot_is_not_positive():
    # semidefinite: q = (x1 - x2)^2
    assert not gauss_pos_def_test(InputMatrix([[1, -2], [0, 1]]))
    assert not gauss_pos_def_test(InputMatrix([[0]]))


@st.composite
def rational_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    vals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return InputMatrix([[draw(vals) for _ in range(n)] for _ in range(n)])


@settings(max_examples=150, deadline=None)
@given(rational_matrices())
def test_gauss_agrees_with_sympy(A):
    expected = bool(sympy.Matrix(symmetrize(A).tolist()).is_positive_definite)
    assert gauss_pos_def_test(A) == expected
    assert gauss_pos_def_test(symmetrize(A)) == expected


@settings(max_examples=150, deadline=None)
@given(uti_matrices(max_n=6))
def test_gauss_invariant_under_symmetrization_and_folding(A):
    r = gauss_pos_def_test(A)
    assert gauss_pos_def_test(symmetrize(A)) == r
    assert gauss_pos_def_test(triangularise(A).gram_matrix()) == r


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 7), st.data())
def test_precheck_failure_implies_not_positive(n, data):
    k = n * (n - 1) // 2
    vals = data.draw(st.lists(st.integers(-2, 2), min_size=k, max_size=k))
    pos = data.draw(st.integers(0, k - 1))
    vals[pos] = data.draw(st.sampled_from([-3, -2, 2, 3]))
    it = iter(vals)
    G = GramBigraph.from_upper([[next(it) for _ in range(n - 1 - i)] for i in range(n)], n=n)
    assert not coefficient_precheck(G)
    assert not gauss_pos_def_test(G)


def test_root_examples():
    assert brute_force_roots(GramBigraph.from_upper([], n=1), box=2) == {(1,), (-1,)}
    A2 = GramBigraph.from_upper([[-1]])
    roots = brute_force_roots(A2, box=2)
    assert roots == enumerate_roots(A2, range(-2, 3))
    assert roots == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)}
    A3 = path_bigraph(3)
    roots3 = brute_force_roots(A3, box=6)
    assert roots3 == enumerate_roots(A3, range(-6, 7))
    assert len(roots3) == 12


@pytest.mark.parametrize("seed", range(6))
def test_roots_vectorised_matches_plain_enumeration(seed):
    G = random_positive_bigraph(4, seed, 15)
    assert brute_force_roots(G, box=3) == enumerate_roots(G, range(-3, 4))


@pytest.mark.parametrize("seed", range(8))
def test_roots_closed_under_negation(seed):
    G = random_positive_bigraph(2 + seed % 4, seed, 20)
    roots = brute_force_roots(G, box=6)
    assert roots == {tuple(-x for x in v) for v in roots}


@pytest.mark.parametrize("seed", range(12))
def test_box_six_is_exhaustive_for_positive_forms(seed):
    n = 2 + seed % 5
    G = random_positive_bigraph(n, 100 + seed, 40)
    assert brute_force_roots(G, box=6) == brute_force_roots(G, box=8)


def test_positive_sincere_examples():
    for n in range(1, 9):
        assert has_positive_sincere_root(path_bigraph(n), box=2)
    assert eval_form(path_bigraph(8), [1] * 8) == 1
    dotted = GramBigraph.from_upper([[1]])
    assert not has_positive_sincere_root(dotted, box=6)
    assert not any(eval_form(dotted, v) == 1 for v in itertools.product(range(1, 7), repeat=2))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        brute_force_roots(path_bigraph(8), box=6)
    with pytest.raises(BudgetExceeded):
        has_positive_sincere_root(path_bigraph(12), box=6, budget=10**6)
