import json
from fractions import Fraction

import numpy as np
import pytest

from pdtest.bigraph import GramBigraph, InputMatrix
from pdtest.dynkin import A, D, E6, E7, E8
from pdtest.errors import NotTriangleIntegral, NotUnidiagonal
from pdtest.generators import gen_nakayama, gen_random_uti, random_positive_bigraph
from pdtest.inflation import Strategy
from pdtest.oracle import gauss_pos_def_test
from pdtest.positivity import (
    gauss_outcome,
    igfpos,
    igfposs,
    pos_def_test_by_inflations,
    pos_def_test_by_root_inflations,
    run_test,
)

from conftest import EXAMPLE_A

TESTS = [pos_def_test_by_inflations, pos_def_test_by_root_inflations]


@pytest.mark.parametrize("n,expected", [(1, 0), (2, 1), (3, 3), (4, 8), (5, 15), (6, 30), (7, 56),
                                        (8, 112), (9, 63), (10, 80), (400, 159200)])
def test_igfpos(n, expected):
    assert igfpos(n) == expected


@pytest.mark.parametrize("n,expected", [(1, 0), (2, 0), (3, 0), (4, 1), (5, 2), (6, 5), (7, 10),
                                        (8, 21), (9, 6), (12, 9), (400, 397)])
def test_igfposs(n, expected):
    assert igfposs(n) == expected


def test_bounds_reject_zero():
    with pytest.raises(ValueError):
        igfpos(0)
    with pytest.raises(ValueError):
        igfposs(0)


@pytest.mark.parametrize("test", TESTS)
def test_nakayama_small(kernels, test):
    for n in (1, 2, 4, 9):
        o = test(gen_nakayama(n))
        assert o.positive and o.dynkin == A(n)


@pytest.mark.parametrize("test", TESTS)
def test_example_is_not_positive(test):
    o = test(EXAMPLE_A, precheck=False)
    assert not o.positive and o.dynkin is None
    o = test(EXAMPLE_A)
    assert not o.positive and o.precheck_shortcircuit
    assert o.pair_inflations == o.vertex_inflations == 0 and len(o.log) == 0


@pytest.mark.parametrize("test", TESTS)
def test_disconnected_inputs(test):
    o = test(InputMatrix(np.eye(3, dtype=int).tolist()))
    assert o.positive and o.dynkin is None
    # A2 + a non-positive dotted A2 (q = x^2 + y^2 + 2xy is only semidefinite)
    M = GramBigraph.from_edges(4, {(1, 2): -1, (3, 4): 2})
    assert not test(M, precheck=False).positive
    both = GramBigraph.from_edges(5, {(1, 3): 1, (3, 5): -1, (2, 4): 1})
    o = test(both)
    assert o.positive and o.dynkin is None
    assert {s.a for s in o.log} | {s.b for s in o.log if s.b} <= {1, 2, 3, 4, 5}


def test_root_test_trivial_cases():
    o = pos_def_test_by_root_inflations(InputMatrix([[1]]))
    assert o.positive and o.dynkin == A(1)


@pytest.mark.parametrize("test", TESTS)
def test_rejects_non_uti(test):
    with pytest.raises(NotUnidiagonal):
        test(InputMatrix([[2]]))
    with pytest.raises(NotTriangleIntegral):
        test(InputMatrix([[1, Fraction(1, 2)], [0, 1]]))


@pytest.mark.parametrize("family,n,expected", [("A", 7, A(7)), ("D", 7, D(7)), ("E", 6, E6),
                                               ("E", 7, E7), ("E", 8, E8), ("D", 12, D(12))])
@pytest.mark.parametrize("test", TESTS)
def test_dynkin_type_is_recovered(kernels, test, family, n, expected):
    for seed in range(4):
        G = random_positive_bigraph(n, seed, 50, family)
        for s in Strategy:
            o = test(G, s, seed=seed)
            assert o.positive and o.dynkin == expected


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_gauss_on_small_corpus(kernels, seed):
    n = 2 + seed % 9
    A_ = gen_random_uti(n, seed, 2, "1/2")
    truth = gauss_pos_def_test(A_)
    for test in TESTS:
        for s in Strategy:
            assert test(A_, s, seed=seed).positive == truth


def test_guard_stop_reported():
    # inflating at (1,2) turns d_23 into 1 - (-1)(1) = 2
    N = GramBigraph.from_edges(3, {(1, 2): 1, (1, 3): -1, (2, 3): 1})
    assert not gauss_pos_def_test(N)
    o = pos_def_test_by_inflations(N)
    assert not o.positive and o.guard_stop and not o.precheck_shortcircuit
    assert [str(s) for s in o.log] == ["P 1 2"]
    assert o.to_json()["guard_stop"] is True


def test_bound_exhausted_flag():
    # found by exhaustive search over n = 3: dotted edges survive igfpos(3) = 3 inflations
    N = GramBigraph.from_upper([[1, 1], [2]])
    assert not gauss_pos_def_test(N)
    o = pos_def_test_by_inflations(N, precheck=False)
    assert not o.positive and o.bound_exhausted and o.pair_inflations == igfpos(3)
    assert o.to_json()["bound_exhausted"] is True


def test_outcome_json_schema():
    o = pos_def_test_by_root_inflations(gen_nakayama(5), Strategy.UNIFORM_RANDOM, seed=7)
    data = json.loads(json.dumps(o.to_json()))
    assert data["positive"] is True and data["dynkin"] == "A5"
    assert data["algorithm"] == "root-inflations" and data["strategy"] == 3 and data["seed"] == 7
    assert set(data) >= {"pair_inflations", "vertex_inflations", "elapsed_ms",
                         "precheck_shortcircuit", "bound_exhausted"}
    g = gauss_outcome(gen_nakayama(5)).to_json()
    assert g["algorithm"] == "gauss" and g["strategy"] is None and g["dynkin"] is None


def test_random_strategy_without_seed_records_one():
    o = pos_def_test_by_inflations(gen_nakayama(6), Strategy.FIRST_OR_LAST)
    assert isinstance(o.seed, int)
    again = pos_def_test_by_inflations(gen_nakayama(6), Strategy.FIRST_OR_LAST, seed=o.seed)
    assert again.log.to_text() == o.log.to_text()
    assert pos_def_test_by_inflations(gen_nakayama(6), Strategy.LAST, seed=3).seed is None


def test_run_test_dispatch():
    for algo in ("inflations", "root-inflations", "gauss"):
        assert run_test(gen_nakayama(4), algo).positive
    with pytest.raises(ValueError):
        run_test(gen_nakayama(4), "eigen")
