"""The compiled and pure-Python kernels must agree step for step."""
import numpy as np
import pytest

from pdtest import _backend, _pykernels
from pdtest.generators import gen_nakayama, gen_random_uti, random_positive_bigraph
from pdtest.bigraph import triangularise
from pdtest.inflation import make_rng

pytestmark = pytest.mark.skipif("cython" not in _backend.available(), reason="compiled kernels not built")


def both():
    return _backend.get("cython"), _pykernels


def _draw(seed):
    rng = make_rng(seed)
    return lambda k: int(rng.integers(k))


@pytest.mark.parametrize("seed", range(30))
def test_pair_loops_agree(seed):
    n = 2 + seed % 15
    G = random_positive_bigraph(n, seed, 40) if seed % 2 else triangularise(gen_random_uti(n, seed, 1, 1))
    for strategy in range(4):
        results = []
        for k in both():
            m = G.array.copy()
            steps, stop = k.pair_loop(m, strategy, 10 * n * n, _draw(seed), True)
            results.append((steps, stop, m.tobytes()))
        assert results[0] == results[1]


@pytest.mark.parametrize("seed", range(30))
@pytest.mark.parametrize("early", [False, True])
def test_root_loops_agree(seed, early):
    n = 2 + seed % 15
    G = random_positive_bigraph(n, seed, 40)
    results = []
    for k in both():
        m = G.array.copy()
        steps, stop = k.root_loop(m, early, True)
        results.append((steps, stop, m.tobytes()))
    assert results[0] == results[1]


def test_nakayama_counts_agree():
    G = triangularise(gen_nakayama(60))
    for strategy in range(4):
        counts = []
        for k in both():
            steps, stop = k.pair_loop(G.array.copy(), strategy, 10**6, _draw(1), True)
            counts.append(len(steps))
        assert counts[0] == counts[1]


def test_backend_override(monkeypatch):
    import importlib
    monkeypatch.setenv("PDTEST_BACKEND", "python")
    mod = importlib.reload(_backend)
    try:
        assert mod.kernels is _pykernels
    finally:
        monkeypatch.delenv("PDTEST_BACKEND")
        importlib.reload(_backend)
