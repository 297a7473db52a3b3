"""Test-matrix generators: Nakayama matrices and seeded random corpora."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _backend
from .bigraph import GramBigraph, InputMatrix
from .dynkin import DynkinType, dynkin_bigraph
from .inflation import make_rng


def gen_nakayama(n: int) -> InputMatrix:
    """Upper unidiagonal matrix with ``a[i][i+s] = 1`` for even ``s``, ``-1`` for odd ``s``."""
    if n < 1:
        raise ValueError("n must be positive")
    return InputMatrix(
        [[0 if j < i else (1 if (j - i) % 2 == 0 else -1) for j in range(n)] for i in range(n)]
    )


def dynkin_types_of_rank(n: int) -> list[DynkinType]:
    types = [DynkinType("A", n)]
    if n >= 4:
        types.append(DynkinType("D", n))
    if n in (6, 7, 8):
        types.append(DynkinType("E", n))
    return types


def random_positive_bigraph(n: int, seed: int, steps: int, family: str | None = None) -> GramBigraph:
    """A random connected positive bigraph on ``n`` vertices.

    Starts from a randomly relabelled Dynkin graph (uniform over the types of
    rank ``n``, or of ``family``) and applies ``steps`` random inflations.
    Each step is a vertex inflation or, with probability 1/2 when a dotted
    pair exists, a pair inflation in a random orientation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = make_rng(seed)
    types = dynkin_types_of_rank(n)
    if family is not None:
        types = [t for t in types if t.family == family]
        if not types:
            raise ValueError(f"no Dynkin graph of family {family} with {n} vertices")
    t = types[int(rng.integers(len(types)))]
    base = dynkin_bigraph(t).array
    perm = rng.permutation(n)
    m = np.ascontiguousarray(base[np.ix_(perm, perm)])
    k = _backend.kernels
    for _ in range(steps):
        dotted = np.argwhere(np.triu(m > 0, 1))
        if len(dotted) and rng.integers(2) == 1:
            a, b = dotted[int(rng.integers(len(dotted)))].tolist()
            if rng.integers(2) == 1:
                a, b = b, a
            k.inflate_pair(m, a, b, False)
        else:
            k.inflate_vertex(m, int(rng.integers(n)))
    return GramBigraph(m, _trusted=True)


def gen_random_positive(n: int, seed: int, steps: int, family: str | None = None) -> InputMatrix:
    """Gram matrix of :func:`random_positive_bigraph`; always positive definite."""
    return random_positive_bigraph(n, seed, steps, family).gram_matrix()


def gen_random_uti(n: int, seed: int, coeff_range: int = 2, density=Fraction(1, 2)) -> InputMatrix:
    """Random upper unidiagonal integer matrix.

    Every strictly upper entry is nonzero with probability ``density`` (an
    exact rational in ``(0, 1]``) and then uniform on
    ``[-coeff_range, coeff_range]`` without 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if coeff_range < 1:
        raise ValueError("coeff_range must be positive")
    density = Fraction(density)
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    rng = make_rng(seed)
    num, den = density.numerator, density.denominator
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        for j in range(i + 1, n):
            if rng.integers(den) < num:
                v = int(rng.integers(1, coeff_range + 1))
                rows[i][j] = v if rng.integers(2) else -v
    return InputMatrix(rows)
