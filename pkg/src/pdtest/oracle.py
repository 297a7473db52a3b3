"""Ground-truth checks independent of the inflation machinery.

``gauss_pos_def_test`` is Sylvester's criterion by exact row reduction;
``brute_force_roots`` enumerates the roots of a unit form inside a box.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _Q = Fraction

from .bigraph import GramBigraph, InputMatrix
from .errors import BudgetExceeded

DEFAULT_BOX = 6
DEFAULT_BUDGET = 10**8


def _as_matrix(A) -> InputMatrix:
    return A.gram_matrix() if isinstance(A, GramBigraph) else A


def gauss_pos_def_test(A) -> bool:
    """Exact positive definiteness test of ``A`` (an InputMatrix or GramBigraph).

    Reduces ``(A^T + A)/2`` to upper triangular form adding multiples of
    earlier rows to later ones only, and stops at the first pivot <= 0.
    """
    A = _as_matrix(A)
    n = A.n
    r = A.rows
    # doubled symmetrisation keeps integer inputs integral until the first division
    s = [[_Q(r[i][j] + r[j][i]) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = s[k][k]
        if pivot <= 0:
            return False
        row_k = s[k]
        for i in range(k + 1, n):
            row_i = s[i]
            f = row_i[k]
            if f:
                f = f / pivot
                for j in range(k + 1, n):
                    x = row_k[j]
                    if x:
                        row_i[j] -= f * x
                row_i[k] = _Q(0)
    return True


def _check_budget(n, width, budget):
    total = width**n
    if total > budget:
        raise BudgetExceeded(f"{width}^{n} = {total} evaluations exceed the budget of {budget}")


def _enumerate(G: GramBigraph, values: np.ndarray, stop_at_first: bool):
    """Yield all vectors over ``values^n`` on which the form equals 1."""
    n = G.n
    m = G.array.astype(np.int64)
    upper = np.triu(m, 1)
    k = min(n, 5)  # vectorised suffix length
    p = n - k
    suffix = np.array(list(itertools.product(values.tolist(), repeat=k)), dtype=np.int64)
    us = upper[p:, p:]
    q_suffix = (suffix * suffix).sum(axis=1) + np.einsum("ri,ij,rj->r", suffix, us, suffix)
    cross = upper[:p, p:]
    up = upper[:p, :p]
    for prefix in itertools.product(values.tolist(), repeat=p):
        pv = np.array(prefix, dtype=np.int64)
        q_pre = int(pv @ pv + pv @ up @ pv)
        lin = pv @ cross
        q = q_suffix + suffix @ lin + q_pre
        hits = np.flatnonzero(q == 1)
        for h in hits.tolist():
            yield tuple(prefix) + tuple(suffix[h].tolist())
            if stop_at_first:
                return


def brute_force_roots(G: GramBigraph, box: int = DEFAULT_BOX, budget: int = DEFAULT_BUDGET) -> set:
    """All integer vectors with coordinates in ``[-box, box]`` and form value 1."""
    if box < 1:
        raise ValueError("box must be positive")
    _check_budget(G.n, 2 * box + 1, budget)
    values = np.arange(-box, box + 1, dtype=np.int64)
    return set(_enumerate(G, values, False))


def has_positive_sincere_root(G: GramBigraph, box: int = DEFAULT_BOX, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether some root has every coordinate in ``[1, box]``."""
    if box < 1:
        raise ValueError("box must be positive")
    _check_budget(G.n, box, budget)
    values = np.arange(1, box + 1, dtype=np.int64)
    return next(_enumerate(G, values, True), None) is not None
