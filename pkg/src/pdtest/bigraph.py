"""Matrices, unit quadratic forms and loop-free edge-bipartite graphs.

A bigraph on vertices ``1..n`` is stored through its upper-triangular Gram
matrix: ``d(i, j) < 0`` counts solid edges, ``d(i, j) > 0`` dotted edges.
Internally the coefficients live in a symmetric ``int64`` array with a zero
diagonal so that one row holds every coefficient incident with a vertex.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NotTriangleIntegral, NotUnidiagonal, VertexOutOfRange

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _exact(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        f = Fraction(x.numerator, x.denominator)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"matrix entries must be exact rationals, got {type(x).__name__}")


class InputMatrix:
    """An immutable ``n x n`` matrix with exact rational entries.

    Integral entries are kept as ``int``; the rest as ``Fraction``.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_exact(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise DimensionMismatch("a matrix needs at least one row")
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch(f"expected a square {n}x{n} matrix")
        self._rows = rows

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, InputMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"InputMatrix({self.tolist()!r})"


def symmetrize(A: InputMatrix) -> InputMatrix:
    """Return ``(A^T + A) / 2``."""
    n = A.n
    r = A.rows
    return InputMatrix(
        [[Fraction(r[i][j] + r[j][i], 2) for j in range(n)] for i in range(n)]
    )


class GramBigraph:
    """Loop-free bigraph with vertices ``1..n`` given by its Gram coefficients.

    Instances are immutable; the backing array is marked read-only.
    Construct with :meth:`from_upper` or :meth:`from_array`.
    """

    __slots__ = ("_m",)

    def __init__(self, m: np.ndarray, *, _trusted: bool = False):
        if not _trusted:
            m = np.array(m, dtype=np.int64, copy=True)
            if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
                raise DimensionMismatch("coefficient array must be square and non-empty")
            if np.any(np.diagonal(m) != 0):
                raise ValueError("diagonal of the coefficient array must be zero")
            if not np.array_equal(m, m.T):
                raise ValueError("coefficient array must be symmetric")
        m.setflags(write=False)
        self._m = m

    @classmethod
    def from_array(cls, m) -> "GramBigraph":
        """Build from a symmetric coefficient array with zero diagonal."""
        return cls(m)

    @classmethod
    def from_upper(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "GramBigraph":
        """Build from the strictly upper rows ``[[d12, d13, ...], [d23, ...], ...]``.

        The last (empty) row may be omitted; ``n`` is required when there are
        no off-diagonal entries at all.
        """
        if n is None:
            n = len(rows) + 1 if rows and len(rows[-1]) else len(rows)
            n = max(n, 1)
        m = np.zeros((n, n), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != n - 1 - i:
                raise DimensionMismatch(f"row {i + 1} must have {n - 1 - i} entries")
            for k, v in enumerate(row):
                v = int(v)
                if not INT64_MIN <= v <= INT64_MAX:
                    raise OverflowError("coefficient does not fit in 64 bits")
                m[i, i + 1 + k] = m[i + 1 + k, i] = v
        return cls(m, _trusted=True)

    @classmethod
    def from_edges(cls, n: int, edges: dict) -> "GramBigraph":
        """Build from ``{(i, j): d_ij}`` with 1-based vertices."""
        m = np.zeros((n, n), dtype=np.int64)
        for (i, j), v in edges.items():
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise VertexOutOfRange(f"bad vertex pair {(i, j)}")
            m[i - 1, j - 1] = m[j - 1, i - 1] = v
        return cls(m, _trusted=True)

    @property
    def n(self) -> int:
        return self._m.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only symmetric coefficient array (0-based, zero diagonal)."""
        return self._m

    def d(self, i: int, j: int) -> int:
        """Coefficient ``d_ij`` for 1-based ``i != j`` (``d_ij == d_ji``)."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise VertexOutOfRange(f"vertex out of range 1..{n}: {(i, j)}")
        if i == j:
            raise ValueError("d_ii is not a coefficient of a loop-free bigraph")
        return int(self._m[i - 1, j - 1])

    def upper(self) -> list[int]:
        """Strictly upper triangular coefficients, row-major."""
        return self._m[np.triu_indices(self.n, 1)].tolist()

    def gram_matrix(self) -> InputMatrix:
        """The upper-triangular unidiagonal Gram matrix."""
        g = np.triu(self._m, 1) + np.eye(self.n, dtype=np.int64)
        return InputMatrix(g.tolist())

    def dotted_pairs(self) -> list[tuple[int, int]]:
        a, b = np.nonzero(np.triu(self._m > 0, 1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(a, b)]

    def has_dotted(self) -> bool:
        return bool((self._m > 0).any())

    def __eq__(self, other):
        if not isinstance(other, GramBigraph):
            return NotImplemented
        return np.array_equal(self._m, other._m)

    def __hash__(self):
        return hash((self.n, self._m.tobytes()))

    def __repr__(self):
        return f"GramBigraph.from_upper({[r.tolist() for r in _upper_rows(self._m)]!r}, n={self.n})"


def _upper_rows(m):
    n = m.shape[0]
    return [m[i, i + 1:] for i in range(n - 1)]


def triangularise(A: InputMatrix) -> GramBigraph:
    """Fold ``A`` into the Gram bigraph of its triangularisation.

    Raises :class:`NotUnidiagonal` or :class:`NotTriangleIntegral` when ``A``
    is outside the input class.
    """
    n = A.n
    r = A.rows
    for i in range(n):
        if r[i][i] != 1:
            raise NotUnidiagonal(f"a[{i + 1}][{i + 1}] = {r[i][i]} != 1")
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        ri = r[i]
        for j in range(i + 1, n):
            s = ri[j] + r[j][i]
            if s.__class__ is not int:
                if s.denominator != 1:
                    raise NotTriangleIntegral(
                        f"a[{i + 1}][{j + 1}] + a[{j + 1}][{i + 1}] = {s} is not an integer"
                    )
                s = int(s)
            if s:
                if not INT64_MIN <= s <= INT64_MAX:
                    raise OverflowError("triangularised coefficient does not fit in 64 bits")
                m[i, j] = m[j, i] = s
    return GramBigraph(m, _trusted=True)


def eval_form(G: GramBigraph, v: Sequence[int]) -> int:
    """Exact value of ``sum v_i^2 + sum_{i<j} d_ij v_i v_j``."""
    n = G.n
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} for a form of rank {n}")
    v = [int(x) for x in v]
    total = sum(x * x for x in v)
    m = G.array
    for i in range(n):
        vi = v[i]
        if not vi:
            continue
        row = m[i]
        for j in range(i + 1, n):
            dij = row[j]
            if dij:
                total += int(dij) * vi * v[j]
    return total


def _components(m: np.ndarray) -> list[list[int]]:
    n = m.shape[0]
    seen = [False] * n
    comps = []
    nz = m != 0
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in np.flatnonzero(nz[u]).tolist():
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: GramBigraph) -> bool:
    """Whether the underlying simple graph of ``G`` is connected (BFS)."""
    return len(_components(G.array)) == 1


def connected_components(G: GramBigraph) -> list[tuple[tuple[int, ...], GramBigraph]]:
    """Split ``G`` into components, relabelled ``1..k`` in original order.

    Each item is ``(original 1-based vertices, induced sub-bigraph)``.
    """
    out = []
    m = G.array
    for comp in _components(m):
        idx = np.asarray(comp)
        sub = np.ascontiguousarray(m[np.ix_(idx, idx)])
        out.append((tuple(i + 1 for i in comp), GramBigraph(sub, _trusted=True)))
    return out


def coefficient_precheck(G: GramBigraph) -> bool:
    """Necessary condition for positivity: every ``d_ij`` lies in ``{-1, 0, 1}``."""
    m = G.array
    return bool(np.all((m >= -1) & (m <= 1)))
