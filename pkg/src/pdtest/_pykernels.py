"""Pure-Python inflation kernels.

Fallback for :mod:`pdtest._ckernels`; both modules expose the same functions
and must produce identical step sequences. All functions work in place on a
C-contiguous symmetric ``int64`` array with zero diagonal, using 0-based
vertices. Steps are encoded as ``(a, b)`` with ``b == -1`` for a vertex
inflation.
"""
import numpy as np

from .errors import CoefficientOverflow

NAME = "python"

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

STOP_DONE = 0
STOP_BOUND = 1
STOP_GUARD = 2
STOP_EARLY = 3


def count_dotted(m):
    return int(np.count_nonzero(m > 0)) // 2


def inflate_vertex(m, a):
    """Negate row and column ``a``; return the change in dotted-pair count."""
    row = m[a]
    if (row == INT64_MIN).any():
        raise CoefficientOverflow(f"negating a coefficient at vertex {a + 1} overflows")
    before = int(np.count_nonzero(row > 0))
    after = int(np.count_nonzero(row < 0))
    m[a, :] *= -1
    m[:, a] *= -1
    return after - before


def inflate_pair(m, a, b, guard):
    """Apply the pair inflation at ``(a, b)``; caller ensures ``m[a, b] > 0``.

    Returns ``(dotted_delta, tripped)`` where ``tripped`` reports a new
    coefficient outside ``{-1, 0, 1}`` (only computed when ``guard``).
    """
    dab = int(m[a, b])
    ra = m[a]
    rb = m[b]
    worst = dab * int(np.abs(ra).max()) + int(np.abs(rb).max()) if ra.size else 0
    if worst > INT64_MAX:
        # exact recomputation decides whether an entry really leaves int64
        exact = [int(y) - int(x) * dab for x, y in zip(ra.tolist(), rb.tolist())]
        exact[a] = -dab
        exact[b] = 0
        if any(not INT64_MIN <= v <= INT64_MAX for v in exact):
            raise CoefficientOverflow(f"inflation at pair ({a + 1}, {b + 1}) overflows 64 bits")
        new = np.array(exact, dtype=np.int64)
    else:
        new = rb - dab * ra
        new[a] = -dab
        new[b] = 0
    delta = int(np.count_nonzero(new > 0)) - int(np.count_nonzero(rb > 0))
    m[b, :] = new
    m[:, b] = new
    tripped = bool(guard) and bool((np.abs(new) >= 2).any())
    return delta, tripped


def _first(m):
    flat = m.reshape(-1)
    # row-major first positive entry of a symmetric matrix lies above the diagonal
    idx = int(np.argmax(flat > 0))
    n = m.shape[0]
    return idx // n, idx % n


def _last(m):
    n = m.shape[0]
    for a in range(n - 2, -1, -1):
        hits = np.flatnonzero(m[a, a + 1:] > 0)
        if hits.size:
            return a, a + 1 + int(hits[-1])
    raise AssertionError("no dotted edge")


def _kth(m, k):
    n = m.shape[0]
    idx = int(np.flatnonzero(np.triu(m > 0, 1).reshape(-1))[k])
    return idx // n, idx % n


def select_pair(m, strategy, draw, count):
    """Pick a dotted pair ``(a, b)``, ``a < b``, per ``strategy``; ``count > 0``."""
    if strategy == 0:
        return _first(m)
    if strategy == 1:
        return _last(m)
    if strategy == 2:
        return _first(m) if draw(2) == 0 else _last(m)
    if strategy == 3:
        return _kth(m, draw(count))
    raise ValueError(f"unknown strategy {strategy}")


def pair_loop(m, strategy, bound, draw, guard):
    """Inflate at selected dotted pairs until none remain or ``bound`` is hit.

    Returns ``(steps, stop)``.
    """
    steps = []
    count = count_dotted(m)
    while count > 0:
        if len(steps) >= bound:
            return steps, STOP_BOUND
        a, b = select_pair(m, strategy, draw, count)
        delta, tripped = inflate_pair(m, a, b, guard)
        count += delta
        steps.append((a, b))
        if tripped:
            return steps, STOP_GUARD
    return steps, STOP_DONE


def root_loop(m, early_exit, guard):
    """Grow ``S`` from vertex 0, inflating each new vertex into a dotted pair.

    Returns ``(steps, stop)``; ``stop`` is ``-1`` when no edge leaves ``S``
    (disconnected input).
    """
    n = m.shape[0]
    in_s = np.zeros(n, dtype=bool)
    in_s[0] = True
    size = 1
    steps = []
    count = count_dotted(m)
    while size < n:
        if early_exit and count == 0:
            return steps, STOP_EARLY
        rows = np.flatnonzero(in_s)
        cols = np.flatnonzero(~in_s)
        block = m[np.ix_(rows, cols)] != 0
        if not block.any():
            return steps, -1
        idx = int(np.argmax(block.reshape(-1)))
        a = int(rows[idx // cols.size])
        b = int(cols[idx % cols.size])
        if m[a, b] < 0:
            count += inflate_vertex(m, b)
            steps.append((b, -1))
        delta, tripped = inflate_pair(m, b, a, guard)
        count += delta
        steps.append((b, a))
        in_s[b] = True
        size += 1
        if tripped:
            return steps, STOP_GUARD
    return steps, STOP_DONE
