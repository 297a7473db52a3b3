# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inflation kernels; see :mod:`pdtest._pykernels` for the contract."""
import numpy as np

from libc.stdint cimport int64_t

from .errors import CoefficientOverflow

cdef extern from *:
    """
    static inline int pd_mulsub_ovf(long long y, long long x, long long d, long long *r) {
        long long t;
        if (__builtin_mul_overflow(x, d, &t)) return 1;
        return __builtin_sub_overflow(y, t, r);
    }
    """
    int pd_mulsub_ovf(long long y, long long x, long long d, long long *r) nogil

NAME = "cython"

cdef int64_t I64_MIN = -9223372036854775807 - 1

STOP_DONE = 0
STOP_BOUND = 1
STOP_GUARD = 2
STOP_EARLY = 3


def count_dotted(const int64_t[:, ::1] m):
    cdef Py_ssize_t n = m.shape[0], i, j
    cdef Py_ssize_t c = 0
    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j] > 0:
                c += 1
    return c


cdef Py_ssize_t _inflate_vertex(int64_t[:, ::1] m, Py_ssize_t a) except? -1:
    cdef Py_ssize_t n = m.shape[0], c
    cdef Py_ssize_t delta = 0
    cdef int64_t v
    for c in range(n):
        if m[a, c] == I64_MIN:
            raise CoefficientOverflow(f"negating a coefficient at vertex {a + 1} overflows")
    for c in range(n):
        v = m[a, c]
        if v > 0:
            delta -= 1
        elif v < 0:
            delta += 1
        m[a, c] = -v
        m[c, a] = -v
    return delta


cdef Py_ssize_t _inflate_pair(int64_t[:, ::1] m, Py_ssize_t a, Py_ssize_t b,
                              bint guard, int64_t[::1] scratch, bint* tripped) except? -1:
    cdef Py_ssize_t n = m.shape[0], c
    cdef Py_ssize_t delta = 0
    cdef int64_t dab = m[a, b]
    cdef long long r
    cdef int64_t v
    for c in range(n):
        if c == a or c == b:
            continue
        if pd_mulsub_ovf(m[b, c], m[a, c], dab, &r):
            raise CoefficientOverflow(f"inflation at pair ({a + 1}, {b + 1}) overflows 64 bits")
        scratch[c] = r
    scratch[a] = -dab
    scratch[b] = 0
    tripped[0] = False
    for c in range(n):
        if m[b, c] > 0:
            delta -= 1
        v = scratch[c]
        if v > 0:
            delta += 1
        if guard and (v >= 2 or v <= -2):
            tripped[0] = True
        m[b, c] = v
        m[c, b] = v
    return delta


def inflate_vertex(int64_t[:, ::1] m, Py_ssize_t a):
    return _inflate_vertex(m, a)


def inflate_pair(int64_t[:, ::1] m, Py_ssize_t a, Py_ssize_t b, bint guard):
    cdef bint tripped = False
    scratch = np.empty(m.shape[0], dtype=np.int64)
    delta = _inflate_pair(m, a, b, guard, scratch, &tripped)
    return delta, bool(tripped)


cdef inline void _first(const int64_t[:, ::1] m, Py_ssize_t* pa, Py_ssize_t* pb):
    cdef Py_ssize_t n = m.shape[0], a, b
    for a in range(n):
        for b in range(a + 1, n):
            if m[a, b] > 0:
                pa[0] = a
                pb[0] = b
                return


cdef inline void _last(const int64_t[:, ::1] m, Py_ssize_t* pa, Py_ssize_t* pb):
    cdef Py_ssize_t n = m.shape[0], a, b
    for a in range(n - 2, -1, -1):
        for b in range(n - 1, a, -1):
            if m[a, b] > 0:
                pa[0] = a
                pb[0] = b
                return


cdef inline void _kth(const int64_t[:, ::1] m, Py_ssize_t k, Py_ssize_t* pa, Py_ssize_t* pb):
    cdef Py_ssize_t n = m.shape[0], a, b
    for a in range(n):
        for b in range(a + 1, n):
            if m[a, b] > 0:
                if k == 0:
                    pa[0] = a
                    pb[0] = b
                    return
                k -= 1


cdef int _select(const int64_t[:, ::1] m, int strategy, object draw, Py_ssize_t count,
                 Py_ssize_t* pa, Py_ssize_t* pb) except -1:
    pa[0] = -1
    pb[0] = -1
    if strategy == 0:
        _first(m, pa, pb)
    elif strategy == 1:
        _last(m, pa, pb)
    elif strategy == 2:
        if draw(2) == 0:
            _first(m, pa, pb)
        else:
            _last(m, pa, pb)
    elif strategy == 3:
        _kth(m, <Py_ssize_t>draw(count), pa, pb)
    else:
        raise ValueError(f"unknown strategy {strategy}")
    if pa[0] < 0:
        raise AssertionError("no dotted edge")
    return 0


def select_pair(const int64_t[:, ::1] m, int strategy, draw, Py_ssize_t count):
    cdef Py_ssize_t a, b
    _select(m, strategy, draw, count, &a, &b)
    return a, b


def pair_loop(int64_t[:, ::1] m, int strategy, Py_ssize_t bound, draw, bint guard):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t count = count_dotted(m)
    cdef Py_ssize_t done = 0, a, b
    cdef bint tripped = False
    cdef int64_t[::1] scratch = np.empty(n, dtype=np.int64)
    steps = []
    while count > 0:
        if done >= bound:
            return steps, STOP_BOUND
        _select(m, strategy, draw, count, &a, &b)
        count += _inflate_pair(m, a, b, guard, scratch, &tripped)
        done += 1
        steps.append((a, b))
        if tripped:
            return steps, STOP_GUARD
    return steps, STOP_DONE


def root_loop(int64_t[:, ::1] m, bint early_exit, bint guard):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t count = count_dotted(m)
    cdef Py_ssize_t size = 1, a, b, fa, fb
    cdef bint tripped = False
    cdef int64_t[::1] scratch = np.empty(n, dtype=np.int64)
    in_s_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] in_s = in_s_arr
    in_s[0] = 1
    steps = []
    while size < n:
        if early_exit and count == 0:
            return steps, STOP_EARLY
        fa = -1
        fb = -1
        for a in range(n):
            if not in_s[a]:
                continue
            for b in range(n):
                if not in_s[b] and m[a, b] != 0:
                    fa = a
                    fb = b
                    break
            if fa >= 0:
                break
        if fa < 0:
            return steps, -1
        if m[fa, fb] < 0:
            count += _inflate_vertex(m, fb)
            steps.append((fb, -1))
        count += _inflate_pair(m, fb, fa, guard, scratch, &tripped)
        steps.append((fb, fa))
        in_s[fb] = 1
        size += 1
        if tripped:
            return steps, STOP_GUARD
    return steps, STOP_DONE
