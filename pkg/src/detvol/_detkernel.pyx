# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Fraction-free integer determinant kernel.

Bareiss elimination over C int64 with 128-bit intermediates.  Raises
OverflowError as soon as an entry leaves the int64 range; the caller is
expected to redo the computation with arbitrary-precision integers.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long int128 "__int128"


def bareiss_det_i64(list rows):
    """Exact determinant of a square integer matrix (entries must fit int64).

    `rows` is a list of n lists of n Python ints.  Returns a Python int.
    Raises OverflowError if any input entry or intermediate value does not
    fit in a signed 64-bit integer.
    """
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef long long *m = <long long *> malloc(n * n * sizeof(long long))
    if m is NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef object val
    cdef long long piv, prev, t
    cdef int128 num
    cdef int128 hi = <int128> 9223372036854775807LL
    cdef int128 lo = -hi
    cdef int sign = 1
    try:
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j in range(n):
                val = row[j]
                m[i * n + j] = val  # raises OverflowError on huge ints
        prev = 1
        for k in range(n - 1):
            if m[k * n + k] == 0:
                for i in range(k + 1, n):
                    if m[i * n + k] != 0:
                        for j in range(n):
                            t = m[k * n + j]
                            m[k * n + j] = m[i * n + j]
                            m[i * n + j] = t
                        sign = -sign
                        break
                else:
                    return 0
            piv = m[k * n + k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = <int128> m[i * n + j] * piv - <int128> m[i * n + k] * m[k * n + j]
                    num = num / prev  # exact by the Bareiss identity
                    if num > hi or num < lo:
                        raise OverflowError("entry exceeds int64 during elimination")
                    m[i * n + j] = <long long> num
                m[i * n + k] = 0
            prev = piv
        return sign * m[(n - 1) * n + (n - 1)]
    finally:
        free(m)
