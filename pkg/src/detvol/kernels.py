"""Integer determinant kernels.

The hot kernel of the whole package is the determinant of a Laplacian minor
(fraction-free Bareiss elimination, which keeps every intermediate value an
integer).  Two implementations are provided:

* ``bareiss_det_python`` -- arbitrary-precision, pure Python; always correct.
* ``detvol._detkernel.bareiss_det_i64`` -- compiled (Cython) int64 fast path,
  built optionally at install time.

``bareiss_det`` picks the compiled kernel when it was built and silently
falls back to the pure version whenever an intermediate value would not fit
in 64 bits, so results are always exact.  Set the environment variable
``DETVOL_PURE=1`` to skip the compiled kernel entirely.
"""

from __future__ import annotations

import os

try:
    from . import _detkernel

    HAVE_COMPILED = True
except ImportError:  # extension not built
    _detkernel = None
    HAVE_COMPILED = False

_FORCE_PURE = os.environ.get("DETVOL_PURE", "") not in ("", "0")


def bareiss_det_python(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix, arbitrary precision."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        mk = m[k]
        for i in range(k + 1, n):
            mi = m[i]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * piv - f * mk[j]) // prev
            mi[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def bareiss_det(rows: list[list[int]]) -> int:
    """Exact integer determinant; compiled fast path with pure fallback."""
    if HAVE_COMPILED and not _FORCE_PURE:
        try:
            return _detkernel.bareiss_det_i64(rows)
        except OverflowError:
            pass
    return bareiss_det_python(rows)
