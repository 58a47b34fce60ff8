"""Determinant kernels: pure Python versus the compiled fast path."""

import random

import pytest

from detvol.kernels import HAVE_COMPILED, bareiss_det, bareiss_det_python


def permanent_free_det(m):
    """Cofactor-expansion oracle for tiny matrices."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * permanent_free_det(minor)
    return total


def test_small_known():
    assert bareiss_det_python([[2, -1], [-1, 2]]) == 3
    assert bareiss_det_python([[0, 1], [1, 0]]) == -1
    assert bareiss_det_python([[1]]) == 1
    assert bareiss_det_python([]) == 1


def test_singular():
    assert bareiss_det_python([[1, 2], [2, 4]]) == 0
    assert bareiss_det_python([[0, 0], [0, 0]]) == 0


def test_matches_cofactor_oracle():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert bareiss_det_python(m) == permanent_free_det(m)


def test_rejects_ragged():
    with pytest.raises(ValueError):
        bareiss_det_python([[1, 2], [3]])


@pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")
def test_compiled_matches_pure():
    from detvol import _detkernel

    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 8)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert _detkernel.bareiss_det_i64(m) == bareiss_det_python(m)


@pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")
def test_compiled_overflow_raises_and_dispatch_falls_back():
    from detvol import _detkernel

    big = 2 ** 70
    m = [[big, 0], [0, big]]
    with pytest.raises(OverflowError):
        _detkernel.bareiss_det_i64(m)
    assert bareiss_det(m) == big * big

    # intermediate overflow: large entries that fit int64 individually
    n = 12
    rng = random.Random(5)
    m = [[rng.randint(10 ** 8, 10 ** 9) for _ in range(n)] for _ in range(n)]
    assert bareiss_det(m) == bareiss_det_python(m)
