"""Lobachevsky function, ideal bipyramid volumes, and volume bounds.

Everything here is plain float64 arithmetic, but the quadrature is accurate
to a few ulps, well inside the advertised 1e-12 absolute error:

* ``lobachevsky`` reduces its argument to [-pi/2, pi/2] (the function is odd
  and pi-periodic), splits off the logarithmic endpoint singularity in closed
  form, and integrates the remaining analytic piece with fixed Gauss-Legendre
  quadrature.
* ``bipyramid_volume(n)`` is the volume of the regular ideal n-bipyramid
  (n = 4 gives the regular ideal octahedron).
* The upper bounds for alternating links: the bipyramid face-sum bound and
  its logarithmic closed form, the twist-number bound 10*v4*(t-1), and the
  Montesinos bound 2*v8*t.  The determinant lower bound 2*gamma^(t-1) is the
  matching combinatorial statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

TWO_PI = 2.0 * math.pi

# Gauss-Legendre rule on [0, 1]; 64 analytic-integrand nodes give ~1e-16.
_GL_X, _GL_W = np.polynomial.legendre.leggauss(64)
_GL_X = (_GL_X + 1.0) / 2.0
_GL_W = _GL_W / 2.0


@dataclass(frozen=True)
class Real:
    """A float together with a claimed absolute error bound."""

    value: float
    abs_err: float = 1e-12

    def __float__(self):
        return self.value


def lobachevsky(theta: float) -> Real:
    """The Lobachevsky function: minus the integral of log|2 sin t| from 0.

    Odd and pi-periodic; absolute error at most 1e-12 (in practice a few
    ulps) for arguments of moderate size.
    """
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    return Real(_lob(theta), 1e-12)


def _lob(theta: float) -> float:
    r = math.remainder(theta, math.pi)  # exact reduction to [-pi/2, pi/2]
    if r < 0.0:
        return -_lob_core(-r)
    return _lob_core(r)


def _lob_core(x: float) -> float:
    # x in [0, pi/2]:  L(x) = x*(1 - log(2x)) - int_0^x log(sin t / t) dt
    if x <= 0.0:
        return 0.0
    t = x * _GL_X
    smooth = float(np.dot(_GL_W, np.log(np.sin(t) / t))) * x
    return x * (1.0 - math.log(2.0 * x)) - smooth


def bipyramid_volume(n: int) -> Real:
    """Volume of the regular ideal n-bipyramid; zero for the degenerate n=2."""
    if n < 2:
        raise ValueError("bipyramid needs n >= 2")
    if n == 2:
        return Real(0.0, 0.0)
    v = n * (_lob(TWO_PI / n) + 2.0 * _lob(math.pi * (n - 2) / (2.0 * n)))
    return Real(v, 1e-12)


class FaceVector:
    """Multiset of diagram face sizes: size -> multiplicity.

    A reduced alternating diagram has all faces of size >= 2; size-1 faces
    can appear for non-reduced inputs (a kinked unknot diagram) and are
    representable here, but the volume bounds below reject them.
    """

    __slots__ = ("counts",)

    def __init__(self, counts: dict[int, int]):
        self.counts = {}
        for size, mult in sorted(counts.items()):
            size = int(size)
            mult = int(mult)
            if size < 1:
                raise ValueError(f"face size {size} < 1")
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                self.counts[size] = mult

    @property
    def total_faces(self) -> int:
        return sum(self.counts.values())

    @property
    def total_sides(self) -> int:
        return sum(n * b for n, b in self.counts.items())

    def two_largest(self) -> tuple[int, int]:
        """The two largest face sizes available as distinct faces."""
        if self.total_faces < 2:
            raise ValueError("need at least two faces")
        sizes = sorted(self.counts)
        r = sizes[-1]
        s = r if self.counts[r] >= 2 else sizes[-2]
        return r, s

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.counts == {k: v for k, v in other.items() if v}
        return isinstance(other, FaceVector) and self.counts == other.counts

    def __repr__(self):
        return f"FaceVector({self.counts})"


def _check_two_faces(faces: FaceVector, r: int, s: int) -> None:
    counts = faces.counts
    if r not in counts or s not in counts:
        raise ValueError(f"face sizes {r}, {s} not both present")
    if r == s and counts[r] < 2:
        raise ValueError(f"only one face of size {r}; need two distinct faces")
    if min(counts) < 2:
        raise ValueError("diagram has a monogon face; not reduced")


def adams_bound_exact(faces: FaceVector, r: int, s: int) -> Real:
    """Bipyramid volume bound: sum b_n vol(B_n) minus two chosen faces r, s."""
    _check_two_faces(faces, r, s)
    total = math.fsum(
        b * bipyramid_volume(n).value for n, b in faces.counts.items()
    )
    v = total - bipyramid_volume(r).value - bipyramid_volume(s).value
    return Real(v, 1e-9)


def adams_bound_log(faces: FaceVector, r: int | None = None, s: int | None = None) -> Real:
    """Closed-form bound 2*pi*log(prod n^b_n / 2^m * 4/(r*s)).

    By default r, s are the two largest face sizes available as distinct
    faces, which minimizes the bound.
    """
    if r is None and s is None:
        r, s = faces.two_largest()
    elif r is None or s is None:
        raise ValueError("give both r and s, or neither")
    _check_two_faces(faces, r, s)
    m = faces.total_faces
    logp = math.fsum(b * math.log(n) for n, b in faces.counts.items())
    v = TWO_PI * (logp - m * math.log(2.0) + math.log(4.0) - math.log(r) - math.log(s))
    return Real(v, 1e-9)


def adams_bound_log_uncorrected(faces: FaceVector) -> Real:
    """Same product bound without removing any face: 2*pi*log(prod n^b_n / 2^m)."""
    if min(faces.counts) < 2:
        raise ValueError("diagram has a monogon face; not reduced")
    m = faces.total_faces
    logp = math.fsum(b * math.log(n) for n, b in faces.counts.items())
    return Real(TWO_PI * (logp - m * math.log(2.0)), 1e-9)


def lackenby_bound(t: int) -> Real:
    """Twist-number volume bound 10*v4*(t-1)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return Real(10.0 * V4.value * (t - 1), 1e-9)


def montesinos_bound(t: int) -> Real:
    """Montesinos-link volume bound 2*v8*t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return Real(2.0 * V8.value * t, 1e-9)


def stoimenow_lower_bound(t: int) -> Real:
    """Determinant lower bound 2*gamma^(t-1) for t twist regions."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return Real(2.0 * GAMMA.value ** (t - 1), 1e-9)


def _gamma_root() -> float:
    # unique positive root of f(x) = x^-5 + 2x^-4 + x^-3 - 1, decreasing on [1,2]
    def f(x: float) -> float:
        return x ** -5 + 2 * x ** -4 + x ** -3 - 1.0

    lo, hi = 1.0, 2.0
    while hi - lo > 1e-14:
        mid = (lo + hi) / 2.0
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass(frozen=True)
class Constants:
    """The five constants used by the volume/determinant comparisons."""

    v4: Real    # volume of the regular ideal tetrahedron
    v8: Real    # volume of the regular ideal octahedron (= vol B_4)
    gamma: Real  # root of x^-5 + 2x^-4 + x^-3 = 1
    xi: Real    # exp(5 v4 / pi)
    zeta: Real  # exp(v8 / pi)


@lru_cache(maxsize=1)
def constants() -> Constants:
    v4 = 3.0 * _lob(math.pi / 3.0)
    v8 = 8.0 * _lob(math.pi / 4.0)
    g = _gamma_root()
    return Constants(
        v4=Real(v4, 1e-12),
        v8=Real(v8, 1e-12),
        gamma=Real(g, 1e-12),
        xi=Real(math.exp(5.0 * v4 / math.pi), 1e-11),
        zeta=Real(math.exp(v8 / math.pi), 1e-11),
    )


V4 = constants().v4
V8 = constants().v8
GAMMA = constants().gamma
XI = constants().xi
ZETA = constants().zeta
