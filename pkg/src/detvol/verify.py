"""The conjecture checker: compare 2*pi*log(det) against volume upper bounds.

A link "passes" when the best applicable volume upper bound is strictly
smaller than 2*pi*log(det).  That implies vol < 2*pi*log(det) whenever the
link is hyperbolic; it never proves the conjecture false.  Verdicts:

* ``holds``             -- best bound < 2*pi*log(det), link assumed hyperbolic
* ``vacuous``           -- the member is a known non-hyperbolic link
* ``bound_inconclusive``-- none of the bounds certifies the inequality

The pretzel enumeration reproduces the finite computer check: for a fixed
number of twist regions t the Montesinos bound 2*v8*t is constant while the
determinant grows monotonically in every twist count, so only the finitely
many tuples below the passing frontier need an explicit diagram check.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field

from . import families as fam
from .families import FamilySpec, Pretzel, ThreeBraid, TwoBridge, Weaving4
from .hypvol import (
    GAMMA,
    TWO_PI,
    V4,
    V8,
    ZETA,
    XI,
    FaceVector,
    adams_bound_exact,
    adams_bound_log,
    lackenby_bound,
    montesinos_bound,
)
from .multigraph import spanning_tree_count

DEFAULT_ORACLE_CAP = 40

BOUND_NAMES = ("adams_exact", "adams_log", "lackenby", "montesinos", "family_specific")


@dataclass
class BoundReport:
    spec: FamilySpec
    det: int
    two_pi_log_det: float
    bounds: list[tuple[str, float]]
    best_bound: float | None
    hyperbolic_status: str  # "known_nonhyperbolic" | "assumed_hyperbolic"
    verdict: str  # "holds" | "bound_inconclusive" | "vacuous"
    margin: float | None
    twist_count: int
    crossing_count: int
    reason: str = ""

    def bound(self, name: str) -> float | None:
        for n, v in self.bounds:
            if n == name:
                return v
        return None


def _verdict(margin: float | None, nonhyp: bool) -> str:
    if nonhyp:
        return "vacuous"
    if margin is not None and margin > 0.0:
        return "holds"
    return "bound_inconclusive"


def check(spec: FamilySpec, oracle_cap: int = DEFAULT_ORACLE_CAP) -> BoundReport:
    """Full report for one family member.

    The determinant comes from the family closed form and, when the crossing
    number is at most ``oracle_cap``, is cross-checked against matrix-tree
    counts on both checkerboard graphs of the constructed diagram.
    """
    d = fam.det(spec)
    c = fam.crossing_count(spec)
    nonhyp, reason = fam.is_known_nonhyperbolic(spec)
    two_pi_log_det = TWO_PI * math.log(d) if d >= 1 else float("-inf")

    if nonhyp:
        return BoundReport(
            spec=spec,
            det=d,
            two_pi_log_det=two_pi_log_det,
            bounds=[],
            best_bound=None,
            hyperbolic_status="known_nonhyperbolic",
            verdict="vacuous",
            margin=None,
            twist_count=fam.structural_twist_count(spec),
            crossing_count=c,
            reason=reason,
        )

    diag = fam.to_diagram(spec)
    if c <= oracle_cap:
        t_sh = spanning_tree_count(diag.shaded)
        t_wh = spanning_tree_count(diag.white)
        if not (t_sh == t_wh == d):
            raise RuntimeError(
                f"determinant mismatch for {spec}: closed form {d}, "
                f"matrix-tree {t_sh}/{t_wh}"
            )
    bounds = _bounds_for(spec, diag.faces, diag.twist_count)
    best = min(v for _, v in bounds)
    margin = two_pi_log_det - best
    return BoundReport(
        spec=spec,
        det=d,
        two_pi_log_det=two_pi_log_det,
        bounds=bounds,
        best_bound=best,
        hyperbolic_status="assumed_hyperbolic",
        verdict=_verdict(margin, False),
        margin=margin,
        twist_count=diag.twist_count,
        crossing_count=c,
    )


def _bounds_for(spec: FamilySpec, faces: FaceVector, t: int) -> list[tuple[str, float]]:
    bounds: list[tuple[str, float]] = []
    r, s = faces.two_largest()
    bounds.append(("adams_exact", adams_bound_exact(faces, r, s).value))
    bounds.append(("adams_log", adams_bound_log(faces, r, s).value))
    bounds.append(("lackenby", lackenby_bound(t).value))
    if isinstance(spec, Pretzel):
        bounds.append(("montesinos", montesinos_bound(t).value))
    if isinstance(spec, TwoBridge) and len(spec.a) >= 2:
        bounds.append(("family_specific", fam.twobridge_vol_upper(spec.a).value))
    elif isinstance(spec, ThreeBraid):
        v = fam.v_function(spec.flat)
        bounds.append(("family_specific", TWO_PI * (math.log(v.numerator) - math.log(v.denominator))))
    return bounds


# ---------------------------------------------------------------------------
# high-twist certificates


@dataclass(frozen=True)
class ThresholdResult:
    t: int
    c_threshold: float
    rule: str


def high_twist_threshold(t: int, rule: str = "general") -> ThresholdResult:
    """Crossing-number threshold beyond which the conjecture is automatic.

    general:    c >= t + xi^(t-1) - 2*gamma^(t-1)
    montesinos: c >= t + zeta^t   - 2*gamma^(t-1)
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if rule == "general":
        thr = t + XI.value ** (t - 1) - 2.0 * GAMMA.value ** (t - 1)
    elif rule == "montesinos":
        thr = t + ZETA.value ** t - 2.0 * GAMMA.value ** (t - 1)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return ThresholdResult(t=t, c_threshold=thr, rule=rule)


def _rule_bound(t: int, rule: str) -> float:
    if rule == "general":
        return 10.0 * V4.value * (t - 1)
    if rule == "montesinos":
        return 2.0 * V8.value * t
    raise ValueError(f"unknown rule {rule!r}")


def stoimenow_certificate(t: int, c: int, rule: str = "general") -> bool:
    """True when the (t, c) data alone certifies the conjecture.

    Any alternating link with t twist regions and c crossings has
    det >= 2*gamma^(t-1) + c - t; if the rule's volume bound is below
    2*pi*log of that, no diagram needs to be examined.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if c < t:
        raise ValueError("c must be >= t")
    det_floor = 2.0 * GAMMA.value ** (t - 1) + c - t
    return _rule_bound(t, rule) < TWO_PI * math.log(det_floor)


# ---------------------------------------------------------------------------
# pretzel machinery in closed form (fast path for the enumeration)


def pretzel_face_vector(arrangement: tuple[int, ...]) -> FaceVector:
    """Faces of the standard pretzel diagram, computed without building it.

    One face of size a_i + a_{i+1} between consecutive twist regions
    (cyclically), one bigon per extra crossing inside a region, and the two
    n-gon faces through the middle.  Validated against the diagram route in
    the tests.
    """
    n = len(arrangement)
    if n < 3:
        raise ValueError("need at least 3 twist regions")
    counts: dict[int, int] = {}

    def add(size: int, mult: int = 1):
        counts[size] = counts.get(size, 0) + mult

    for i in range(n):
        add(arrangement[i] + arrangement[(i + 1) % n])
    bigons = sum(a - 1 for a in arrangement)
    if bigons:
        add(2, bigons)
    add(n, 2)
    return FaceVector(counts)


def pretzel_detected_twists(arrangement: tuple[int, ...]) -> int:
    """Twist regions of the standard pretzel diagram.

    Cyclically adjacent single-crossing regions share a bigon and merge.
    """
    n = len(arrangement)
    if n < 3:
        raise ValueError("need at least 3 twist regions")
    if all(a == 1 for a in arrangement):
        return 1
    merges = sum(
        1
        for i in range(n)
        if arrangement[i] == 1 and arrangement[(i + 1) % n] == 1
    )
    return n - merges


def _pretzel_arrangement_holds(
    arrangement: tuple[int, ...], rule: str = "montesinos"
) -> tuple[bool, float]:
    """(holds, margin) for one cyclic arrangement, using closed-form faces."""
    d = fam.pretzel_det(arrangement)
    two_pi_log_det = TWO_PI * math.log(d)
    t = pretzel_detected_twists(arrangement)
    c = sum(arrangement)
    if c >= t and stoimenow_certificate(t, c, rule):
        return True, two_pi_log_det - _rule_bound(t, rule)
    faces = pretzel_face_vector(arrangement)
    r, s = faces.two_largest()
    best = min(
        adams_bound_exact(faces, r, s).value,
        adams_bound_log(faces, r, s).value,
        lackenby_bound(t).value,
        montesinos_bound(t).value,
    )
    margin = two_pi_log_det - best
    return margin > 0.0, margin


def _unique_necklaces(sorted_tuple: tuple[int, ...]):
    """Distinct cyclic arrangements of a multiset, up to rotation and reflection."""
    n = len(sorted_tuple)

    def canon(t: tuple[int, ...]) -> tuple[int, ...]:
        best = None
        for seq in (t, t[::-1]):
            for k in range(n):
                rot = seq[k:] + seq[:k]
                if best is None or rot < best:
                    best = rot
        return best

    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []

    def perms(remaining: dict[int, int], cur: list[int]):
        if len(cur) == n:
            c = canon(tuple(cur))
            if c not in seen:
                seen.add(c)
                out.append(c)
            return
        for v in sorted(remaining):
            if remaining[v] == 0:
                continue
            remaining[v] -= 1
            cur.append(v)
            perms(remaining, cur)
            cur.pop()
            remaining[v] += 1

    counts: dict[int, int] = {}
    for v in sorted_tuple:
        counts[v] = counts.get(v, 0) + 1
    perms(counts, [])
    return out


@dataclass
class EnumerationReport:
    t_min: int
    t_max: int
    checked: int = 0
    certified_monotone: int = 0
    certified_stoimenow: int = 0
    vacuous: int = 0
    violations: list[tuple[tuple[int, ...], float]] = field(default_factory=list)
    frontier: list[tuple[int, ...]] = field(default_factory=list)
    oracle_checked: int = 0
    elapsed_seconds: float = 0.0

    def summary(self) -> str:
        return (
            f"pretzel enumeration t={self.t_min}..{self.t_max}: "
            f"{self.checked} checked, "
            f"{self.certified_monotone} monotone-frontier certificates, "
            f"{self.certified_stoimenow} twist-count certificates, "
            f"{self.vacuous} vacuous, {len(self.violations)} violations, "
            f"{self.elapsed_seconds:.1f}s"
        )


def enumerate_pretzels(
    t_max: int,
    t_min: int = 3,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    frontier_limit: int = 10000,
    rule: str = "montesinos",
) -> EnumerationReport:
    """Check every alternating pretzel with t_min..t_max twist regions.

    Tuples are canonicalized as sorted multisets (the determinant is
    symmetric); each multiset below the certified region is expanded into
    its distinct cyclic arrangements and every arrangement is checked.  Once
    2*pi*log(det) exceeds the rule's volume bound for n twist regions at a
    tuple, every coordinatewise-larger tuple passes too (the actual twist
    count never exceeds n), so only the minimal frontier is visited.
    """
    if t_max < 3:
        raise ValueError("t_max must be >= 3 (smaller pretzels are 2-bridge)")
    if t_min < 3 or t_min > t_max:
        raise ValueError("need 3 <= t_min <= t_max")
    report = EnumerationReport(t_min=t_min, t_max=t_max)
    start = time.perf_counter()

    for n in range(t_min, t_max + 1):
        log_threshold = _rule_bound(n, rule) / TWO_PI  # det above e^this certifies

        def certified(tup: tuple[int, ...]) -> bool:
            return math.log(fam.pretzel_det(tup)) > log_threshold + 1e-12

        def process(tup: tuple[int, ...]) -> None:
            # explicit check of a sorted multiset, all arrangements
            if all(x == 1 for x in tup):
                report.vacuous += 1
                return
            if oracle_cap and sum(tup) <= oracle_cap:
                diag = fam.to_diagram(Pretzel(tup))
                if spanning_tree_count(diag.shaded) != fam.pretzel_det(tup):
                    raise RuntimeError(f"determinant oracle mismatch at {tup}")
                report.oracle_checked += 1
            for arr in _unique_necklaces(tup):
                t_det = pretzel_detected_twists(arr)
                c = sum(arr)
                if c >= t_det and stoimenow_certificate(t_det, c, rule):
                    report.certified_stoimenow += 1
                    continue
                ok, margin = _pretzel_arrangement_holds(arr, rule)
                report.checked += 1
                if not ok:
                    report.violations.append((arr, margin))

        def rec(prefix: list[int], min_val: int) -> None:
            pos = len(prefix)
            v = min_val
            while True:
                corner = tuple(prefix) + (v,) * (n - pos)
                if certified(corner):
                    report.certified_monotone += 1
                    if len(report.frontier) < frontier_limit:
                        report.frontier.append(corner)
                    return
                if pos == n - 1:
                    process(tuple(prefix) + (v,))
                else:
                    prefix.append(v)
                    rec(prefix, v)
                    prefix.pop()
                v += 1

        rec([], 1)

    report.elapsed_seconds = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# sweeps


def _compositions_upto(total_max: int):
    """All nonempty tuples of positive ints with sum <= total_max, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(budget: int, cur: list[int]):
        if cur:
            out.append(tuple(cur))
        for x in range(1, budget + 1):
            cur.append(x)
            rec(budget - x, cur)
            cur.pop()

    rec(total_max, [])
    out.sort()
    return out


def sweep_specs(family: str, sum_max: int) -> list[FamilySpec]:
    """Deterministic (lexicographic) spec list for a family sweep.

    R: all twist sequences with crossing number <= sum_max.
    B: all pair sequences with crossing number <= sum_max.
    P: all twist tuples of length >= 3 with crossing number <= sum_max.
    W: all indices with crossing number 3n <= sum_max.
    """
    if sum_max < 1:
        raise ValueError("sum_max must be >= 1")
    if family == "R":
        return [TwoBridge(a) for a in _compositions_upto(sum_max)]
    if family == "B":
        return [
            ThreeBraid(tuple((a[2 * i], a[2 * i + 1]) for i in range(len(a) // 2)))
            for a in _compositions_upto(sum_max)
            if len(a) % 2 == 0
        ]
    if family == "P":
        return [Pretzel(a) for a in _compositions_upto(sum_max) if len(a) >= 3]
    if family == "W":
        return [Weaving4(n) for n in range(1, sum_max // 3 + 1)]
    raise ValueError(f"unknown family {family!r}; use R, B, P or W")


def _check_worker(args) -> BoundReport:
    spec, oracle_cap = args
    return check(spec, oracle_cap=oracle_cap)


def sweep(
    family: str,
    sum_max: int,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    workers: int = 1,
) -> list[BoundReport]:
    """One BoundReport per family member, in deterministic spec order."""
    specs = sweep_specs(family, sum_max)
    jobs = [(s, oracle_cap) for s in specs]
    if workers > 1 and len(jobs) > 64:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            return pool.map(_check_worker, jobs, chunksize=256)
    return [_check_worker(j) for j in jobs]


# ---------------------------------------------------------------------------
# serialization

CSV_COLUMNS = (
    "spec",
    "family",
    "t",
    "c",
    "det",
    "two_pi_log_det",
    "adams_exact",
    "adams_log",
    "lackenby",
    "montesinos",
    "best_bound",
    "margin",
    "hyperbolic_status",
    "verdict",
)


def report_row(r: BoundReport) -> dict[str, str]:
    def fmt(x: float | None) -> str:
        return "" if x is None else repr(x)

    return {
        "spec": str(r.spec),
        "family": fam.family_name(r.spec),
        "t": str(r.twist_count),
        "c": str(r.crossing_count),
        "det": str(r.det),
        "two_pi_log_det": fmt(r.two_pi_log_det),
        "adams_exact": fmt(r.bound("adams_exact")),
        "adams_log": fmt(r.bound("adams_log")),
        "lackenby": fmt(r.bound("lackenby")),
        "montesinos": fmt(r.bound("montesinos")),
        "best_bound": fmt(r.best_bound),
        "margin": fmt(r.margin),
        "hyperbolic_status": r.hyperbolic_status,
        "verdict": r.verdict,
    }


def reports_to_csv(reports: list[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(report_row(r))
    return buf.getvalue()


def reports_to_json(reports: list[BoundReport]) -> str:
    rows = []
    for r in reports:
        row: dict = report_row(r)
        for key in (
            "two_pi_log_det",
            "adams_exact",
            "adams_log",
            "lackenby",
            "montesinos",
            "best_bound",
            "margin",
        ):
            row[key] = float(row[key]) if row[key] else None
        row["t"] = int(row["t"])
        row["c"] = int(row["c"])
        rows.append(row)
    return json.dumps(rows, indent=2)
