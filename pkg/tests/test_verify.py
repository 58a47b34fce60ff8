"""The conjecture checker, certificates, enumeration, and sweeps."""

import math
import random

import pytest

from detvol.families import Pretzel, ThreeBraid, TwoBridge, Weaving4, pretzel_det, to_diagram
from detvol.hypvol import GAMMA, TWO_PI, V4, XI, ZETA
from detvol.verify import (
    check,
    enumerate_pretzels,
    high_twist_threshold,
    pretzel_detected_twists,
    pretzel_face_vector,
    reports_to_csv,
    reports_to_json,
    stoimenow_certificate,
    sweep,
    sweep_specs,
)


class TestCheck:
    def test_case_one_example(self):
        r = check(TwoBridge((1, 2, 1)))
        assert r.verdict == "holds"
        assert r.det == 4
        assert r.best_bound <= TWO_PI * math.log(2) + 1e-9

    def test_vacuous(self):
        r = check(TwoBridge((1, 1, 1)))
        assert r.verdict == "vacuous"
        assert r.hyperbolic_status == "known_nonhyperbolic"
        assert r.best_bound is None and r.margin is None

    def test_all_ones_two_bridge(self):
        r = check(TwoBridge((1, 1, 1, 1, 1)))
        assert r.verdict == "holds"
        assert r.det == 8

    def test_pretzel(self):
        r = check(Pretzel((2, 3, 7)))
        assert r.verdict == "holds"
        assert r.det == 41
        assert r.bound("montesinos") is not None

    def test_weaving_uses_exact_bound(self):
        for n in (4, 6, 10):
            r = check(Weaving4(n))
            assert r.verdict == "holds"
            bound = r.bound("adams_exact")
            assert math.exp(bound / TWO_PI) <= 3.418677234 ** n
            assert r.two_pi_log_det > bound

    def test_best_bound_is_min(self):
        r = check(ThreeBraid(((2, 3), (1, 2))))
        assert r.best_bound == min(v for _, v in r.bounds)
        assert all(r.best_bound <= v + 1e-12 for _, v in r.bounds)

    def test_margin_definition(self):
        r = check(TwoBridge((2, 3, 4)))
        assert abs(r.margin - (r.two_pi_log_det - r.best_bound)) < 1e-12

    def test_oracle_cap_runs(self):
        r = check(TwoBridge((2, 2, 2)), oracle_cap=10)
        assert r.verdict == "holds"


class TestThresholds:
    def test_t1(self):
        assert abs(high_twist_threshold(1, "general").c_threshold) < 1e-12

    def test_t2(self):
        thr = high_twist_threshold(2, "general").c_threshold
        assert abs(thr - (2 + XI.value - 2 * GAMMA.value)) < 1e-12
        assert abs(thr - 4.18) < 0.01

    def test_montesinos_13(self):
        thr = high_twist_threshold(13, "montesinos").c_threshold
        expect = 13 + ZETA.value ** 13 - 2 * GAMMA.value ** 12
        assert abs(thr - expect) < 1e-6
        assert 3.8e6 < thr < 3.95e6

    def test_rejects(self):
        with pytest.raises(ValueError):
            high_twist_threshold(0)
        with pytest.raises(ValueError):
            high_twist_threshold(2, "nonsense")


class TestStoimenowCertificate:
    def test_t1_always(self):
        for c in (1, 2, 10, 1000):
            assert stoimenow_certificate(1, c, "general")

    def test_t5_c5_false(self):
        assert not stoimenow_certificate(5, 5, "general")

    def test_at_threshold(self):
        rng = random.Random(41)
        for _ in range(200):
            t = rng.randint(1, 20)
            thr = high_twist_threshold(t, "general").c_threshold
            c = max(t, math.ceil(thr)) + rng.randint(0, 50)
            assert stoimenow_certificate(t, c, "general")
            # the inequality chain behind it
            assert 10 * V4.value * (t - 1) <= TWO_PI * math.log(
                2 * GAMMA.value ** (t - 1) + c - t
            )

    def test_rejects(self):
        with pytest.raises(ValueError):
            stoimenow_certificate(0, 1)
        with pytest.raises(ValueError):
            stoimenow_certificate(3, 2)


class TestPretzelClosedForms:
    def test_face_vector_matches_diagram(self):
        rng = random.Random(5)
        arrangements = [
            (1, 1, 2), (2, 3, 7), (1, 2, 4, 3, 4), (2, 2, 2), (1, 1, 1, 5),
            (1, 2, 1, 2), (3, 1, 4, 1, 5),
        ]
        for _ in range(20):
            n = rng.randint(3, 6)
            arrangements.append(tuple(rng.randint(1, 5) for _ in range(n)))
        for arr in arrangements:
            d = to_diagram(Pretzel(arr))
            assert pretzel_face_vector(arr) == d.faces, arr
            assert pretzel_detected_twists(arr) == d.twist_count, arr

    def test_all_ones_detection(self):
        assert pretzel_detected_twists((1, 1, 1)) == 1
        assert pretzel_detected_twists((1, 1, 1, 1, 1)) == 1


class TestEnumerate:
    def test_rejects_small(self):
        with pytest.raises(ValueError):
            enumerate_pretzels(2)

    def test_t3(self):
        report = enumerate_pretzels(3)
        assert not report.violations
        assert report.checked > 0
        assert report.certified_monotone > 0
        assert report.vacuous >= 1  # the all-ones pretzel

    def test_frontier_soundness(self):
        report = enumerate_pretzels(4)
        assert not report.violations
        rng = random.Random(17)
        sample = rng.sample(report.frontier, min(20, len(report.frontier)))
        for corner in sample:
            bumped = tuple(x + rng.randint(0, 3) for x in corner)
            r = check(Pretzel(bumped), oracle_cap=0)
            assert r.verdict == "holds", (corner, bumped)

    def test_stoimenow_floor_on_checked(self):
        # det >= 2 gamma^(t-1) for every hyperbolic pretzel that gets checked
        report = enumerate_pretzels(4)
        for arr in report.frontier[:50]:
            t = pretzel_detected_twists(arr)
            assert pretzel_det(arr) >= 2 * GAMMA.value ** (t - 1) - 1e-9


class TestSweep:
    def test_spec_order_deterministic(self):
        a = sweep_specs("R", 6)
        b = sweep_specs("R", 6)
        assert a == b
        assert len(a) == 2 ** 6 - 1

    def test_families(self):
        assert len(sweep_specs("W", 12)) == 4
        assert all(len(s.a) >= 3 for s in sweep_specs("P", 6))
        assert all(len(s.flat) % 2 == 0 for s in sweep_specs("B", 6))

    def test_small_sweep_holds(self):
        for r in sweep("R", 7, oracle_cap=20):
            if r.hyperbolic_status == "assumed_hyperbolic":
                assert r.verdict == "holds", r.spec
                assert r.margin > 0

    def test_worker_pool_matches_serial(self):
        serial = sweep("R", 8, oracle_cap=0, workers=1)
        parallel = sweep("R", 8, oracle_cap=0, workers=2)
        assert [str(r.spec) for r in serial] == [str(r.spec) for r in parallel]
        assert [r.det for r in serial] == [r.det for r in parallel]

    def test_stoimenow_consistency(self):
        for family, cap in (("B", 8), ("R", 8), ("P", 8)):
            for r in sweep(family, cap, oracle_cap=0):
                if r.hyperbolic_status == "assumed_hyperbolic":
                    assert r.det >= 2 * GAMMA.value ** (r.twist_count - 1) - 1e-9

    def test_empty_result_is_empty_output(self):
        specs = sweep_specs("W", 2)  # no weaving index fits in 2 crossings
        assert specs == []
        assert reports_to_csv([]).strip().splitlines() == [
            ",".join(
                (
                    "spec,family,t,c,det,two_pi_log_det,adams_exact,adams_log,"
                    "lackenby,montesinos,best_bound,margin,hyperbolic_status,verdict"
                ).split(",")
            )
        ]


class TestSerialization:
    def test_csv(self):
        reports = sweep("R", 4, oracle_cap=10)
        text = reports_to_csv(reports)
        lines = text.strip().splitlines()
        assert lines[0].startswith("spec,family,t,c,det,")
        assert len(lines) == len(reports) + 1

    def test_json(self):
        import json

        reports = sweep("W", 9, oracle_cap=10)
        rows = json.loads(reports_to_json(reports))
        assert len(rows) == 3
        byspec = {r["spec"]: r for r in rows}
        assert byspec["W(1)"]["verdict"] == "vacuous"
        assert byspec["W(3)"]["det"] == "75"
        assert byspec["W(3)"]["verdict"] == "holds"

    def test_det_is_exact_string(self):
        r = check(Weaving4(30), oracle_cap=0)
        row = reports_to_json([r])
        assert str(r.det) in row
