"""Metrics: version difference, existence cascade, rollouts, audit."""

import random
from datetime import date

import pytest

from bundlescope.errors import EmptyDetection
from bundlescope.metrics import (Advisory, Observation, RolloutRow, audit,
                                 difference_existence, rollout_fractions,
                                 rollout_times, version_difference)
from bundlescope.semver import parse_semver as v


class TestVersionDifference:
    def test_exact_match(self):
        assert version_difference(v("1.2.3"), {v("1.2.3")}).as_tuple() == \
            (0, 0, 0)

    def test_lexicographic_minimum(self):
        delta = version_difference(v("1.2.3"), {v("1.2.1"), v("2.0.0")})
        assert delta.as_tuple() == (0, 0, 2)

    def test_componentwise_absolute(self):
        assert version_difference(v("1.4.0"), {v("1.2.3")}).as_tuple() == \
            (0, 2, 3)

    def test_core_versions_compared(self):
        assert version_difference(v("1.2.3-rc1"),
                                  {v("1.2.3")}).as_tuple() == (0, 0, 0)

    def test_empty_detection(self):
        with pytest.raises(EmptyDetection):
            version_difference(v("1.0.0"), set())


class TestDifferenceExistence:
    def test_equal(self):
        t = difference_existence(v("1.2.3"), {v("1.2.3")})
        assert (t.major_err, t.minor_err, t.patch_err) == \
            (False, False, False)

    def test_major_cascades(self):
        t = difference_existence(v("1.2.3"), {v("2.2.3")})
        assert (t.major_err, t.minor_err, t.patch_err) == \
            (True, True, True)

    def test_patch_only(self):
        t = difference_existence(v("1.2.3"), {v("1.2.9")})
        assert (t.major_err, t.minor_err, t.patch_err) == \
            (False, False, True)

    def test_cascade_invariant_random(self):
        rng = random.Random(13)
        for _ in range(200):
            correct = v(f"{rng.randrange(3)}.{rng.randrange(4)}."
                        f"{rng.randrange(5)}")
            detected = {v(f"{rng.randrange(3)}.{rng.randrange(4)}."
                          f"{rng.randrange(5)}")
                        for _ in range(rng.randrange(1, 4))}
            t = difference_existence(correct, detected)
            assert (not t.major_err) or t.minor_err
            assert (not t.minor_err) or t.patch_err


class TestRollout:
    RELEASES = {"pkg": {"1.0.0": "2023-12-01", "1.1.0": "2024-01-01",
                        "1.2.0": "2024-02-01"}}

    def _obs(self, items, domain="d", package="pkg"):
        return [Observation(domain, package, v(ver),
                            date.fromisoformat(day))
                for ver, day in items]

    def test_basic_upgrade(self):
        result = rollout_times(
            self._obs([("1.0.0", "2023-12-15"), ("1.1.0", "2024-01-05")]),
            self.RELEASES)
        assert [(r.version, r.rollout_days) for r in result.rows] == \
            [(v("1.1.0"), 4)]

    def test_no_change_no_rows(self):
        result = rollout_times(
            self._obs([("1.0.0", "2024-01-01"), ("1.0.0", "2024-02-01")]),
            self.RELEASES)
        assert result.rows == []

    def test_downgrade_diagnostic(self):
        result = rollout_times(
            self._obs([("1.1.0", "2024-01-05"), ("1.0.0", "2024-01-10")]),
            self.RELEASES)
        assert result.rows == []
        assert result.downgrades == 1

    def test_missing_release_date_skipped(self):
        result = rollout_times(
            self._obs([("1.0.0", "2024-01-01"), ("1.9.9", "2024-03-01")]),
            self.RELEASES)
        assert result.rows == []
        assert result.missing_release_dates == 1

    def test_negative_clamped(self):
        result = rollout_times(
            self._obs([("1.0.0", "2023-12-15"), ("1.1.0", "2023-12-20")]),
            self.RELEASES)
        assert result.rows[0].rollout_days == 0
        assert result.clamped == 1

    def test_multi_step_series(self):
        result = rollout_times(
            self._obs([("1.0.0", "2023-12-10"), ("1.1.0", "2024-01-08"),
                       ("1.2.0", "2024-02-15")]),
            self.RELEASES)
        assert [(str(r.version), r.rollout_days) for r in result.rows] == \
            [("1.1.0", 7), ("1.2.0", 14)]


class TestRolloutFractions:
    def _row(self, domain, package, days):
        return RolloutRow(domain, package, v("1.0.0"), days)

    def test_single_timely_row(self):
        out = rollout_fractions([self._row("d", "p", 5)])
        for horizon in (7, 28, 112):
            assert out[horizon] == {"packages": 1.0, "instances": 1.0,
                                    "domains": 1.0}

    def test_empty_input(self):
        out = rollout_fractions([])
        assert all(f == {"packages": 0.0, "instances": 0.0, "domains": 0.0}
                   for f in out.values())

    def test_hand_built_scenario(self):
        # 10 rows; rollouts: 3, 5, 10, 20, 30, 40, 100, 120, 6, 50
        rows = [
            self._row("d1", "a", 3), self._row("d1", "a", 5),
            self._row("d1", "b", 10), self._row("d2", "b", 20),
            self._row("d2", "c", 30), self._row("d3", "c", 40),
            self._row("d3", "d", 100), self._row("d4", "d", 120),
            self._row("d4", "e", 6), self._row("d5", "e", 50),
        ]
        out = rollout_fractions(rows)
        # horizon 7: rows {3,5,6}; packages {a,e}/5; domains {d1,d4}/5
        assert out[7] == {"packages": 2 / 5, "instances": 3 / 10,
                          "domains": 2 / 5}
        # horizon 28: rows {3,5,10,20,6}; packages {a,b,e}; domains {d1,d2,d4}
        assert out[28] == {"packages": 3 / 5, "instances": 5 / 10,
                           "domains": 3 / 5}
        # horizon 112: all but 120
        assert out[112] == {"packages": 5 / 5, "instances": 9 / 10,
                            "domains": 5 / 5}

    def test_monotone_in_horizon(self):
        rng = random.Random(4)
        rows = [self._row(f"d{rng.randrange(5)}", f"p{rng.randrange(5)}",
                          rng.randrange(0, 200)) for _ in range(50)]
        out = rollout_fractions(rows, horizons=(7, 28, 112))
        for key in ("packages", "instances", "domains"):
            assert out[7][key] <= out[28][key] <= out[112][key]


class TestAudit:
    ADVISORIES = [
        Advisory.from_dict({"id": "A1", "package": "pkg",
                            "range": "<1.0.1", "severity": "high"}),
        Advisory.from_dict({"id": "A2", "package": "pkg",
                            "range": ">=2.0.0 <2.3.5"}),
    ]

    def test_simple_vulnerable(self):
        result = audit([{"domain": "d", "package": "pkg",
                         "versions": ["1.0.0"]}], self.ADVISORIES)
        assert result.mean_vulnerable_per_domain == 1.0
        assert result.package_tallies == {"pkg": 1}

    def test_empty_advisories(self):
        result = audit([{"domain": "d", "package": "pkg",
                         "versions": ["1.0.0"]}], [])
        assert result.mean_vulnerable_per_domain == 0.0
        assert result.package_tallies == {}

    def test_any_vs_all_mode(self):
        detections = [{"domain": "d", "package": "pkg",
                       "versions": ["2.3.4", "2.3.5"]}]
        any_result = audit(detections, self.ADVISORIES, mode="any")
        all_result = audit(detections, self.ADVISORIES, mode="all")
        assert any_result.package_tallies == {"pkg": 1}
        assert all_result.package_tallies == {}

    def test_max_range_width_discards(self):
        detections = [{"domain": "d", "package": "pkg",
                       "versions": ["1.0.0", "0.9.0", "0.8.0", "0.7.0"]}]
        kept = audit(detections, self.ADVISORIES)
        capped = audit(detections, self.ADVISORIES, max_range_width=3)
        assert kept.total_detections == 1
        assert capped.total_detections == 0

    def test_permutation_invariance(self):
        detections = [{"domain": f"d{i % 3}", "package": "pkg",
                       "versions": [f"1.0.{i}"]} for i in range(6)]
        forward = audit(detections, self.ADVISORIES)
        backward = audit(detections[::-1], self.ADVISORIES[::-1])
        assert forward.domain_counts == backward.domain_counts
        assert forward.mean_vulnerable_per_domain == \
            backward.mean_vulnerable_per_domain

    def test_mean_over_domains(self):
        detections = [
            {"domain": "d1", "package": "pkg", "versions": ["1.0.0"]},
            {"domain": "d2", "package": "pkg", "versions": ["1.0.1"]},
        ]
        result = audit(detections, self.ADVISORIES)
        assert result.domain_counts == {"d1": 1, "d2": 0}
        assert result.mean_vulnerable_per_domain == 0.5
