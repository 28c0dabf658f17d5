"""Evaluation metrics over detection results and deployment observations.

Covers version difference and difference existence against ground
truth, rollout times of observed package upgrades, and vulnerability
prevalence against an offline advisory file.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import date

from bundlescope.errors import EmptyDetection
from bundlescope.semver import SemVer, VersionRange, parse_range, parse_semver

log = logging.getLogger(__name__)

DEFAULT_HORIZONS = (7, 28, 112)  # days: ~1 week, 4 weeks, 16 weeks


@dataclass(frozen=True)
class VersionDelta:
    d_major: int
    d_minor: int
    d_patch: int

    def as_tuple(self):
        return (self.d_major, self.d_minor, self.d_patch)


@dataclass(frozen=True)
class ExistenceTriple:
    major_err: bool
    minor_err: bool
    patch_err: bool


@dataclass(frozen=True)
class Observation:
    domain: str
    package: str
    version: SemVer
    observed_at: date


@dataclass(frozen=True)
class Advisory:
    id: str
    package: str
    affected_range: VersionRange
    severity: str = "unknown"

    @classmethod
    def from_dict(cls, data: dict) -> "Advisory":
        return cls(id=str(data["id"]), package=data["package"],
                   affected_range=parse_range(data["range"]),
                   severity=data.get("severity", "unknown"))


def version_difference(correct: SemVer, detected) -> VersionDelta:
    """Smallest component-wise absolute difference over the detected set,
    compared lexicographically on (major, minor, patch)."""
    detected = list(detected)
    if not detected:
        raise EmptyDetection("no detected versions")
    correct = correct.core()
    best = None
    for candidate in detected:
        c = candidate.core()
        delta = (abs(correct.major - c.major),
                 abs(correct.minor - c.minor),
                 abs(correct.patch - c.patch))
        if best is None or delta < best:
            best = delta
    return VersionDelta(*best)


def difference_existence(correct: SemVer, detected) -> ExistenceTriple:
    """Per-component error booleans with the major>minor>patch cascade."""
    delta = version_difference(correct, detected)
    major_err = delta.d_major > 0
    minor_err = major_err or delta.d_minor > 0
    patch_err = minor_err or delta.d_patch > 0
    return ExistenceTriple(major_err, minor_err, patch_err)


@dataclass(frozen=True)
class RolloutRow:
    domain: str
    package: str
    version: SemVer
    rollout_days: int


@dataclass
class RolloutResult:
    rows: list
    downgrades: int = 0
    missing_release_dates: int = 0
    clamped: int = 0


def rollout_times(observations, releases: dict) -> RolloutResult:
    """Rollout rows for every version upgrade in the observation series.

    `releases` maps package name -> {version string: release date}.
    An upgrade is a strictly greater version than the previously
    observed one for the same (domain, package). Rollout is the number
    of days between the release date and the first observation of the
    new version, clamped at zero.
    """
    series: dict = {}
    for obs in sorted(observations, key=lambda o: (o.domain, o.package,
                                                   o.observed_at)):
        series.setdefault((obs.domain, obs.package), []).append(obs)
    result = RolloutResult(rows=[])
    for (domain, package), items in series.items():
        current = items[0].version
        seen_first: dict = {items[0].version: items[0].observed_at}
        for obs in items[1:]:
            seen_first.setdefault(obs.version, obs.observed_at)
            if obs.version == current:
                continue
            if obs.version < current:
                result.downgrades += 1
                current = obs.version
                continue
            release_info = releases.get(package, {})
            released = release_info.get(str(obs.version))
            if released is None:
                result.missing_release_dates += 1
                log.warning("no release date for %s@%s", package,
                            obs.version)
                current = obs.version
                continue
            if isinstance(released, str):
                released = date.fromisoformat(released)
            days = (seen_first[obs.version] - released).days
            if days < 0:
                result.clamped += 1
                log.warning("observation of %s@%s predates release date",
                            package, obs.version)
                days = 0
            result.rows.append(RolloutRow(domain, package, obs.version,
                                          days))
            current = obs.version
    return result


def rollout_fractions(rows, horizons=DEFAULT_HORIZONS) -> dict:
    """Cumulative fractions of packages / package instances / domains
    with at least one rollout within each horizon (instances count every
    row)."""
    rows = list(rows)
    out: dict = {}
    packages = {r.package for r in rows}
    domains = {r.domain for r in rows}
    for horizon in sorted(horizons):
        if not rows:
            out[horizon] = {"packages": 0.0, "instances": 0.0,
                            "domains": 0.0}
            continue
        timely = [r for r in rows if r.rollout_days <= horizon]
        out[horizon] = {
            "packages": len({r.package for r in timely}) / len(packages),
            "instances": len(timely) / len(rows),
            "domains": len({r.domain for r in timely}) / len(domains),
        }
    return out


@dataclass
class AuditResult:
    mean_vulnerable_per_domain: float
    domain_counts: dict  # domain -> vulnerable package count
    package_tallies: dict  # package -> vulnerable detection count
    total_detections: int = 0


def audit(detections, advisories, mode: str = "any",
          max_range_width: int | None = None) -> AuditResult:
    """Vulnerability prevalence over detection results.

    `detections` is an iterable of dicts with keys domain, package and
    versions (list of SemVer or version strings). A detection is
    vulnerable iff any (mode="any") or all (mode="all") of its retained
    versions satisfy some advisory range for that package. Detections
    whose version range is wider than `max_range_width` are discarded.
    """
    if mode not in ("any", "all"):
        raise ValueError("mode must be 'any' or 'all'")
    by_package: dict = {}
    for adv in advisories:
        by_package.setdefault(adv.package, []).append(adv)
    domain_counts: dict = {}
    package_tallies: dict = {}
    total = 0
    for det in detections:
        versions = [v if isinstance(v, SemVer) else parse_semver(v)
                    for v in det["versions"]]
        if not versions:
            continue
        if max_range_width is not None and len(versions) > max_range_width:
            continue
        domain = det.get("domain", "")
        domain_counts.setdefault(domain, 0)
        total += 1
        relevant = by_package.get(det["package"], [])
        if not relevant:
            continue
        flags = [any(adv.affected_range.matches(v) for adv in relevant)
                 for v in versions]
        vulnerable = any(flags) if mode == "any" else all(flags)
        if vulnerable:
            domain_counts[domain] += 1
            package_tallies[det["package"]] = \
                package_tallies.get(det["package"], 0) + 1
    mean = (sum(domain_counts.values()) / len(domain_counts)
            if domain_counts else 0.0)
    return AuditResult(mean_vulnerable_per_domain=mean,
                       domain_counts=domain_counts,
                       package_tallies=package_tallies,
                       total_detections=total)
