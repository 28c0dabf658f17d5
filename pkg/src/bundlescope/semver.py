"""Semantic version parsing, npm precedence ordering, and range matching.

Supports the npm range syntax subset used by advisory files: plain
comparators (=, <, <=, >, >=), hyphen ranges, caret and tilde ranges,
x-ranges, space-joined AND groups and ||-joined alternatives.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering

from bundlescope.errors import InvalidRange, InvalidVersion

_SEMVER_RE = re.compile(
    r"^v?(?P<major>0|[1-9]\d*)\.(?P<minor>0|[1-9]\d*)"
    r"\.(?P<patch>0|[1-9]\d*)"
    r"(?:-(?P<prerelease>[0-9A-Za-z.-]+))?"
    r"(?:\+(?P<build>[0-9A-Za-z.-]+))?$")

_PARTIAL_RE = re.compile(
    r"^v?(?P<major>\d+|x|X|\*)(?:\.(?P<minor>\d+|x|X|\*))?"
    r"(?:\.(?P<patch>\d+|x|X|\*))?"
    r"(?:-(?P<prerelease>[0-9A-Za-z.-]+))?"
    r"(?:\+(?P<build>[0-9A-Za-z.-]+))?$")


@total_ordering
@dataclass(frozen=True)
class SemVer:
    major: int
    minor: int
    patch: int
    prerelease: tuple = ()
    build: tuple = ()

    def core(self) -> "SemVer":
        """Version with prerelease/build identifiers stripped."""
        if not self.prerelease and not self.build:
            return self
        return SemVer(self.major, self.minor, self.patch)

    def _key(self):
        # a prerelease sorts before the corresponding release
        if self.prerelease:
            pre = tuple((0, int(p), "") if p.isdigit() else (1, 0, p)
                        for p in self.prerelease)
            pre_key = (0, pre)
        else:
            pre_key = (1, ())
        return (self.major, self.minor, self.patch, pre_key)

    def __lt__(self, other: "SemVer") -> bool:
        return self._key() < other._key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemVer):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self) -> str:
        text = f"{self.major}.{self.minor}.{self.patch}"
        if self.prerelease:
            text += "-" + ".".join(self.prerelease)
        if self.build:
            text += "+" + ".".join(self.build)
        return text


def parse_semver(text: str) -> SemVer:
    """Parse a full semantic version like 1.2.3-rc1+build5."""
    match = _SEMVER_RE.match(text.strip())
    if not match:
        raise InvalidVersion(f"not a semantic version: {text!r}")
    prerelease = tuple((match.group("prerelease") or "").split(".")) \
        if match.group("prerelease") else ()
    build = tuple(match.group("build").split(".")) \
        if match.group("build") else ()
    return SemVer(int(match.group("major")), int(match.group("minor")),
                  int(match.group("patch")), prerelease, build)


def core_version(version: SemVer) -> SemVer:
    return version.core()


# -- ranges -------------------------------------------------------------------


@dataclass(frozen=True)
class _Comparator:
    op: str  # one of < <= > >= =
    version: SemVer

    def matches(self, v: SemVer) -> bool:
        c = v.core() if not self.version.prerelease else v
        if self.op == "=":
            return c == self.version or v == self.version
        if self.op == "<":
            return c < self.version
        if self.op == "<=":
            return c <= self.version
        if self.op == ">":
            return c > self.version
        return c >= self.version


@dataclass(frozen=True)
class VersionRange:
    """Disjunction of conjunctions of comparators."""

    alternatives: tuple  # of tuple of _Comparator
    source: str = ""

    def matches(self, version: SemVer) -> bool:
        return any(all(c.matches(version) for c in group)
                   for group in self.alternatives)

    def __str__(self) -> str:
        return self.source


def _partial(text: str):
    match = _PARTIAL_RE.match(text)
    if not match:
        raise InvalidRange(f"bad version in range: {text!r}")

    def part(name):
        value = match.group(name)
        if value is None or value in ("x", "X", "*"):
            return None
        return int(value)

    prerelease = tuple(match.group("prerelease").split(".")) \
        if match.group("prerelease") else ()
    return part("major"), part("minor"), part("patch"), prerelease


def _comparators_for(item: str) -> list:
    item = item.strip()
    if not item or item == "*":
        return [_Comparator(">=", SemVer(0, 0, 0))]
    operator = ""
    for prefix in ("<=", ">=", "<", ">", "=", "^", "~"):
        if item.startswith(prefix):
            operator = prefix
            item = item[len(prefix):].strip()
            break
    major, minor, patch, prerelease = _partial(item)
    if operator in ("", "="):
        if major is None:
            return [_Comparator(">=", SemVer(0, 0, 0))]
        if minor is None:
            return [_Comparator(">=", SemVer(major, 0, 0)),
                    _Comparator("<", SemVer(major + 1, 0, 0))]
        if patch is None:
            return [_Comparator(">=", SemVer(major, minor, 0)),
                    _Comparator("<", SemVer(major, minor + 1, 0))]
        return [_Comparator("=", SemVer(major, minor, patch, prerelease))]
    if operator == "^":
        base = SemVer(major or 0, minor or 0, patch or 0, prerelease)
        if major:
            upper = SemVer(major + 1, 0, 0)
        elif minor:
            upper = SemVer(0, minor + 1, 0)
        else:
            upper = SemVer(0, 0, (patch or 0) + 1)
        return [_Comparator(">=", base), _Comparator("<", upper)]
    if operator == "~":
        base = SemVer(major or 0, minor or 0, patch or 0, prerelease)
        if minor is None:
            upper = SemVer((major or 0) + 1, 0, 0)
        else:
            upper = SemVer(major or 0, minor + 1, 0)
        return [_Comparator(">=", base), _Comparator("<", upper)]
    # plain relational comparator; fill missing parts with zeros
    version = SemVer(major or 0, minor or 0, patch or 0, prerelease)
    return [_Comparator(operator, version)]


def parse_range(text: str) -> VersionRange:
    """Parse an npm-style version range expression."""
    if not text.strip():
        raise InvalidRange("empty range expression")
    alternatives = []
    for alt in text.split("||"):
        alt = alt.strip()
        comparators: list = []
        if " - " in alt:
            low, _, high = alt.partition(" - ")
            lo_major, lo_minor, lo_patch, lo_pre = _partial(low.strip())
            comparators.append(_Comparator(
                ">=", SemVer(lo_major or 0, lo_minor or 0, lo_patch or 0,
                             lo_pre)))
            hi_major, hi_minor, hi_patch, hi_pre = _partial(high.strip())
            if hi_minor is None:
                comparators.append(
                    _Comparator("<", SemVer((hi_major or 0) + 1, 0, 0)))
            elif hi_patch is None:
                comparators.append(
                    _Comparator("<", SemVer(hi_major or 0, hi_minor + 1, 0)))
            else:
                comparators.append(_Comparator(
                    "<=", SemVer(hi_major or 0, hi_minor, hi_patch,
                                 hi_pre)))
        else:
            for item in alt.split():
                comparators.extend(_comparators_for(item))
            if not comparators:
                comparators = _comparators_for("*")
        alternatives.append(tuple(comparators))
    if not alternatives:
        raise InvalidRange(f"empty range: {text!r}")
    return VersionRange(tuple(alternatives), source=text)
