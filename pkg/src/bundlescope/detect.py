"""Version detection: score a bundle against the package index and
report, per candidate package, the version(s) of maximal containment
similarity.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field

from bundlescope import bundler_id as bid
from bundlescope.errors import ParamMismatch, UnknownPackage
from bundlescope.fingerprint import (FingerprintSet, containment_similarity,
                                     fingerprint, shared_count)
from bundlescope.index import DEFAULT_MIN_SHARED, PackageIndex, \
    index_digest, query_candidates
from bundlescope.normalize import DEFAULT_CONFIG, NormalizationConfig, \
    normalize
from bundlescope.tokens import tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetectionConfig:
    use_compartments: bool = False
    relative_threshold: float = 1.0
    min_shared: int = DEFAULT_MIN_SHARED
    max_range_width: int | None = None

    def __post_init__(self):
        if not 0 < self.relative_threshold <= 1:
            raise ValueError("relative_threshold must be in (0, 1]")
        if self.min_shared < 0:
            raise ValueError("min_shared must be >= 0")

    def digest(self) -> str:
        payload = json.dumps({
            "use_compartments": self.use_compartments,
            "relative_threshold": self.relative_threshold,
            "min_shared": self.min_shared,
            "max_range_width": self.max_range_width}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class PackageDetection:
    package: str
    versions: tuple  # SemVer, descending; non-empty
    similarity: float
    shared: int
    compartment_keys: frozenset | None = None


@dataclass
class DetectionReport:
    bundle_id: str
    bundler: set
    detections: list
    config_digest: str
    index_digest: str
    diagnostics: dict = field(default_factory=dict)


def rank_versions(package_name: str, bundle_doc_fps: FingerprintSet,
                  index: PackageIndex,
                  relative_threshold: float = 1.0) -> list:
    """(version, similarity, shared) per record of the package,
    descending by similarity, ties by descending version. The head group
    within relative_threshold of the maximum is the retained range."""
    records = index.versions_of(package_name)
    if not records:
        raise UnknownPackage(package_name)
    ranked = [(r.version,
               containment_similarity(r.fingerprints, bundle_doc_fps),
               shared_count(r.fingerprints, bundle_doc_fps))
              for r in records]
    # stable two-pass sort: descending version, then descending similarity
    ranked.sort(key=lambda item: item[0], reverse=True)
    ranked.sort(key=lambda item: item[1], reverse=True)
    return ranked


def retained_versions(ranked, relative_threshold: float) -> list:
    """Head group of a rank_versions result: similarity within the
    relative threshold of the maximum, zeros never retained."""
    if not ranked or ranked[0][1] <= 0:
        return []
    cutoff = relative_threshold * ranked[0][1]
    return [item for item in ranked if item[1] >= cutoff]


def _compartment_entries(bundle_fps: FingerprintSet, compartment, k: int):
    """Bundle fingerprints whose k-gram lies inside the compartment."""
    start, end = compartment.token_range
    return {f for f in bundle_fps.entries if start <= f.position <= end - k}


def _merged_subdocument(bundle_fps: FingerprintSet, compartments,
                        package_records,
                        params) -> tuple[FingerprintSet | None, frozenset]:
    """Sub-document for one package: the bundle minus every compartment
    sharing no fingerprint with any of the package's versions.

    Dropping only non-sharing compartments means the shared count per
    version is exactly the whole-bundle one while the denominator only
    shrinks, so compartment mode never scores the true version lower.
    Returns None when no compartment shares anything with the package.
    """
    package_hashes = frozenset().union(
        *(r.fingerprints.distinct_hashes for r in package_records))
    matched_keys = []
    dropped_entries: set = set()
    any_match = False
    for compartment in compartments:
        entries = _compartment_entries(bundle_fps, compartment, params.k)
        if {f.hash for f in entries} & package_hashes:
            any_match = True
            matched_keys.append(compartment.key)
        else:
            dropped_entries |= entries
    if not any_match:
        return None, frozenset()
    entries = frozenset(bundle_fps.entries - dropped_entries)
    return (FingerprintSet(entries=entries,
                           distinct_hashes=frozenset(f.hash
                                                     for f in entries),
                           params=params),
            frozenset(matched_keys))


def detect(source: str, index: PackageIndex,
           config: DetectionConfig = DetectionConfig(),
           package_filter=None, bundle_id: str = "",
           normalization: NormalizationConfig = DEFAULT_CONFIG,
           bundler_fingerprints=None) -> DetectionReport:
    """Run the full detection pipeline over one bundle."""
    if normalization.digest() != index.normalization_digest:
        raise ParamMismatch("normalization config does not match index")
    if bundler_fingerprints is None:
        bundler_fingerprints = bid.default_fingerprints()
    raw_tokens = tokenize(source, source_id=bundle_id)
    bundlers = bid.identify_bundler(raw_tokens, bundler_fingerprints)

    normalized = normalize(source, normalization)
    bundle_fps = fingerprint(tokenize(normalized, source_id=bundle_id),
                             index.params)

    compartments = []
    diagnostics: dict = {}
    if config.use_compartments:
        compartments = bid.extract_compartments(normalized, index.params)
        nested = []
        automaton = bid.build_automaton(bundler_fingerprints)
        norm_tokens = tokenize(normalized).tokens
        for compartment in compartments:
            start, end = compartment.token_range
            if bid.identify_bundler(norm_tokens[start:end],
                                    bundler_fingerprints, automaton):
                compartment.nested = True
                nested.append(compartment.key)
        if nested:
            diagnostics["nested_compartments"] = nested

    candidates = query_candidates(index, bundle_fps, config.min_shared)
    packages: dict = {}
    for record, shared in candidates:
        packages.setdefault(record.name, 0)
        packages[record.name] = max(packages[record.name], shared)
    if package_filter is not None:
        allowed = set(package_filter)
        packages = {n: s for n, s in packages.items() if n in allowed}

    detections = []
    for name in sorted(packages):
        doc_fps = bundle_fps
        compartment_keys = None
        if config.use_compartments and compartments:
            doc_fps, compartment_keys = _merged_subdocument(
                bundle_fps, compartments, index.versions_of(name),
                index.params)
            if doc_fps is None:
                continue
        ranked = rank_versions(name, doc_fps, index,
                               config.relative_threshold)
        retained = retained_versions(ranked, config.relative_threshold)
        if not retained or retained[0][2] < config.min_shared:
            continue
        detections.append(PackageDetection(
            package=name,
            versions=tuple(version for version, _, _ in retained),
            similarity=retained[0][1],
            shared=retained[0][2],
            compartment_keys=compartment_keys))
    return DetectionReport(bundle_id=bundle_id, bundler=bundlers,
                           detections=detections,
                           config_digest=config.digest(),
                           index_digest=index_digest(index),
                           diagnostics=diagnostics)


def report_to_dict(report: DetectionReport) -> dict:
    """JSON-ready form of a detection report."""
    return {
        "bundle_id": report.bundle_id,
        "bundler": sorted(report.bundler),
        "config_digest": report.config_digest,
        "index_digest": report.index_digest,
        "diagnostics": {k: sorted(v, key=str)
                        for k, v in report.diagnostics.items()},
        "detections": [{
            "package": d.package,
            "versions": [str(v) for v in d.versions],
            "similarity": d.similarity,
            "shared": d.shared,
            "compartment_keys": (sorted(d.compartment_keys, key=str)
                                 if d.compartment_keys is not None
                                 else None),
        } for d in report.detections],
    }
