"""Command-line surface: index building, detection, bundler
identification, ground truth extraction, metrics and benchmarking.

Exit codes: 0 success, 1 per-input failures occurred, 2 fatal
configuration or index failure. Every command emits a run manifest
(JSON, standard error) so runs can be reproduced and compared.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import logging
import sys
import tempfile
import time
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

import click

import bundlescope
from bundlescope import bundler_id as bid
from bundlescope import index as index_mod
from bundlescope import metrics, sourcemaps
from bundlescope.detect import DetectionConfig, detect, report_to_dict
from bundlescope.errors import BundlescopeError, EmptyInput, ParseError
from bundlescope.fingerprint import (FingerprintParams,
                                     containment_similarity, fingerprint)
from bundlescope.select import unpack_artifact
from bundlescope.semver import parse_semver
from bundlescope.tokens import tokenize

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class RunManifest:
    command: str
    tool_version: str = bundlescope.__version__
    config_digests: dict = field(default_factory=dict)
    input_digests: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def emit(self):
        doc = {"schema_version": SCHEMA_VERSION, "command": self.command,
               "tool_version": self.tool_version,
               "config_digests": self.config_digests,
               "input_digests": self.input_digests,
               "timings": self.timings}
        click.echo(json.dumps(doc, sort_keys=True), err=True)


def _file_digest(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
def main(verbose):
    """Detect npm package versions inside JavaScript bundles."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


def _build_one(entry, params_tuple):
    """Worker: fingerprint one artifact; returns (entry, record|None, error)."""
    name, version, path = entry
    params = FingerprintParams(k=params_tuple[0], w=params_tuple[1])
    scratch = index_mod.PackageIndex(params=params)
    path = Path(path)
    try:
        if path.is_file():
            with tempfile.TemporaryDirectory() as tmp:
                unpack_artifact(path, Path(tmp))
                record = index_mod.index_add(scratch, tmp, name, version)
        else:
            record = index_mod.index_add(scratch, path, name, version)
        return entry, record, None
    except (BundlescopeError, OSError, RecursionError) as exc:
        return entry, None, f"{type(exc).__name__}: {exc}"


@main.command("index-build")
@click.argument("list_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", required=True, type=click.Path(),
              help="Output index path (.json selects the JSON format).")
@click.option("--k", default=None, type=int, help="k-gram length.")
@click.option("--w", default=None, type=int, help="Winnowing window.")
@click.option("--jobs", default=1, type=int, show_default=True,
              help="Parallel artifact workers.")
def cmd_index_build(list_file, out, k, w, jobs):
    """Build a package index from LIST_FILE.

    Each non-empty line: NAME VERSION ARTIFACT_PATH, where the artifact
    is an unpacked directory or an npm tarball.
    """
    manifest = RunManifest(command="index-build")
    manifest.input_digests[list_file] = _file_digest(Path(list_file))
    started = time.perf_counter()
    entries = []
    for line in Path(list_file).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(maxsplit=2)
        if len(parts) != 3:
            click.echo(f"bad list line: {line!r}", err=True)
            sys.exit(2)
        entries.append(tuple(parts))
    params = FingerprintParams(
        k=k if k is not None else FingerprintParams().k,
        w=w if w is not None else FingerprintParams().w)
    index = index_mod.PackageIndex(params=params)
    failures = 0
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_build_one, entries,
                                  [(params.k, params.w)] * len(entries)))
    else:
        results = [_build_one(e, (params.k, params.w)) for e in entries]
    # merge in input order so the index is deterministic under --jobs
    for (name, version, path), record, error in results:
        if error is not None:
            failures += 1
            click.echo(f"skipping {name}@{version} ({path}): {error}",
                       err=True)
            continue
        record_id = len(index.records)
        index.records.append(record)
        for h in sorted(record.fingerprints.distinct_hashes):
            index.inverted.setdefault(h, []).append(record_id)
    if not index.records:
        click.echo("no records could be built", err=True)
        manifest.emit()
        sys.exit(2)
    index_mod.save(index, out)
    manifest.config_digests["index"] = index_mod.index_digest(index)
    manifest.input_digests["out"] = _file_digest(Path(out))
    manifest.timings["total_s"] = round(time.perf_counter() - started, 3)
    manifest.emit()
    click.echo(f"indexed {len(index.records)} records "
               f"({failures} failures) -> {out}")
    sys.exit(0 if failures == 0 else 1)


def _load_index_or_die(path):
    try:
        return index_mod.load(path)
    except (BundlescopeError, OSError) as exc:
        click.echo(f"cannot load index {path}: {exc}", err=True)
        sys.exit(2)


_INDEX_PATH_OPTION = click.option(
    "-i", "--index", "index_path", envvar="BUNDLESCOPE_INDEX",
    required=True, type=click.Path(exists=True, dir_okay=False),
    help="Package index path (or BUNDLESCOPE_INDEX).")


@main.command("detect")
@click.argument("bundles", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@_INDEX_PATH_OPTION
@click.option("--compartments", is_flag=True,
              help="Score against module-map compartments.")
@click.option("--threshold", default=1.0, show_default=True,
              help="Relative similarity threshold for version ranges.")
@click.option("--min-shared", default=index_mod.DEFAULT_MIN_SHARED,
              show_default=True, help="Presence gate: shared hash minimum.")
@click.option("--packages", default=None,
              help="Comma-separated candidate package filter.")
@click.option("--jobs", default=1, type=int, show_default=True,
              help="Parallel bundle workers (threads; index is shared).")
def cmd_detect(bundles, index_path, compartments, threshold, min_shared,
               packages, jobs):
    """Detect indexed packages in each bundle; NDJSON reports on stdout."""
    manifest = RunManifest(command="detect")
    index = _load_index_or_die(index_path)
    config = DetectionConfig(use_compartments=compartments,
                             relative_threshold=threshold,
                             min_shared=min_shared)
    manifest.config_digests["detection"] = config.digest()
    manifest.config_digests["index"] = index_mod.index_digest(index)
    package_filter = ([p for p in packages.split(",") if p]
                      if packages is not None else None)
    bundler_fps = bid.default_fingerprints()
    started = time.perf_counter()

    def run_one(path):
        source = Path(path).read_text(encoding="utf-8", errors="replace")
        return detect(source, index, config,
                      package_filter=package_filter, bundle_id=str(path),
                      bundler_fingerprints=bundler_fps)

    failures = 0
    outputs = {}
    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as ex:
            futures = {path: ex.submit(run_one, path) for path in bundles}
        results = {p: f for p, f in futures.items()}
    else:
        results = None
    for path in bundles:
        manifest.input_digests[str(path)] = _file_digest(Path(path))
        try:
            report = (results[path].result() if results is not None
                      else run_one(path))
            outputs[path] = json.dumps(report_to_dict(report),
                                       sort_keys=True)
        except (ParseError, EmptyInput) as exc:
            failures += 1
            outputs[path] = json.dumps(
                {"bundle_id": str(path),
                 "error": f"{type(exc).__name__}: {exc}"}, sort_keys=True)
    for path in bundles:  # output in input order regardless of scheduling
        click.echo(outputs[path])
    manifest.timings["total_s"] = round(time.perf_counter() - started, 3)
    manifest.emit()
    sys.exit(1 if failures else 0)


@main.command("bundler-id")
@click.argument("script", type=click.Path(exists=True, dir_okay=False))
@click.option("-f", "--fingerprints", "fingerprint_file", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Fingerprint JSON file (defaults to the bundled set).")
def cmd_bundler_id(script, fingerprint_file):
    """Name the bundler(s) whose runtime shapes occur in SCRIPT."""
    manifest = RunManifest(command="bundler-id")
    manifest.input_digests[script] = _file_digest(Path(script))
    fps = (bid.load_fingerprint_file(fingerprint_file)
           if fingerprint_file else bid.default_fingerprints())
    try:
        tokens = tokenize(Path(script).read_text(encoding="utf-8",
                                                 errors="replace"))
    except (ParseError, EmptyInput) as exc:
        click.echo(f"cannot parse {script}: {exc}", err=True)
        manifest.emit()
        sys.exit(1)
    names = sorted(bid.identify_bundler(tokens, fps))
    manifest.emit()
    if not names:
        click.echo("none")
    elif len(names) == 1:
        click.echo(names[0])
    else:
        click.echo("ambiguous: " + ", ".join(names))


@main.command("groundtruth")
@click.argument("source_map", type=click.Path(exists=True, dir_okay=False))
def cmd_groundtruth(source_map):
    """Extract package/version ground truth from a source map."""
    manifest = RunManifest(command="groundtruth")
    manifest.input_digests[source_map] = _file_digest(Path(source_map))
    try:
        summary = sourcemaps.parse_source_map(
            Path(source_map).read_bytes())
    except BundlescopeError as exc:
        click.echo(f"invalid source map: {exc}", err=True)
        manifest.emit()
        sys.exit(1)
    entries = sorted(sourcemaps.extract_ground_truth(summary),
                     key=lambda e: (e.package, str(e.version)))
    click.echo(json.dumps({
        "schema_version": SCHEMA_VERSION,
        "entries": [{"package": e.package,
                     "version": str(e.version) if e.version else None,
                     "evidence": e.evidence} for e in entries]},
        sort_keys=True))
    manifest.emit()


@main.command("audit")
@click.argument("reports", type=click.Path(exists=True, dir_okay=False))
@click.option("--advisories", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON list of {id, package, range, severity}.")
@click.option("--observations", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="NDJSON {domain, package, version, observed_at}.")
@click.option("--releases", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON map package -> {version: release date}.")
@click.option("--mode", default="any", show_default=True,
              type=click.Choice(["any", "all"]))
@click.option("--max-range-width", default=None, type=int,
              help="Discard detections spanning more versions than this.")
def cmd_audit(reports, advisories, observations, releases, mode,
              max_range_width):
    """Vulnerability and rollout metrics over detection REPORTS (NDJSON)."""
    manifest = RunManifest(command="audit")
    for path in filter(None, (reports, advisories, observations, releases)):
        manifest.input_digests[path] = _file_digest(Path(path))
    try:
        advisory_list = [metrics.Advisory.from_dict(d) for d in
                         json.loads(Path(advisories).read_text())]
    except (BundlescopeError, ValueError, KeyError) as exc:
        click.echo(f"bad advisory file: {exc}", err=True)
        sys.exit(2)
    detections = []
    for line in Path(reports).read_text().splitlines():
        if not line.strip():
            continue
        doc = json.loads(line)
        if "error" in doc:
            continue
        domain = doc.get("domain") or doc.get("bundle_id", "")
        for det in doc.get("detections", []):
            detections.append({"domain": domain,
                               "package": det["package"],
                               "versions": det["versions"]})
    result = metrics.audit(detections, advisory_list, mode=mode,
                           max_range_width=max_range_width)
    out = {"schema_version": SCHEMA_VERSION, "mode": mode,
           "mean_vulnerable_per_domain": result.mean_vulnerable_per_domain,
           "domain_counts": result.domain_counts,
           "package_tallies": result.package_tallies,
           "total_detections": result.total_detections}
    if observations and releases:
        obs = []
        for line in Path(observations).read_text().splitlines():
            if not line.strip():
                continue
            doc = json.loads(line)
            obs.append(metrics.Observation(
                domain=doc["domain"], package=doc["package"],
                version=parse_semver(doc["version"]),
                observed_at=date.fromisoformat(doc["observed_at"])))
        release_map = json.loads(Path(releases).read_text())
        rollout = metrics.rollout_times(obs, release_map)
        out["rollout"] = {
            "rows": len(rollout.rows),
            "downgrades": rollout.downgrades,
            "missing_release_dates": rollout.missing_release_dates,
            "clamped": rollout.clamped,
            "fractions": {str(h): f for h, f in
                          metrics.rollout_fractions(rollout.rows).items()},
        }
    click.echo(json.dumps(out, sort_keys=True))
    manifest.emit()


@main.command("bench")
@click.argument("bundle", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", default=None, type=int)
@click.option("--w", default=None, type=int)
def cmd_bench(bundle, k, w):
    """Fingerprint BUNDLE three times, then time one pair comparison."""
    manifest = RunManifest(command="bench")
    manifest.input_digests[bundle] = _file_digest(Path(bundle))
    source = Path(bundle).read_text(encoding="utf-8", errors="replace")
    if not source.strip():
        click.echo("empty bundle", err=True)
        manifest.emit()
        sys.exit(1)
    params = FingerprintParams(
        k=k if k is not None else FingerprintParams().k,
        w=w if w is not None else FingerprintParams().w)
    try:
        fps = None
        for round_number in (1, 2, 3):
            started = time.perf_counter()
            tokens = tokenize(source)
            fps = fingerprint(tokens, params)
            elapsed = time.perf_counter() - started
            manifest.timings[f"index_round_{round_number}_s"] = \
                round(elapsed, 4)
            click.echo(f"index round {round_number}: {elapsed:.3f} s "
                       f"({len(source)} bytes, {len(tokens.tokens)} tokens,"
                       f" {len(fps.entries)} fingerprints)")
        started = time.perf_counter()
        similarity = containment_similarity(fps, fps)
        elapsed = time.perf_counter() - started
        manifest.timings["pair_report_s"] = round(elapsed, 6)
        click.echo(f"pair report: {elapsed:.4f} s "
                   f"(self-similarity {similarity:.2f})")
    except (ParseError, EmptyInput) as exc:
        click.echo(f"cannot process {bundle}: {exc}", err=True)
        manifest.emit()
        sys.exit(1)
    manifest.emit()


if __name__ == "__main__":
    main()
