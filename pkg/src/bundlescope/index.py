"""The reference database of fingerprinted package versions.

Records are produced by the full pipeline (file selection, pseudo-
bundling, normalization, tokenization, winnowing) and queried through
an inverted hash-to-record table. Persistence offers a compact binary
container and a JSON export with identical observable behavior.
"""

from __future__ import annotations

import hashlib
import json
import logging
import struct
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from bundlescope.errors import (AllFilesUnparseable, CorruptIndex,
                                DuplicateRecord, FormatError, ParamMismatch,
                                ParseError)
from bundlescope.fingerprint import (Fingerprint, FingerprintParams,
                                     FingerprintSet, fingerprint)
from bundlescope.normalize import DEFAULT_CONFIG, NormalizationConfig, \
    normalize
from bundlescope.pseudobundle import pseudo_bundle
from bundlescope.select import select_files
from bundlescope.semver import SemVer, parse_semver
from bundlescope.tokens import VOCABULARY_VERSION, tokenize

log = logging.getLogger(__name__)

MAGIC = b"BSIX"
FORMAT_VERSION = 1
DEFAULT_MIN_SHARED = 20


@dataclass
class PackageVersionRecord:
    name: str
    version: SemVer
    fingerprints: FingerprintSet
    file_manifest_digest: str
    selection_strategy: str


@dataclass
class PackageIndex:
    params: FingerprintParams = field(default_factory=FingerprintParams)
    normalization_digest: str = DEFAULT_CONFIG.digest()
    vocabulary_version: str = VOCABULARY_VERSION
    records: list = field(default_factory=list)
    inverted: dict = field(default_factory=dict)  # hash -> [record id]
    created_at: int = 0  # unix seconds; excluded from the content digest

    def record_ids(self) -> dict:
        return {(r.name, str(r.version)): i
                for i, r in enumerate(self.records)}

    def versions_of(self, name: str) -> list:
        return [r for r in self.records if r.name == name]


def _manifest_digest(artifact_dir: Path, files) -> str:
    h = hashlib.sha256()
    for name in files:
        h.update(name.encode())
        h.update(b"\0")
        h.update(hashlib.sha256(
            (artifact_dir / name).read_bytes()).digest())
    return h.hexdigest()[:16]


def index_add(index: PackageIndex, artifact_dir: Path | str, name: str,
              version: SemVer | str,
              normalization: NormalizationConfig = DEFAULT_CONFIG
              ) -> PackageVersionRecord:
    """Fingerprint one unpacked artifact and append it to the index."""
    if isinstance(version, str):
        version = parse_semver(version)
    if normalization.digest() != index.normalization_digest:
        raise ParamMismatch("normalization config does not match index")
    key = (name, str(version))
    if key in index.record_ids():
        raise DuplicateRecord(f"{name}@{version} already indexed")
    artifact_dir = Path(artifact_dir)
    selection = select_files(artifact_dir)
    sources = [(f, (artifact_dir / f).read_text(encoding="utf-8",
                                                errors="replace"))
               for f in selection.files]
    try:
        bundle = pseudo_bundle(sources)
    except AllFilesUnparseable as exc:
        raise ParseError(str(exc)) from exc
    for warning in selection.warnings + bundle.warnings:
        log.warning("%s@%s: %s", name, version, warning)
    tokens = tokenize(normalize(bundle.source, normalization),
                      source_id=f"{name}@{version}")
    record = PackageVersionRecord(
        name=name, version=version,
        fingerprints=fingerprint(tokens, index.params),
        file_manifest_digest=_manifest_digest(artifact_dir,
                                              selection.files),
        selection_strategy=selection.strategy)
    record_id = len(index.records)
    index.records.append(record)
    for h in sorted(record.fingerprints.distinct_hashes):
        index.inverted.setdefault(h, []).append(record_id)
    return record


def query_candidates(index: PackageIndex, bundle_fps: FingerprintSet,
                     min_shared: int = 1) -> list:
    """(record, shared distinct-hash count) for every record sharing at
    least min_shared hashes, via the inverted table."""
    if bundle_fps.params != index.params:
        raise ParamMismatch("bundle fingerprinted with different params")
    counts: Counter = Counter()
    for h in bundle_fps.distinct_hashes:
        for record_id in index.inverted.get(h, ()):
            counts[record_id] += 1
    out = [(index.records[rid], shared) for rid, shared in counts.items()
           if shared >= min_shared]
    out.sort(key=lambda item: (-item[1], item[0].name,
                               item[0].version), reverse=False)
    return out


def verify(index: PackageIndex) -> list:
    """Recompute derived structure; list every inconsistency found."""
    findings = []
    seen = set()
    for i, record in enumerate(index.records):
        key = (record.name, str(record.version))
        if key in seen:
            findings.append(f"duplicate record {key}")
        seen.add(key)
        if record.fingerprints.params != index.params:
            findings.append(f"record {i} has mismatched params")
        hashes = {fp.hash for fp in record.fingerprints.entries}
        if hashes != set(record.fingerprints.distinct_hashes):
            findings.append(f"record {i} distinct_hashes out of sync")
    expected: dict = {}
    for i, record in enumerate(index.records):
        for h in sorted(record.fingerprints.distinct_hashes):
            expected.setdefault(h, []).append(i)
    if expected != {h: list(p) for h, p in index.inverted.items()}:
        findings.append("inverted table is not the transpose of records")
    return findings


# -- persistence ---------------------------------------------------------------

_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")


def _meta_dict(index: PackageIndex) -> dict:
    return {
        "k": index.params.k,
        "w": index.params.w,
        "hash_fn_version": index.params.hash_fn_version,
        "vocabulary_version": index.vocabulary_version,
        "normalization_digest": index.normalization_digest,
        "records": [{"name": r.name, "version": str(r.version),
                     "strategy": r.selection_strategy,
                     "file_manifest_digest": r.file_manifest_digest,
                     "n_fingerprints": len(r.fingerprints.entries)}
                    for r in index.records],
    }


def _encode_binary(index: PackageIndex) -> bytes:
    meta = json.dumps(_meta_dict(index), sort_keys=True,
                      separators=(",", ":")).encode()
    body = bytearray()
    body += _U32.pack(len(meta))
    body += meta
    for record in index.records:
        for fp in sorted(record.fingerprints.entries,
                         key=lambda f: (f.hash, f.position)):
            body += _U64.pack(fp.hash)
            body += _U32.pack(fp.position)
    body += _U32.pack(len(index.inverted))
    for h in sorted(index.inverted):
        postings = index.inverted[h]
        body += _U64.pack(h)
        body += _U32.pack(len(postings))
        for record_id in postings:
            body += _U32.pack(record_id)
    digest = hashlib.sha256(MAGIC + _U16.pack(FORMAT_VERSION) +
                            bytes(body)).digest()
    return (MAGIC + _U16.pack(FORMAT_VERSION) +
            _U64.pack(index.created_at) + bytes(body) + digest)


def _decode_binary(data: bytes) -> PackageIndex:
    if len(data) < 4 or data[:4] != MAGIC:
        raise FormatError("bad magic; not an index file")
    (format_version,) = _U16.unpack_from(data, 4)
    if format_version != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {format_version}")
    if len(data) < 4 + 2 + 8 + 4 + 32:
        raise CorruptIndex("truncated index file")
    (created_at,) = _U64.unpack_from(data, 6)
    body = data[14:-32]
    digest = data[-32:]
    if hashlib.sha256(MAGIC + _U16.pack(FORMAT_VERSION) +
                      body).digest() != digest:
        raise CorruptIndex("content digest mismatch")
    try:
        offset = 0
        (meta_len,) = _U32.unpack_from(body, offset)
        offset += 4
        meta = json.loads(body[offset:offset + meta_len])
        offset += meta_len
        params = FingerprintParams(k=meta["k"], w=meta["w"],
                                   hash_fn_version=meta["hash_fn_version"])
        index = PackageIndex(
            params=params,
            normalization_digest=meta["normalization_digest"],
            vocabulary_version=meta["vocabulary_version"],
            created_at=created_at)
        for entry in meta["records"]:
            entries = []
            for _ in range(entry["n_fingerprints"]):
                (h,) = _U64.unpack_from(body, offset)
                (position,) = _U32.unpack_from(body, offset + 8)
                offset += 12
                entries.append(Fingerprint(hash=h, position=position))
            index.records.append(PackageVersionRecord(
                name=entry["name"],
                version=parse_semver(entry["version"]),
                fingerprints=FingerprintSet(
                    entries=frozenset(entries),
                    distinct_hashes=frozenset(f.hash for f in entries),
                    params=params),
                file_manifest_digest=entry["file_manifest_digest"],
                selection_strategy=entry["strategy"]))
        (n_hashes,) = _U32.unpack_from(body, offset)
        offset += 4
        for _ in range(n_hashes):
            (h,) = _U64.unpack_from(body, offset)
            (n_postings,) = _U32.unpack_from(body, offset + 8)
            offset += 12
            postings = list(struct.unpack_from(f"<{n_postings}I", body,
                                               offset))
            offset += 4 * n_postings
            index.inverted[h] = postings
    except (struct.error, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise CorruptIndex(f"malformed index body: {exc}") from exc
    return index


def _encode_json(index: PackageIndex) -> str:
    doc = {"format": "bsix-json", "format_version": FORMAT_VERSION,
           "created_at": index.created_at, "meta": _meta_dict(index),
           "fingerprints": [
               [[fp.hash, fp.position] for fp in
                sorted(r.fingerprints.entries,
                       key=lambda f: (f.hash, f.position))]
               for r in index.records]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _decode_json(text: str) -> PackageIndex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != "bsix-json":
        raise FormatError("missing bsix-json format marker")
    if doc.get("format_version") != FORMAT_VERSION:
        raise FormatError("unsupported format version "
                          f"{doc.get('format_version')}")
    try:
        meta = doc["meta"]
        params = FingerprintParams(k=meta["k"], w=meta["w"],
                                   hash_fn_version=meta["hash_fn_version"])
        index = PackageIndex(
            params=params,
            normalization_digest=meta["normalization_digest"],
            vocabulary_version=meta["vocabulary_version"],
            created_at=doc.get("created_at", 0))
        for entry, pairs in zip(meta["records"], doc["fingerprints"],
                                strict=True):
            entries = frozenset(Fingerprint(hash=h, position=p)
                                for h, p in pairs)
            index.records.append(PackageVersionRecord(
                name=entry["name"],
                version=parse_semver(entry["version"]),
                fingerprints=FingerprintSet(
                    entries=entries,
                    distinct_hashes=frozenset(f.hash for f in entries),
                    params=params),
                file_manifest_digest=entry["file_manifest_digest"],
                selection_strategy=entry["strategy"]))
        for record_id, record in enumerate(index.records):
            for h in sorted(record.fingerprints.distinct_hashes):
                index.inverted.setdefault(h, []).append(record_id)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptIndex(f"malformed index document: {exc}") from exc
    return index


def index_digest(index: PackageIndex) -> str:
    """Content digest of the index, independent of created_at."""
    encoded = _encode_binary(index)
    return encoded[-32:].hex()[:16]


def save(index: PackageIndex, path: Path | str, fmt: str | None = None):
    """Write the index; format binary by default, JSON for .json paths."""
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "binary"
    if fmt == "json":
        path.write_text(_encode_json(index))
    elif fmt == "binary":
        path.write_bytes(_encode_binary(index))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def load(path: Path | str) -> PackageIndex:
    path = Path(path)
    data = path.read_bytes()
    if data[:4] == MAGIC:
        return _decode_binary(data)
    return _decode_json(data.decode("utf-8", errors="replace"))
