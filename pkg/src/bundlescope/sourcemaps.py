"""Ground truth extraction from source maps and CDN URL classification.

Source maps reveal bundled packages through node_modules path segments;
pnpm store paths additionally leak exact versions. CDN URLs are parsed
per-provider to recover package, version and aliasing style.
"""

from __future__ import annotations

import base64
import json
import logging
import re
from dataclasses import dataclass
from urllib.parse import unquote, urlparse

from bundlescope.errors import FormatError, InvalidVersion
from bundlescope.semver import SemVer, parse_semver

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SourceMapSummary:
    sources: tuple
    has_inline_content: bool


@dataclass(frozen=True)
class GroundTruthEntry:
    package: str
    version: SemVer | None
    evidence: str  # node-modules-path | pnpm-store-path


def parse_source_map(data: bytes | str) -> SourceMapSummary:
    """Parse a source map v3 document (raw JSON or data: URI)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="replace")
    text = data.strip()
    if text.startswith("data:"):
        header, _, payload = text.partition(",")
        if ";base64" in header:
            text = base64.b64decode(payload).decode("utf-8",
                                                    errors="replace")
        else:
            text = unquote(payload)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"source map is not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != 3:
        raise FormatError("source map missing \"version\": 3")
    sources = doc.get("sources")
    if not isinstance(sources, list):
        raise FormatError("source map missing \"sources\" array")
    return SourceMapSummary(
        sources=tuple(str(s) for s in sources),
        has_inline_content=bool(doc.get("sourcesContent")))


def _package_after(path: str, marker: str) -> str | None:
    """Package name from the segments following the LAST marker."""
    idx = path.rfind(marker)
    if idx < 0:
        return None
    rest = path[idx + len(marker):].lstrip("/")
    segments = [s for s in rest.split("/") if s]
    if not segments:
        return None
    if segments[0].startswith("@"):
        if len(segments) < 2:
            return None
        return segments[0] + "/" + segments[1]
    return segments[0]


def extract_packages(summary: SourceMapSummary) -> set:
    """Package names referenced through node_modules path segments."""
    packages = set()
    for source in summary.sources:
        name = _package_after(source, "node_modules/")
        if name and name != ".pnpm":
            packages.add(name)
    return packages


_PNPM_RE = re.compile(
    r"node_modules/\.pnpm/(?P<encoded>[^/]+?)@(?P<version>\d[^/_]*)"
    r"(?:_[^/]*)?/node_modules/(?P<name>@[^/]+/[^/]+|[^@/][^/]*)/")


def extract_pnpm_versions(summary: SourceMapSummary) -> set:
    """Exact (package, version) pairs from pnpm store paths.

    Store directories encode scoped names with "+" instead of "/" and
    may append a peer-dependency hash after "_"; both are undone here.
    """
    entries = set()
    for source in summary.sources:
        match = _PNPM_RE.search(source)
        if not match:
            continue
        name = match.group("name")
        encoded = match.group("encoded").replace("+", "/")
        if encoded != name:
            # store dir and resolved module disagree; trust the module path
            log.debug("pnpm store dir %r vs module %r", encoded, name)
        try:
            version = parse_semver(match.group("version"))
        except InvalidVersion:
            log.warning("unparseable pnpm version %r in %s",
                        match.group("version"), source)
            continue
        entries.add(GroundTruthEntry(package=name, version=version,
                                     evidence="pnpm-store-path"))
    return entries


def extract_ground_truth(summary: SourceMapSummary) -> set:
    """All ground truth entries: pnpm entries with versions, plus
    version-less node_modules entries for remaining packages."""
    entries = extract_pnpm_versions(summary)
    versioned = {e.package for e in entries}
    for package in extract_packages(summary):
        if package not in versioned:
            entries.add(GroundTruthEntry(package=package, version=None,
                                         evidence="node-modules-path"))
    return entries


# -- CDN URLs ------------------------------------------------------------------


@dataclass(frozen=True)
class CdnUrlInfo:
    provider: str  # cdnjs|jsdelivr|unpkg|google|jquery|microsoft|other
    package: str | None
    version_kind: str  # fixed | aliased | none
    version: SemVer | None  # set when fixed
    version_text: str | None  # raw spec when aliased
    file: str | None

    @property
    def is_fixed(self) -> bool:
        return self.version_kind == "fixed"


_HOST_PROVIDERS = {
    "cdnjs.cloudflare.com": "cdnjs",
    "cdn.jsdelivr.net": "jsdelivr",
    "unpkg.com": "unpkg",
    "ajax.googleapis.com": "google",
    "code.jquery.com": "jquery",
    "ajax.aspnetcdn.com": "microsoft",
}


def _classify_version(spec: str | None):
    """fixed(SemVer) / aliased(text) / none — exactly one holds."""
    if not spec:
        return "none", None, None
    try:
        return "fixed", parse_semver(spec), None
    except InvalidVersion:
        return "aliased", None, spec


def _split_versioned(segment: str):
    """'vue@3.4.0' -> ('vue', '3.4.0'); keeps scoped names intact."""
    if segment.startswith("@"):
        scope, _, rest = segment.partition("/")
        name, _, version = rest.partition("@")
        return scope + "/" + name if name else scope, version or None
    name, _, version = segment.partition("@")
    return name, version or None


def parse_cdn_url(url: str) -> CdnUrlInfo:
    """Classify a script URL per CDN provider grammar."""
    parsed = urlparse(url)
    provider = _HOST_PROVIDERS.get(parsed.netloc.lower(), "other")
    path = parsed.path.lstrip("/")
    segments = [s for s in path.split("/") if s]
    package = None
    version_spec = None
    file = None
    if provider == "cdnjs":
        # ajax/libs/<name>/<version>/<file...>
        if len(segments) >= 3 and segments[:2] == ["ajax", "libs"]:
            package = segments[2]
            version_spec = segments[3] if len(segments) > 3 else None
            file = "/".join(segments[4:]) or None
    elif provider in ("jsdelivr", "unpkg"):
        # jsdelivr: npm/<name>@<version>/<file...>; unpkg: <name>@<ver>/...
        if provider == "jsdelivr":
            if not segments or segments[0] != "npm":
                return CdnUrlInfo(provider, None, "none", None, None,
                                  "/".join(segments) or None)
            segments = segments[1:]
        if segments:
            if segments[0].startswith("@") and len(segments) >= 2:
                spec = segments[0] + "/" + segments[1]
                rest = segments[2:]
            else:
                spec = segments[0]
                rest = segments[1:]
            package, version_spec = _split_versioned(spec)
            file = "/".join(rest) or None
    elif provider == "google":
        # ajax/libs/<name>/<version>/<file>
        if len(segments) >= 3 and segments[:2] == ["ajax", "libs"]:
            package = segments[2]
            version_spec = segments[3] if len(segments) > 3 else None
            file = "/".join(segments[4:]) or None
    elif provider == "jquery":
        # jquery-<version>.js | ui/<version>/jquery-ui.js | mobile/...
        file = "/".join(segments) or None
        if segments:
            match = re.match(r"jquery(?:\.(\w+))?-([0-9][\w.-]*?)"
                             r"(?:\.min|\.slim)*\.js$", segments[-1])
            if match:
                package = "jquery" + (("-" + match.group(1))
                                      if match.group(1) else "")
                version_spec = match.group(2)
            elif segments[0] in ("ui", "mobile") and len(segments) >= 2:
                package = "jquery-" + segments[0]
                version_spec = segments[1]
    elif provider == "microsoft":
        # ajax/<lib>/<lib>-<version>.js or ajax/<lib>/<version>/<file>
        file = "/".join(segments) or None
        if len(segments) >= 2 and segments[0] == "ajax":
            package = segments[1]
            if len(segments) >= 3:
                match = re.match(r"[\w.]+-([0-9][\w.]*?)(?:\.min)?\.js$",
                                 segments[-1])
                if match:
                    version_spec = match.group(1)
                elif re.match(r"^\d", segments[2]):
                    version_spec = segments[2]
    else:
        file = "/".join(segments) or None
    kind, fixed, aliased = _classify_version(version_spec)
    return CdnUrlInfo(provider=provider, package=package,
                      version_kind=kind, version=fixed,
                      version_text=aliased, file=file)
