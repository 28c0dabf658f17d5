"""Selection of the source files a bundler would consume from an npm
release artifact.

Three strategies, strictly in order: a pre-bundled file referenced by
the jsdelivr/unpkg package.json fields; recursive module resolution
from the declared entry points; a naming-convention sweep over all
JavaScript files as a last resort.
"""

from __future__ import annotations

import json
import logging
import tarfile
from dataclasses import dataclass, field
from pathlib import Path

from bundlescope.errors import ParseError, SelectionError
from bundlescope.jsparse import parse_auto

log = logging.getLogger(__name__)

JS_EXTENSIONS = (".js", ".mjs", ".cjs")
_COMPLETIONS = (".js", ".mjs", ".cjs", ".json")
_INDEX_FILES = ("index.js", "index.mjs", "index.cjs", "index.json")
_EXPORT_CONDITIONS = ("browser", "import", "require", "default")
_EXCLUDED_DIRS = {"test", "tests", "__tests__", "example", "examples",
                  "vendor", "node_modules"}

STRATEGY_PREBUNDLED = "prebundled-field"
STRATEGY_ENTRYPOINT = "entrypoint-resolution"
STRATEGY_HEURISTIC = "heuristic"


@dataclass
class SelectionResult:
    files: list  # relative POSIX paths, ordered
    strategy: str
    warnings: list = field(default_factory=list)
    dependencies: set = field(default_factory=set)  # bare specifiers seen


def unpack_artifact(tarball: Path, destination: Path) -> Path:
    """Unpack an npm tarball, stripping the leading package/ directory."""
    destination.mkdir(parents=True, exist_ok=True)
    with tarfile.open(tarball) as archive:
        for member in archive.getmembers():
            parts = Path(member.name).parts
            if len(parts) <= 1:
                continue
            target = destination.joinpath(*parts[1:])
            if not str(target.resolve()).startswith(
                    str(destination.resolve())):
                continue  # path traversal guard
            if member.isdir():
                target.mkdir(parents=True, exist_ok=True)
            elif member.isfile():
                target.parent.mkdir(parents=True, exist_ok=True)
                extracted = archive.extractfile(member)
                target.write_bytes(extracted.read())
    return destination


def _read_package_json(artifact_dir: Path) -> dict:
    manifest_path = artifact_dir / "package.json"
    if not manifest_path.is_file():
        raise SelectionError("artifact has no package.json",
                             reason="missing-package-json")
    try:
        return json.loads(manifest_path.read_text(encoding="utf-8",
                                                  errors="replace"))
    except json.JSONDecodeError as exc:
        raise SelectionError(f"unreadable package.json: {exc}",
                             reason="bad-package-json") from exc


def select_files(artifact_dir: Path | str) -> SelectionResult:
    """Run the three-step file selection over an unpacked artifact."""
    root = Path(artifact_dir)
    manifest = _read_package_json(root)

    # step 1: pre-bundled artifact shortcut
    for key in ("jsdelivr", "unpkg"):
        value = manifest.get(key)
        if isinstance(value, str):
            candidate = _existing(root, value.lstrip("./"))
            if candidate:
                return SelectionResult(files=[candidate],
                                       strategy=STRATEGY_PREBUNDLED)

    # step 2: entry point resolution
    result = _resolve_from_entrypoints(root, manifest)
    if result is not None:
        return result

    # step 3: naming-convention heuristic
    return _heuristic_sweep(root)


def _existing(root: Path, relative: str) -> str | None:
    path = root / relative
    if path.is_file():
        return Path(relative).as_posix()
    return None


def _entry_candidates(root: Path, manifest: dict) -> list:
    candidates = []
    for key in ("module", "main"):
        value = manifest.get(key)
        if isinstance(value, str) and value:
            resolved = _resolve_file(root, value.lstrip("./"))
            if resolved:
                candidates.append(resolved)
    for name in ("index.js", "index.mjs"):
        resolved = _existing(root, name)
        if resolved:
            candidates.append(resolved)
    if not candidates and "exports" in manifest:
        resolved = _resolve_export_target(root, manifest["exports"], ".")
        if resolved:
            candidates.append(resolved)
    seen = set()
    return [c for c in candidates if not (c in seen or seen.add(c))]


def _resolve_file(root: Path, relative: str) -> str | None:
    """Exact file, extension completion, then directory index."""
    direct = _existing(root, relative)
    if direct:
        return direct
    for extension in _COMPLETIONS:
        candidate = _existing(root, relative + extension)
        if candidate:
            return candidate
    if (root / relative).is_dir():
        for index in _INDEX_FILES:
            candidate = _existing(root, f"{relative}/{index}")
            if candidate:
                return candidate
    return None


def _resolve_export_target(root: Path, exports, subpath: str) -> str | None:
    """Resolve a subpath ('.' or './x') through the exports map."""
    target = _export_lookup(exports, subpath)
    if isinstance(target, str):
        return _existing(root, target.lstrip("./")) or \
            _resolve_file(root, target.lstrip("./"))
    return None


def _export_lookup(exports, subpath: str):
    if isinstance(exports, str):
        return exports if subpath == "." else None
    if isinstance(exports, dict):
        keys = list(exports)
        if keys and all(k.startswith(".") for k in keys):
            entry = exports.get(subpath)
            if entry is None and subpath != ".":
                # wildcard sub-path patterns like "./*": best-effort
                for pattern, value in exports.items():
                    if pattern.endswith("/*") and subpath.startswith(
                            pattern[:-1]):
                        if isinstance(value, str) and "*" in value:
                            return value.replace(
                                "*", subpath[len(pattern) - 1:])
            if entry is None:
                return None
            return _conditional(entry, subpath)
        return _conditional(exports, subpath)
    return None


def _conditional(entry, subpath: str):
    if isinstance(entry, str):
        return entry
    if isinstance(entry, dict):
        for condition in _EXPORT_CONDITIONS:
            if condition in entry:
                resolved = _conditional(entry[condition], subpath)
                if resolved is not None:
                    return resolved
    if isinstance(entry, list):
        for item in entry:
            resolved = _conditional(item, subpath)
            if resolved is not None:
                return resolved
    return None


def resolve_specifier(from_file: str, specifier: str, manifest: dict,
                      root: Path | str) -> tuple[str, str | None]:
    """Classify one import specifier.

    Returns (kind, path) where kind is "internal" (path set, relative to
    the artifact root), "external" (bare import of another package) or
    "unresolved".
    """
    root = Path(root)
    if not specifier:
        return "unresolved", None
    if specifier.startswith("."):
        base = Path(from_file).parent
        joined = (base / specifier)
        normalized = Path(*_normalize_parts(joined.parts))
        resolved = _resolve_file(root, normalized.as_posix())
        if resolved:
            return "internal", resolved
        return "unresolved", None
    name = manifest.get("name")
    if name and (specifier == name or specifier.startswith(name + "/")):
        subpath = "." + specifier[len(name):]
        if "exports" in manifest:
            resolved = _resolve_export_target(root, manifest["exports"],
                                              subpath)
            if resolved:
                return "internal", resolved
        if subpath != ".":
            resolved = _resolve_file(root, subpath[2:])
            if resolved:
                return "internal", resolved
    return "external", None


def _normalize_parts(parts) -> list:
    out: list = []
    for part in parts:
        if part == ".":
            continue
        if part == "..":
            if out:
                out.pop()
            continue
        out.append(part)
    return out


def collect_imports(ast: dict) -> list:
    """All static and dynamic import/require specifiers, in source order."""
    specifiers: list = []

    def walk(node):
        if isinstance(node, dict):
            t = node.get("type")
            if t in ("ImportDeclaration", "ExportNamedDeclaration",
                     "ExportAllDeclaration"):
                source = node.get("source")
                if source and isinstance(source.get("value"), str):
                    specifiers.append(source["value"])
            elif t == "ImportExpression":
                source = node["source"]
                if source.get("type") == "Literal" \
                        and isinstance(source.get("value"), str):
                    specifiers.append(source["value"])
            elif t == "CallExpression" \
                    and node["callee"].get("type") == "Identifier" \
                    and node["callee"].get("name") == "require" \
                    and len(node["arguments"]) == 1:
                arg = node["arguments"][0]
                if arg.get("type") == "Literal" \
                        and isinstance(arg.get("value"), str):
                    specifiers.append(arg["value"])
            for value in node.values():
                walk(value)
        elif isinstance(node, list):
            for item in node:
                walk(item)

    walk(ast)
    return specifiers


def _resolve_from_entrypoints(root: Path, manifest: dict):
    entries = _entry_candidates(root, manifest)
    if not entries:
        return None
    visited: list = []
    visited_set: set = set()
    warnings: list = []
    dependencies: set = set()

    def visit(relative: str):
        if relative in visited_set:
            return
        visited_set.add(relative)
        visited.append(relative)
        if not relative.endswith(JS_EXTENSIONS):
            return
        try:
            source = (root / relative).read_text(encoding="utf-8",
                                                 errors="replace")
            ast = parse_auto(source)
        except (ParseError, OSError, RecursionError) as exc:
            warnings.append(f"{relative}: not parseable ({exc})")
            return
        for specifier in collect_imports(ast):
            kind, target = resolve_specifier(relative, specifier, manifest,
                                             root)
            if kind == "internal":
                visit(target)
            elif kind == "external":
                dependencies.add(specifier.split("/")[0]
                                 if not specifier.startswith("@")
                                 else "/".join(specifier.split("/")[:2]))
            else:
                warnings.append(f"{relative}: unresolved import "
                                f"{specifier!r}")

    for entry in entries:
        visit(entry)
    files = [f for f in visited if f.endswith(JS_EXTENSIONS)]
    if not files:
        return None
    return SelectionResult(files=files, strategy=STRATEGY_ENTRYPOINT,
                           warnings=warnings, dependencies=dependencies)


def _heuristic_sweep(root: Path) -> SelectionResult:
    files = []
    has_typescript = False
    for path in sorted(root.rglob("*")):
        if not path.is_file():
            continue
        relative = path.relative_to(root)
        if any(part.lower() in _EXCLUDED_DIRS for part in
               relative.parts[:-1]):
            continue
        if path.suffix == ".ts":
            has_typescript = True
        if path.suffix.lower() in JS_EXTENSIONS:
            files.append(relative.as_posix())
    # prefer x.js over its minified sibling x.min.js
    chosen = set(files)
    for name in files:
        for marker in (".min.js", ".min.mjs", ".min.cjs"):
            if name.endswith(marker):
                plain = name[:-len(marker)] + marker.replace(".min", "")
                if plain in chosen:
                    chosen.discard(name)
    files = sorted(chosen)
    if not files:
        reason = "typescript-only" if has_typescript else "no-source-files"
        raise SelectionError("no JavaScript sources found", reason=reason)
    return SelectionResult(files=files, strategy=STRATEGY_HEURISTIC)
