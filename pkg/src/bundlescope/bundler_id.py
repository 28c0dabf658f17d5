"""Bundler identification via token-pattern fingerprints, and module-map
compartment extraction.

Fingerprint patterns are token-type sequences of characteristic bundler
runtime preambles, matched in a single pass with an Aho-Corasick
automaton over the flattened bundle AST.
"""

from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from bundlescope.errors import FormatError, PatternTooShort
from bundlescope.fingerprint import FingerprintParams, FingerprintSet, \
    fingerprint
from bundlescope.jsparse import parse_auto
from bundlescope.tokens import TokenString, VOCABULARY, flatten

log = logging.getLogger(__name__)

MIN_PATTERN_LENGTH = 8

KNOWN_BUNDLERS = ("webpack", "webpack-chunk", "rollup", "browserify",
                  "esbuild", "parcel")

DEFAULT_FINGERPRINT_FILE = Path(__file__).parent / "data" / \
    "bundler_fingerprints.json"


@dataclass(frozen=True)
class BundlerFingerprint:
    bundler: str
    pattern: tuple  # of token type ids
    fingerprint_source: str = ""

    def __post_init__(self):
        if len(self.pattern) < MIN_PATTERN_LENGTH:
            raise PatternTooShort(
                f"pattern for {self.bundler!r} has {len(self.pattern)} "
                f"tokens, minimum is {MIN_PATTERN_LENGTH}")


class TokenAutomaton:
    """Aho-Corasick automaton over token type ids."""

    def __init__(self, patterns):
        self._patterns = [tuple(p) for p in patterns]
        self._goto: list[dict] = [{}]
        self._fail = [0]
        self._output: list[list[int]] = [[]]
        for index, pattern in enumerate(self._patterns):
            state = 0
            for symbol in pattern:
                nxt = self._goto[state].get(symbol)
                if nxt is None:
                    self._goto.append({})
                    self._fail.append(0)
                    self._output.append([])
                    nxt = len(self._goto) - 1
                    self._goto[state][symbol] = nxt
                state = nxt
            self._output[state].append(index)
        queue = deque()
        for state in self._goto[0].values():
            queue.append(state)
        while queue:
            state = queue.popleft()
            for symbol, nxt in self._goto[state].items():
                queue.append(nxt)
                fail = self._fail[state]
                while fail and symbol not in self._goto[fail]:
                    fail = self._fail[fail]
                self._fail[nxt] = self._goto[fail].get(symbol, 0)
                if self._fail[nxt] == nxt:
                    self._fail[nxt] = 0
                self._output[nxt].extend(self._output[self._fail[nxt]])

    def find(self, tokens) -> list:
        """All (pattern index, end position) matches in one pass."""
        matches = []
        state = 0
        goto = self._goto
        fail = self._fail
        output = self._output
        for position, symbol in enumerate(tokens):
            while state and symbol not in goto[state]:
                state = fail[state]
            state = goto[state].get(symbol, 0)
            for pattern_index in output[state]:
                matches.append((pattern_index, position))
        return matches


def build_automaton(fingerprints) -> TokenAutomaton:
    return TokenAutomaton([fp.pattern for fp in fingerprints])


def identify_bundler(tokens: TokenString | list, fingerprints,
                     automaton: TokenAutomaton | None = None) -> set:
    """Names of all bundlers with at least one pattern occurring as a
    contiguous substring of the token sequence."""
    fingerprints = list(fingerprints)
    if not fingerprints:
        raise ValueError("empty fingerprint list")
    if automaton is None:
        automaton = build_automaton(fingerprints)
    seq = tokens.tokens if isinstance(tokens, TokenString) else tokens
    return {fingerprints[i].bundler for i, _ in automaton.find(seq)}


def load_fingerprint_file(path: Path | str) -> list:
    """Load bundler fingerprints from the documented JSON schema:
    a list of {bundler, token_names, note} objects."""
    try:
        entries = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"unreadable fingerprint file: {exc}") from exc
    if not isinstance(entries, list):
        raise FormatError("fingerprint file must be a JSON list")
    fingerprints = []
    for entry in entries:
        if not isinstance(entry, dict) or "bundler" not in entry \
                or "token_names" not in entry:
            raise FormatError(f"bad fingerprint entry: {entry!r}")
        pattern = tuple(VOCABULARY.id_of(name)
                        for name in entry["token_names"])
        fingerprints.append(BundlerFingerprint(
            bundler=entry["bundler"], pattern=pattern,
            fingerprint_source=entry.get("note", "")))
    return fingerprints


def save_fingerprint_file(fingerprints, path: Path | str):
    entries = [{"bundler": fp.bundler,
                "token_names": [VOCABULARY.name_of(t) for t in fp.pattern],
                "note": fp.fingerprint_source}
               for fp in fingerprints]
    Path(path).write_text(json.dumps(entries, indent=1) + "\n")


def default_fingerprints() -> list:
    return load_fingerprint_file(DEFAULT_FINGERPRINT_FILE)


# -- compartments ---------------------------------------------------------------

_FUNCTION_TYPES = ("FunctionExpression", "ArrowFunctionExpression")
_MODULE_MAP_MIN_ENTRIES = 2
_MODULE_MAP_FUNCTION_SHARE = 0.8


@dataclass
class Compartment:
    key: object  # numeric index or string key
    token_range: tuple  # [start, end) into the bundle TokenString
    fingerprints: FingerprintSet | None = None
    nested: bool = False


def _module_map_entries(node: dict):
    """(key, function node) pairs if node looks like a module map."""
    if node["type"] == "ArrayExpression":
        elements = [e for e in node["elements"] if e is not None]
        if len(elements) < _MODULE_MAP_MIN_ENTRIES:
            return None
        functions = [e for e in elements if e["type"] in _FUNCTION_TYPES]
        if len(functions) < _MODULE_MAP_FUNCTION_SHARE * len(elements):
            return None
        return [(index, element)
                for index, element in enumerate(node["elements"])
                if element is not None
                and element["type"] in _FUNCTION_TYPES]
    if node["type"] == "ObjectExpression":
        properties = [p for p in node["properties"]
                      if p["type"] == "Property"]
        if len(properties) < _MODULE_MAP_MIN_ENTRIES or \
                len(properties) < len(node["properties"]):
            return None
        functions = [p for p in properties
                     if p["value"]["type"] in _FUNCTION_TYPES]
        if len(functions) < _MODULE_MAP_FUNCTION_SHARE * len(properties):
            return None
        out = []
        for prop in properties:
            if prop["value"]["type"] not in _FUNCTION_TYPES:
                continue
            key = prop["key"]
            if key["type"] == "Identifier" and not prop.get("computed"):
                out.append((key["name"], prop["value"]))
            elif key["type"] == "Literal":
                out.append((key["value"], prop["value"]))
        return out
    return None


def _find_module_map(ast: dict):
    """Outermost array/object literal dominated by function entries."""
    stack = [ast]
    while stack:
        node = stack.pop()
        if isinstance(node, dict) and "type" in node:
            entries = _module_map_entries(node) \
                if node["type"] in ("ArrayExpression",
                                    "ObjectExpression") else None
            if entries:
                return entries
            stack.extend(reversed([v for v in node.values()
                                   if isinstance(v, (dict, list))]))
        elif isinstance(node, list):
            stack.extend(reversed(node))
    return None


def extract_compartments(source: str,
                         params: FingerprintParams | None = None) -> list:
    """Locate module-map compartments in a bundle.

    Returns an empty list when no module map is found (scope-hoisted or
    plain scripts); the bundle is then analyzed whole. When `params` is
    given, each compartment carries the fingerprints of its token range
    (positions absolute within the bundle document).
    """
    ast = parse_auto(source)
    entries = _find_module_map(ast)
    if not entries:
        return []
    spans: dict = {}
    span_nodes = {id(function) for _, function in entries}
    tokens = flatten(ast, spans=spans, span_nodes=span_nodes)
    compartments = []
    for key, function in entries:
        start, end = spans[id(function)]
        fps = None
        if params is not None:
            fps = fingerprint(tokens[start:end], params,
                              position_offset=start)
        compartments.append(Compartment(key=key, token_range=(start, end),
                                        fingerprints=fps))
    return compartments
