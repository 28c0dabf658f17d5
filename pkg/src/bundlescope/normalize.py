"""Canonicalization toward the compact JavaScript subset minifiers emit.

Minified bundles and unminified package sources should converge on the
same token sequences, so the built-in passes rewrite sources the way an
aggressive-but-safe minifier would. An external minifier executable can
be plugged in for higher fidelity; it reads source on stdin and writes
the minified source on stdout.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import subprocess
from dataclasses import dataclass, field

from bundlescope.errors import ExternalToolError
from bundlescope.jsparse import generate, parse_auto
from bundlescope.tokens import TokenString, tokenize

log = logging.getLogger(__name__)

DEFAULT_PASSES = (
    "fold-constants",
    "canonical-void0",
    "canonical-bools",
    "merge-var-decls",
    "strip-dead-code",
)

_MAX_FIXPOINT_ROUNDS = 10


@dataclass(frozen=True)
class NormalizationConfig:
    passes: tuple = DEFAULT_PASSES
    external_minifier: tuple | None = None  # (executable, *args)

    def digest(self) -> str:
        payload = json.dumps({"passes": list(self.passes),
                              "external": list(self.external_minifier or [])},
                             sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


DEFAULT_CONFIG = NormalizationConfig()


def normalize(source: str,
              config: NormalizationConfig = DEFAULT_CONFIG) -> str:
    """Rewrite source into canonical form; idempotent for built-in passes."""
    if config.external_minifier:
        try:
            return _run_external(source, config.external_minifier)
        except ExternalToolError as exc:
            log.warning("external minifier failed (%s); "
                        "falling back to built-in passes", exc)
    ast = parse_auto(source)
    text = generate(ast)
    for _ in range(_MAX_FIXPOINT_ROUNDS):
        for name in config.passes:
            _PASSES[name](ast)
        new_text = generate(ast)
        if new_text == text:
            return text
        text = new_text
        ast = parse_auto(text)
    return text


def normalize_tokens(source: str,
                     config: NormalizationConfig = DEFAULT_CONFIG,
                     source_id: str = "") -> TokenString:
    """tokenize(normalize(source)) convenience composition."""
    return tokenize(normalize(source, config), source_id=source_id)


def _run_external(source: str, command: tuple) -> str:
    try:
        proc = subprocess.run(list(command), input=source.encode(),
                              capture_output=True, timeout=120)
    except (OSError, subprocess.TimeoutExpired) as exc:
        raise ExternalToolError(str(exc)) from exc
    if proc.returncode != 0:
        raise ExternalToolError(
            f"exit {proc.returncode}: {proc.stderr.decode()[:200]}")
    return proc.stdout.decode()


# -- AST walking helpers -----------------------------------------------------

# fields holding names/labels rather than expressions
_NON_EXPR_FIELDS = {
    ("LabeledStatement", "label"), ("BreakStatement", "label"),
    ("ContinueStatement", "label"),
    ("FunctionDeclaration", "id"), ("FunctionExpression", "id"),
    ("ClassDeclaration", "id"), ("ClassExpression", "id"),
    ("MetaProperty", "meta"), ("MetaProperty", "property"),
    ("ImportSpecifier", "imported"), ("ImportSpecifier", "local"),
    ("ImportDefaultSpecifier", "local"),
    ("ImportNamespaceSpecifier", "local"),
    ("ExportSpecifier", "local"), ("ExportSpecifier", "exported"),
    ("ExportAllDeclaration", "exported"),
}

# fields introducing binding patterns (identifiers there are names)
_PATTERN_FIELDS = {
    ("VariableDeclarator", "id"), ("CatchClause", "param"),
    ("ForInStatement", "left"), ("ForOfStatement", "left"),
}


def _walk_expressions(node: dict, visit, in_pattern: bool = False):
    """Visit expression nodes bottom-up; visit(node) may return a
    replacement dict. Identifier-name positions are skipped."""
    node_type = node["type"]
    for key, value in list(node.items()):
        if (node_type, key) in _NON_EXPR_FIELDS:
            continue
        if key == "key" and node_type in ("Property", "MethodDefinition",
                                          "PropertyDefinition") \
                and not node.get("computed"):
            continue
        if key == "property" and node_type == "MemberExpression" \
                and not node.get("computed"):
            continue
        child_pattern = in_pattern
        if (node_type, key) in _PATTERN_FIELDS:
            child_pattern = True
        if node_type in ("ArrayPattern", "ObjectPattern", "RestElement"):
            child_pattern = True
        if node_type == "AssignmentPattern" and key == "right":
            child_pattern = False
        if node_type == "Property" and key == "value" and not in_pattern:
            child_pattern = False
        if node_type in ("FunctionDeclaration", "FunctionExpression",
                         "ArrowFunctionExpression") and key == "params":
            child_pattern = True
        if key == "body":
            child_pattern = False
        if isinstance(value, dict) and "type" in value:
            replacement = _walk_expressions(value, visit, child_pattern)
            if replacement is not None:
                node[key] = replacement
        elif isinstance(value, list):
            for i, item in enumerate(value):
                if isinstance(item, dict) and "type" in item:
                    replacement = _walk_expressions(item, visit,
                                                    child_pattern)
                    if replacement is not None:
                        value[i] = replacement
    if in_pattern and node_type == "Identifier":
        return None
    if node_type == "AssignmentExpression" and node["operator"] == "=":
        # left side is a target, undo any replacement made there
        pass
    return visit(node)


def _walk_statement_lists(node, visit):
    """Visit every statement list (body arrays) in the tree."""
    if isinstance(node, dict):
        for key, value in node.items():
            if isinstance(value, list):
                if key in ("body", "consequent") and all(
                        isinstance(s, dict) and "type" in s for s in value) \
                        and node["type"] in ("Program", "BlockStatement",
                                             "SwitchCase"):
                    visit(value)
                for item in value:
                    _walk_statement_lists(item, visit)
            elif isinstance(value, dict) and "type" in value:
                _walk_statement_lists(value, visit)


# -- passes -------------------------------------------------------------------


def _literal_number(node) -> float | None:
    if isinstance(node, dict) and node.get("type") == "Literal" \
            and "regex" not in node and not node.get("bigint"):
        value = node.get("value")
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
    return None


def _is_string_literal(node) -> bool:
    return isinstance(node, dict) and node.get("type") == "Literal" \
        and isinstance(node.get("value"), str)


def _fold_visit(node: dict):
    t = node["type"]
    if t == "UnaryExpression" and node["operator"] in ("-", "+"):
        value = _literal_number(node["argument"])
        if value is not None:
            return {"type": "Literal",
                    "value": -value if node["operator"] == "-" else value}
    if t != "BinaryExpression":
        return None
    op = node["operator"]
    left, right = node["left"], node["right"]
    if op == "+" and _is_string_literal(left) and _is_string_literal(right):
        return {"type": "Literal", "value": left["value"] + right["value"]}
    lv = _literal_number(left)
    rv = _literal_number(right)
    if lv is None or rv is None:
        return None
    try:
        if op == "+":
            result = lv + rv
        elif op == "-":
            result = lv - rv
        elif op == "*":
            result = lv * rv
        elif op == "/":
            result = lv / rv
        elif op == "%":
            result = math.fmod(lv, rv)
        elif op == "**":
            result = lv ** rv
        else:
            return None
    except (ZeroDivisionError, OverflowError, ValueError):
        return None
    if isinstance(result, complex) or not math.isfinite(result):
        return None
    return {"type": "Literal", "value": result}


def _pass_fold_constants(ast: dict):
    _walk_expressions(ast, _fold_visit)


def _void0():
    return {"type": "UnaryExpression", "operator": "void", "prefix": True,
            "argument": {"type": "Literal", "value": 0.0}}


def _void0_visit(node: dict):
    if node["type"] == "Identifier" and node["name"] == "undefined":
        return _void0()
    return None


def _pass_void0(ast: dict):
    _walk_expressions(ast, _void0_visit)


def _bool_visit(node: dict):
    if node["type"] == "Literal" and isinstance(node.get("value"), bool):
        return {"type": "UnaryExpression", "operator": "!", "prefix": True,
                "argument": {"type": "Literal",
                             "value": 0.0 if node["value"] else 1.0}}
    return None


def _pass_bools(ast: dict):
    _walk_expressions(ast, _bool_visit)


def _merge_vars(statements: list):
    i = 0
    while i + 1 < len(statements):
        cur, nxt = statements[i], statements[i + 1]
        if cur["type"] == "VariableDeclaration" \
                and nxt["type"] == "VariableDeclaration" \
                and cur["kind"] == nxt["kind"]:
            cur["declarations"].extend(nxt["declarations"])
            del statements[i + 1]
        else:
            i += 1


def _pass_merge_vars(ast: dict):
    _walk_statement_lists(ast, _merge_vars)


def _strip_dead(statements: list):
    cut = None
    for i, stmt in enumerate(statements):
        if stmt["type"] in ("ReturnStatement", "ThrowStatement"):
            cut = i + 1
            break
    if cut is None:
        return
    kept = statements[:cut]
    for stmt in statements[cut:]:
        if stmt["type"] == "FunctionDeclaration":
            kept.append(stmt)
        elif stmt["type"] == "VariableDeclaration" and stmt["kind"] == "var":
            for decl in stmt["declarations"]:
                decl["init"] = None  # hoisted name survives, value is dead
            kept.append(stmt)
    statements[:] = kept


def _remove_empty(statements: list):
    statements[:] = [s for s in statements
                     if s["type"] != "EmptyStatement"]


def _pass_strip_dead(ast: dict):
    _walk_statement_lists(ast, _remove_empty)
    _walk_statement_lists(ast, _strip_dead)


_PASSES = {
    "fold-constants": _pass_fold_constants,
    "canonical-void0": _pass_void0,
    "canonical-bools": _pass_bools,
    "merge-var-decls": _pass_merge_vars,
    "strip-dead-code": _pass_strip_dead,
}
