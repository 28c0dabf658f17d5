"""Combine package source files into one statically analyzable bundle.

Each file body is wrapped as function(module, exports, require){...} and
the wrappers are collected in a single top-level array, mimicking the
module-map shape real bundlers emit. ESM import/export constructs are
rewritten to CJS style. The result is dysfunctional by design; only its
syntactic shape matters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from bundlescope.errors import AllFilesUnparseable, ParseError
from bundlescope.jsparse import generate, parse_auto

log = logging.getLogger(__name__)


@dataclass
class PseudoBundle:
    source: str
    file_map: list  # (original path, function index)
    warnings: list = field(default_factory=list)


def _ident(name: str) -> dict:
    return {"type": "Identifier", "name": name}


def _literal(value) -> dict:
    return {"type": "Literal", "value": value}


def _require_call(source_value) -> dict:
    return {"type": "CallExpression", "callee": _ident("require"),
            "arguments": [_literal(source_value)], "optional": False}


def _exports_member(name: str) -> dict:
    return {"type": "MemberExpression",
            "object": {"type": "MemberExpression",
                       "object": _ident("module"),
                       "property": _ident("exports"),
                       "computed": False, "optional": False},
            "property": _ident(name), "computed": False,
            "optional": False}


def _assign_statement(target: dict, value: dict) -> dict:
    return {"type": "ExpressionStatement",
            "expression": {"type": "AssignmentExpression", "operator": "=",
                           "left": target, "right": value}}


def _declared_names(declaration: dict) -> list:
    """Names bound by a declaration, for named-export rewriting."""
    if declaration["type"] in ("FunctionDeclaration", "ClassDeclaration"):
        return [declaration["id"]["name"]] if declaration.get("id") else []
    names: list = []

    def from_pattern(pattern):
        if pattern is None:
            return
        t = pattern["type"]
        if t == "Identifier":
            names.append(pattern["name"])
        elif t == "ArrayPattern":
            for element in pattern["elements"]:
                from_pattern(element)
        elif t == "ObjectPattern":
            for prop in pattern["properties"]:
                if prop["type"] == "RestElement":
                    from_pattern(prop["argument"])
                else:
                    from_pattern(prop["value"])
        elif t in ("RestElement", "SpreadElement"):
            from_pattern(pattern["argument"])
        elif t == "AssignmentPattern":
            from_pattern(pattern["left"])

    for declarator in declaration.get("declarations", []):
        from_pattern(declarator["id"])
    return names


def _rewrite_dynamic(node):
    """Rewrite import() to require() and import.meta to {} in place."""
    if isinstance(node, dict):
        t = node.get("type")
        if t == "ImportExpression":
            rewritten = _require_call_node(node["source"])
            node.clear()
            node.update(rewritten)
            _rewrite_dynamic(node["arguments"])
            return
        if t == "MetaProperty" and node["meta"]["name"] == "import":
            node.clear()
            node.update({"type": "ObjectExpression", "properties": []})
            return
        for value in node.values():
            _rewrite_dynamic(value)
    elif isinstance(node, list):
        for item in node:
            _rewrite_dynamic(item)


def _require_call_node(source_expr: dict) -> dict:
    return {"type": "CallExpression", "callee": _ident("require"),
            "arguments": [source_expr], "optional": False}


def _rewrite_module_body(body: list) -> list:
    """Rewrite top-level ESM statements to CJS equivalents."""
    out: list = []
    counter = 0

    def fresh() -> str:
        nonlocal counter
        counter += 1
        return f"_m{counter}"

    for stmt in body:
        t = stmt["type"]
        if t == "ImportDeclaration":
            source_value = stmt["source"]["value"]
            if not stmt["specifiers"]:
                out.append({"type": "ExpressionStatement",
                            "expression": _require_call(source_value)})
                continue
            temp = fresh()
            declarators = [{"type": "VariableDeclarator",
                            "id": _ident(temp),
                            "init": _require_call(source_value)}]
            for spec in stmt["specifiers"]:
                local = spec["local"]["name"]
                if spec["type"] == "ImportDefaultSpecifier":
                    member = "default"
                elif spec["type"] == "ImportNamespaceSpecifier":
                    member = None
                else:
                    imported = spec["imported"]
                    member = imported.get("name") or imported.get("value")
                init = (_ident(temp) if member is None else
                        {"type": "MemberExpression", "object": _ident(temp),
                         "property": _ident(member), "computed": False,
                         "optional": False})
                declarators.append({"type": "VariableDeclarator",
                                    "id": _ident(local), "init": init})
            out.append({"type": "VariableDeclaration", "kind": "var",
                        "declarations": declarators})
        elif t == "ExportDefaultDeclaration":
            declaration = stmt["declaration"]
            if declaration["type"] in ("FunctionDeclaration",
                                       "ClassDeclaration") \
                    and declaration.get("id"):
                out.append(declaration)
                out.append(_assign_statement(
                    _exports_member("default"),
                    _ident(declaration["id"]["name"])))
            else:
                if declaration["type"] == "FunctionDeclaration":
                    declaration = dict(declaration,
                                       type="FunctionExpression")
                elif declaration["type"] == "ClassDeclaration":
                    declaration = dict(declaration, type="ClassExpression")
                out.append(_assign_statement(_exports_member("default"),
                                             declaration))
        elif t == "ExportNamedDeclaration":
            if stmt.get("declaration"):
                out.append(stmt["declaration"])
                for name in _declared_names(stmt["declaration"]):
                    out.append(_assign_statement(_exports_member(name),
                                                 _ident(name)))
            elif stmt.get("source"):
                temp = fresh()
                out.append({"type": "VariableDeclaration", "kind": "var",
                            "declarations": [{
                                "type": "VariableDeclarator",
                                "id": _ident(temp),
                                "init": _require_call(
                                    stmt["source"]["value"])}]})
                for spec in stmt["specifiers"]:
                    exported = spec["exported"].get("name") \
                        or spec["exported"].get("value")
                    local = spec["local"].get("name") \
                        or spec["local"].get("value")
                    out.append(_assign_statement(
                        _exports_member(exported),
                        {"type": "MemberExpression", "object": _ident(temp),
                         "property": _ident(local), "computed": False,
                         "optional": False}))
            else:
                for spec in stmt["specifiers"]:
                    exported = spec["exported"].get("name") \
                        or spec["exported"].get("value")
                    local = spec["local"].get("name") \
                        or spec["local"].get("value")
                    out.append(_assign_statement(_exports_member(exported),
                                                 _ident(local)))
        elif t == "ExportAllDeclaration":
            temp = fresh()
            out.append({"type": "VariableDeclaration", "kind": "var",
                        "declarations": [{
                            "type": "VariableDeclarator",
                            "id": _ident(temp),
                            "init": _require_call(
                                stmt["source"]["value"])}]})
            if stmt.get("exported"):
                exported = stmt["exported"].get("name") \
                    or stmt["exported"].get("value")
                out.append(_assign_statement(_exports_member(exported),
                                             _ident(temp)))
        else:
            out.append(stmt)
    return out


def rewrite_to_cjs(ast: dict) -> dict:
    """CJS-rewritten copy of a parsed module (mutates the input)."""
    ast["body"] = _rewrite_module_body(ast["body"])
    _rewrite_dynamic(ast)
    return ast


def pseudo_bundle(files) -> PseudoBundle:
    """Wrap (path, source) pairs into the pseudo-bundle array shape."""
    files = list(files)
    if not files:
        raise AllFilesUnparseable("no input files")
    wrappers = []
    file_map = []
    warnings = []
    for path, source in files:
        try:
            ast = parse_auto(source)
        except (ParseError, RecursionError) as exc:
            warnings.append(f"{path}: dropped ({exc})")
            log.warning("pseudo-bundle: dropping %s: %s", path, exc)
            continue
        rewrite_to_cjs(ast)
        wrapper = {"type": "FunctionExpression", "id": None,
                   "params": [_ident("module"), _ident("exports"),
                              _ident("require")],
                   "body": {"type": "BlockStatement", "body": ast["body"]},
                   "generator": False, "async": False}
        file_map.append((path, len(wrappers)))
        wrappers.append(wrapper)
    if not wrappers:
        raise AllFilesUnparseable("all input files failed to parse")
    program = {"type": "Program",
               "body": [{"type": "ExpressionStatement",
                         "expression": {"type": "ArrayExpression",
                                        "elements": wrappers}}],
               "sourceType": "script"}
    return PseudoBundle(source=generate(program), file_map=file_map,
                        warnings=warnings)
