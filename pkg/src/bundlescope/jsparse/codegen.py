"""Compact JavaScript source generation from ESTree dicts.

Output is deterministic and re-parseable; it favors minifier-style
compactness since downstream consumers only look at token types.
"""

from __future__ import annotations

import json

_PRECEDENCE = {
    "SequenceExpression": 0,
    "AssignmentExpression": 2,
    "ArrowFunctionExpression": 2,
    "YieldExpression": 2,
    "ConditionalExpression": 3,
    "LogicalExpression": None,  # operator-dependent
    "BinaryExpression": None,
    "UnaryExpression": 16,
    "AwaitExpression": 16,
    "UpdateExpression": 16.5,
    "NewExpression": 18,
    "CallExpression": 17,
    "ImportExpression": 17,
    "ChainExpression": 17,
    "MemberExpression": 18,
    "TaggedTemplateExpression": 18,
}

_BINOP_PREC = {
    "??": 4.5,
    "||": 5, "&&": 6,
    "|": 7, "^": 8, "&": 9,
    "==": 10, "!=": 10, "===": 10, "!==": 10,
    "<": 11, ">": 11, "<=": 11, ">=": 11, "instanceof": 11, "in": 11,
    "<<": 12, ">>": 12, ">>>": 12,
    "+": 13, "-": 13,
    "*": 14, "/": 14, "%": 14,
    "**": 15,
}

_ID_CHARS = set("abcdefghijklmnopqrstuvwxyz"
                "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789$_")


def _is_word_char(ch: str) -> bool:
    return ch in _ID_CHARS or ord(ch) > 0x7F


class _Writer:
    def __init__(self):
        self.parts: list[str] = []
        self.last = ""

    def emit(self, text: str):
        if not text:
            return
        if self.parts:
            prev = self.last
            nxt = text[0]
            if (_is_word_char(prev) and _is_word_char(nxt)) \
                    or (prev == "+" and nxt == "+") \
                    or (prev == "-" and nxt == "-") \
                    or (prev == "/" and nxt in "/*"):
                self.parts.append(" ")
        self.parts.append(text)
        self.last = text[-1]

    def result(self) -> str:
        return "".join(self.parts)


def generate(node: dict) -> str:
    """Generate JavaScript source for an ESTree node."""
    w = _Writer()
    if node["type"] == "Program":
        _stmt_list(w, node["body"])
    else:
        _gen(w, node)
    return w.result()


def _stmt_list(w: _Writer, statements: list):
    for stmt in statements:
        _stmt(w, stmt)


def _prec(node: dict) -> float:
    t = node["type"]
    base = _PRECEDENCE.get(t, 20)
    if t in ("BinaryExpression", "LogicalExpression"):
        return _BINOP_PREC[node["operator"]]
    return base if base is not None else 20


def _paren(w: _Writer, node: dict, min_prec: float):
    if _prec(node) < min_prec:
        w.emit("(")
        _gen(w, node)
        w.emit(")")
    else:
        _gen(w, node)


def _stmt(w: _Writer, node: dict):
    t = node["type"]
    if t == "ExpressionStatement":
        expr = node["expression"]
        # a leading { or function/class keyword would change the parse
        if _starts_ambiguously(expr):
            w.emit("(")
            _gen(w, expr)
            w.emit(")")
            w.emit(";")
        else:
            _gen(w, expr)
            w.emit(";")
    elif t == "VariableDeclaration":
        _var_decl(w, node)
        w.emit(";")
    elif t == "BlockStatement":
        w.emit("{")
        _stmt_list(w, node["body"])
        w.emit("}")
    elif t == "EmptyStatement":
        w.emit(";")
    elif t == "IfStatement":
        w.emit("if(")
        _gen(w, node["test"])
        w.emit(")")
        consequent = node["consequent"]
        if node["alternate"] is not None and _ends_with_dangling_if(
                consequent):
            w.emit("{")
            _stmt(w, consequent)
            w.emit("}")
        else:
            _stmt(w, consequent)
        if node["alternate"] is not None:
            w.emit("else")
            _stmt(w, node["alternate"])
    elif t == "ReturnStatement":
        w.emit("return")
        if node["argument"] is not None:
            _gen(w, node["argument"])
        w.emit(";")
    elif t == "ThrowStatement":
        w.emit("throw")
        _gen(w, node["argument"])
        w.emit(";")
    elif t == "BreakStatement" or t == "ContinueStatement":
        w.emit("break" if t == "BreakStatement" else "continue")
        if node.get("label"):
            w.emit(node["label"]["name"])
        w.emit(";")
    elif t == "LabeledStatement":
        w.emit(node["label"]["name"])
        w.emit(":")
        _stmt(w, node["body"])
    elif t == "WhileStatement":
        w.emit("while(")
        _gen(w, node["test"])
        w.emit(")")
        _stmt(w, node["body"])
    elif t == "DoWhileStatement":
        w.emit("do")
        _stmt(w, node["body"])
        w.emit("while(")
        _gen(w, node["test"])
        w.emit(");")
    elif t == "ForStatement":
        w.emit("for(")
        if node["init"] is not None:
            if node["init"]["type"] == "VariableDeclaration":
                _var_decl(w, node["init"])
            else:
                _gen(w, node["init"])
        w.emit(";")
        if node["test"] is not None:
            _gen(w, node["test"])
        w.emit(";")
        if node["update"] is not None:
            _gen(w, node["update"])
        w.emit(")")
        _stmt(w, node["body"])
    elif t in ("ForInStatement", "ForOfStatement"):
        w.emit("for")
        if node.get("await"):
            w.emit("await")
        w.emit("(")
        if node["left"]["type"] == "VariableDeclaration":
            _var_decl(w, node["left"])
        else:
            _gen(w, node["left"])
        w.emit("in" if t == "ForInStatement" else "of")
        _paren(w, node["right"], 2)
        w.emit(")")
        _stmt(w, node["body"])
    elif t == "SwitchStatement":
        w.emit("switch(")
        _gen(w, node["discriminant"])
        w.emit("){")
        for case in node["cases"]:
            if case["test"] is not None:
                w.emit("case")
                _gen(w, case["test"])
            else:
                w.emit("default")
            w.emit(":")
            _stmt_list(w, case["consequent"])
        w.emit("}")
    elif t == "ThrowStatement":
        w.emit("throw")
        _gen(w, node["argument"])
        w.emit(";")
    elif t == "TryStatement":
        w.emit("try")
        _stmt(w, node["block"])
        if node["handler"] is not None:
            w.emit("catch")
            if node["handler"]["param"] is not None:
                w.emit("(")
                _gen(w, node["handler"]["param"])
                w.emit(")")
            _stmt(w, node["handler"]["body"])
        if node["finalizer"] is not None:
            w.emit("finally")
            _stmt(w, node["finalizer"])
    elif t == "FunctionDeclaration":
        _function(w, node, keyword=True)
    elif t == "ClassDeclaration":
        _class(w, node)
    elif t == "DebuggerStatement":
        w.emit("debugger;")
    elif t == "WithStatement":
        w.emit("with(")
        _gen(w, node["object"])
        w.emit(")")
        _stmt(w, node["body"])
    elif t == "ImportDeclaration":
        _import_decl(w, node)
    elif t == "ExportNamedDeclaration":
        _export_named(w, node)
    elif t == "ExportDefaultDeclaration":
        w.emit("export default")
        decl = node["declaration"]
        if decl["type"] in ("FunctionDeclaration", "ClassDeclaration"):
            _stmt(w, decl)
        else:
            _paren(w, decl, 2)
            w.emit(";")
    elif t == "ExportAllDeclaration":
        w.emit("export*")
        if node.get("exported") is not None:
            w.emit("as")
            w.emit(node["exported"].get("name")
                   or json.dumps(node["exported"]["value"]))
        w.emit("from")
        _gen(w, node["source"])
        w.emit(";")
    else:
        raise ValueError(f"cannot generate statement {t}")


def _starts_ambiguously(node: dict) -> bool:
    while True:
        t = node["type"]
        if t in ("ObjectExpression", "FunctionExpression", "ClassExpression",
                 "ObjectPattern"):
            return True
        if t in ("BinaryExpression", "LogicalExpression"):
            node = node["left"]
        elif t == "SequenceExpression":
            node = node["expressions"][0]
        elif t == "ConditionalExpression":
            node = node["test"]
        elif t == "AssignmentExpression":
            node = node["left"]
        elif t in ("MemberExpression", "CallExpression"):
            node = node["callee"] if t == "CallExpression" else node["object"]
        elif t == "ChainExpression":
            node = node["expression"]
        elif t == "TaggedTemplateExpression":
            node = node["tag"]
        elif t == "UpdateExpression" and not node["prefix"]:
            node = node["argument"]
        else:
            return False


def _ends_with_dangling_if(node: dict) -> bool:
    t = node["type"]
    if t == "IfStatement":
        if node["alternate"] is None:
            return True
        return _ends_with_dangling_if(node["alternate"])
    if t in ("WhileStatement", "ForStatement", "ForInStatement",
             "ForOfStatement", "WithStatement", "LabeledStatement"):
        return _ends_with_dangling_if(node["body"])
    return False


def _var_decl(w: _Writer, node: dict):
    w.emit(node["kind"])
    first = True
    for decl in node["declarations"]:
        if not first:
            w.emit(",")
        first = False
        _gen(w, decl["id"])
        if decl["init"] is not None:
            w.emit("=")
            _paren(w, decl["init"], 2)


def _import_decl(w: _Writer, node: dict):
    w.emit("import")
    specs = node["specifiers"]
    if specs:
        named = []
        first = True
        for spec in specs:
            if spec["type"] == "ImportDefaultSpecifier":
                if not first:
                    w.emit(",")
                w.emit(spec["local"]["name"])
                first = False
            elif spec["type"] == "ImportNamespaceSpecifier":
                if not first:
                    w.emit(",")
                w.emit("*as " + spec["local"]["name"])
                first = False
            else:
                named.append(spec)
        if named:
            if not first:
                w.emit(",")
            w.emit("{")
            for i, spec in enumerate(named):
                if i:
                    w.emit(",")
                imported = (spec["imported"].get("name")
                            or json.dumps(spec["imported"]["value"]))
                w.emit(imported)
                if imported != spec["local"]["name"]:
                    w.emit("as")
                    w.emit(spec["local"]["name"])
            w.emit("}")
        w.emit("from")
    _gen(w, node["source"])
    w.emit(";")


def _export_named(w: _Writer, node: dict):
    w.emit("export")
    if node["declaration"] is not None:
        _stmt(w, node["declaration"])
        return
    w.emit("{")
    for i, spec in enumerate(node["specifiers"]):
        if i:
            w.emit(",")
        local = spec["local"].get("name") or json.dumps(
            spec["local"]["value"])
        exported = spec["exported"].get("name") or json.dumps(
            spec["exported"]["value"])
        w.emit(local)
        if exported != local:
            w.emit("as")
            w.emit(exported)
    w.emit("}")
    if node.get("source") is not None:
        w.emit("from")
        _gen(w, node["source"])
    w.emit(";")


def _function(w: _Writer, node: dict, keyword: bool):
    if node.get("async"):
        w.emit("async")
    w.emit("function")
    if node.get("generator"):
        w.emit("*")
    if node.get("id"):
        w.emit(node["id"]["name"])
    _params(w, node["params"])
    _stmt(w, node["body"])


def _params(w: _Writer, params: list):
    w.emit("(")
    for i, param in enumerate(params):
        if i:
            w.emit(",")
        _gen(w, param)
    w.emit(")")


def _class(w: _Writer, node: dict):
    w.emit("class")
    if node.get("id"):
        w.emit(node["id"]["name"])
    if node.get("superClass") is not None:
        w.emit("extends")
        _paren(w, node["superClass"], 18)
    w.emit("{")
    for member in node["body"]["body"]:
        _class_member(w, member)
    w.emit("}")


def _class_member(w: _Writer, node: dict):
    if node.get("static"):
        w.emit("static")
    if node["type"] == "PropertyDefinition":
        _property_key(w, node)
        if node["value"] is not None:
            w.emit("=")
            _paren(w, node["value"], 2)
        w.emit(";")
        return
    value = node["value"]
    if node["kind"] in ("get", "set"):
        w.emit(node["kind"])
    else:
        if value.get("async"):
            w.emit("async")
        if value.get("generator"):
            w.emit("*")
    _property_key(w, node)
    _params(w, value["params"])
    _stmt(w, value["body"])


def _property_key(w: _Writer, node: dict):
    key = node["key"]
    if node.get("computed"):
        w.emit("[")
        _gen(w, key)
        w.emit("]")
    elif key["type"] == "PrivateIdentifier":
        w.emit("#" + key["name"])
    elif key["type"] == "Identifier":
        w.emit(key["name"])
    else:
        _gen(w, key)


def _number(value: float) -> str:
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError("cannot emit non-finite number literal")
    if value == int(value) and abs(value) < 2 ** 53:
        return str(int(value))
    return repr(value)


def _gen(w: _Writer, node: dict):
    t = node["type"]
    if t == "Identifier":
        w.emit(node["name"])
    elif t == "PrivateIdentifier":
        w.emit("#" + node["name"])
    elif t == "Literal":
        _literal(w, node)
    elif t == "ThisExpression":
        w.emit("this")
    elif t == "Super":
        w.emit("super")
    elif t == "ArrayExpression" or t == "ArrayPattern":
        w.emit("[")
        elements = node["elements"]
        for i, el in enumerate(elements):
            if i:
                w.emit(",")
            if el is None:
                if i == len(elements) - 1:
                    w.emit(",")
                continue
            _paren(w, el, 2) if el["type"] != "RestElement" else _gen(w, el)
        w.emit("]")
    elif t == "ObjectExpression" or t == "ObjectPattern":
        w.emit("{")
        for i, prop in enumerate(node["properties"]):
            if i:
                w.emit(",")
            _object_property(w, prop)
        w.emit("}")
    elif t == "Property":
        _object_property(w, node)
    elif t == "SpreadElement" or t == "RestElement":
        w.emit("...")
        _paren(w, node["argument"], 2)
    elif t == "AssignmentPattern":
        _gen(w, node["left"])
        w.emit("=")
        _paren(w, node["right"], 2)
    elif t == "FunctionExpression":
        _function(w, node, keyword=True)
    elif t == "ArrowFunctionExpression":
        _arrow(w, node)
    elif t == "ClassExpression":
        _class(w, node)
    elif t == "SequenceExpression":
        for i, expr in enumerate(node["expressions"]):
            if i:
                w.emit(",")
            _paren(w, expr, 2)
    elif t == "AssignmentExpression":
        _paren(w, node["left"], 16)
        w.emit(node["operator"])
        _paren(w, node["right"], 2)
    elif t == "ConditionalExpression":
        _paren(w, node["test"], 4)
        w.emit("?")
        _paren(w, node["consequent"], 2)
        w.emit(":")
        _paren(w, node["alternate"], 2)
    elif t in ("BinaryExpression", "LogicalExpression"):
        op = node["operator"]
        prec = _BINOP_PREC[op]
        right_assoc = op == "**"
        # ?? cannot be mixed with &&/|| without parens
        left_min = prec + 1 if right_assoc else prec
        right_min = prec if right_assoc else prec + 1
        left, right = node["left"], node["right"]
        if op == "??" and left["type"] == "LogicalExpression" \
                and left["operator"] in ("&&", "||"):
            left_min = 99
        if op == "??" and right["type"] == "LogicalExpression" \
                and right["operator"] in ("&&", "||"):
            right_min = 99
        if op in ("&&", "||") and left["type"] == "LogicalExpression" \
                and left["operator"] == "??":
            left_min = 99
        if op in ("&&", "||") and right["type"] == "LogicalExpression" \
                and right["operator"] == "??":
            right_min = 99
        _paren(w, left, left_min)
        w.emit(op)
        _paren(w, right, right_min)
    elif t == "UnaryExpression":
        w.emit(node["operator"])
        _paren(w, node["argument"], 16)
    elif t == "UpdateExpression":
        if node["prefix"]:
            w.emit(node["operator"])
            _paren(w, node["argument"], 16)
        else:
            _paren(w, node["argument"], 17)
            w.emit(node["operator"])
    elif t == "AwaitExpression":
        w.emit("await")
        _paren(w, node["argument"], 16)
    elif t == "YieldExpression":
        w.emit("yield")
        if node.get("delegate"):
            w.emit("*")
        if node["argument"] is not None:
            _paren(w, node["argument"], 2)
    elif t == "MemberExpression":
        obj = node["object"]
        obj_min = 18
        if obj["type"] == "NewExpression" and not obj["arguments"]:
            obj_min = 99  # new X.a would bind the member to the callee
        if obj["type"] == "Literal" and isinstance(obj.get("value"),
                                                   (int, float)) \
                and not isinstance(obj.get("value"), bool) \
                and not obj.get("bigint") and "regex" not in obj:
            obj_min = 99  # 5.toString() does not lex
        _paren(w, obj, obj_min)
        if node.get("computed"):
            w.emit("?.[" if node.get("optional") else "[")
            _gen(w, node["property"])
            w.emit("]")
        else:
            w.emit("?." if node.get("optional") else ".")
            prop = node["property"]
            if prop["type"] == "PrivateIdentifier":
                w.emit("#" + prop["name"])
            else:
                w.emit(prop["name"])
    elif t == "ChainExpression":
        _gen(w, node["expression"])
    elif t == "CallExpression":
        callee_min = 17
        if node["callee"]["type"] == "NewExpression" \
                and not node["callee"]["arguments"]:
            callee_min = 99
        _paren(w, node["callee"], callee_min)
        if node.get("optional"):
            w.emit("?.")
        _arguments(w, node["arguments"])
    elif t == "NewExpression":
        w.emit("new")
        _paren(w, node["callee"], 18.5)
        _arguments(w, node["arguments"])
    elif t == "ImportExpression":
        w.emit("import")
        w.emit("(")
        _paren(w, node["source"], 2)
        w.emit(")")
    elif t == "MetaProperty":
        w.emit(node["meta"]["name"] + "." + node["property"]["name"])
    elif t == "TemplateLiteral":
        _template(w, node)
    elif t == "TaggedTemplateExpression":
        _paren(w, node["tag"], 18)
        _template(w, node["quasi"])
    else:
        raise ValueError(f"cannot generate expression {t}")


def _arguments(w: _Writer, args: list):
    w.emit("(")
    for i, arg in enumerate(args):
        if i:
            w.emit(",")
        if arg["type"] == "SpreadElement":
            _gen(w, arg)
        else:
            _paren(w, arg, 2)
    w.emit(")")


def _arrow(w: _Writer, node: dict):
    if node.get("async"):
        w.emit("async")
    _params(w, node["params"])
    w.emit("=>")
    body = node["body"]
    if body["type"] == "BlockStatement":
        _stmt(w, body)
    elif body["type"] in ("ObjectExpression", "SequenceExpression") \
            or _prec(body) < 2:
        w.emit("(")
        _gen(w, body)
        w.emit(")")
    else:
        _gen(w, body)


def _template(w: _Writer, node: dict):
    out = ["`"]
    for i, quasi in enumerate(node["quasis"]):
        out.append(quasi["value"]["raw"])
        if not quasi["tail"]:
            out.append("${")
            inner = _Writer()
            _gen(inner, node["expressions"][i])
            out.append(inner.result())
            out.append("}")
    out.append("`")
    w.emit("".join(out))


def _object_property(w: _Writer, node: dict):
    if node["type"] in ("SpreadElement", "RestElement"):
        w.emit("...")
        _paren(w, node["argument"], 2)
        return
    value = node["value"]
    if node.get("shorthand"):
        _gen(w, value)
        return
    if node.get("method") or node["kind"] in ("get", "set"):
        if node["kind"] in ("get", "set"):
            w.emit(node["kind"])
        else:
            if value.get("async"):
                w.emit("async")
            if value.get("generator"):
                w.emit("*")
        _property_key(w, node)
        _params(w, value["params"])
        _stmt(w, value["body"])
        return
    _property_key(w, node)
    w.emit(":")
    _paren(w, value, 2)


def _literal(w: _Writer, node: dict):
    if "regex" in node:
        regex = node["regex"]
        w.emit("/" + regex["pattern"] + "/" + regex["flags"])
        return
    value = node["value"]
    if node.get("bigint"):
        w.emit(str(int(value)) + "n")
    elif value is None:
        w.emit("null")
    elif value is True:
        w.emit("true")
    elif value is False:
        w.emit("false")
    elif isinstance(value, str):
        text = json.dumps(value)
        w.emit(text.replace("\u2028", "\\u2028").replace("\u2029",
                                                         "\\u2029"))
    elif isinstance(value, (int, float)):
        w.emit(_number(float(value)))
    else:
        raise ValueError(f"cannot emit literal {value!r}")
