"""Recursive-descent ECMAScript parser producing ESTree-shaped dicts.

Covers the language subset emitted by npm packages and bundlers: ES2020
expressions and statements, modules, classes, async/generators, optional
chaining and nullish coalescing. No JSX, no TypeScript.
"""

from __future__ import annotations

from bundlescope.errors import ParseError
from bundlescope.jsparse.lexer import Lexer, Token

KEYWORDS = {
    "break", "case", "catch", "class", "const", "continue", "debugger",
    "default", "delete", "do", "else", "enum", "export", "extends",
    "finally", "for", "function", "if", "import", "in", "instanceof",
    "new", "return", "super", "switch", "this", "throw", "try", "typeof",
    "var", "void", "while", "with",
}

ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "**=", "<<=", ">>=",
              ">>>=", "&=", "|=", "^=", "&&=", "||=", "??="}

# binding power, left-assoc binary and logical operators
BINARY_PRECEDENCE = {
    "??": 1,
    "||": 2, "&&": 3,
    "|": 4, "^": 5, "&": 6,
    "==": 7, "!=": 7, "===": 7, "!==": 7,
    "<": 8, ">": 8, "<=": 8, ">=": 8, "instanceof": 8, "in": 8,
    "<<": 9, ">>": 9, ">>>": 9,
    "+": 10, "-": 10,
    "*": 11, "/": 11, "%": 11,
    "**": 12,
}

UNARY_OPS = {"+", "-", "~", "!", "delete", "void", "typeof"}


def parse(source: str, module: bool = True) -> dict:
    """Parse source text and return an ESTree Program dict."""
    return _Parser(source, module=module).parse_program()


def parse_auto(source: str) -> dict:
    """Parse with module goal, falling back to script goal."""
    try:
        return parse(source, module=True)
    except ParseError:
        return parse(source, module=False)


class _Parser:
    def __init__(self, source: str, module: bool):
        self.lexer = Lexer(source)
        self.module = module
        self.tok: Token = None  # type: ignore[assignment]
        self.in_generator = False
        self.in_async = False
        self._advance()

    # -- token plumbing ----------------------------------------------------

    def _advance(self, regex_allowed: bool = True):
        self.tok = self.lexer.next_token(regex_allowed)

    def error(self, message: str) -> ParseError:
        return ParseError(f"{message}, got {self.tok.kind} "
                          f"{self.tok.value!r}",
                          line=self.tok.line, column=self.tok.col)

    def at(self, value: str) -> bool:
        return self.tok.kind == "punct" and self.tok.value == value

    def at_name(self, value: str) -> bool:
        return self.tok.kind == "name" and self.tok.value == value

    def eat(self, value: str, regex_allowed: bool = True) -> bool:
        if self.at(value):
            self._advance(regex_allowed)
            return True
        return False

    def expect(self, value: str, regex_allowed: bool = True):
        if not self.at(value):
            raise self.error(f"expected {value!r}")
        self._advance(regex_allowed)

    def eat_name(self, value: str) -> bool:
        if self.at_name(value):
            self._advance()
            return True
        return False

    def expect_name(self, value: str):
        if not self.at_name(value):
            raise self.error(f"expected keyword {value!r}")
        self._advance()

    def _ident_name(self) -> str:
        if self.tok.kind != "name":
            raise self.error("expected identifier")
        name = self.tok.value
        self._advance(regex_allowed=False)
        return name

    def semicolon(self):
        """Consume a statement terminator, applying ASI rules."""
        if self.eat(";"):
            return
        if self.at("}") or self.tok.kind == "eof" or self.tok.newline_before:
            return
        raise self.error("expected semicolon")

    def _snapshot(self):
        return (self.lexer.pos, self.lexer.line, self.lexer.line_start,
                self.tok)

    def _restore(self, state):
        (self.lexer.pos, self.lexer.line, self.lexer.line_start,
         self.tok) = state

    # -- program -----------------------------------------------------------

    def parse_program(self) -> dict:
        body = []
        while self.tok.kind != "eof":
            body.append(self.parse_statement(top_level=True))
        return {"type": "Program", "body": body,
                "sourceType": "module" if self.module else "script"}

    # -- statements ---------------------------------------------------------

    def parse_statement(self, top_level: bool = False) -> dict:
        tok = self.tok
        if tok.kind == "punct":
            if tok.value == "{":
                return self.parse_block()
            if tok.value == ";":
                self._advance()
                return {"type": "EmptyStatement"}
        if tok.kind == "name":
            word = tok.value
            if word == "var" or word == "const":
                return self.parse_var_statement(word)
            if word == "let":
                state = self._snapshot()
                self._advance()
                if (self.tok.kind == "name" and self.tok.value not in KEYWORDS) \
                        or self.at("[") or self.at("{"):
                    self._restore(state)
                    return self.parse_var_statement("let")
                self._restore(state)
            if word == "function":
                return self.parse_function(declaration=True)
            if word == "async":
                state = self._snapshot()
                self._advance()
                if self.at_name("function") and not self.tok.newline_before:
                    return self.parse_function(declaration=True,
                                               is_async=True)
                self._restore(state)
            if word == "class":
                return self.parse_class(declaration=True)
            if word == "if":
                return self.parse_if()
            if word == "for":
                return self.parse_for()
            if word == "while":
                return self.parse_while()
            if word == "do":
                return self.parse_do_while()
            if word == "switch":
                return self.parse_switch()
            if word == "return":
                self._advance()
                arg = None
                if not (self.at(";") or self.at("}") or
                        self.tok.kind == "eof" or self.tok.newline_before):
                    arg = self.parse_expression()
                self.semicolon()
                return {"type": "ReturnStatement", "argument": arg}
            if word == "throw":
                self._advance()
                if self.tok.newline_before:
                    raise self.error("newline after throw")
                arg = self.parse_expression()
                self.semicolon()
                return {"type": "ThrowStatement", "argument": arg}
            if word == "try":
                return self.parse_try()
            if word in ("break", "continue"):
                self._advance()
                label = None
                if (self.tok.kind == "name"
                        and self.tok.value not in KEYWORDS
                        and not self.tok.newline_before):
                    label = {"type": "Identifier", "name": self._ident_name()}
                self.semicolon()
                node_type = ("BreakStatement" if word == "break"
                             else "ContinueStatement")
                return {"type": node_type, "label": label}
            if word == "debugger":
                self._advance()
                self.semicolon()
                return {"type": "DebuggerStatement"}
            if word == "with":
                if self.module:
                    raise self.error("'with' is not allowed in modules")
                self._advance()
                self.expect("(")
                obj = self.parse_expression()
                self.expect(")")
                body = self.parse_statement()
                return {"type": "WithStatement", "object": obj, "body": body}
            if word == "import" and top_level and self.module:
                state = self._snapshot()
                self._advance()
                if not (self.at("(") or self.at(".")):
                    self._restore(state)
                    return self.parse_import()
                self._restore(state)
            if word == "export" and top_level and self.module:
                return self.parse_export()
        # labeled statement: identifier ':'
        if tok.kind == "name" and tok.value not in KEYWORDS:
            state = self._snapshot()
            name = tok.value
            self._advance(regex_allowed=False)
            if self.at(":"):
                self._advance()
                body = self.parse_statement()
                return {"type": "LabeledStatement",
                        "label": {"type": "Identifier", "name": name},
                        "body": body}
            self._restore(state)
        expr = self.parse_expression()
        self.semicolon()
        return {"type": "ExpressionStatement", "expression": expr}

    def parse_block(self) -> dict:
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                raise self.error("unterminated block")
            body.append(self.parse_statement())
        self._advance(regex_allowed=True)
        return {"type": "BlockStatement", "body": body}

    def parse_var_statement(self, kind: str) -> dict:
        decl = self.parse_var_declaration(kind)
        self.semicolon()
        return decl

    def parse_var_declaration(self, kind: str, no_in: bool = False) -> dict:
        self.expect_name(kind)
        declarations = [self.parse_var_declarator(no_in)]
        while self.eat(","):
            declarations.append(self.parse_var_declarator(no_in))
        return {"type": "VariableDeclaration", "kind": kind,
                "declarations": declarations}

    def parse_var_declarator(self, no_in: bool = False) -> dict:
        target = self.parse_binding_target()
        init = None
        if self.eat("="):
            init = self.parse_assignment(no_in=no_in)
        return {"type": "VariableDeclarator", "id": target, "init": init}

    def parse_if(self) -> dict:
        self.expect_name("if")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        consequent = self.parse_statement()
        alternate = None
        if self.eat_name("else"):
            alternate = self.parse_statement()
        return {"type": "IfStatement", "test": test,
                "consequent": consequent, "alternate": alternate}

    def parse_for(self) -> dict:
        self.expect_name("for")
        is_await = self.eat_name("await")
        self.expect("(")
        init = None
        if self.at(";"):
            pass
        elif (self.at_name("var") or self.at_name("const")
              or self.at_name("let")):
            kind = self.tok.value
            if kind == "let":
                state = self._snapshot()
                self._advance()
                ok = ((self.tok.kind == "name"
                       and self.tok.value not in KEYWORDS)
                      or self.at("[") or self.at("{"))
                self._restore(state)
                if not ok:
                    init = self.parse_expression(no_in=True)
                    return self._finish_for(init, is_await)
            init = self.parse_var_declaration(kind, no_in=True)
        else:
            init = self.parse_expression(no_in=True)
        return self._finish_for(init, is_await)

    def _finish_for(self, init, is_await: bool) -> dict:
        if init is not None and (self.at_name("in") or self.at_name("of")):
            of = self.eat_name("of")
            if not of:
                self.expect_name("in")
            left = init
            if left["type"] != "VariableDeclaration":
                left = _to_pattern(left, self.error)
            right = (self.parse_assignment() if of
                     else self.parse_expression())
            self.expect(")")
            body = self.parse_statement()
            node = {"type": "ForOfStatement" if of else "ForInStatement",
                    "left": left, "right": right, "body": body}
            if of:
                node["await"] = is_await
            return node
        self.expect(";")
        test = None if self.at(";") else self.parse_expression()
        self.expect(";")
        update = None if self.at(")") else self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return {"type": "ForStatement", "init": init, "test": test,
                "update": update, "body": body}

    def parse_while(self) -> dict:
        self.expect_name("while")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return {"type": "WhileStatement", "test": test, "body": body}

    def parse_do_while(self) -> dict:
        self.expect_name("do")
        body = self.parse_statement()
        self.expect_name("while")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        self.eat(";")
        return {"type": "DoWhileStatement", "body": body, "test": test}

    def parse_switch(self) -> dict:
        self.expect_name("switch")
        self.expect("(")
        disc = self.parse_expression()
        self.expect(")")
        self.expect("{")
        cases = []
        while not self.at("}"):
            if self.eat_name("case"):
                test = self.parse_expression()
            elif self.eat_name("default"):
                test = None
            else:
                raise self.error("expected case or default")
            self.expect(":")
            consequent = []
            while not (self.at("}") or self.at_name("case")
                       or self.at_name("default")):
                consequent.append(self.parse_statement())
            cases.append({"type": "SwitchCase", "test": test,
                          "consequent": consequent})
        self._advance()
        return {"type": "SwitchStatement", "discriminant": disc,
                "cases": cases}

    def parse_try(self) -> dict:
        self.expect_name("try")
        block = self.parse_block()
        handler = None
        finalizer = None
        if self.eat_name("catch"):
            param = None
            if self.eat("("):
                param = self.parse_binding_target()
                self.expect(")")
            body = self.parse_block()
            handler = {"type": "CatchClause", "param": param, "body": body}
        if self.eat_name("finally"):
            finalizer = self.parse_block()
        if handler is None and finalizer is None:
            raise self.error("missing catch or finally after try")
        return {"type": "TryStatement", "block": block, "handler": handler,
                "finalizer": finalizer}

    # -- modules -------------------------------------------------------------

    def parse_import(self) -> dict:
        self.expect_name("import")
        specifiers = []
        if self.tok.kind == "str":
            source = self._string_literal()
            self.semicolon()
            return {"type": "ImportDeclaration", "specifiers": [],
                    "source": source}
        if self.tok.kind == "name" and self.tok.value not in KEYWORDS:
            specifiers.append({
                "type": "ImportDefaultSpecifier",
                "local": {"type": "Identifier", "name": self._ident_name()}})
            if self.at(","):
                self._advance()
        if self.at("*"):
            self._advance()
            self.expect_name("as")
            specifiers.append({
                "type": "ImportNamespaceSpecifier",
                "local": {"type": "Identifier", "name": self._ident_name()}})
        elif self.at("{"):
            self._advance()
            while not self.at("}"):
                imported = self._module_export_name()
                local = imported
                if self.eat_name("as"):
                    local = {"type": "Identifier", "name": self._ident_name()}
                specifiers.append({"type": "ImportSpecifier",
                                   "imported": imported, "local": local})
                if not self.eat(","):
                    break
            self.expect("}")
        self.expect_name("from")
        source = self._string_literal()
        self.semicolon()
        return {"type": "ImportDeclaration", "specifiers": specifiers,
                "source": source}

    def _module_export_name(self) -> dict:
        if self.tok.kind == "str":
            return self._string_literal()
        if self.tok.kind != "name":
            raise self.error("expected export name")
        name = self.tok.value
        self._advance()
        return {"type": "Identifier", "name": name}

    def _string_literal(self) -> dict:
        if self.tok.kind != "str":
            raise self.error("expected string literal")
        node = {"type": "Literal", "value": self.tok.value}
        self._advance(regex_allowed=False)
        return node

    def parse_export(self) -> dict:
        self.expect_name("export")
        if self.eat("*"):
            exported = None
            if self.eat_name("as"):
                exported = self._module_export_name()
            self.expect_name("from")
            source = self._string_literal()
            self.semicolon()
            return {"type": "ExportAllDeclaration", "exported": exported,
                    "source": source}
        if self.eat_name("default"):
            if self.at_name("function") or self.at_name("class") or (
                    self.at_name("async")):
                state = self._snapshot()
                if self.eat_name("async"):
                    if self.at_name("function") and not self.tok.newline_before:
                        decl = self.parse_function(declaration=True,
                                                   is_async=True,
                                                   optional_name=True)
                        return {"type": "ExportDefaultDeclaration",
                                "declaration": decl}
                    self._restore(state)
                elif self.at_name("function"):
                    decl = self.parse_function(declaration=True,
                                               optional_name=True)
                    return {"type": "ExportDefaultDeclaration",
                            "declaration": decl}
                else:
                    decl = self.parse_class(declaration=True,
                                            optional_name=True)
                    return {"type": "ExportDefaultDeclaration",
                            "declaration": decl}
            expr = self.parse_assignment()
            self.semicolon()
            return {"type": "ExportDefaultDeclaration", "declaration": expr}
        if self.at("{"):
            self._advance()
            specifiers = []
            while not self.at("}"):
                local = self._module_export_name()
                exported = local
                if self.eat_name("as"):
                    exported = self._module_export_name()
                specifiers.append({"type": "ExportSpecifier",
                                   "local": local, "exported": exported})
                if not self.eat(","):
                    break
            self.expect("}")
            source = None
            if self.eat_name("from"):
                source = self._string_literal()
            self.semicolon()
            return {"type": "ExportNamedDeclaration", "declaration": None,
                    "specifiers": specifiers, "source": source}
        declaration = self.parse_statement()
        if declaration["type"] not in ("VariableDeclaration",
                                       "FunctionDeclaration",
                                       "ClassDeclaration"):
            raise self.error("invalid export declaration")
        return {"type": "ExportNamedDeclaration", "declaration": declaration,
                "specifiers": [], "source": None}

    # -- functions and classes -----------------------------------------------

    def parse_function(self, declaration: bool, is_async: bool = False,
                       optional_name: bool = False) -> dict:
        self.expect_name("function")
        is_generator = self.eat("*")
        name = None
        if self.tok.kind == "name" and self.tok.value not in KEYWORDS:
            name = {"type": "Identifier", "name": self._ident_name()}
        elif declaration and not optional_name:
            raise self.error("function declaration requires a name")
        params = self.parse_params()
        body = self._function_body(is_async, is_generator)
        return {"type": ("FunctionDeclaration" if declaration
                         else "FunctionExpression"),
                "id": name, "params": params, "body": body,
                "generator": is_generator, "async": is_async}

    def _function_body(self, is_async: bool, is_generator: bool) -> dict:
        saved = (self.in_async, self.in_generator)
        self.in_async, self.in_generator = is_async, is_generator
        try:
            return self.parse_block()
        finally:
            self.in_async, self.in_generator = saved

    def parse_params(self) -> list:
        self.expect("(")
        params = []
        while not self.at(")"):
            if self.eat("..."):
                params.append({"type": "RestElement",
                               "argument": self.parse_binding_target()})
            else:
                target = self.parse_binding_target()
                if self.eat("="):
                    target = {"type": "AssignmentPattern", "left": target,
                              "right": self.parse_assignment()}
                params.append(target)
            if not self.eat(","):
                break
        self.expect(")", regex_allowed=False)
        return params

    def parse_binding_target(self) -> dict:
        if self.at("["):
            self._advance()
            elements = []
            while not self.at("]"):
                if self.at(","):
                    elements.append(None)
                    self._advance()
                    continue
                if self.eat("..."):
                    elements.append({"type": "RestElement",
                                     "argument": self.parse_binding_target()})
                else:
                    target = self.parse_binding_target()
                    if self.eat("="):
                        target = {"type": "AssignmentPattern",
                                  "left": target,
                                  "right": self.parse_assignment()}
                    elements.append(target)
                if not self.eat(","):
                    break
            self.expect("]", regex_allowed=False)
            return {"type": "ArrayPattern", "elements": elements}
        if self.at("{"):
            self._advance()
            properties = []
            while not self.at("}"):
                if self.eat("..."):
                    properties.append({"type": "RestElement",
                                       "argument": self.parse_binding_target()})
                else:
                    computed = False
                    if self.at("["):
                        self._advance()
                        key = self.parse_assignment()
                        self.expect("]")
                        computed = True
                    else:
                        key = self._property_key()
                    if self.eat(":"):
                        value = self.parse_binding_target()
                    else:
                        value = dict(key)
                    if self.eat("="):
                        value = {"type": "AssignmentPattern", "left": value,
                                 "right": self.parse_assignment()}
                    properties.append({"type": "Property", "key": key,
                                       "value": value, "kind": "init",
                                       "computed": computed,
                                       "method": False,
                                       "shorthand": value is key})
                if not self.eat(","):
                    break
            self.expect("}", regex_allowed=False)
            return {"type": "ObjectPattern", "properties": properties}
        if self.tok.kind == "name":
            return {"type": "Identifier", "name": self._ident_name()}
        raise self.error("expected binding target")

    def _property_key(self) -> dict:
        tok = self.tok
        if tok.kind == "name":
            self._advance(regex_allowed=False)
            return {"type": "Identifier", "name": tok.value}
        if tok.kind in ("num", "str", "bigint"):
            self._advance(regex_allowed=False)
            return {"type": "Literal", "value": tok.value}
        raise self.error("expected property key")

    def parse_class(self, declaration: bool,
                    optional_name: bool = False) -> dict:
        self.expect_name("class")
        name = None
        if self.tok.kind == "name" and self.tok.value not in KEYWORDS:
            name = {"type": "Identifier", "name": self._ident_name()}
        elif declaration and not optional_name:
            raise self.error("class declaration requires a name")
        superclass = None
        if self.eat_name("extends"):
            superclass = self.parse_unary_postfix()
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.eat(";"):
                continue
            body.append(self.parse_class_member())
        self._advance(regex_allowed=False)
        return {"type": ("ClassDeclaration" if declaration
                         else "ClassExpression"),
                "id": name, "superClass": superclass,
                "body": {"type": "ClassBody", "body": body}}

    def parse_class_member(self) -> dict:
        is_static = False
        if self.at_name("static"):
            state = self._snapshot()
            self._advance()
            if self.at("(") or self.at("=") or self.at(";") or self.at("}"):
                self._restore(state)
            else:
                is_static = True
        kind = "method"
        is_async = False
        is_generator = False
        if self.at_name("async"):
            state = self._snapshot()
            self._advance()
            if (self.at("(") or self.at("=") or self.at(";") or self.at("}")
                    or self.tok.newline_before):
                self._restore(state)
            else:
                is_async = True
        if self.at("*"):
            self._advance()
            is_generator = True
        if (self.at_name("get") or self.at_name("set")) and not is_async \
                and not is_generator:
            state = self._snapshot()
            accessor = self.tok.value
            self._advance()
            if self.at("(") or self.at("=") or self.at(";") or self.at("}"):
                self._restore(state)
            else:
                kind = accessor
        key, computed = self._class_member_key()
        if self.at("("):
            params = self.parse_params()
            body = self._function_body(is_async, is_generator)
            value = {"type": "FunctionExpression", "id": None,
                     "params": params, "body": body,
                     "generator": is_generator, "async": is_async}
            mkind = kind if kind in ("get", "set") else (
                "constructor" if (not is_static and not computed
                                  and key.get("name") == "constructor")
                else "method")
            return {"type": "MethodDefinition", "key": key,
                    "value": value, "kind": mkind, "computed": computed,
                    "static": is_static}
        value = None
        if self.eat("="):
            value = self.parse_assignment()
        self.semicolon()
        return {"type": "PropertyDefinition", "key": key, "value": value,
                "computed": computed, "static": is_static}

    def _class_member_key(self) -> tuple[dict, bool]:
        if self.at("["):
            self._advance()
            key = self.parse_assignment()
            self.expect("]", regex_allowed=False)
            return key, True
        if self.at("#"):
            self._advance()
            return {"type": "PrivateIdentifier",
                    "name": self._ident_name()}, False
        return self._property_key(), False

    # -- expressions -----------------------------------------------------------

    def parse_expression(self, no_in: bool = False) -> dict:
        expr = self.parse_assignment(no_in=no_in)
        if self.at(","):
            expressions = [expr]
            while self.eat(","):
                expressions.append(self.parse_assignment(no_in=no_in))
            return {"type": "SequenceExpression", "expressions": expressions}
        return expr

    def parse_assignment(self, no_in: bool = False) -> dict:
        if self.in_generator and self.at_name("yield"):
            return self.parse_yield(no_in)
        state = self._snapshot()
        arrow = self._try_parse_arrow(no_in)
        if arrow is not None:
            return arrow
        self._restore(state)
        left = self.parse_conditional(no_in)
        if self.tok.kind == "punct" and self.tok.value in ASSIGN_OPS:
            op = self.tok.value
            self._advance()
            if op == "=":
                left = _to_pattern(left, self.error)
            right = self.parse_assignment(no_in=no_in)
            return {"type": "AssignmentExpression", "operator": op,
                    "left": left, "right": right}
        return left

    def parse_yield(self, no_in: bool) -> dict:
        self.expect_name("yield")
        delegate = False
        argument = None
        if not self.tok.newline_before:
            delegate = self.eat("*")
            if delegate or not (self.at(")") or self.at("]") or self.at("}")
                                or self.at(",") or self.at(";")
                                or self.at(":")
                                or self.tok.kind == "eof"):
                argument = self.parse_assignment(no_in=no_in)
        return {"type": "YieldExpression", "argument": argument,
                "delegate": delegate}

    def _try_parse_arrow(self, no_in: bool) -> dict | None:
        """Attempt to parse an arrow function at the current position."""
        is_async = False
        if self.at_name("async"):
            state = self._snapshot()
            self._advance()
            if self.tok.newline_before or not (
                    self.at("(") or (self.tok.kind == "name"
                                     and self.tok.value not in KEYWORDS)):
                self._restore(state)
                return None
            is_async = True
        if self.tok.kind == "name" and self.tok.value not in KEYWORDS:
            name = self.tok.value
            state = self._snapshot()
            self._advance(regex_allowed=False)
            if self.at("=>") and not self.tok.newline_before:
                self._advance()
                params = [{"type": "Identifier", "name": name}]
                return self._finish_arrow(params, is_async, no_in)
            self._restore(state)
            return None
        if not self.at("("):
            return None
        try:
            self._advance()
            params = []
            while not self.at(")"):
                if self.eat("..."):
                    params.append({"type": "RestElement",
                                   "argument": self.parse_binding_target()})
                else:
                    target = self.parse_binding_target()
                    if self.eat("="):
                        target = {"type": "AssignmentPattern",
                                  "left": target,
                                  "right": self.parse_assignment()}
                    params.append(target)
                if not self.eat(","):
                    break
            self.expect(")", regex_allowed=False)
        except ParseError:
            return None
        if not self.at("=>") or self.tok.newline_before:
            return None
        self._advance()
        return self._finish_arrow(params, is_async, no_in)

    def _finish_arrow(self, params: list, is_async: bool,
                      no_in: bool) -> dict:
        saved = (self.in_async, self.in_generator)
        self.in_async, self.in_generator = is_async, False
        try:
            if self.at("{"):
                body = self.parse_block()
                expression = False
            else:
                body = self.parse_assignment(no_in=no_in)
                expression = True
        finally:
            self.in_async, self.in_generator = saved
        return {"type": "ArrowFunctionExpression", "id": None,
                "params": params, "body": body, "generator": False,
                "async": is_async, "expression": expression}

    def parse_conditional(self, no_in: bool = False) -> dict:
        test = self.parse_binary(0, no_in)
        if self.eat("?"):
            consequent = self.parse_assignment()
            self.expect(":")
            alternate = self.parse_assignment(no_in=no_in)
            return {"type": "ConditionalExpression", "test": test,
                    "consequent": consequent, "alternate": alternate}
        return test

    def parse_binary(self, min_prec: int, no_in: bool) -> dict:
        left = self.parse_unary(no_in)
        while True:
            op = None
            if self.tok.kind == "punct" and self.tok.value in BINARY_PRECEDENCE:
                op = self.tok.value
            elif self.tok.kind == "name" and self.tok.value in ("in",
                                                                "instanceof"):
                if self.tok.value == "in" and no_in:
                    break
                op = self.tok.value
            if op is None:
                break
            prec = BINARY_PRECEDENCE[op]
            if prec < min_prec:
                break
            self._advance()
            # ** is right-associative, all others left
            next_min = prec if op == "**" else prec + 1
            right = self.parse_binary(next_min, no_in)
            node_type = ("LogicalExpression" if op in ("&&", "||", "??")
                         else "BinaryExpression")
            left = {"type": node_type, "operator": op, "left": left,
                    "right": right}
        return left

    def parse_unary(self, no_in: bool = False) -> dict:
        tok = self.tok
        if tok.kind == "punct" and tok.value in ("+", "-", "~", "!"):
            self._advance()
            arg = self.parse_unary(no_in)
            return {"type": "UnaryExpression", "operator": tok.value,
                    "prefix": True, "argument": arg}
        if tok.kind == "name" and tok.value in ("delete", "void", "typeof"):
            self._advance()
            arg = self.parse_unary(no_in)
            return {"type": "UnaryExpression", "operator": tok.value,
                    "prefix": True, "argument": arg}
        if tok.kind == "punct" and tok.value in ("++", "--"):
            self._advance()
            arg = self.parse_unary(no_in)
            return {"type": "UpdateExpression", "operator": tok.value,
                    "prefix": True, "argument": arg}
        if tok.kind == "name" and tok.value == "await" and (
                self.in_async or self.module):
            state = self._snapshot()
            self._advance()
            if (self.tok.kind == "eof" or self.at(")") or self.at("]")
                    or self.at("}") or self.at(",") or self.at(";")
                    or self.at("=")):
                self._restore(state)
            else:
                arg = self.parse_unary(no_in)
                return {"type": "AwaitExpression", "argument": arg}
        return self.parse_unary_postfix(no_in)

    def parse_unary_postfix(self, no_in: bool = False) -> dict:
        expr = self.parse_postfix_chain(no_in)
        if (self.tok.kind == "punct" and self.tok.value in ("++", "--")
                and not self.tok.newline_before):
            op = self.tok.value
            self._advance(regex_allowed=False)
            return {"type": "UpdateExpression", "operator": op,
                    "prefix": False, "argument": expr}
        return expr

    def parse_postfix_chain(self, no_in: bool = False) -> dict:
        if self.at_name("new"):
            return self._member_tail(self.parse_new(), allow_call=True)
        expr = self.parse_primary()
        return self._member_tail(expr, allow_call=True)

    def parse_new(self) -> dict:
        self.expect_name("new")
        if self.at("."):
            self._advance()
            prop = self._ident_name()
            return {"type": "MetaProperty",
                    "meta": {"type": "Identifier", "name": "new"},
                    "property": {"type": "Identifier", "name": prop}}
        if self.at_name("new"):
            callee = self.parse_new()
        else:
            callee = self._member_tail(self.parse_primary(),
                                       allow_call=False)
        arguments = []
        if self.at("("):
            arguments = self.parse_arguments()
        return {"type": "NewExpression", "callee": callee,
                "arguments": arguments}

    def parse_arguments(self) -> list:
        self.expect("(")
        args = []
        while not self.at(")"):
            if self.eat("..."):
                args.append({"type": "SpreadElement",
                             "argument": self.parse_assignment()})
            else:
                args.append(self.parse_assignment())
            if not self.eat(","):
                break
        self.expect(")", regex_allowed=False)
        return args

    def _member_tail(self, expr: dict, allow_call: bool) -> dict:
        optional_chain = False
        while True:
            if self.at("."):
                self._advance()
                prop = self._member_property()
                expr = {"type": "MemberExpression", "object": expr,
                        "property": prop, "computed": False,
                        "optional": False}
            elif self.at("?."):
                optional_chain = True
                self._advance()
                if self.at("("):
                    if not allow_call:
                        break
                    args = self.parse_arguments()
                    expr = {"type": "CallExpression", "callee": expr,
                            "arguments": args, "optional": True}
                elif self.at("["):
                    self._advance()
                    prop = self.parse_expression()
                    self.expect("]", regex_allowed=False)
                    expr = {"type": "MemberExpression", "object": expr,
                            "property": prop, "computed": True,
                            "optional": True}
                else:
                    prop = self._member_property()
                    expr = {"type": "MemberExpression", "object": expr,
                            "property": prop, "computed": False,
                            "optional": True}
            elif self.at("["):
                self._advance()
                prop = self.parse_expression()
                self.expect("]", regex_allowed=False)
                expr = {"type": "MemberExpression", "object": expr,
                        "property": prop, "computed": True,
                        "optional": False}
            elif self.at("(") and allow_call:
                args = self.parse_arguments()
                expr = {"type": "CallExpression", "callee": expr,
                        "arguments": args, "optional": False}
            elif self.tok.kind == "template":
                quasi = self.parse_template()
                expr = {"type": "TaggedTemplateExpression", "tag": expr,
                        "quasi": quasi}
            else:
                break
        if optional_chain:
            expr = {"type": "ChainExpression", "expression": expr}
        return expr

    def _member_property(self) -> dict:
        if self.at("#"):
            self._advance()
            return {"type": "PrivateIdentifier", "name": self._ident_name()}
        if self.tok.kind != "name":
            raise self.error("expected property name")
        name = self.tok.value
        self._advance(regex_allowed=False)
        return {"type": "Identifier", "name": name}

    def parse_template(self) -> dict:
        assert self.tok.kind == "template" and self.tok.head
        quasis = []
        expressions = []
        tok = self.tok
        while True:
            quasis.append({"type": "TemplateElement",
                           "value": {"cooked": tok.value, "raw": tok.raw},
                           "tail": tok.tail})
            if tok.tail:
                self._advance(regex_allowed=False)
                break
            self._advance(regex_allowed=True)
            expressions.append(self.parse_expression())
            if not self.at("}"):
                raise self.error("expected } in template literal")
            tok = self.lexer.retoken_template(self.tok)
            self.tok = tok
        return {"type": "TemplateLiteral", "quasis": quasis,
                "expressions": expressions}

    def parse_primary(self) -> dict:
        tok = self.tok
        if tok.kind == "num" or tok.kind == "str":
            self._advance(regex_allowed=False)
            return {"type": "Literal", "value": tok.value}
        if tok.kind == "bigint":
            self._advance(regex_allowed=False)
            return {"type": "Literal", "value": tok.value, "bigint": True}
        if tok.kind == "regex":
            self._advance(regex_allowed=False)
            return {"type": "Literal", "value": None, "regex": tok.value}
        if tok.kind == "template":
            return self.parse_template()
        if tok.kind == "punct":
            if tok.value == "(":
                self._advance()
                expr = self.parse_expression()
                self.expect(")", regex_allowed=False)
                return expr
            if tok.value == "[":
                return self.parse_array_literal()
            if tok.value == "{":
                return self.parse_object_literal()
        if tok.kind == "name":
            word = tok.value
            if word == "function":
                return self.parse_function(declaration=False)
            if word == "async":
                state = self._snapshot()
                self._advance(regex_allowed=False)
                if self.at_name("function") and not self.tok.newline_before:
                    return self.parse_function(declaration=False,
                                               is_async=True)
                self._restore(state)
            if word == "class":
                return self.parse_class(declaration=False)
            if word == "this":
                self._advance(regex_allowed=False)
                return {"type": "ThisExpression"}
            if word == "super":
                self._advance(regex_allowed=False)
                return {"type": "Super"}
            if word == "null":
                self._advance(regex_allowed=False)
                return {"type": "Literal", "value": None}
            if word in ("true", "false"):
                self._advance(regex_allowed=False)
                return {"type": "Literal", "value": word == "true"}
            if word == "import":
                self._advance()
                if self.at("."):
                    self._advance()
                    prop = self._ident_name()
                    return {"type": "MetaProperty",
                            "meta": {"type": "Identifier", "name": "import"},
                            "property": {"type": "Identifier", "name": prop}}
                if self.at("("):
                    args = self.parse_arguments()
                    if not args:
                        raise self.error("import() requires an argument")
                    return {"type": "ImportExpression", "source": args[0]}
                raise self.error("unexpected import")
            if word in KEYWORDS:
                raise self.error(f"unexpected keyword {word!r}")
            self._advance(regex_allowed=False)
            return {"type": "Identifier", "name": word}
        raise self.error("unexpected token")

    def parse_array_literal(self) -> dict:
        self.expect("[")
        elements = []
        while not self.at("]"):
            if self.at(","):
                elements.append(None)
                self._advance()
                continue
            if self.eat("..."):
                elements.append({"type": "SpreadElement",
                                 "argument": self.parse_assignment()})
            else:
                elements.append(self.parse_assignment())
            if not self.eat(","):
                break
        self.expect("]", regex_allowed=False)
        return {"type": "ArrayExpression", "elements": elements}

    def parse_object_literal(self) -> dict:
        self.expect("{")
        properties = []
        while not self.at("}"):
            properties.append(self.parse_object_property())
            if not self.eat(","):
                break
        self.expect("}", regex_allowed=False)
        return {"type": "ObjectExpression", "properties": properties}

    def parse_object_property(self) -> dict:
        if self.eat("..."):
            return {"type": "SpreadElement",
                    "argument": self.parse_assignment()}
        is_async = False
        is_generator = False
        kind = "init"
        if self.at_name("async"):
            state = self._snapshot()
            self._advance()
            if (self.at(":") or self.at("(") or self.at(",") or self.at("}")
                    or self.at("=") or self.tok.newline_before):
                self._restore(state)
            else:
                is_async = True
        if self.at("*"):
            self._advance()
            is_generator = True
        if (self.at_name("get") or self.at_name("set")) and not is_async \
                and not is_generator:
            state = self._snapshot()
            accessor = self.tok.value
            self._advance()
            if self.at(":") or self.at("(") or self.at(",") or self.at("}") \
                    or self.at("="):
                self._restore(state)
            else:
                kind = accessor
        computed = False
        if self.at("["):
            self._advance()
            key = self.parse_assignment()
            self.expect("]", regex_allowed=False)
            computed = True
        else:
            key = self._property_key()
        if self.at("("):
            params = self.parse_params()
            body = self._function_body(is_async, is_generator)
            value = {"type": "FunctionExpression", "id": None,
                     "params": params, "body": body,
                     "generator": is_generator, "async": is_async}
            return {"type": "Property", "key": key, "value": value,
                    "kind": kind if kind in ("get", "set") else "init",
                    "computed": computed, "method": kind == "init",
                    "shorthand": False}
        if kind in ("get", "set"):
            raise self.error("accessor property requires a body")
        if self.eat(":"):
            value = self.parse_assignment()
            return {"type": "Property", "key": key, "value": value,
                    "kind": "init", "computed": computed, "method": False,
                    "shorthand": False}
        if key["type"] != "Identifier" or computed:
            raise self.error("expected ':' in object literal")
        # shorthand, possibly with cover-grammar default value
        value = dict(key)
        if self.eat("="):
            value = {"type": "AssignmentPattern", "left": value,
                     "right": self.parse_assignment()}
        return {"type": "Property", "key": key, "value": value,
                "kind": "init", "computed": False, "method": False,
                "shorthand": True}


def _to_pattern(node: dict, error) -> dict:
    """Reinterpret an expression AST as an assignment target."""
    t = node["type"]
    if t in ("Identifier", "MemberExpression", "ArrayPattern",
             "ObjectPattern", "AssignmentPattern", "RestElement",
             "ChainExpression"):
        return node
    if t == "ArrayExpression":
        elements = []
        for el in node["elements"]:
            if el is None:
                elements.append(None)
            elif el["type"] == "SpreadElement":
                elements.append({"type": "RestElement",
                                 "argument": _to_pattern(el["argument"],
                                                         error)})
            else:
                elements.append(_to_pattern(el, error))
        return {"type": "ArrayPattern", "elements": elements}
    if t == "ObjectExpression":
        properties = []
        for prop in node["properties"]:
            if prop["type"] == "SpreadElement":
                properties.append({"type": "RestElement",
                                   "argument": _to_pattern(prop["argument"],
                                                           error)})
            else:
                new_prop = dict(prop)
                new_prop["value"] = _to_pattern(prop["value"], error)
                properties.append(new_prop)
        return {"type": "ObjectPattern", "properties": properties}
    if t == "AssignmentExpression" and node["operator"] == "=":
        return {"type": "AssignmentPattern",
                "left": _to_pattern(node["left"], error),
                "right": node["right"]}
    raise error(f"invalid assignment target ({t})")
