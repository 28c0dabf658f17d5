"""AST token-type sequences: the comparison substrate for all matching.

A document is reduced to the pre-order traversal of its syntax tree,
keeping only the node type of each node. Identifier names, literal
values and operators are discarded, which makes the representation
stable under minification and identifier mangling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from bundlescope.errors import EmptyInput, UnknownToken
from bundlescope.jsparse import parse_auto

# Node types do not distinguish operators within BinaryExpression /
# LogicalExpression; flip VOCABULARY_VERSION if that ever changes.
NODE_TYPES = [
    "Program",
    "ExpressionStatement", "BlockStatement", "EmptyStatement",
    "DebuggerStatement", "WithStatement", "ReturnStatement",
    "LabeledStatement", "BreakStatement", "ContinueStatement",
    "IfStatement", "SwitchStatement", "SwitchCase", "ThrowStatement",
    "TryStatement", "CatchClause", "WhileStatement", "DoWhileStatement",
    "ForStatement", "ForInStatement", "ForOfStatement",
    "FunctionDeclaration", "VariableDeclaration", "VariableDeclarator",
    "ClassDeclaration", "ClassBody", "MethodDefinition",
    "PropertyDefinition",
    "Identifier", "PrivateIdentifier", "Literal",
    "ArrayExpression", "ObjectExpression", "Property",
    "FunctionExpression", "ArrowFunctionExpression", "ClassExpression",
    "TaggedTemplateExpression", "TemplateLiteral", "TemplateElement",
    "MemberExpression", "Super", "MetaProperty", "NewExpression",
    "CallExpression", "SequenceExpression", "UnaryExpression",
    "UpdateExpression", "BinaryExpression", "LogicalExpression",
    "ConditionalExpression", "AssignmentExpression", "YieldExpression",
    "AwaitExpression", "SpreadElement", "RestElement", "ArrayPattern",
    "ObjectPattern", "AssignmentPattern", "ThisExpression",
    "ChainExpression", "ImportExpression",
    "ImportDeclaration", "ImportSpecifier", "ImportDefaultSpecifier",
    "ImportNamespaceSpecifier", "ExportNamedDeclaration",
    "ExportDefaultDeclaration", "ExportAllDeclaration", "ExportSpecifier",
]

VOCABULARY_VERSION = "estree-notypes-1"

_NAME_TO_ID = {name: i for i, name in enumerate(NODE_TYPES)}


@dataclass(frozen=True)
class TokenVocabulary:
    """Bijection between token type ids and AST node type names."""

    names: tuple = tuple(NODE_TYPES)
    version: str = VOCABULARY_VERSION

    def id_of(self, name: str) -> int:
        try:
            return _NAME_TO_ID[name]
        except KeyError:
            raise UnknownToken(f"unknown node type {name!r}") from None

    def name_of(self, type_id: int) -> str:
        if 0 <= type_id < len(self.names):
            return self.names[type_id]
        raise UnknownToken(f"token id {type_id} out of range")

    def __len__(self) -> int:
        return len(self.names)


VOCABULARY = TokenVocabulary()


def token_name(type_id: int) -> str:
    return VOCABULARY.name_of(type_id)


def token_id(name: str) -> int:
    return VOCABULARY.id_of(name)


@dataclass
class TokenString:
    """In-order token-type sequence of one JavaScript document."""

    tokens: list[int]
    source_id: str = ""

    def __len__(self) -> int:
        return len(self.tokens)

    def names(self) -> list[str]:
        return [VOCABULARY.name_of(t) for t in self.tokens]


def _node_children(node: dict):
    for value in node.values():
        if isinstance(value, dict):
            if "type" in value:
                yield value
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, dict) and "type" in item:
                    yield item


def flatten(ast: dict, spans: dict | None = None,
            span_nodes: set | None = None) -> list[int]:
    """Pre-order flattening of an AST into token type ids.

    When `spans`/`span_nodes` are given, records the half-open token
    range [start, end) covered by each node whose id() is in span_nodes.
    """
    tokens: list[int] = []
    stack: list = [("node", ast)]
    while stack:
        kind, item = stack.pop()
        if kind == "close":
            spans[item[0]] = (item[1], len(tokens))  # type: ignore[index]
            continue
        tokens.append(_NAME_TO_ID[item["type"]])
        if span_nodes is not None and id(item) in span_nodes:
            stack.append(("close", (id(item), len(tokens) - 1)))
        children = list(_node_children(item))
        for child in reversed(children):
            stack.append(("node", child))
    return tokens


def tokenize(source: str, source_id: str = "") -> TokenString:
    """Parse JavaScript text and return its token-type sequence.

    Tries the module goal first and falls back to the script goal.
    Raises ParseError for unparseable input and EmptyInput for programs
    with no statements.
    """
    ast = parse_auto(source)
    if not ast["body"]:
        raise EmptyInput("source contains no statements")
    return TokenString(tokens=flatten(ast), source_id=source_id)


def tokenize_ast(ast: dict, source_id: str = "") -> TokenString:
    """Flatten an already-parsed AST."""
    return TokenString(tokens=flatten(ast), source_id=source_id)
