"""Random, always-parseable JavaScript generator for test corpora.

Structural variety matters more than naming here: the token vocabulary
ignores identifier names and operator choice, so the generator varies
node shapes (statement kinds, nesting, arities) to make programs that
fingerprint differently.
"""

import random

_OPS = ["+", "-", "*", "%", "<", ">", "===", "!==", "&&", "||"]


def _name(rng):
    return f"v{rng.randrange(60)}"


def gen_expr(rng, depth=0):
    kinds = ["num", "str", "name", "member", "index", "array", "object",
             "call", "binary", "unary", "cond", "func"]
    if depth >= 2:
        kinds = ["num", "str", "name", "member"]
    kind = rng.choice(kinds)
    if kind == "num":
        return str(rng.randrange(1000))
    if kind == "str":
        return f"'s{rng.randrange(100)}'"
    if kind == "name":
        return _name(rng)
    if kind == "member":
        return f"{_name(rng)}.{_name(rng)}"
    if kind == "index":
        return f"{_name(rng)}[{gen_expr(rng, depth + 1)}]"
    if kind == "array":
        items = [gen_expr(rng, depth + 1)
                 for _ in range(rng.randrange(0, 4))]
        return "[" + ", ".join(items) + "]"
    if kind == "object":
        items = [f"k{i}: {gen_expr(rng, depth + 1)}"
                 for i in range(rng.randrange(0, 4))]
        return "{ " + ", ".join(items) + " }"
    if kind == "call":
        args = [gen_expr(rng, depth + 1)
                for _ in range(rng.randrange(0, 3))]
        return f"{_name(rng)}({', '.join(args)})"
    if kind == "binary":
        return (f"({gen_expr(rng, depth + 1)} {rng.choice(_OPS)} "
                f"{gen_expr(rng, depth + 1)})")
    if kind == "unary":
        return f"{rng.choice(['!', '-', 'typeof '])}{_name(rng)}"
    if kind == "cond":
        return (f"({gen_expr(rng, depth + 1)} ? "
                f"{gen_expr(rng, depth + 1)} : "
                f"{gen_expr(rng, depth + 1)})")
    body = gen_stmt(rng, 2)
    return f"function ({_name(rng)}) {{ {body} }}"


def gen_stmt(rng, depth=0):
    kinds = ["var", "assign", "call", "if", "for", "while",
             "func", "try", "switch"]
    if depth >= 2:
        kinds = ["var", "assign", "call"]
    kind = rng.choice(kinds)
    if kind == "var":
        return f"var {_name(rng)} = {gen_expr(rng, depth)};"
    if kind == "assign":
        return f"{_name(rng)} = {gen_expr(rng, depth)};"
    if kind == "call":
        return f"{_name(rng)}({gen_expr(rng, depth)});"
    if kind == "if":
        stmt = (f"if ({gen_expr(rng, depth)}) "
                f"{{ {gen_stmt(rng, depth + 1)} }}")
        if rng.random() < 0.5:
            stmt += f" else {{ {gen_stmt(rng, depth + 1)} }}"
        return stmt
    if kind == "for":
        return (f"for (var i = 0; i < {rng.randrange(2, 50)}; i++) "
                f"{{ {gen_stmt(rng, depth + 1)} }}")
    if kind == "while":
        return (f"while ({gen_expr(rng, depth + 1)}) "
                f"{{ {gen_stmt(rng, depth + 1)} }}")
    if kind == "func":
        body = " ".join(gen_stmt(rng, depth + 1)
                        for _ in range(rng.randrange(1, 4)))
        return (f"function {_name(rng)}({_name(rng)}, {_name(rng)}) "
                f"{{ {body} return {gen_expr(rng, depth + 1)}; }}")
    if kind == "try":
        return (f"try {{ {gen_stmt(rng, depth + 1)} }} "
                f"catch (e) {{ {gen_stmt(rng, depth + 1)} }}")
    cases = " ".join(
        f"case {i}: {gen_stmt(rng, depth + 1)} break;"
        for i in range(rng.randrange(1, 3)))
    return (f"switch ({gen_expr(rng, depth + 1)}) "
            f"{{ {cases} default: {gen_stmt(rng, depth + 1)} }}")


def gen_statements(rng, count):
    return [gen_stmt(rng) for _ in range(count)]


def gen_program(rng, count):
    return "\n".join(gen_statements(rng, count)) + "\n"


def gen_program_of_size(rng, min_bytes):
    """Concatenate random statements until the source reaches min_bytes."""
    parts = []
    total = 0
    while total < min_bytes:
        stmt = gen_stmt(rng)
        parts.append(stmt)
        total += len(stmt) + 1
    return "\n".join(parts) + "\n"
