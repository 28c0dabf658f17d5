"""Parser and code generator: round-trip stability on a syntax corpus."""

import pytest

from bundlescope.errors import ParseError
from bundlescope.jsparse import generate, parse, parse_auto

CORPUS = [
    "var a = 1;",
    "let [a, b = 2, ...rest] = xs;",
    "const {x, y: {z} = {}, ...others} = obj;",
    "a ??= b; c ||= d; e &&= f;",
    "x = a ?? b ?? c;",
    "y = (a ?? b) || c;",
    "for (const [k, v] of Object.entries(o)) console.log(k, v);",
    "for (var i = 0, n = xs.length; i < n; i++) total += xs[i];",
    "for (key in obj) delete obj[key];",
    "while (a--) b += a;",
    "do { x(); } while (cond);",
    "if (a) b(); else if (c) d(); else e();",
    "switch (v) { case 1: one(); break; default: other(); }",
    "try { risky(); } catch { recover(); } finally { cleanup(); }",
    "try { f(); } catch (e) { g(e); }",
    "function* gen() { yield 1; yield* inner(); }",
    "async function fetchIt(u) { const r = await fetch(u); return r.json(); }",
    "const f = async (a, b) => a + b;",
    "const g = x => ({value: x});",
    "class Point extends Base { static origin = new Point(0, 0); #secret = 1;"
    " constructor(x, y) { super(); this.x = x; } get norm() { return 0; }"
    " static async load() {} *[Symbol.iterator]() { yield this.x; } }",
    "label: for (;;) { if (done) break label; continue label; }",
    "x = y === 1 ? \"one\" : y !== 2 ? `other ${y + 1}` : 'two';",
    "tag`head${a}mid${b}tail`;",
    "new Foo(...args).bar?.baz?.();",
    "obj?.[key]?.method(1, 2);",
    "a = /ab+c/gi.test(s) ? s.replace(/x/y, 'z') : s;",
    "x = 0b101 + 0o17 + 0xff + 1e3 + .5 + 10n;",
    "({a, b: c, [d]: e, ...rest} = source);",
    "throw new TypeError(`bad ${kind}`);",
    "export default function main() { return 1; }",
    "import def, {named as alias} from 'mod'; export {alias};",
    "export * as ns from 'mod';",
    "import('dyn').then(m => m.default);",
    "void 0, typeof x, -y, +z, ~w, !q;",
    "a = b, c = d;",
    "x = function named() { return named; };",
    "if (a) function f() {} ",
    "with (scope) { inner(); }",
    "debugger;",
    "'use strict'; var x = 5;",
    "x = {get a() { return 1; }, set a(v) {}, method() {}, async m() {},"
    " *gen() {}};",
    "s = `outer ${`inner ${deep}`} done`;",
    "(5).toString(2);",
    "x = a / b / c;",
    "f(function(){ return /not-division/; });",
    "let \\u0061b = 1; ab += 1;",
]


@pytest.mark.parametrize("source", CORPUS, ids=range(len(CORPUS)))
def test_round_trip_stable(source):
    first = generate(parse_auto(source))
    second = generate(parse_auto(first))
    assert first == second


def test_module_goal_then_script_fallback():
    # 'with' is forbidden in modules; the fallback must accept it
    ast = parse_auto("with (o) { a(); }")
    assert ast["sourceType"] == "script"
    ast = parse_auto("import x from 'y'; export default x;")
    assert ast["sourceType"] == "module"


def test_script_goal_rejects_import():
    with pytest.raises(ParseError):
        parse("import x from 'y';", module=False)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_auto("var a = ;\n")
    assert info.value.line == 1
    assert info.value.column > 0


def test_asi_basic():
    ast = parse_auto("a = 1\nb = 2\nreturn_like()")
    assert len(ast["body"]) == 3


def test_regex_vs_division():
    # after an identifier a slash is division; after '=' it is a regex
    div = parse_auto("x = a / b;")
    assert div["body"][0]["expression"]["right"]["type"] == \
        "BinaryExpression"
    rex = parse_auto("x = /a/;")
    assert rex["body"][0]["expression"]["right"]["regex"]["pattern"] == "a"


def test_generated_output_reparses_for_corpus():
    for source in CORPUS:
        out = generate(parse_auto(source))
        parse_auto(out)  # must not raise
