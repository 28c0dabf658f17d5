"""Hand-rolled ECMAScript lexer.

Produces one token at a time so the parser can steer the two
context-sensitive spots of the grammar: regex-vs-division and template
literal continuations.
"""

from __future__ import annotations

from dataclasses import dataclass

from bundlescope.errors import ParseError

PUNCTUATORS = [
    ">>>=",
    "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??=",
    "=>", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "&&", "||", "??", "?.", "**",
    "{", "}", "(", ")", "[", "]", ";", ",", "<", ">", "+", "-", "*", "/",
    "%", "&", "|", "^", "!", "~", "?", ":", "=", ".", "@", "#",
]

_ID_START_EXTRA = "$_"
_HEX = "0123456789abcdefABCDEF"

_LINE_TERMINATORS = "\n\r  "


def _is_id_start(ch: str) -> bool:
    return ch.isalpha() or ch in _ID_START_EXTRA or ord(ch) > 0x7F


def _is_id_char(ch: str) -> bool:
    return ch.isalnum() or ch in _ID_START_EXTRA or ord(ch) > 0x7F


@dataclass
class Token:
    kind: str  # name | num | bigint | str | regex | template | punct | eof
    value: object
    start: int
    end: int
    line: int
    col: int
    newline_before: bool
    # template tokens only
    head: bool = False
    tail: bool = False
    raw: str | None = None


class Lexer:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.line = 1
        self.line_start = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.pos
        line = self.source.count("\n", 0, pos) + 1
        last_nl = self.source.rfind("\n", 0, pos)
        col = pos - (last_nl + 1)
        return ParseError(message, line=line, column=col)

    # -- whitespace / comments -------------------------------------------

    def _skip_blank(self) -> bool:
        """Advance past whitespace and comments; True if a newline passed."""
        src = self.source
        n = len(src)
        newline = False
        while self.pos < n:
            ch = src[self.pos]
            if ch in _LINE_TERMINATORS:
                newline = True
                if ch == "\n":
                    self.line += 1
                    self.line_start = self.pos + 1
                self.pos += 1
            elif ch.isspace() or ch == "﻿":
                self.pos += 1
            elif ch == "/" and self.pos + 1 < n and src[self.pos + 1] == "/":
                idx = self.pos + 2
                while idx < n and src[idx] not in _LINE_TERMINATORS:
                    idx += 1
                self.pos = idx
            elif ch == "/" and self.pos + 1 < n and src[self.pos + 1] == "*":
                end = src.find("*/", self.pos + 2)
                if end < 0:
                    raise self.error("unterminated block comment")
                if any(t in src[self.pos:end] for t in _LINE_TERMINATORS):
                    newline = True
                self.pos = end + 2
            elif ch == "#" and self.pos == 0 and src[1:2] == "!":
                idx = 2
                while idx < n and src[idx] not in _LINE_TERMINATORS:
                    idx += 1
                self.pos = idx
            else:
                break
        return newline

    # -- public interface -------------------------------------------------

    def next_token(self, regex_allowed: bool) -> Token:
        newline = self._skip_blank()
        start = self.pos
        line = self.line
        col = start - self.line_start
        src = self.source
        if start >= len(src):
            return Token("eof", None, start, start, line, col, newline)
        ch = src[start]

        if _is_id_start(ch) or ch == "\\":
            return self._name(start, line, col, newline)
        if ch.isdigit() or (ch == "." and src[start + 1:start + 2].isdigit()):
            return self._number(start, line, col, newline)
        if ch in "'\"":
            return self._string(start, line, col, newline)
        if ch == "`":
            return self._template(start + 1, start, line, col, newline,
                                  head=True)
        if ch == "/" and regex_allowed:
            return self._regex(start, line, col, newline)
        for punct in PUNCTUATORS:
            if src.startswith(punct, start):
                if punct == "?." and src[start + 2:start + 3].isdigit():
                    punct = "?"  # ternary like a?.5:b
                self.pos = start + len(punct)
                return Token("punct", punct, start, self.pos, line, col,
                             newline)
        raise self.error(f"unexpected character {ch!r}", start)

    def retoken_template(self, token: Token) -> Token:
        """Re-scan a `}` punct token as a template middle/tail chunk."""
        assert token.kind == "punct" and token.value == "}"
        return self._template(token.start + 1, token.start, token.line,
                              token.col, token.newline_before, head=False)

    def retoken_regex(self, token: Token) -> Token:
        """Re-scan a `/` or `/=` punct token as a regex literal."""
        self.pos = token.start
        return self._regex(token.start, token.line, token.col,
                           token.newline_before)

    # -- scanners ----------------------------------------------------------

    def _name(self, start: int, line: int, col: int, newline: bool) -> Token:
        src = self.source
        idx = start
        has_escape = False
        chars = []
        while idx < len(src):
            ch = src[idx]
            if ch == "\\":
                if src[idx + 1:idx + 2] != "u":
                    raise self.error("bad identifier escape", idx)
                has_escape = True
                cp, idx = self._unicode_escape(idx + 2)
                chars.append(chr(cp))
            elif (_is_id_char(ch) if chars or idx > start else
                  _is_id_start(ch)):
                chars.append(ch)
                idx += 1
            else:
                break
        self.pos = idx
        name = "".join(chars)
        if not name:
            raise self.error("empty identifier", start)
        tok = Token("name", name, start, idx, line, col, newline)
        tok.raw = None if not has_escape else src[start:idx]
        return tok

    def _unicode_escape(self, idx: int) -> tuple[int, int]:
        src = self.source
        if src[idx:idx + 1] == "{":
            end = src.find("}", idx)
            if end < 0:
                raise self.error("unterminated unicode escape", idx)
            return int(src[idx + 1:end], 16), end + 1
        digits = src[idx:idx + 4]
        if len(digits) < 4 or any(d not in _HEX for d in digits):
            raise self.error("bad unicode escape", idx)
        return int(digits, 16), idx + 4

    def _number(self, start: int, line: int, col: int, newline: bool) -> Token:
        src = self.source
        idx = start
        n = len(src)
        kind = "num"
        if src[idx] == "0" and src[idx + 1:idx + 2] in "xXoObB":
            base = {"x": 16, "o": 8, "b": 2}[src[idx + 1].lower()]
            idx += 2
            digits_start = idx
            while idx < n and (src[idx] in _HEX or src[idx] == "_"):
                if base == 8 and src[idx] not in "01234567_":
                    break
                if base == 2 and src[idx] not in "01_":
                    break
                idx += 1
            text = src[digits_start:idx].replace("_", "")
            if not text:
                raise self.error("missing digits in numeric literal", start)
            value: object = int(text, base)
            if src[idx:idx + 1] == "n":
                idx += 1
                kind = "bigint"
            else:
                value = float(value)
        else:
            while idx < n and (src[idx].isdigit() or src[idx] == "_"):
                idx += 1
            is_legacy_octal = (src[start] == "0" and idx - start > 1
                               and all(c in "01234567" for c in
                                       src[start:idx]))
            if src[idx:idx + 1] == "n":
                value = int(src[start:idx].replace("_", ""))
                idx += 1
                kind = "bigint"
            else:
                if src[idx:idx + 1] == ".":
                    idx += 1
                    while idx < n and (src[idx].isdigit() or src[idx] == "_"):
                        idx += 1
                    is_legacy_octal = False
                if src[idx:idx + 1] in "eE":
                    save = idx
                    idx += 1
                    if src[idx:idx + 1] in "+-":
                        idx += 1
                    if not src[idx:idx + 1].isdigit():
                        idx = save
                    else:
                        while idx < n and src[idx].isdigit():
                            idx += 1
                        is_legacy_octal = False
                text = src[start:idx].replace("_", "")
                if is_legacy_octal:
                    value = float(int(text, 8))
                else:
                    value = float(text)
        if idx < n and _is_id_start(src[idx]):
            raise self.error("identifier starts immediately after number",
                             idx)
        self.pos = idx
        return Token(kind, value, start, idx, line, col, newline)

    def _string(self, start: int, line: int, col: int, newline: bool) -> Token:
        src = self.source
        quote = src[start]
        idx = start + 1
        n = len(src)
        chars = []
        while True:
            if idx >= n:
                raise self.error("unterminated string literal", start)
            ch = src[idx]
            if ch == quote:
                idx += 1
                break
            if ch in _LINE_TERMINATORS and ch not in "  ":
                raise self.error("newline in string literal", idx)
            if ch == "\\":
                text, idx = self._escape(idx + 1)
                chars.append(text)
            else:
                chars.append(ch)
                idx += 1
        self.pos = idx
        return Token("str", "".join(chars), start, idx, line, col, newline)

    _SIMPLE_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "b": "\b",
                       "f": "\f", "v": "\v", "0": "\0"}

    def _escape(self, idx: int) -> tuple[str, int]:
        src = self.source
        ch = src[idx:idx + 1]
        if ch == "":
            raise self.error("bad escape at end of input", idx)
        if ch in _LINE_TERMINATORS:  # line continuation
            if ch == "\r" and src[idx + 1:idx + 2] == "\n":
                return "", idx + 2
            return "", idx + 1
        if ch == "u":
            cp, end = self._unicode_escape(idx + 1)
            return chr(cp), end
        if ch == "x":
            digits = src[idx + 1:idx + 3]
            if len(digits) < 2 or any(d not in _HEX for d in digits):
                raise self.error("bad hex escape", idx)
            return chr(int(digits, 16)), idx + 3
        if ch in "1234567":  # legacy octal escape
            end = idx
            while end < len(src) and end - idx < 3 and src[end] in "01234567":
                end += 1
            return chr(int(src[idx:end], 8)), end
        if ch == "0" and not src[idx + 1:idx + 2].isdigit():
            return "\0", idx + 1
        return self._SIMPLE_ESCAPES.get(ch, ch), idx + 1

    def _regex(self, start: int, line: int, col: int, newline: bool) -> Token:
        src = self.source
        idx = start + 1
        n = len(src)
        in_class = False
        while True:
            if idx >= n or src[idx] in _LINE_TERMINATORS:
                raise self.error("unterminated regular expression", start)
            ch = src[idx]
            if ch == "\\":
                idx += 2
                continue
            if ch == "[":
                in_class = True
            elif ch == "]":
                in_class = False
            elif ch == "/" and not in_class:
                idx += 1
                break
            idx += 1
        body_end = idx - 1
        while idx < n and _is_id_char(src[idx]):
            idx += 1
        self.pos = idx
        value = {"pattern": src[start + 1:body_end],
                 "flags": src[body_end + 1:idx]}
        return Token("regex", value, start, idx, line, col, newline)

    def _template(self, scan_from: int, start: int, line: int, col: int,
                  newline: bool, head: bool) -> Token:
        """Scan a template chunk up to `${` (middle) or backtick (end)."""
        src = self.source
        idx = scan_from
        n = len(src)
        chars = []
        tail = False
        while True:
            if idx >= n:
                raise self.error("unterminated template literal", start)
            ch = src[idx]
            if ch == "`":
                idx += 1
                tail = True
                break
            if ch == "$" and src[idx + 1:idx + 2] == "{":
                idx += 2
                break
            if ch == "\\":
                text, idx = self._escape(idx + 1)
                chars.append(text)
            else:
                if ch == "\n":
                    self.line += 1
                    self.line_start = idx + 1
                chars.append(ch)
                idx += 1
        self.pos = idx
        raw_end = idx - (1 if tail else 2)
        tok = Token("template", "".join(chars), start, idx, line, col,
                    newline, head=head, tail=tail)
        tok.raw = src[scan_from:raw_end]
        return tok
