"""Tokenizer and recursive-descent parser for the ASCII expression grammar.

Precedence, tightest first: ``!``, then ``&&``/``&.&``, then ``||``/``|.|``
(binary connectives are left-associative), then the non-associative
conditional ``x <| y |> z``.  Identifiers are atoms; ``$name`` is a variable
(admitted in mode ``"open"`` only); ``T`` and ``F`` are the constants.
"""

from __future__ import annotations

from .errors import ParseError
from .terms import (
    FALSE,
    TRUE,
    And,
    Atom,
    Cond,
    FullAnd,
    FullOr,
    Not,
    Or,
    Term,
    Var,
    check_mode,
)

_PUNCT = ("&.&", "&&", "|.|", "||", "<|", "|>", "!", "(", ")")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split ``text`` into (kind, lexeme, position) triples.

    Kinds are ``ident``, ``var``, one of the punctuation lexemes, and a
    final ``end`` marker.
    """
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if c == "$":
            j = i + 1
            if j >= n or not text[j].isalpha():
                raise ParseError("expected identifier after '$'", i)
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("var", text[i + 1 : j], i))
            i = j
            continue
        for punct in _PUNCT:
            if text.startswith(punct, i):
                tokens.append((punct, punct, i))
                i += len(punct)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.next()

    def parse_expr(self) -> Term:
        left = self.parse_or()
        if self.peek() != "<|":
            return left
        self.next()
        guard = self.parse_or()
        self.expect("|>")
        orelse = self.parse_or()
        if self.peek() == "<|":
            tok = self.tokens[self.pos]
            raise ParseError(
                "conditional is non-associative; parenthesize nested conditionals",
                tok[2],
            )
        return Cond(left, guard, orelse)

    def parse_or(self) -> Term:
        left = self.parse_and()
        while self.peek() in ("||", "|.|"):
            op = self.next()[0]
            right = self.parse_and()
            left = Or(left, right) if op == "||" else FullOr(left, right)
        return left

    def parse_and(self) -> Term:
        left = self.parse_unary()
        while self.peek() in ("&&", "&.&"):
            op = self.next()[0]
            right = self.parse_unary()
            left = And(left, right) if op == "&&" else FullAnd(left, right)
        return left

    def parse_unary(self) -> Term:
        if self.peek() == "!":
            self.next()
            return Not(self.parse_unary())
        return self.parse_primary()

    def parse_primary(self) -> Term:
        kind, lexeme, pos = self.next()
        if kind == "ident":
            if lexeme == "T":
                return TRUE
            if lexeme == "F":
                return FALSE
            return Atom(lexeme)
        if kind == "var":
            return Var(lexeme)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {lexeme or 'end of input'!r}", pos)


def parse(text: str, mode: str = "enriched") -> Term:
    """Parse ``text`` into a term, then enforce the node kinds of ``mode``."""
    parser = _Parser(tokenize(text))
    term = parser.parse_expr()
    kind, lexeme, pos = parser.tokens[parser.pos]
    if kind != "end":
        raise ParseError(f"unexpected trailing {lexeme!r}", pos)
    return check_mode(term, mode)
