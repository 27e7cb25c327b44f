"""The single word grammar shared by presentations, subgroup generators and braids.

Words::

    word    := factor*
    factor  := atom ('^' int)?
    atom    := 'x' INT | 'r' INT | '1' | '(' word ')' | '(' word ',' word ')'
    int     := ['-'|'+'] DIGITS | '{' ['-'|'+'] DIGITS '}'

Juxtaposition is the product, ``(u,v)`` is the commutator ``u^-1 v^-1 u v`` and
``rK`` refers to the K-th relator of the enclosing file (only when a resolver
is supplied). Whitespace is insignificant and ``#`` starts a comment.

Braids are whitespace-separated tokens ``s1``, ``s3^-1``, ``s2^4``; framings
are a comma-separated integer vector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from .words import Word


class GrammarError(ValueError):
    """Syntax or range error, with 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.reason = message


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>x_?(?P<gi>\d+))
  | (?P<ref>r_?(?P<ri>\d+))
  | (?P<one>1(?!\d))
  | (?P<pow>\^)
  | (?P<int>\{?[-+]?\d+\}?)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<comma>,)
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int
    value: int = 0


def _tokenize(text: str, line: int) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos] == "#":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GrammarError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind == "gi" or kind == "ri":
            kind = "gen" if m.group("gen") else "ref"
        if kind != "ws":
            if kind == "gen":
                val = int(m.group("gi"))
            elif kind == "ref":
                val = int(m.group("ri"))
            elif kind == "int":
                raw = m.group("int")
                if raw.startswith("{") != raw.endswith("}"):
                    raise GrammarError("unbalanced brace in exponent", line, pos + 1)
                val = int(raw.strip("{}"))
            else:
                val = 0
            toks.append(_Tok(kind, m.group(0), pos + 1, val))
        pos = m.end()
    return toks


Resolver = Callable[[int, int, int], Word]


class _Parser:
    def __init__(self, text: str, rank: int, line: int, resolver: Optional[Resolver]):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.rank = rank
        self.line = line
        self.resolver = resolver
        self.end_col = len(text) + 1

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, msg: str, tok: Optional[_Tok] = None) -> GrammarError:
        col = tok.col if tok is not None else self.end_col
        return GrammarError(msg, self.line, col)

    def parse(self) -> Word:
        w = self.word()
        tok = self.peek()
        if tok is not None:
            raise self.error(f"unexpected {tok.text!r}", tok)
        return w

    def word(self) -> Word:
        w = Word.identity(self.rank)
        while True:
            tok = self.peek()
            if tok is None or tok.kind in ("rp", "comma"):
                return w
            w = w * self.factor()

    def factor(self) -> Word:
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "pow":
            self.i += 1
            exp = self.peek()
            if exp is None:
                raise self.error("missing exponent after '^'")
            if exp.kind == "one":
                exp.value = 1
            elif exp.kind != "int":
                raise self.error("exponent must be an integer", exp)
            self.i += 1
            return base ** exp.value
        return base

    def atom(self) -> Word:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.i += 1
        if tok.kind == "gen":
            if not 1 <= tok.value <= self.rank:
                raise self.error(f"generator x{tok.value} out of range 1..{self.rank}", tok)
            return Word.gen(tok.value, self.rank)
        if tok.kind == "ref":
            if self.resolver is None:
                raise self.error("relator references are only allowed in presentation files", tok)
            return self.resolver(tok.value, self.line, tok.col)
        if tok.kind == "one":
            return Word.identity(self.rank)
        if tok.kind == "lp":
            u = self.word()
            nxt = self.peek()
            if nxt is not None and nxt.kind == "comma":
                self.i += 1
                v = self.word()
                nxt = self.peek()
                if nxt is None or nxt.kind != "rp":
                    raise self.error("expected ')' closing commutator", nxt)
                self.i += 1
                return u.commutator(v)
            if nxt is None or nxt.kind != "rp":
                raise self.error("expected ')'", nxt)
            self.i += 1
            return u
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_word(text: str, ambient_rank: int, *, line: int = 1, resolver: Optional[Resolver] = None) -> Word:
    """Parse ``text`` into a freely reduced word of F_{ambient_rank}.

    >>> str(parse_word("(x1,x4)", 4))
    'x1^-1 x4^-1 x1 x4'
    """
    return _Parser(text, ambient_rank, line, resolver).parse()


def format_word(w: Word) -> str:
    return str(w)


_BRAID_TOKEN = re.compile(r"s_?(\d+)(?:\^\{?([-+]?\d+)\}?)?$")


def parse_braid_letters(text: str, strands: int, *, line: int = 1) -> list[tuple[int, int]]:
    """Parse ``"s1 s2^-1 s1^2"`` into unit letters ``[(1, 1), (2, -1), (1, 1), (1, 1)]``."""
    letters: list[tuple[int, int]] = []
    col = 1
    body = text.split("#", 1)[0]
    for piece in re.finditer(r"\S+", body):
        col = piece.start() + 1
        m = _BRAID_TOKEN.match(piece.group(0))
        if m is None:
            raise GrammarError(f"bad braid token {piece.group(0)!r}", line, col)
        i = int(m.group(1))
        if not 1 <= i <= strands - 1:
            raise GrammarError(f"braid generator s{i} out of range 1..{strands - 1}", line, col)
        e = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
    return letters


def parse_int_vector(text: str, *, line: int = 1) -> list[int]:
    body = text.split("#", 1)[0].strip()
    if not body:
        return []
    out = []
    for k, part in enumerate(body.split(",")):
        try:
            out.append(int(part.strip()))
        except ValueError:
            raise GrammarError(f"bad integer {part.strip()!r} in vector", line, k + 1) from None
    return out
