"""Reading and writing ``.ap`` presentation files and ``.braid`` files.

``.ap``::

    # apforge-ap 1            (optional version header, any comment is allowed)
    n=4
    (x1 x3)^2 x2 r2          # one relator per line, rK refers to relator K
    (x1 (x2 x3)^2 x2^2)^-1
    ...

Blank lines after the ``n=`` header are empty relators, so the identity
presentation on four generators is ``n=4`` followed by four blank lines.
Lines that hold only a comment are skipped.

``.braid``::

    # apforge-braid 1
    n=3
    s1^2 s2^-1 s1 ...        # braid word (may span several lines)
    framing: 0, -1, 2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .artin import ArtinPresentation, Violation, validate
from .braids import BraidWord
from .grammar import GrammarError, parse_braid_letters, parse_int_vector, parse_word
from .words import Word

AP_HEADER = "# apforge-ap 1"
BRAID_HEADER = "# apforge-braid 1"

_N_LINE = re.compile(r"\s*n\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class PresentationCandidate:
    """Unvalidated presentation text: n and the parsed relator words."""

    n: int
    relators: tuple[Word, ...]
    source: str = "<text>"

    def validate(self) -> Union[ArtinPresentation, Violation]:
        return validate(self.n, self.relators)

    def require_valid(self) -> ArtinPresentation:
        out = self.validate()
        if isinstance(out, Violation):
            from .artin import InvalidPresentation

            raise InvalidPresentation(out)
        return out


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_presentation_text(text: str, source: str = "<text>") -> PresentationCandidate:
    lines = text.splitlines()
    idx = 0
    n = None
    while idx < len(lines):
        raw = lines[idx]
        idx += 1
        body = _strip_comment(raw).strip()
        if not body:
            continue
        m = _N_LINE.match(body)
        if m is None:
            raise GrammarError("expected header 'n=<int>'", idx, 1)
        n = int(m.group(1))
        break
    if n is None:
        raise GrammarError("missing header 'n=<int>'", max(idx, 1), 1)
    if n < 1:
        raise GrammarError("n must be positive", idx, 1)

    # collect n relator lines; comment-only lines do not count
    rel_lines: list[tuple[int, str]] = []
    while idx < len(lines) and len(rel_lines) < n:
        raw = lines[idx]
        idx += 1
        if raw.lstrip().startswith("#"):
            continue
        rel_lines.append((idx, _strip_comment(raw)))
    while len(rel_lines) < n:
        # trailing blank relators may be lost to editors stripping newlines
        rel_lines.append((idx + 1, ""))
    for k in range(idx, len(lines)):
        if _strip_comment(lines[k]).strip():
            raise GrammarError(f"more than {n} relator lines", k + 1, 1)

    cache: dict[int, Word] = {}
    active: set[int] = set()

    def resolve(k: int, line: int, col: int) -> Word:
        if not 1 <= k <= n:
            raise GrammarError(f"relator reference r{k} out of range 1..{n}", line, col)
        if k in cache:
            return cache[k]
        if k in active:
            raise GrammarError(f"cyclic relator reference r{k}", line, col)
        active.add(k)
        ln, body = rel_lines[k - 1]
        cache[k] = parse_word(body, n, line=ln, resolver=resolve)
        active.discard(k)
        return cache[k]

    relators = tuple(resolve(k, ln, 1) for k, (ln, _) in enumerate(rel_lines, start=1))
    return PresentationCandidate(n, relators, source)


def parse_presentation_file(path: Union[str, Path]) -> PresentationCandidate:
    p = Path(path)
    return parse_presentation_text(p.read_text(), str(p))


def format_presentation(n: int, relators, comment: Optional[str] = None) -> str:
    out = [AP_HEADER]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n={n}")
    for w in relators:
        out.append("" if not w else str(w))
    return "\n".join(out) + "\n"


def serialize_presentation(r: Union[ArtinPresentation, PresentationCandidate], comment: Optional[str] = None) -> str:
    return format_presentation(r.n, r.relators, comment)


@dataclass(frozen=True)
class BraidSpec:
    braid: BraidWord
    framings: tuple[int, ...]


def parse_braid_text(text: str) -> BraidSpec:
    n = None
    letters: list[tuple[int, int]] = []
    framings: Optional[list[int]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).strip()
        if not body:
            continue
        if n is None:
            m = _N_LINE.match(body)
            if m is None:
                raise GrammarError("expected header 'n=<int>'", lineno, 1)
            n = int(m.group(1))
            continue
        if body.lower().startswith("framing"):
            framings = parse_int_vector(body.split(":", 1)[1] if ":" in body else "", line=lineno)
            continue
        letters.extend(parse_braid_letters(body, n, line=lineno))
    if n is None:
        raise GrammarError("missing header 'n=<int>'", 1, 1)
    f = tuple(framings) if framings is not None else (0,) * n
    if len(f) != n:
        raise GrammarError(f"framing vector has {len(f)} entries, expected {n}", 1, 1)
    return BraidSpec(BraidWord(n, tuple(letters)), f)


def parse_braid_file(path: Union[str, Path]) -> BraidSpec:
    return parse_braid_text(Path(path).read_text())


def format_braid(spec: BraidSpec) -> str:
    return "\n".join(
        [BRAID_HEADER, f"n={spec.braid.strands}", str(spec.braid) if spec.braid.letters else "", "framing: " + ", ".join(map(str, spec.framings))]
    ) + "\n"
