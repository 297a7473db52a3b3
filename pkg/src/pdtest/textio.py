"""Plain-text matrix files.

Lines starting with ``#`` are comments. The first token is ``n``, followed by
``n*n`` entries in row-major order, each an integer or ``p/q`` with ``q > 0``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .bigraph import InputMatrix
from .errors import MatrixParseError

_INT = re.compile(r"[+-]?[0-9]+")
_RAT = re.compile(r"([+-]?[0-9]+)/([0-9]+)")


def _entry(tok: str):
    if _INT.fullmatch(tok):
        return int(tok)
    m = _RAT.fullmatch(tok)
    if m:
        q = int(m.group(2))
        if q == 0:
            raise MatrixParseError(f"zero denominator in {tok!r}")
        f = Fraction(int(m.group(1)), q)
        return f.numerator if f.denominator == 1 else f
    raise MatrixParseError(f"not an integer or p/q rational: {tok!r}")


def parse_matrix(text: str) -> InputMatrix:
    tokens = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        tokens.extend(line.split())
    if not tokens:
        raise MatrixParseError("empty matrix file")
    if not _INT.fullmatch(tokens[0]) or int(tokens[0]) < 1:
        raise MatrixParseError(f"first token must be a positive size, got {tokens[0]!r}")
    n = int(tokens[0])
    body = tokens[1:]
    if len(body) != n * n:
        raise MatrixParseError(f"expected {n * n} entries for n={n}, found {len(body)}")
    vals = [_entry(t) for t in body]
    return InputMatrix([vals[i * n:(i + 1) * n] for i in range(n)])


def read_matrix(path) -> InputMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_matrix(A: InputMatrix, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(A.n))
    for row in A.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def write_matrix(path, A: InputMatrix, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(A, comment))
