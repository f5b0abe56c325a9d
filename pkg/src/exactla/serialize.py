"""Plain-text and JSON matrix formats.

Plain text: a header line ``m n`` followed by m lines of n literals.
JSON: ``{"field": "Q" | "GF(p)", "rows": m, "cols": n, "entries": [[...], ...]}``
with entries written as the same literals (strings or integers).
"""
from __future__ import annotations

import json

from .errors import FieldMismatch, ParseError
from .field import Field, Q
from .matrix import Matrix


def format_matrix(A: Matrix, fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps({
            "field": str(A.field),
            "rows": A.rows,
            "cols": A.cols,
            "entries": [[str(a) for a in r] for r in A.data],
        })
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"{A.rows} {A.cols}"]
    lines += [" ".join(str(a) for a in r) for r in A.data]
    return "\n".join(lines)


def parse_matrix(text: bytes | str, fmt: str = "plain", field: Field | None = None) -> Matrix:
    """Parse a matrix; ``field`` defaults to Q for plain text.

    For JSON the document names its field; passing a different ``field``
    raises :class:`FieldMismatch`.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if fmt == "json":
        return _parse_json(text, field)
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    return _parse_plain(text, field or Q)


def _parse_plain(text: str, F: Field) -> Matrix:
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError("line 1: empty input, expected header 'm n'")
    no, head = lines[0]
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(f"line {no}: header must be two naturals 'm n', got {' '.join(head)!r}")
    m, n = int(head[0]), int(head[1])
    if m < 1 or n < 1:
        raise ParseError(f"line {no}: dimensions must be positive, got {m}x{n}")
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] if body else no
        raise ParseError(f"line {where}: expected {m} rows, got {len(body)}")
    rows = []
    for no, toks in body:
        if len(toks) != n:
            raise ParseError(f"line {no}: expected {n} entries, got {len(toks)}")
        row = []
        for col, tok in enumerate(toks, 1):
            try:
                row.append(F.parse(tok))
            except ParseError as exc:
                raise ParseError(f"line {no}, column {col}: {exc}") from None
        rows.append(row)
    return Matrix(F, m, n, rows)


def _parse_json(text: str, field: Field | None) -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON matrix must be an object")
    for key in ("field", "rows", "cols", "entries"):
        if key not in doc:
            raise ParseError(f"JSON matrix is missing {key!r}")
    F = Field.from_name(str(doc["field"]))
    if field is not None and field != F:
        raise FieldMismatch(f"document is over {F}, expected {field}")
    m, n, entries = doc["rows"], doc["cols"], doc["entries"]
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
        raise ParseError(f"bad dimensions {m!r}x{n!r}")
    if not isinstance(entries, list) or len(entries) != m:
        raise ParseError(f"entries: expected {m} rows")
    rows = []
    for i, r in enumerate(entries, 1):
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"entries row {i}: expected {n} entries")
        row = []
        for j, tok in enumerate(r, 1):
            if isinstance(tok, bool) or not isinstance(tok, (int, str)):
                raise ParseError(f"entries[{i}][{j}]: literal must be a string or integer")
            try:
                row.append(F.parse(str(tok)))
            except ParseError as exc:
                raise ParseError(f"entries[{i}][{j}]: {exc}") from None
        rows.append(row)
    return Matrix(F, m, n, rows)
