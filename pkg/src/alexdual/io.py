"""Reading and writing complexes and duality reports.

A complex document is a JSON object with exactly the keys ``n`` and
``facets`` plus an optional ``name``::

    {"n":4,"facets":[[1,2],[1,3],[1,4],[2,3]]}

``"facets": []`` is the void complex and ``"facets": [[]]`` the complex whose
only face is the empty set.  Output is always canonical: facets sorted, no
whitespace, so serializations can be compared byte for byte.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .simplicial import DomainError, SimplicialComplex, face_to_mask

if TYPE_CHECKING:
    from .duality import DualityReport


class ParseError(ValueError):
    """Malformed complex document; carries the line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class NonMaximalFacetWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ComplexDocument:
    complex: SimplicialComplex
    name: str | None = None


def _reject_duplicates(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise ParseError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_document(text: bytes | str) -> ComplexDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        obj = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None

    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(obj) - {"n", "facets", "name"}
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("n", "facets"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    n = obj["n"]
    if not _is_int(n) or n < 0:
        raise ParseError(f"'n' must be a nonnegative integer, got {n!r}")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    facets = obj["facets"]
    if not isinstance(facets, list):
        raise ParseError("'facets' must be a list of vertex lists")
    for k, facet in enumerate(facets):
        if not isinstance(facet, list):
            raise ParseError(f"facets[{k}] is not a list")
        for v in facet:
            if not _is_int(v):
                raise ParseError(f"facets[{k}] holds non-integer vertex {v!r}")
            if not 1 <= v <= n:
                raise ParseError(f"facets[{k}] holds vertex {v} outside 1..{n}")
        if len(set(facet)) != len(facet):
            raise ParseError(f"facets[{k}] repeats a vertex")

    try:
        X = SimplicialComplex.from_faces(n, facets)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    kept = {face_to_mask(f) for f in X.facets}
    dropped = sorted({tuple(sorted(f)) for f in facets if face_to_mask(f) not in kept})
    if dropped:
        warnings.warn(f"dropped non-maximal facets {dropped}", NonMaximalFacetWarning, stacklevel=2)
    return ComplexDocument(X, name)


def parse_complex(text: bytes | str) -> SimplicialComplex:
    return parse_document(text).complex


def _document_dict(X: SimplicialComplex, name: str | None = None) -> dict:
    obj = {"n": X.n, "facets": [list(f) for f in X.facets]}
    if name is not None:
        obj["name"] = name
    return obj


def serialize_complex(X: SimplicialComplex) -> bytes:
    return json.dumps(_document_dict(X), separators=(",", ":")).encode()


def serialize_document(doc: ComplexDocument) -> bytes:
    return json.dumps(
        _document_dict(doc.complex, doc.name), separators=(",", ":"), ensure_ascii=False
    ).encode()


def serialize_report(report: DualityReport) -> bytes:
    return json.dumps(report.to_dict(), separators=(",", ":")).encode()
