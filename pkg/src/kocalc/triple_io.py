"""Deterministic JSON persistence for finite spectral triples (schema v1).

Documents carry, in this fixed key order: schema_version, dim, dirac,
chirality, real_structure_k, algebra_gens, metadata.  Matrices are
row-major blocks {"rows": r, "cols": c, "entries": [{"re": "p/q",
"im": "p/q"}, ...]} with rationals as canonical lowest-terms strings.
Serialization is byte-deterministic: the same triple and metadata always
produce identical bytes, and parse(serialize(t)) reproduces t exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import InvalidTriple, ParseError, UnsupportedVersion
from .linalg import Antiunitary, ExactMatrix, GaussianRational
from .triples import FiniteSpectralTriple, validate_triple

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

_TOP_KEYS = (
    "schema_version", "dim", "dirac", "chirality",
    "real_structure_k", "algebra_gens", "metadata",
)


def rational_to_str(x: Fraction) -> str:
    return str(x)


def str_to_rational(s: Any, location: str) -> Fraction:
    if not isinstance(s, str):
        raise ParseError(f"rational must be a string, got {type(s).__name__}", location)
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"malformed rational string {s!r}", location)
    if "/" in s and s.split("/")[1].lstrip("0") == "":
        raise ParseError(f"zero denominator in rational {s!r}", location)
    return Fraction(s)


def _matrix_to_block(m: ExactMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [
            {"re": rational_to_str(e.re), "im": rational_to_str(e.im)}
            for e in m.entries
        ],
    }


def _block_to_matrix(obj: Any, location: str) -> ExactMatrix:
    if not isinstance(obj, dict):
        raise ParseError(f"matrix block must be an object, got {type(obj).__name__}", location)
    for key in ("rows", "cols", "entries"):
        if key not in obj:
            raise ParseError(f"matrix block missing key {key!r}", location)
    extra = set(obj) - {"rows", "cols", "entries"}
    if extra:
        raise ParseError(f"matrix block has unknown keys {sorted(extra)}", location)
    rows, cols = obj["rows"], obj["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise ParseError("rows and cols must be positive integers", location)
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ParseError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix", location
        )
    parsed = []
    for idx, ent in enumerate(entries):
        here = f"{location}.entries[{idx}]"
        if not isinstance(ent, dict) or set(ent) != {"re", "im"}:
            raise ParseError("entry must be an object with exactly the keys 're' and 'im'", here)
        parsed.append(GaussianRational(
            str_to_rational(ent["re"], f"{here}.re"),
            str_to_rational(ent["im"], f"{here}.im"),
        ))
    return ExactMatrix(rows, cols, tuple(parsed))


@dataclass(frozen=True)
class TripleDocument:
    """The schema-level view of one serialized triple."""

    schema_version: int
    dim: int
    dirac: ExactMatrix
    chirality: ExactMatrix | None
    real_structure_k: ExactMatrix
    algebra_gens: tuple[ExactMatrix, ...]
    metadata: tuple[tuple[str, str], ...]

    @classmethod
    def from_triple(
        cls, t: FiniteSpectralTriple, metadata: Mapping[str, str] | None = None
    ) -> "TripleDocument":
        meta = tuple(sorted((metadata or {}).items()))
        return cls(SCHEMA_VERSION, t.dim, t.dirac, t.chirality,
                   t.real_structure.k, t.algebra_gens, meta)

    def to_triple(self) -> FiniteSpectralTriple:
        try:
            j = Antiunitary(self.real_structure_k)
        except ValueError as exc:
            raise InvalidTriple(f"real_structure_k: {exc}") from exc
        return FiniteSpectralTriple(
            dim=self.dim,
            algebra_gens=self.algebra_gens,
            dirac=self.dirac,
            chirality=self.chirality,
            real_structure=j,
        )

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "dim": self.dim,
            "dirac": _matrix_to_block(self.dirac),
            "chirality": None if self.chirality is None else _matrix_to_block(self.chirality),
            "real_structure_k": _matrix_to_block(self.real_structure_k),
            "algebra_gens": [_matrix_to_block(a) for a in self.algebra_gens],
            "metadata": dict(self.metadata),
        }


def _document_from_json(obj: Any) -> TripleDocument:
    if not isinstance(obj, dict):
        raise ParseError("document root must be an object", "$")
    missing = [k for k in _TOP_KEYS if k not in obj]
    if missing:
        raise ParseError(f"missing top-level keys {missing}", "$")
    extra = set(obj) - set(_TOP_KEYS)
    if extra:
        raise ParseError(f"unknown top-level keys {sorted(extra)}", "$")

    version = obj["schema_version"]
    if not isinstance(version, int):
        raise ParseError("schema_version must be an integer", "schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedVersion(f"schema version {version} is not supported (expected {SCHEMA_VERSION})")

    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim must be a positive integer", "dim")

    dirac = _block_to_matrix(obj["dirac"], "dirac")
    chirality = None
    if obj["chirality"] is not None:
        chirality = _block_to_matrix(obj["chirality"], "chirality")
    k = _block_to_matrix(obj["real_structure_k"], "real_structure_k")

    gens_obj = obj["algebra_gens"]
    if not isinstance(gens_obj, list):
        raise ParseError("algebra_gens must be a list", "algebra_gens")
    gens = tuple(
        _block_to_matrix(g, f"algebra_gens[{i}]") for i, g in enumerate(gens_obj)
    )

    meta_obj = obj["metadata"]
    if not isinstance(meta_obj, dict) or not all(
        isinstance(a, str) and isinstance(b, str) for a, b in meta_obj.items()
    ):
        raise ParseError("metadata must map strings to strings", "metadata")

    for name, m in (("dirac", dirac), ("chirality", chirality), ("real_structure_k", k)):
        if m is not None and (m.rows != dim or m.cols != dim):
            raise ParseError(f"{name} must be {dim}x{dim}", name)
    for i, g in enumerate(gens):
        if g.rows != dim or g.cols != dim:
            raise ParseError(f"algebra_gens[{i}] must be {dim}x{dim}", f"algebra_gens[{i}]")

    return TripleDocument(version, dim, dirac, chirality, k, gens,
                          tuple(sorted(meta_obj.items())))


def serialize_triple(
    t: FiniteSpectralTriple, metadata: Mapping[str, str] | None = None
) -> bytes:
    doc = TripleDocument.from_triple(t, metadata)
    text = json.dumps(doc.to_json_dict(), indent=2, ensure_ascii=True)
    return (text + "\n").encode("utf-8")


def parse_document(data: bytes | str) -> tuple[FiniteSpectralTriple, dict[str, str]]:
    """Parse without axiom validation; returns the triple and its metadata."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}") from exc
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document is not valid JSON: {exc}") from exc
    doc = _document_from_json(obj)
    return doc.to_triple(), dict(doc.metadata)


def parse_triple(data: bytes | str, validate: bool = True) -> FiniteSpectralTriple:
    """Parse one document; with validate=True an axiom failure is InvalidTriple."""
    triple, _meta = parse_document(data)
    if validate:
        report = validate_triple(triple)
        if not report.passed:
            names = ", ".join(c.name for c in report.failures)
            raise InvalidTriple(f"parsed triple fails validation: {names}")
    return triple
