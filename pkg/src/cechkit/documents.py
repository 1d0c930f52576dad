"""Interchange documents: parsing, validation and canonical serialisation.

The document format is UTF-8 JSON with exactly these fields:

    {
      "field": int,                       # prime modulus
      "pieces": [{"id": str, "simplices": [[str, ...], ...]}, ...],
      "gluings": [{"i": str, "j": str, "pairs": [[str, str], ...]}, ...],
      "bundle": { ... },                  # optional
      "refinement": { ... }               # optional
    }

Maximal simplices suffice; the downward closure is computed on load.
Each gluing entry also installs its inverse, so documents carry one
direction per unordered pair.  The optional bundle block is
{"rank": int, "pieces": [{"id", "edges": [[a, b, value], ...]}],
"identifications": [{"i", "j", "vertices": [[label, value], ...]}]}
with labels referring to canonical global names; rank-1 values are field
scalars (additive), higher ranks use nested k x k matrices.  The optional
refinement block is {"fine": {"pieces": ..., "gluings": ...},
"map": [[fine_label, coarse_label], ...]} and inherits the field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .bundles import ConstantCocycle, PieceBundleData
from .complexes import MalformedSimplex, build_complex
from .diagrams import (
    AdjunctionSystem,
    GluedDiagram,
    GluingBijection,
    LocalPiece,
    canonicalize,
)
from .fplinalg import NotPrime, PrimeField
from .refinements import RefinementMap


class ParseError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class NonPrimeModulus(ParseError):
    def __init__(self, value: Any):
        super().__init__(f"field modulus {value!r} is not prime", "$.field")


@dataclass(frozen=True)
class ParsedDocument:
    system: AdjunctionSystem
    bundle: dict | None
    refinement: dict | None


_TOP_KEYS = {"field", "pieces", "gluings", "bundle", "refinement"}


def parse_document(doc: Any, field_override: int | None = None) -> ParsedDocument:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        raise ParseError(f"unknown keys {unknown}")
    for key in ("field", "pieces", "gluings"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    raw_field = field_override if field_override is not None else doc["field"]
    if not isinstance(raw_field, int) or isinstance(raw_field, bool):
        raise ParseError("field modulus must be an integer", "$.field")
    try:
        field = PrimeField(raw_field)
    except NotPrime:
        raise NonPrimeModulus(raw_field) from None

    system = _parse_system(doc, field)
    bundle = doc.get("bundle")
    refinement = doc.get("refinement")
    if bundle is not None and not isinstance(bundle, dict):
        raise ParseError("bundle block must be an object", "$.bundle")
    if refinement is not None and not isinstance(refinement, dict):
        raise ParseError("refinement block must be an object", "$.refinement")
    return ParsedDocument(system, bundle, refinement)


def _parse_system(doc: dict, field: PrimeField) -> AdjunctionSystem:
    if not isinstance(doc["pieces"], list) or not doc["pieces"]:
        raise ParseError("pieces must be a nonempty list", "$.pieces")
    pieces: list[LocalPiece] = []
    seen: set[str] = set()
    for k, entry in enumerate(doc["pieces"]):
        path = f"$.pieces[{k}]"
        if not isinstance(entry, dict) or set(entry) != {"id", "simplices"}:
            raise ParseError("piece must have exactly the keys id, simplices", path)
        pid = entry["id"]
        if not isinstance(pid, str) or not pid:
            raise ParseError("piece id must be a nonempty string", path)
        if pid in seen:
            raise ParseError(f"duplicate piece id {pid!r}", path)
        seen.add(pid)
        if not isinstance(entry["simplices"], list):
            raise ParseError("simplices must be a list", path)
        try:
            nerve = build_complex([[str(v) for v in s] for s in entry["simplices"]])
        except MalformedSimplex as exc:
            raise ParseError(f"bad simplex: {exc}", path) from None
        pieces.append(LocalPiece(pid, nerve))

    if not isinstance(doc["gluings"], list):
        raise ParseError("gluings must be a list", "$.gluings")
    gluings: list[GluingBijection] = []
    for k, entry in enumerate(doc["gluings"]):
        path = f"$.gluings[{k}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "pairs"}:
            raise ParseError("gluing must have exactly the keys i, j, pairs", path)
        i, j = entry["i"], entry["j"]
        if i == j:
            raise ParseError("gluing must relate two distinct pieces", path)
        if i not in seen or j not in seen:
            raise ParseError(f"gluing references unknown pieces {i!r}, {j!r}", path)
        try:
            pairs = tuple(sorted((str(x), str(y)) for x, y in entry["pairs"]))
        except (TypeError, ValueError):
            raise ParseError("pairs must be a list of [label, label] entries", path) from None
        gluings.append(GluingBijection(i, j, pairs))
        gluings.append(GluingBijection(j, i, tuple(sorted((y, x) for x, y in pairs))))
    return AdjunctionSystem(tuple(pieces), tuple(gluings), field)


def load_document(path: str | Path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_diagram(path: str | Path, field_override: int | None = None) -> ParsedDocument:
    """Parse and validate a diagram document from disk."""
    return parse_document(load_document(path), field_override)


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def materialise_bundle(diagram: GluedDiagram, raw: dict) -> PieceBundleData:
    """Build piece bundle data from the optional document block.

    Labels in the block refer to canonical global names; unspecified
    edges and identification vertices default to the identity.
    """
    if set(raw) - {"rank", "pieces", "identifications"}:
        raise ParseError(f"unknown bundle keys {sorted(set(raw) - {'rank', 'pieces', 'identifications'})}",
                         "$.bundle")
    rank = raw.get("rank", 1)
    if not isinstance(rank, int) or rank < 1:
        raise ParseError("bundle rank must be a positive integer", "$.bundle.rank")
    cocycles: dict[str, ConstantCocycle] = {}
    given = {}
    for entry in raw.get("pieces", []):
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("bundle piece entries need a string id", "$.bundle.pieces")
        given[entry["id"]] = entry
    unknown = sorted(set(given) - set(diagram.piece_ids))
    if unknown:
        raise ParseError(f"bundle names unknown pieces {unknown}", "$.bundle.pieces")
    for pid in diagram.piece_ids:
        nerve = diagram.nerves[pid]
        values: dict[tuple[str, str], Any] = {}
        entry = given.get(pid, {"edges": []})
        for item in entry.get("edges", []):
            if len(item) != 3:
                raise ParseError("edge entries are [a, b, value]", f"$.bundle.pieces[{pid}]")
            a, b, value = str(item[0]), str(item[1]), item[2]
            key = tuple(sorted((a, b)))
            if key not in nerve.simplices:
                raise ParseError(f"{key} is not an edge of piece {pid!r}", f"$.bundle.pieces[{pid}]")
            values[key] = value
        try:
            cocycles[pid] = ConstantCocycle.build(nerve, rank, diagram.field, values)
        except ValueError as exc:
            raise ParseError(str(exc), f"$.bundle.pieces[{pid}]") from None

    identifications: dict[tuple[str, str], dict[str, Any]] = {}
    for k, entry in enumerate(raw.get("identifications", [])):
        path = f"$.bundle.identifications[{k}]"
        if set(entry) != {"i", "j", "vertices"}:
            raise ParseError("identification must have exactly the keys i, j, vertices", path)
        i, j = entry["i"], entry["j"]
        if i not in diagram.piece_ids or j not in diagram.piece_ids or i == j:
            raise ParseError(f"bad piece pair {i!r}, {j!r}", path)
        key = (i, j) if i < j else (j, i)
        table: dict[str, Any] = {}
        overlap = set(diagram.intersection_nerve(key).vertices)
        for item in entry["vertices"]:
            if len(item) != 2:
                raise ParseError("vertex entries are [label, value]", path)
            label, value = str(item[0]), item[1]
            if label not in overlap:
                raise ParseError(f"label {label!r} is not in the overlap of {key}", path)
            table[label] = value
        if (i, j) != key:
            raise ParseError("identifications must be given for i < j", path)
        identifications[key] = table
    return PieceBundleData(diagram, rank, cocycles, identifications)


def materialise_refinement(coarse: GluedDiagram, raw: dict, field: PrimeField) -> RefinementMap:
    """Build the refinement map from the optional document block."""
    if set(raw) != {"fine", "map"}:
        raise ParseError("refinement block must have exactly the keys fine, map", "$.refinement")
    fine_doc = dict(raw["fine"])
    if set(fine_doc) - {"pieces", "gluings"}:
        raise ParseError("fine document may only carry pieces and gluings", "$.refinement.fine")
    fine_doc["field"] = field.p
    fine_system = parse_document(fine_doc).system
    fine = canonicalize(fine_system)
    try:
        labels = {str(a): str(b) for a, b in raw["map"]}
    except (TypeError, ValueError):
        raise ParseError("map must be a list of [fine, coarse] label pairs",
                         "$.refinement.map") from None
    return RefinementMap(fine, coarse, labels)
