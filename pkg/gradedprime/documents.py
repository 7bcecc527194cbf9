"""JSON documents for monoids, near-rings and graded near-rings.

Documents are emitted canonically: sorted keys, two-space indentation, one
table row per line and a trailing newline, so equal structures give
byte-identical files.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Union

from .errors import DocumentError
from .grading import GradedNearRing, make_graded, trivial_grading
from .structures import FiniteMonoid, FiniteNearRing, validate_monoid, validate_near_ring
from . import masks

# Set up logging
logger = logging.getLogger(__name__)

KIND_MONOID = "monoid"
KIND_NEAR_RING = "near-ring"
KIND_GRADED = "graded-near-ring"

_ROW_TOKEN = "\u0000row:{}\u0000"


def _is_int_row(value) -> bool:
    return (isinstance(value, (list, tuple)) and len(value) > 0
            and all(isinstance(v, int) and not isinstance(v, bool) for v in value))


def _stash_rows(value, rows: List[str]):
    """Replace every non-empty list of integers by a token naming its one-line text"""
    if _is_int_row(value):
        rows.append("[" + ", ".join(str(v) for v in value) + "]")
        return _ROW_TOKEN.format(len(rows) - 1)
    if isinstance(value, (list, tuple)):
        return [_stash_rows(v, rows) for v in value]
    if isinstance(value, dict):
        return {k: _stash_rows(v, rows) for k, v in value.items()}
    return value


def dumps(document: Dict) -> str:
    """Canonical JSON text with integer rows kept on one line"""
    rows: List[str] = []
    text = json.dumps(_stash_rows(document, rows), sort_keys=True, indent=2, ensure_ascii=False)
    # Tokens only ever stand in for whole values, so string contents are left alone
    for i, row in enumerate(rows):
        text = text.replace(json.dumps(_ROW_TOKEN.format(i)), row, 1)
    return text + "\n"


def _table(array) -> list:
    return [[int(v) for v in row] for row in array]


# --- Structures to documents ---
def monoid_document(monoid: FiniteMonoid) -> Dict:
    return {
        "kind": KIND_MONOID,
        "name": monoid.name,
        "order": monoid.order,
        "op": _table(monoid.op_table),
        "identity": monoid.identity,
    }


def near_ring_document(near_ring: FiniteNearRing, notes: str = "") -> Dict:
    document = {
        "kind": KIND_NEAR_RING,
        "name": near_ring.name,
        "order": near_ring.order,
        "add": _table(near_ring.add_table),
        "mul": _table(near_ring.mul_table),
        "zero": near_ring.zero,
        "one": near_ring.one,
    }
    if near_ring.labels:
        document["labels"] = list(near_ring.labels)
    if notes:
        document["notes"] = notes
    return document


def graded_document(graded: GradedNearRing) -> Dict:
    document = near_ring_document(graded.near_ring, graded.notes)
    document["kind"] = KIND_GRADED
    document["name"] = graded.name
    document["monoid"] = monoid_document(graded.monoid)
    document["components"] = [masks.members(c) for c in graded.components]
    return document


def to_document(structure: Union[FiniteMonoid, FiniteNearRing, GradedNearRing]) -> Dict:
    if isinstance(structure, GradedNearRing):
        return graded_document(structure)
    if isinstance(structure, FiniteNearRing):
        return near_ring_document(structure)
    if isinstance(structure, FiniteMonoid):
        return monoid_document(structure)
    raise DocumentError(f"cannot serialise {type(structure).__name__}")


# --- Documents to structures ---
def _field(document: Dict, key: str):
    if key not in document:
        raise DocumentError(f"document is missing '{key}'")
    return document[key]


def _order(document: Dict) -> int:
    order = _field(document, "order")
    if not isinstance(order, int) or isinstance(order, bool):
        raise DocumentError(f"order must be an integer, got {order!r}")
    return order


def parse_monoid(document: Dict) -> FiniteMonoid:
    return validate_monoid(_order(document), _field(document, "op"), _field(document, "identity"),
                           name=document.get("name", ""))


def parse_near_ring(document: Dict) -> FiniteNearRing:
    near_ring = validate_near_ring(_order(document), _field(document, "add"), _field(document, "mul"),
                                   labels=document.get("labels"), name=document.get("name", ""))
    # Annotations are optional but must match what validation found
    if "zero" in document and document["zero"] != near_ring.zero:
        raise DocumentError(f"zero annotation {document['zero']!r} but the additive identity is {near_ring.zero}")
    if document.get("one") is not None and document["one"] != near_ring.one:
        raise DocumentError(f"one annotation {document['one']!r} but the unity is {near_ring.one}")
    return near_ring


def parse_graded(document: Dict) -> GradedNearRing:
    near_ring = parse_near_ring(document)
    monoid_doc = _field(document, "monoid")
    if not isinstance(monoid_doc, dict):
        raise DocumentError("'monoid' must be an object")
    monoid = parse_monoid(monoid_doc)
    components = _field(document, "components")
    if not isinstance(components, list) or not all(isinstance(c, list) for c in components):
        raise DocumentError("'components' must be a list of index lists")
    return make_graded(near_ring, monoid, components, name=document.get("name", ""),
                       notes=document.get("notes", ""))


def from_document(document: Dict) -> Union[FiniteMonoid, FiniteNearRing, GradedNearRing]:
    """Validate a parsed document into a certified structure

    Raises:
        DocumentError: unknown kind or missing fields.
        ValidationError: the tables fail an axiom.
    """
    if not isinstance(document, dict):
        raise DocumentError("document must be a JSON object")
    kind = document.get("kind")
    if kind == KIND_GRADED:
        return parse_graded(document)
    if kind == KIND_NEAR_RING:
        return parse_near_ring(document)
    if kind == KIND_MONOID:
        return parse_monoid(document)
    raise DocumentError(f"unknown document kind {kind!r}")


def as_graded(structure: Union[FiniteNearRing, GradedNearRing]) -> GradedNearRing:
    """Graded view of a structure; plain near-rings get the trivial grading"""
    if isinstance(structure, GradedNearRing):
        return structure
    if isinstance(structure, FiniteNearRing):
        return trivial_grading(structure)
    raise DocumentError("expected a near-ring or graded near-ring document")


def loads(text: str) -> Union[FiniteMonoid, FiniteNearRing, GradedNearRing]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}")
    return from_document(document)


def load(path: Union[str, Path]):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}")
    logger.debug(f"Loading document {path}")
    return loads(text)


def save(structure, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps(to_document(structure)), encoding="utf-8")
    return path
