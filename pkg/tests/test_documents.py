import json

import pytest

from gradedprime.corpus import get_entry
from gradedprime.documents import (
    as_graded, dumps, from_document, load, loads, near_ring_document, save, to_document,
)
from gradedprime.errors import DocumentError, MalformedTable, NotRightDistributive
from gradedprime.grading import GradedNearRing
from gradedprime.structures import FiniteNearRing, is_isomorphic


@pytest.mark.parametrize("name", ["z2-mult", "z6-or", "z8-or", "mz2", "gauss4", "z2xz2"])
def test_emit_matches_golden(golden_dir, name):
    expected = (golden_dir / f"{name}.json").read_text(encoding="utf-8")
    assert dumps(to_document(get_entry(name).structure)) == expected


def test_golden_documents_load(golden_dir):
    graded = load(golden_dir / "z6-or.json")
    assert isinstance(graded, GradedNearRing)
    assert graded.components == get_entry("z6-or").structure.components


def test_saved_document_reloads(tmp_path, gauss4):
    path = save(gauss4, tmp_path / "gauss4.json")
    again = load(path)
    assert again.name == "gauss4"
    assert again.near_ring.labels == gauss4.near_ring.labels
    assert again.components == gauss4.components
    assert dumps(to_document(again)) == path.read_text(encoding="utf-8")


def test_plain_near_ring_gets_trivial_grading():
    document = near_ring_document(get_entry("mz2").structure.near_ring)
    near_ring = from_document(document)
    assert isinstance(near_ring, FiniteNearRing)
    graded = as_graded(near_ring)
    assert graded.components == (near_ring.full_mask,)
    assert is_isomorphic(near_ring, get_entry("mz2").structure.near_ring)


def test_rows_stay_on_one_line(z6):
    text = dumps(to_document(z6))
    assert "    [0, 1, 2, 3, 4, 5],\n" in text
    assert text.endswith("}\n")


def test_bad_documents():
    with pytest.raises(DocumentError):
        loads("{not json")
    with pytest.raises(DocumentError):
        loads(json.dumps({"kind": "semigroup"}))
    with pytest.raises(DocumentError):
        loads(json.dumps({"kind": "near-ring", "order": 2, "add": [[0, 1], [1, 0]]}))
    with pytest.raises(DocumentError):
        loads(json.dumps({"kind": "near-ring", "order": "2", "add": [], "mul": []}))


def test_annotations_must_match():
    document = to_document(get_entry("z2-mult").structure)
    document["one"] = 0
    with pytest.raises(DocumentError):
        from_document(document)


def test_table_errors_propagate():
    with pytest.raises(MalformedTable):
        loads(json.dumps({"kind": "near-ring", "order": 2, "add": [[0, 1]], "mul": [[0, 0], [0, 0]]}))
    # x * y = 1 for y != 0 breaks (a+b)c = ac+bc
    bad = {"kind": "near-ring", "order": 2, "add": [[0, 1], [1, 0]], "mul": [[0, 1], [0, 1]]}
    with pytest.raises(NotRightDistributive):
        loads(json.dumps(bad))


@pytest.mark.parametrize("name", ["z8-or", "mz2", "gauss4", "z2xz2"])
def test_golden_reloads_to_same_text(golden_dir, name):
    path = golden_dir / f"{name}.json"
    assert dumps(to_document(load(path))) == path.read_text(encoding="utf-8")


def test_labels_that_look_like_rows_survive():
    document = {"kind": "near-ring", "name": "z2", "order": 2, "add": [[0, 1], [1, 0]],
                "mul": [[0, 0], [0, 1]], "zero": 0, "one": 1, "labels": ["[0,1]", "[ 1 ]"]}
    text = dumps(document)
    assert '"[0,1]"' in text
    assert '"[ 1 ]"' in text
    assert "    [0, 1],\n" in text
    assert dumps(to_document(loads(text))) == text


def test_notes_are_emitted():
    document = to_document(get_entry("z2xz2").structure)
    assert document["notes"] == "componentwise product z2-mult × z2-mult"
    assert "×" in dumps(document)
