import json

import pytest

from gradedprime import config
from gradedprime.corpus import get_entry, list_entries
from gradedprime.documents import load, save
from gradedprime.errors import EXIT_BUDGET, EXIT_FAILED, EXIT_MALFORMED, EXIT_OK
from gradedprime.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_corpus_entry(capsys):
    code, out, _ = run(capsys, "validate", "gauss4")
    assert code == EXIT_OK
    assert "valid" in out


def test_validate_reports_axiom_failures(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "near-ring", "order": 2, "add": [[0, 1], [1, 0]],
                                "mul": [[0, 1], [0, 1]]}))
    code, _, err = run(capsys, "validate", str(path))
    assert code == EXIT_FAILED
    assert "NotRightDistributive" in err


def test_malformed_input(capsys, tmp_path):
    assert run(capsys, "validate", "no-such-thing")[0] == EXIT_MALFORMED
    assert run(capsys, "frobnicate")[0] == EXIT_MALFORMED
    path = tmp_path / "short.json"
    path.write_text(json.dumps({"kind": "near-ring", "order": 2, "add": [[0, 1]], "mul": [[0, 0], [0, 0]]}))
    assert run(capsys, "validate", str(path))[0] == EXIT_MALFORMED


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "ideals", "mz3", "--budget", "5")
    assert code == EXIT_BUDGET
    assert "EnumerationBudgetExceeded" in err


def _fresh_document(tmp_path, name):
    """A corpus entry written to disk, so nothing cached for the entry object applies"""
    return str(save(get_entry(name).structure, tmp_path / f"{name}.json"))


def test_budget_option_beats_environment_default(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(config, "ENUMERATION_BUDGET", 5)
    path = _fresh_document(tmp_path, "gauss4")
    assert run(capsys, "primes", path, "--graded", "--budget", "1000")[0] == EXIT_OK
    assert run(capsys, "ideals", path, "--graded", "--budget", "1000")[0] == EXIT_OK
    assert run(capsys, "check", path, "--theorem", "2.4", "--budget", "1000")[0] == EXIT_OK
    assert config.resolve_budget() == 5


def test_small_budget_reaches_graded_enumeration(capsys, tmp_path):
    path = _fresh_document(tmp_path, "z8-or")
    assert run(capsys, "ideals", path, "--graded", "--budget", "2")[0] == EXIT_BUDGET
    assert run(capsys, "primes", path, "--graded", "--budget", "2")[0] == EXIT_BUDGET
    assert run(capsys, "primes", path, "--budget", "2")[0] == EXIT_BUDGET
    assert run(capsys, "check", path, "--theorem", "2.4", "--budget", "2")[0] == EXIT_BUDGET


def test_graded_ideals_json(capsys):
    code, out, _ = run(capsys, "ideals", "gauss4", "--graded", "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["kind"] == "subsets"
    assert document["subsets"] == [[0], [0, 2, 8, 10], list(range(16))]


def test_primes_json(capsys):
    code, out, _ = run(capsys, "primes", "gauss4", "--graded", "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert [(i["ideal"], i["verdict"]) for i in document["ideals"]] == [([0], False), ([0, 2, 8, 10], True)]
    code, out, _ = run(capsys, "primes", "gauss4", "--format", "json")
    verdicts = {tuple(i["ideal"]): i["verdict"] for i in json.loads(out)["ideals"]}
    assert verdicts[(0, 2, 8, 10)] is False


def test_corpus_emit_matches_golden(capsys, golden_dir):
    code, out, _ = run(capsys, "corpus", "emit", "z2-mult")
    assert code == EXIT_OK
    assert out == (golden_dir / "z2-mult.json").read_text(encoding="utf-8")


def test_corpus_emit_all(capsys, tmp_path):
    code, _, _ = run(capsys, "corpus", "emit", "--all", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert sorted(p.stem for p in tmp_path.glob("*.json")) == sorted(list_entries())
    assert run(capsys, "corpus", "emit", "--all")[0] == EXIT_MALFORMED


def test_quotient_to_file(capsys, tmp_path):
    out_path = tmp_path / "q.json"
    code, _, _ = run(capsys, "quotient", "z6-or", "--ideal", "0,3", "--out", str(out_path))
    assert code == EXIT_OK
    quotient = load(out_path)
    assert quotient.near_ring.order == 3
    assert run(capsys, "quotient", "z6-or", "--ideal", "0,2")[0] == EXIT_MALFORMED


def test_product_round_trip(capsys):
    code, out, _ = run(capsys, "product", "z2-mult", "z2-mult", "--name", "pair")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["name"] == "pair"
    assert document["order"] == 4
    assert run(capsys, "product", "z6-or", "z2-mult")[0] == EXIT_FAILED


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "z6-or", "--theorem", "2.4-cex", "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["checks"][0]["outcome"] == "fail-as-expected"
    assert run(capsys, "check", "z6-or", "--theorem", "9.99")[0] == EXIT_MALFORMED


def test_hom(capsys):
    assert run(capsys, "hom", "z8-or", "z2-or", "--map", "0,1,0,1,0,1,0,1")[0] == EXIT_OK
    code, _, err = run(capsys, "hom", "z8-or", "z2-or", "--map", "1,0,1,0,1,0,1,0")
    assert code == EXIT_FAILED
    assert "NotAdditive" in err
    assert run(capsys, "hom", "z8-or", "z2-or", "--map", "0,x")[0] == EXIT_MALFORMED


@pytest.mark.parametrize("argv", [["corpus", "list"], ["generate", "z6-or", "--elements", "2"]])
def test_table_output(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out
