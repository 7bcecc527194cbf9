import pytest

from gradedprime import masks
from gradedprime.errors import EXIT_OK, UnknownTheoremId
from gradedprime.harness import Outcome, check, list_checks, run_all
from gradedprime.primality import PrimalityReport, replay_witness


def replays(graded, ideal, witness):
    """Rebuild a definition report from a harness witness and replay it"""
    report = PrimalityReport(ideal=masks.from_indices(ideal), verdict=False, checker="def", witness={
        "A": masks.from_indices(witness["A"]), "B": masks.from_indices(witness["B"]),
        "g": witness["g"], "h": witness["h"],
    })
    return replay_witness(graded, report)


def test_registry_lists_every_check():
    ids = list_checks()
    assert ids[0] == "2.3"
    assert {"2.4-cex", "2.7-analog", "2.17-converse", "2.22"} <= set(ids)


def test_incomparable_primes_meet_badly(z6):
    result = check("2.4-cex", z6)
    assert result.outcome is Outcome.EXPECTED_FAIL
    assert result.witnesses[0]["meet"] == [0]
    assert not result.unexpected


def test_incomparable_meet_carries_a_replayable_witness(z6):
    hit = check("2.4-cex", z6).witnesses[0]
    assert hit["witness"] == {"A": [0, 2, 4], "B": [0, 3], "g": 0, "h": 0}
    assert replays(z6, hit["meet"], hit["witness"])


def test_not_graded_prime_claims_replay(z8, z2xz2):
    converse = check("2.17-converse", z8)
    assert converse.witnesses
    for hit in converse.witnesses:
        assert replays(z8, hit["zero"], hit["witness"])
    product = check("2.18-note", z2xz2)
    assert product.outcome is Outcome.EXPECTED_FAIL
    for hit in product.witnesses:
        assert replays(z2xz2, hit["box"], hit["witness"])
    (zero,) = check("2.21", z2xz2).witnesses
    assert replays(z2xz2, [0], zero)


def test_report_json_keeps_witnesses(z6):
    document = run_all([z6], ["2.4-cex"], workers=1).to_document()
    (hit,) = [w for w in document["checks"][0]["witnesses"] if w["meet"] == [0]]
    assert set(hit["witness"]) == {"A", "B", "g", "h"}


def test_maximal_with_unity(z6):
    assert check("2.16", z6).outcome is Outcome.PASS
    assert check("2.16", "s3-zero").outcome is Outcome.NOT_APPLICABLE


def test_product_zero_witness(z2xz2):
    result = check("2.21", z2xz2)
    assert result.outcome is Outcome.PASS
    assert result.witnesses == [{"A": [0, 2], "B": [0, 1], "g": 1, "h": 1}]


def test_graded_prime_not_prime(gauss4, z6):
    result = check("2.7-analog", gauss4)
    assert result.outcome is Outcome.PASS
    assert result.witnesses[0]["P"] == [0, 2, 8, 10]
    assert check("2.7-analog", z6).outcome is Outcome.NOT_APPLICABLE


def test_whole_powers(gauss4, z6):
    result = check("2.6", gauss4)
    assert result.outcome is Outcome.EXPECTED_FAIL
    # J = <1+i> is ungraded and J^2 = (2) is the graded prime P
    assert "[0, 2, 5, 7, 8, 10, 13, 15]" in result.detail
    assert "1+i" in result.detail
    assert result.witnesses[0] == {"P": [0, 2, 8, 10], "J": [0, 2, 5, 7, 8, 10, 13, 15], "n": 2}
    assert check("2.6", z6).outcome is Outcome.PASS


def test_kernel_converse(z8):
    result = check("2.17-converse", z8)
    assert result.outcome is Outcome.EXPECTED_FAIL


def test_product_checks(entry):
    assert check("2.20", "z6xz2").outcome is Outcome.PASS
    result = check("2.19", "z6xz2")
    assert result.outcome is Outcome.PASS
    assert result.parameters == {"bound": 4}
    assert check("2.20", entry("z6-or")).outcome is Outcome.NOT_APPLICABLE


def test_report_document(z6):
    report = run_all([z6], ["2.4-cex", "2.16"], workers=1)
    document = report.to_document()
    assert document["kind"] == "harness-report"
    assert [c["id"] for c in document["checks"]] == ["2.4-cex", "2.16"]
    assert document["summary"]["fail-as-expected"] == 1
    assert report.exit_code == EXIT_OK


def test_unknown_check(z6):
    with pytest.raises(UnknownTheoremId):
        check("9.99", z6)
    with pytest.raises(UnknownTheoremId):
        run_all([z6], ["9.99"])


@pytest.mark.slow
def test_full_corpus_has_no_unexpected_failures():
    serial = run_all(workers=1)
    assert serial.failures == []
    parallel = run_all(workers=2)
    assert [c.to_dict() for c in parallel.checks] == [c.to_dict() for c in serial.checks]
