import json
import os

from poisson_forge import suites


GOLDEN = os.path.join(os.path.dirname(__file__), "golden",
                      "check_action_fixtures.jsonl")


def test_quantum_action_suite_matches_golden_file():
    """The quantum-action fixture records -- including the case-2
    paper-discrepancy verdict and its oracle-corrected relation -- are
    byte-stable across runs and pinned by the committed golden file."""
    results = suites.run_fixture_suite("check-action", degree=2)
    fresh = []
    for check_id, rep in results:
        record = {"check": check_id}
        record.update(rep.to_json())
        fresh.append(json.dumps(record, sort_keys=True))
    stored = [line for line in open(GOLDEN).read().splitlines() if line]
    assert fresh == stored


def test_golden_file_records_the_oracle_relation():
    records = [json.loads(line) for line in open(GOLDEN)]
    case2 = [r for r in records if r["check"] == "case2/lie-hom-vs-paper"]
    assert len(case2) == 1
    assert case2[0]["verdict"] == "paper-discrepancy"
    assert case2[0]["data"]["oracle_relation"] == "(-1)*eta + (hbar)*eta*eta"
