import json
import os

import pytest

from poisson_forge.cli import main
from poisson_forge.specfile import SpecFile, SpecError


SPEC = os.path.join(os.path.dirname(__file__), "..", "demos",
                    "sample_spec.json")


def run(argv):
    return main(argv)


def test_fixtures_bialgebra_exit_zero(capsys):
    assert run(["check-bialgebra", "--fixtures"]) == 0
    out = capsys.readouterr().out
    assert "pass" in out and "0 fail" in out


def test_spec_bialgebra_pass(capsys):
    assert run(["check-bialgebra", SPEC, "plane_r"]) == 0
    assert run(["check-bialgebra", SPEC, "plane_delta"]) == 0
    assert run(["check-bialgebra", SPEC, "sl2_r"]) == 0


def test_spec_broken_jacobi_exit_one(capsys):
    code = run(["check-bialgebra", SPEC, "broken_delta"])
    assert code == 2  # no such cobracket: input error
    # a cobracket over the broken algebra: build one inline
    doc = json.load(open(SPEC))
    doc["cobrackets"]["broken_delta"] = {"algebra": "broken", "terms": {}}
    import tempfile
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(doc, fh)
        path = fh.name
    try:
        code = run(["check-bialgebra", path, "broken_delta"])
        out = capsys.readouterr().out
        assert code == 1
        assert "jacobiator" in out
    finally:
        os.unlink(path)


def test_missing_name_exit_two(capsys):
    assert run(["check-bialgebra", SPEC, "nonexistent"]) == 2
    assert run(["check-bialgebra", SPEC]) == 2


def test_missing_spec_exit_two(capsys):
    assert run(["check-poisson"]) == 2
    assert run(["check-poisson", "/nonexistent/path.json", "pi_xy"]) == 2


def test_spec_poisson_group(capsys):
    assert run(["poisson-group", SPEC, "sl2_group", "sl2_r"]) == 0
    out = capsys.readouterr().out
    assert "multiplicative" in out


def test_spec_check_poisson(capsys):
    assert run(["check-poisson", SPEC, "pi_canonical6"]) == 0
    assert run(["check-poisson", SPEC, "pi_not_poisson"]) == 1
    out = capsys.readouterr().out
    assert "defect" in out


def test_spec_check_mm(capsys):
    assert run(["check-mm", SPEC, "angular"]) == 0
    assert run(["check-mm", SPEC, "dual_plane_imm"]) == 1  # plain variant fails
    out = capsys.readouterr().out
    assert "structure-half" in out
    assert run(["check-mm", SPEC, "heisenberg_counterexample"]) == 1


def test_spec_check_hopf(capsys):
    assert run(["check-hopf", SPEC, "usl2_hopf", "--degree", "2"]) == 0


def test_spec_check_action_and_qreduce(capsys):
    assert run(["check-action", SPEC, "qplane_action"]) == 0
    assert run(["qreduce", SPEC, "qplane_action"]) == 0


def test_spec_reduce(capsys):
    assert run(["reduce", SPEC, "case3"]) == 0


def test_json_output_deterministic(tmp_path, capsys):
    out1 = tmp_path / "run1.jsonl"
    out2 = tmp_path / "run2.jsonl"
    assert run(["check-mm", "--fixtures", "--json", str(out1)]) == 0
    assert run(["check-mm", "--fixtures", "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    records = [json.loads(line) for line in out1.read_text().splitlines()]
    assert all("verdict" in r and "check" in r for r in records)


def test_fixture_action_surfaces_discrepancy(capsys):
    code = run(["check-action", "--fixtures", "--degree", "2"])
    out = capsys.readouterr().out
    assert code == 0  # discrepancy is not a failure
    assert "paper-discrepancy" in out
    assert "oracle_relation" in out


def test_unknown_section_rejected():
    with pytest.raises(SpecError):
        SpecFile({"bogus_section": {}})


def test_specfile_roundtrip_objects():
    spec = SpecFile.load(SPEC)
    L = spec.lie_algebra("plane")
    assert L.basis_names == ("xi", "eta")
    model = spec.matrix_group("sl2_group")
    assert model.n == 2
    pres = spec.presentation("qplane")
    a, b = pres.gen("a"), pres.gen("b")
    from poisson_forge.scalars import HSeries
    assert a * b == b * a * HSeries([1, -1])
    action, extras = spec.quantum_action("qplane_action")
    assert act_applies(action)


def act_applies(action):
    alg = action.algebra
    return action.apply("xi", alg.gen("b")).is_zero()


def test_json_output_deterministic_more_suites(tmp_path):
    for cmd in ("check-bialgebra", "poisson-group"):
        out1 = tmp_path / (cmd + "1.jsonl")
        out2 = tmp_path / (cmd + "2.jsonl")
        assert run([cmd, "--fixtures", "--json", str(out1)]) == 0
        assert run([cmd, "--fixtures", "--json", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


def test_capability_guard_exit_three(tmp_path, capsys):
    # an action whose expression divides by hbar^7 at order 6 trips the
    # valuation guard: exit code 3
    doc = {
        "presentations": {
            "grp": {"generators": ["t"], "rules": []},
            "alg": {"generators": ["x"], "rules": []},
        },
        "actions": {
            "bad": {
                "group": "grp", "algebra": "alg", "degree": 1,
                "generators": {
                    "t": {"op": "hbar_div", "k": 7,
                          "arg": {"op": "lmul", "element": "x"}},
                },
                "counit": {"t": "0"},
                "ideal": [[{"coeff": "1", "word": ["x"]}]],
            },
        },
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert run(["qreduce", str(path), "bad"]) == 3
    assert "capability exceeded" in capsys.readouterr().err


def test_bad_scalar_in_spec_is_input_error(tmp_path, capsys):
    doc = {
        "lie_algebras": {"L": {"basis": ["x", "y"],
                               "brackets": {"x,y": {"y": "not-a-number"}}}},
        "r_matrices": {"r": {"algebra": "L", "terms": {"x,y": "1"}}},
    }
    path = tmp_path / "bad_scalar.json"
    path.write_text(json.dumps(doc))
    assert run(["check-bialgebra", str(path), "r"]) == 2
    assert "input error" in capsys.readouterr().err


def test_non_invariant_symmetric_part_fails_check(tmp_path, capsys):
    # r = X (x) X on the nonabelian plane: the symmetric part is not
    # ad-invariant, which is a located check failure (exit 1), not a crash
    doc = {
        "lie_algebras": {"L": {"basis": ["X", "Y"],
                               "brackets": {"X,Y": {"X": "1"}}}},
        "r_matrices": {"r": {"algebra": "L", "terms": {"X,X": "1"}}},
    }
    path = tmp_path / "bad_sym.json"
    path.write_text(json.dumps(doc))
    assert run(["check-bialgebra", str(path), "r"]) == 1
    out = capsys.readouterr().out
    assert "symmetric-part" in out
