import json

from qpainleve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_central_pass(capsys):
    code, out, _ = run(capsys, "check-central", "--algebra", "uz:PVI",
                       "--element", "omega4")
    assert code == 0
    assert "passed: True" in out


def test_check_central_ideal_trials(capsys):
    code, out, _ = run(capsys, "check-central", "--algebra", "eg",
                       "--element", "omega_eg", "--method", "ideal",
                       "--trials", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] and data["trials"][0]["central"]


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, "check-central", "--algebra", "nope",
                       "--element", "omega4")
    assert code == 2
    assert "unknown algebra preset" in err


def test_unknown_element_exit_2(capsys):
    code, _, err = run(capsys, "check-central", "--algebra", "uz:PVI",
                       "--element", "zeta")
    assert code == 2


def test_hilbert_graded(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "skew",
                       "--max-degree", "4", "--mode", "graded", "--json")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 3, 6, 10, 15]


def test_confluence_reports_failure_exit_1(capsys):
    code, out, _ = run(capsys, "confluence", "--algebra", "eg",
                       "--param", "q=2", "--param", "t=3", "--param", "a1=1",
                       "--param", "a2=1", "--param", "b1=1", "--param", "b2=1",
                       "--param", "c1=1", "--param", "c2=1", "--json")
    assert code == 1
    assert json.loads(out)["status"] == "non_confluent"


def test_verify_shear(capsys):
    code, out, _ = run(capsys, "verify-shear", "--type", "PIII_D8", "--quantum")
    assert code == 0
    code, out, _ = run(capsys, "verify-shear", "--type", "PI", "--classical", "--json")
    assert code == 0
    assert json.loads(out)["passed"]


def test_semiclassical(capsys):
    code, out, _ = run(capsys, "semiclassical", "--algebra", "uz:PVI", "--json")
    assert code == 0
    assert json.loads(out)["matches_target"]


def test_degenerate_and_poisson_check(capsys):
    code, out, _ = run(capsys, "degenerate", "--name", "hesse", "--json")
    assert code == 0
    code, out, _ = run(capsys, "poisson-check", "--structure", "eor_e6", "--json")
    assert code == 0


def test_find_potential_and_derive(capsys):
    code, out, _ = run(capsys, "find-potential", "--algebra", "uz:PVI", "--json")
    assert code == 0
    assert json.loads(out)["relation_multipliers"]
    code, out, _ = run(capsys, "derive-relations", "--algebra", "odesskii", "--json")
    assert code == 0
    assert json.loads(out)["matches_relations"]


def test_preset_dump(capsys):
    code, out, _ = run(capsys, "preset-dump", "--id", "uz", "--type", "PVI", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["central"] and data["relations"]
    code, out, _ = run(capsys, "preset-dump", "--id", "hesse", "--json")
    assert code == 0


def test_report_all_subset_deterministic(capsys):
    code1, out1, _ = run(capsys, "report-all", "--only", "4", "--json")
    code2, out2, _ = run(capsys, "report-all", "--only", "4", "--json")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical with the same seed/config


def test_presets_json(capsys):
    code, out, _ = run(capsys, "presets-json")
    assert code == 0
    data = json.loads(out)
    assert "algebras" in data and "rescalings" in data
