import json

import pytest

from simcores.cli import main
from simcores.posets import build_gap_poset, multi_catalan


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_rect(capsys):
    code, out, _ = run_cli(capsys, "count", "rect", "--s", "3", "--t", "5")
    assert code == 0 and out.strip() == "7"


def test_count_multi_catalan(capsys):
    code, out, _ = run_cli(capsys, "count", "multi-catalan", "--s", "10", "--p", "2")
    assert code == 0 and out.strip() == str(multi_catalan(10, 2))


def test_domain_errors_exit_1_without_traceback(capsys):
    code, _, err = run_cli(capsys, "count", "multi-catalan", "--s", "5", "--p", "0")
    assert code == 1 and "p >= 1" in err
    code, _, err = run_cli(capsys, "paths", "gd", "--n", "0", "--k", "2", "--list")
    assert code == 1 and "n >= 1" in err
    # counting n <= 0 stays at the conventional value 1
    code, out, _ = run_cli(capsys, "paths", "gd", "--n", "0", "--k", "2", "--count-only")
    assert code == 0 and out.strip() == "1"


def test_poset_plain_and_json(capsys):
    code, out, _ = run_cli(capsys, "poset", "--gens", "2,3")
    assert code == 0 and "gaps (1): 1" in out
    code, out, _ = run_cli(capsys, "poset", "--gens", "5,7,13", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["gaps"] == [1, 2, 3, 4, 6, 8, 9, 11, 16]
    assert [16, 3] in data["covers"]


def test_poset_dot(capsys):
    code, out, _ = run_cli(capsys, "poset", "--gens", "5,7", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_poset_gcd_error(capsys):
    code, _, err = run_cli(capsys, "poset", "--gens", "4,6")
    assert code == 1
    assert "divisible by 2" in err


def test_usage_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "poset")
    assert code == 1
    code, _, err = run_cli(capsys, "poset", "--gens", "five")
    assert code == 1
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 1
    code, _, _ = run_cli(capsys)
    assert code == 1


def test_ideals_count_only(capsys):
    code, out, _ = run_cli(capsys, "ideals", "--gens", "5,7", "--count-only")
    assert code == 0 and out.strip() == "66"


def test_ideals_list_plain(capsys):
    code, out, _ = run_cli(capsys, "ideals", "--gens", "2,3", "--list")
    assert code == 0
    assert "2 lower ideals" in out
    assert "{}" in out and "{1}" in out


def test_cores_list(capsys):
    code, out, _ = run_cli(capsys, "cores", "--gens", "2,3", "--list")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "2 simultaneous cores"
    assert "()" in lines and "(1)" in lines


def test_cores_count_and_total_size(capsys):
    code, out, _ = run_cli(capsys, "cores", "--gens", "5,7,13", "--count-only")
    expected = build_gap_poset((5, 7, 13)).count_lower_ideals()
    assert code == 0 and out.strip() == str(expected)
    code, out, _ = run_cli(capsys, "cores", "--gens", "4,5,6", "--total-size")
    assert code == 0 and "total size: 25" in out


def test_cores_json(capsys):
    code, out, _ = run_cli(capsys, "cores", "--gens", "5,7,13", "--list",
                           "--total-size", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [8, 4, 3, 1] in data["cores"]
    assert data["count"] == str(len(data["cores"]))
    assert data["total_size"].isdigit()


def test_paths_rect_list_and_count(capsys):
    code, out, _ = run_cli(capsys, "paths", "rect", "--s", "3", "--t", "5", "--count-only")
    assert code == 0 and out.strip() == "7"
    code, out, _ = run_cli(capsys, "paths", "rect", "--s", "3", "--t", "5", "--list")
    assert code == 0 and out.startswith("7 paths")


def test_paths_gd_json(capsys):
    code, out, _ = run_cli(capsys, "paths", "gd", "--n", "2", "--k", "3",
                           "--list", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == "2"
    assert ["D2"] in data["paths"] and ["D1", "D1"] in data["paths"]


def test_paths_coprimality_error(capsys):
    code, _, err = run_cli(capsys, "paths", "rect", "--s", "4", "--t", "6")
    assert code == 1 and "coprime" in err


def test_roundtrip_ideals(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "ideals", "--gens", "5,7", "--list", "--format", "json")
    assert code == 0
    recorded = tmp_path / "ideals.json"
    recorded.write_text(out)
    code, out, _ = run_cli(capsys, "ideals", "--gens", "5,7", "--from-file", str(recorded))
    assert code == 0 and "matches" in out
    data = json.loads(recorded.read_text())
    data["ideals"][3] = [999]
    recorded.write_text(json.dumps(data))
    code, _, err = run_cli(capsys, "ideals", "--gens", "5,7", "--from-file", str(recorded))
    assert code == 2 and "NOT" in err


def test_roundtrip_cores_and_paths(capsys, tmp_path):
    for argv, fname in (
        (("cores", "--gens", "5,7,13", "--list"), "cores.json"),
        (("paths", "rect", "--s", "3", "--t", "5", "--list"), "rect.json"),
        (("paths", "gd", "--n", "4", "--k", "3", "--list"), "gd.json"),
    ):
        code, out, _ = run_cli(capsys, *argv, "--format", "json")
        assert code == 0
        recorded = tmp_path / fname
        recorded.write_text(out)
        code, out, _ = run_cli(capsys, *argv, "--from-file", str(recorded))
        assert code == 0 and "matches" in out


def test_svg_writing(capsys, tmp_path):
    target = tmp_path / "paths.svg"
    code, out, _ = run_cli(capsys, "paths", "rect", "--s", "3", "--t", "5",
                           "--svg", str(target))
    assert code == 0 and "wrote 7 paths" in out
    assert target.read_text().startswith("<svg")


def test_qdet(capsys):
    code, out, _ = run_cli(capsys, "qdet", "--shape", "2,1")
    assert code == 0
    assert "1 + q + 2*q^2 + q^3" in out
    code, out, _ = run_cli(capsys, "qdet", "--shape", "2,1", "--format", "json")
    data = json.loads(out)
    assert data["coefficients"] == ["1", "1", "2", "1"]
    assert data["shape"] == [2, 1]


def test_qdet_rejects_bad_shape(capsys):
    code, _, _ = run_cli(capsys, "qdet", "--shape", "1,2")
    assert code == 1


def test_diagram(capsys):
    code, out, _ = run_cli(capsys, "diagram", "--shape", "6,3,1,1", "--hooks")
    assert code == 0
    assert out.splitlines()[-1].split() == ["9", "6", "5", "3", "2", "1"]


def test_verify_conjecture(capsys):
    code, out, _ = run_cli(capsys, "verify", "conjecture", "--max-s", "4")
    assert code == 0
    assert "lhs=5 rhs=5" in out and "lhs=25 rhs=25" in out


def test_verify_symmetry_and_equinumerous(capsys):
    code, out, _ = run_cli(capsys, "verify", "symmetry", "--max-s", "9")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run_cli(capsys, "verify", "equinumerous", "--max-sum", "8",
                           "--max-path-n", "4", "--max-k", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["passed"] is True


def test_verify_exit_code_2_on_counterexample(capsys, monkeypatch):
    import simcores.verify as verify_mod

    monkeypatch.setattr(verify_mod, "catalan_identity", lambda n: 1)
    code, out, _ = run_cli(capsys, "verify", "identity", "--max-n", "5")
    assert code == 2
    assert out.startswith("FAIL")
    assert "first counterexample" in out


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "ideals", "--gens", "5,7", "--list", "--format", "json")
    second = run_cli(capsys, "ideals", "--gens", "5,7", "--list", "--format", "json")
    assert first == second
    a = run_cli(capsys, "poset", "--gens", "5,7,13", "--format", "dot")
    b = run_cli(capsys, "poset", "--gens", "5,7,13", "--format", "dot")
    assert a == b


def test_verify_jobs_flag(capsys):
    seq = run_cli(capsys, "verify", "gf", "--max-p", "2", "--terms", "10")
    par = run_cli(capsys, "verify", "gf", "--max-p", "2", "--terms", "10", "--jobs", "3")
    assert seq == par
