from pathlib import Path

import pytest
import yaml

from matching_decomposition.scripts import (
    decompose,
    min_odd_cut,
    oracle,
    sample,
    validate,
    verify,
)

INSTANCES = Path(__file__).parent.parent / "instances"


def _instance(name: str) -> str:
    return str(INSTANCES / f"{name}.yaml")


def _write(path: Path, text: str) -> str:
    path.write_text(text, encoding="utf8")
    return str(path)


@pytest.fixture
def g1_decomposition(tmp_path: Path) -> str:
    output = str(tmp_path / "g1_decomposition.yaml")
    assert decompose.main([_instance("g1"), "--output", output]) == 0
    return output


@pytest.mark.parametrize(
    "name", ["g1", "petersen", "c4", "c6", "k2", "k4", "single_matching"]
)
def test_validate_shipped_instances(name, capsys):
    assert validate.main([_instance(name)]) == 0
    assert capsys.readouterr().out == "Ok\n"


def test_validate_reports_the_certificate(capsys):
    assert validate.main([_instance("petersen_minus_spokes")]) == 2
    assert capsys.readouterr().out == (
        "Violation: odd set {f, g, h, i, j} has cut capacity 0 < 2/3\n"
    )


def test_validate_two_triangles(capsys):
    assert validate.main([_instance("two_triangles")]) == 2
    assert capsys.readouterr().out.startswith("Violation: odd set {d, e, f}")


def test_missing_file_is_an_input_error(tmp_path):
    assert validate.main([str(tmp_path / "missing.yaml")]) == 1


def test_malformed_yaml_reports_the_location(tmp_path, caplog):
    path = _write(tmp_path / "bad.yaml", "n: 2\nedges: [[0, 1, 1]\n")

    assert validate.main([path]) == 1
    assert f"{path}:" in caplog.text


def test_unknown_vertex_name(tmp_path, caplog):
    path = _write(
        tmp_path / "names.yaml",
        "n: 2\nvertex_names: [a, b]\nedges:\n  - [a, z, 1]\n",
    )

    assert validate.main([path]) == 1
    assert "unknown vertex name 'z'" in caplog.text
    assert f"{path}:4:" in caplog.text


@pytest.mark.parametrize("value", ["1/0", "0.5", "one"])
def test_bad_rationals(tmp_path, value):
    path = _write(tmp_path / "bad.yaml", f"n: 2\nedges:\n  - [0, 1, '{value}']\n")

    assert validate.main([path]) == 1


def test_usage_errors_exit_with_one():
    with pytest.raises(SystemExit) as info:
        validate.main([])
    assert info.value.code == 1


def test_decompose_g1(g1_decomposition):
    with open(g1_decomposition, encoding="utf8") as file:
        data = yaml.safe_load(file)

    assert data["vertex_names"] == list("abcdef")
    assert [term["coeff"] for term in data["terms"]] == ["1/3"] * 3
    assert data["provenance"]["phase_summary"]["phases"] == 3
    assert data["provenance"]["phases"] is None
    assert len(data["provenance"]["input_hash"]) == 64


def test_decompose_to_stdout_with_trace(capsys):
    assert decompose.main([_instance("petersen"), "--trace", "--oracle-check"]) == 0

    data = yaml.safe_load(capsys.readouterr().out)
    assert [term["coeff"] for term in data["terms"]] == ["1/6"] * 6
    phases = data["provenance"]["phases"]
    assert len(phases) == 6
    assert phases[0]["type"] == "type2"
    assert phases[0]["coeff"] == "1/6"
    assert len(phases[0]["new_tight_cut"]) == 5


def test_decompose_infeasible_instance():
    assert decompose.main([_instance("two_triangles")]) == 2


def test_decompose_needs_alpha_one():
    assert decompose.main([_instance("petersen_minus_spokes")]) == 1


def test_input_hash_ignores_edge_order(tmp_path, capsys):
    shuffled = _write(
        tmp_path / "c4.yaml",
        "n: 4\nedges:\n  - [3, 0, 1/2]\n  - [2, 3, 2/4]\n"
        "  - [1, 2, 1/2]\n  - [0, 1, 1/2]\n",
    )

    assert decompose.main([_instance("c4")]) == 0
    first = yaml.safe_load(capsys.readouterr().out)
    assert decompose.main([shuffled]) == 0
    second = yaml.safe_load(capsys.readouterr().out)

    assert first["provenance"]["input_hash"] == second["provenance"]["input_hash"]


def test_verify_accepts_the_decomposition(g1_decomposition, capsys):
    assert verify.main([_instance("g1"), g1_decomposition]) == 0
    assert capsys.readouterr().out == "Ok\n"


def test_verify_rejects_a_tampered_decomposition(g1_decomposition, capsys):
    with open(g1_decomposition, encoding="utf8") as file:
        data = yaml.safe_load(file)
    data["terms"][0]["coeff"] = "1/2"
    data["terms"][1]["coeff"] = "1/6"
    tampered = g1_decomposition.replace(".yaml", "_tampered.yaml")
    with open(tampered, mode="w", encoding="utf8") as file:
        yaml.safe_dump(data, file)

    assert verify.main([_instance("g1"), tampered]) == 2
    assert capsys.readouterr().out.startswith("Failed: value_mismatch")


@pytest.mark.parametrize(
    "name, args, expected",
    [
        ("g1", [], "set: {a}\ncapacity: 1\n"),
        ("g1", ["--min-size", "3"], "set: {b, d, f}\ncapacity: 1\n"),
        ("petersen", ["--min-size", "3"], None),
        ("petersen_minus_spokes", [], "set: {f, g, h, i, j}\ncapacity: 0\n"),
        ("k2", [], "set: {0}\ncapacity: 1\n"),
    ],
)
def test_min_odd_cut(name, args, expected, capsys):
    assert min_odd_cut.main([_instance(name), *args]) == 0

    out = capsys.readouterr().out
    if expected is None:
        assert out.endswith("capacity: 5/3\n")
    else:
        assert out == expected


def test_sample_is_reproducible(g1_decomposition, capsys):
    args = [g1_decomposition, "--seed", "7", "--count", "5"]

    assert sample.main(args) == 0
    first = capsys.readouterr().out
    assert sample.main(args) == 0
    second = capsys.readouterr().out

    lines = first.splitlines()
    assert first == second
    assert len(lines) == 5
    assert all(line.count("(") == 3 for line in lines)


def test_sample_rejects_a_zero_count(g1_decomposition):
    with pytest.raises(SystemExit) as info:
        sample.main([g1_decomposition, "--count", "0"])
    assert info.value.code == 1


def test_oracle_matchings(capsys):
    assert oracle.main(["matchings", _instance("petersen")]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "count: 6"
    assert len(lines) == 7


def test_oracle_min_odd_cut(capsys):
    assert oracle.main(["min-odd-cut", _instance("g1"), "--min-size", "3"]) == 0
    assert capsys.readouterr().out == "set: {b, d, f}\ncapacity: 1\n"


def test_oracle_decompose(tmp_path, capsys):
    output = str(tmp_path / "oracle.yaml")

    assert oracle.main(["decompose", _instance("g1"), "-o", output]) == 0
    assert verify.main([_instance("g1"), output]) == 0
    assert oracle.main(["decompose", _instance("two_triangles")]) == 2
    assert "infeasible" in capsys.readouterr().out
