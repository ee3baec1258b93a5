"""End-to-end CLI behavior: golden output, exit codes, schemas, determinism.

main() is driven in-process; stdout/stderr go through capsys so these tests
see exactly the bytes a shell user would.
"""

import json

import jsonschema
import pytest

from embedkit.cli import main
from embedkit.schemas import SCHEMAS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sl2_orbit_golden_line(capsys):
    code, out, err = run(capsys, "sl2", "--height", "1", "--orbits")
    assert code == 0
    assert out == "SL(2), SL(2)/T\n"
    assert err == ""


def test_tensor_json_golden(capsys):
    code, out, _ = run(capsys, "tensor", "--group", "A1", "--lhs", "[1]", "--rhs", "[1]", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "group": "A1",
        "lhs": [1],
        "rhs": [1],
        "terms": [{"mult": 1, "weight": [0]}, {"mult": 1, "weight": [2]}],
    }


def test_toric_nonnormal_text(capsys):
    code, out, _ = run(capsys, "toric", "--rank", "1", "--gens", "[2];[3]")
    assert code == 0
    assert "normal: no (witness [1])" in out


def test_unknown_subcommand_exit_64(capsys):
    code, out, err = run(capsys, "frobnicate")
    assert code == 64
    assert "usage" in err.lower()
    assert out == ""


def test_missing_subcommand_exit_64(capsys):
    code, _, err = run(capsys)
    assert code == 64
    assert "usage" in err.lower()


def test_monoid_space_form_is_an_alias(capsys):
    code_a, out_a, _ = run(
        capsys, "monoid", "perfect", "--group", "A1+T1", "--gens", "[2,1]", "--json"
    )
    code_b, out_b, _ = run(
        capsys, "monoid-perfect", "--group", "A1+T1", "--gens", "[2,1]", "--json"
    )
    assert (code_a, out_a) == (code_b, out_b)
    code_c, _, err = run(capsys, "monoid")
    assert code_c == 64
    assert "usage" in err.lower()


def test_invalid_input_exit_2(capsys):
    cases = [
        ("tensor", "--group", "A1", "--lhs", "[-1]", "--rhs", "[1]"),
        ("group", "--group", "Q5"),
        ("sl2", "--height", "7/3"),
        ("toric", "--rank", "0", "--gens", "[1]"),
        ("svariety", "--group", "A2", "--gens", "[1]"),
    ]
    for argv in cases:
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert err.startswith("error:")
        assert out == ""


def test_inconclusive_exit_3_still_prints_report(capsys):
    code, out, _ = run(
        capsys, "toric", "--rank", "2", "--gens", "[1,0];[1,5];[2,3];[1,7]",
        "--budget", "5",
    )
    assert code == 3
    assert "normal: inconclusive" in out


def test_deterministic_output(capsys):
    argv = ("svariety", "--group", "A1+T1", "--gens", "[1,1];[1,-1]", "--json")
    runs = {run(capsys, *argv) for _ in range(3)}
    assert len(runs) == 1


ALL_SUBCOMMANDS = [
    ("group", ["group", "--group", "G2"]),
    ("tensor", ["tensor", "--group", "A2", "--lhs", "[1,1]", "--rhs", "[1,1]"]),
    ("toric", ["toric", "--rank", "1", "--gens", "[2];[3]"]),
    ("svariety", ["svariety", "--group", "A1+T1", "--gens", "[1,1];[1,-1]"]),
    ("hv", ["hv", "--group", "A2", "--weight", "[1,0]"]),
    ("monoid-perfect", ["monoid-perfect", "--group", "A1+T1", "--gens", "[2,1]"]),
    (
        "monoid-normal",
        ["monoid-normal", "--group", "A1+T1", "--cone", "[-2,0];[0,1];[2,1]"],
    ),
    ("ce", ["ce", "--group", "A2", "--levi", "1"]),
    ("sl2", ["sl2", "--height", "2/3"]),
]


@pytest.mark.parametrize("name,argv", ALL_SUBCOMMANDS, ids=[n for n, _ in ALL_SUBCOMMANDS])
def test_json_payload_matches_published_schema(capsys, name, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMAS[name])


@pytest.mark.parametrize("name,argv", ALL_SUBCOMMANDS, ids=[n for n, _ in ALL_SUBCOMMANDS])
def test_json_never_contains_floats(capsys, name, argv):
    _, out, _ = run(capsys, *argv, "--json")

    def no_floats(x):
        raise AssertionError(f"float leaked into {name} payload: {x}")

    json.loads(out, parse_float=no_floats)


def test_color_env_only_affects_text_mode(capsys, monkeypatch):
    monkeypatch.setenv("EMBEDKIT_COLOR", "1")
    _, out, _ = run(capsys, "toric", "--rank", "1", "--gens", "[2];[3]")
    assert "\x1b[" in out
    _, out_json, _ = run(capsys, "toric", "--rank", "1", "--gens", "[2];[3]", "--json")
    assert "\x1b[" not in out_json
    monkeypatch.delenv("EMBEDKIT_COLOR")
    _, out_plain, _ = run(capsys, "toric", "--rank", "1", "--gens", "[2];[3]")
    assert "\x1b[" not in out_plain


def test_report_directory_svariety(capsys, tmp_path):
    out_dir = tmp_path / "rep"
    code, _, err = run(
        capsys, "svariety", "--group", "A1+T1", "--gens", "[1,1];[1,-1]",
        "--report", str(out_dir),
    )
    assert code == 0
    assert (out_dir / "report.csv").is_file()
    assert (out_dir / "cone.png").is_file()
    assert (out_dir / "dynkin.png").is_file()
    assert "report.csv" in err
    header = (out_dir / "report.csv").read_text().splitlines()[0]
    assert header == "key,value"


def test_report_directory_sl2_staircase(capsys, tmp_path):
    out_dir = tmp_path / "rep"
    code, _, _ = run(capsys, "sl2", "--height", "3/5", "--report", str(out_dir))
    assert code == 0
    assert (out_dir / "staircase.png").is_file()


def test_ce_selector_flags(capsys):
    code, out, _ = run(capsys, "ce", "--group", "A2", "--levi", "1", "--smooth")
    assert code == 0
    lines = out.splitlines()
    assert "smooth: true" in lines
    assert not any(line.startswith("sigma") for line in lines)

    _, out_json, _ = run(capsys, "ce", "--group", "A2", "--orbits", "--json")
    payload = json.loads(out_json)
    assert payload["orbit_count"] == 4
    assert "smooth" not in payload


def test_sl2_basis_text(capsys):
    code, out, _ = run(capsys, "sl2", "--height", "2/3", "--basis")
    assert code == 0
    assert out == "A, A^2 B, A^3 B^2\n"


def test_group_text_report(capsys):
    code, out, _ = run(capsys, "group", "--group", "B2")
    assert code == 0
    assert "dim: 10" in out
    assert "weyl_order: 8" in out
    assert "complexity: 4" in out


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "subcommand" in out.lower() or "usage" in out.lower()
