"""CLI: subcommands, exit codes, JSON schema stability, determinism."""

import json

import pytest

import fusionring as fr
from fusionring.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_ring(tmp_path, ring, name="ring.spec"):
    path = tmp_path / name
    path.write_text(fr.write_spec(ring))
    return str(path)


def test_check_pass(tmp_path, capsys):
    path = write_ring(tmp_path, fr.cyclic_group_ring(5))
    code, out, _ = run_cli(capsys, "check", path)
    assert code == 0
    assert "OK" in out


def test_check_fail_exit_one(tmp_path, capsys):
    # corrupt rings cannot be expressed in the file format (degree sums are
    # validated at load), so corrupt the representable layer: associativity
    ring = fr.build_ring("bad", [
        ("1", 1, "1"), ("g", 1, "g2"), ("g2", 1, "g"),
    ], "1", {
        ("g", "g"): {"g2": 1}, ("g", "g2"): {"1": 1},
        ("g2", "g"): {"1": 1}, ("g2", "g2"): {"1": 1},  # wrong: should be g
    })
    path = write_ring(tmp_path, ring)
    code, out, _ = run_cli(capsys, "check", path)
    assert code == 1
    assert "FAIL" in out


def test_check_json_schema(tmp_path, capsys):
    path = write_ring(tmp_path, fr.a4_character_ring())
    code, out, _ = run_cli(capsys, "--format", "json", "check", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "fusionring-report/1"
    assert payload["command"] == "check"
    assert payload["exit_code"] == 0
    names = [c["name"] for c in payload["axioms"]]
    assert "frobenius_reciprocity" in names
    assert all(c["status"] == "pass" for c in payload["axioms"])


def test_verdict_f21(tmp_path, capsys):
    path = write_ring(tmp_path, fr.f21_character_ring())
    code, out, _ = run_cli(capsys, "verdict", path)
    assert code == 0
    assert "grouplike" in out
    assert "order 3" in out
    assert "21" in out and "divisible" in out


def test_verdict_so3_json(tmp_path, capsys):
    path = write_ring(tmp_path, fr.so3_truncated(21))
    code, out, _ = run_cli(capsys, "--format", "json", "verdict", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"]["kind"] == "ladder"
    assert payload["verdict"]["certificate"]["depth_reached"] == 9


def test_verdict_fragment_exit_one(tmp_path, capsys):
    path = write_ring(tmp_path, fr.fragment_ring())
    code, out, _ = run_cli(capsys, "verdict", path)
    assert code == 1
    assert "obstruction" in out


def test_ladder_so3(tmp_path, capsys):
    path = write_ring(tmp_path, fr.so3_truncated(21))
    code, out, _ = run_cli(capsys, "ladder", path, "--x3", "x3")
    assert code == 0
    assert "depth 9" in out
    assert "truncation reached" in out


def test_ladder_fragment_exit_one(tmp_path, capsys):
    path = write_ring(tmp_path, fr.fragment_ring())
    code, out, _ = run_cli(capsys, "ladder", path, "--x3", "x3")
    assert code == 1
    assert "freeness_violation" in out


def test_ladder_precondition_exit_one(tmp_path, capsys):
    path = write_ring(tmp_path, fr.f21_character_ring())
    code, out, err = run_cli(capsys, "ladder", path, "--x3", "x3")
    assert code == 1
    assert "not self-dual" in out + err


def test_ladder_fragment_json(tmp_path, capsys):
    path = write_ring(tmp_path, fr.fragment_ring())
    code, out, _ = run_cli(capsys, "--format", "json", "ladder", path, "--x3", "x3")
    assert code == 1
    payload = json.loads(out)
    terminal = payload["certificate"]["terminal"]
    assert terminal["branch"] == "freeness_violation"
    assert terminal["violation"] == [30, 75]


def test_check_partial_ring_reports_skips(tmp_path, capsys):
    path = write_ring(tmp_path, fr.fragment_ring())
    code, out, _ = run_cli(capsys, "check", path)
    assert code == 0  # skips are not failures
    assert "skipped-unknown" in out
    assert "stabilizer[gx3]: skipped-unknown" in out


def test_subrings_fragment(tmp_path, capsys):
    path = write_ring(tmp_path, fr.fragment_ring())
    code, out, _ = run_cli(capsys, "subrings", path)
    assert code == 1
    assert "30 does not divide 75" in out


def test_subrings_clean_exit_zero(tmp_path, capsys):
    path = write_ring(tmp_path, fr.cyclic_group_ring(6))
    code, out, _ = run_cli(capsys, "subrings", path)
    assert code == 0
    assert "dimension 6" in out


def test_search_emits_parseable_specs(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "search", "--degrees", "1,1,1", "--max-mult", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    ring = fr.parse_spec(payload["rings"][0])
    assert fr.check_axioms(ring).all_pass


def test_gen_roundtrip_all_kinds(tmp_path, capsys):
    for args in (["gen", "cyclic", "6"], ["gen", "so3", "9"], ["gen", "fragment"]):
        code, out, _ = run_cli(capsys, *args)
        assert code == 0
        ring = fr.parse_spec(out)
        assert not fr.check_axioms(ring).has_failures


def test_gen_chartable(tmp_path, capsys):
    from importlib import resources

    table_path = tmp_path / "a4.chartab"
    table_path.write_text(
        resources.files("fusionring.fixtures").joinpath("a4.chartab").read_text()
    )
    code, out, _ = run_cli(capsys, "gen", "chartable", str(table_path))
    assert code == 0
    ring = fr.parse_spec(out)
    assert ring.dimension() == 12


def test_gen_pipe_composition(tmp_path, capsys):
    # gen fragment | subrings /dev/stdin equivalent via a temp file
    code, out, _ = run_cli(capsys, "gen", "fragment")
    path = tmp_path / "frag.spec"
    path.write_text(out)
    code, out, _ = run_cli(capsys, "subrings", str(path))
    assert code == 1
    assert "30 does not divide 75" in out


def test_missing_file_exit_two(capsys):
    code, _, err = run_cli(capsys, "check", "/nonexistent/missing.ring")
    assert code == 2
    assert "missing.ring" in err


def test_malformed_file_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.ring"
    path.write_text("ring t\nbasis a 3 zz\nunit a\n")
    code, _, err = run_cli(capsys, "check", str(path))
    assert code == 2
    assert "dangling" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["ladder"])  # missing required file and --x3
    assert exc.value.code == 2


def test_bad_flag_value_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--format", "yaml", "check", "x.ring"])
    assert exc.value.code == 2


def test_gen_unknown_kind_exit_two(capsys):
    code, _, err = run_cli(capsys, "gen", "nonsense")
    assert code == 2
    assert "nonsense" in err


def test_seed_order_flag_reserved(tmp_path, capsys):
    path = write_ring(tmp_path, fr.cyclic_group_ring(3))
    code, out, _ = run_cli(capsys, "--seed-order", "canonical", "check", path)
    assert code == 0
    with pytest.raises(SystemExit) as exc:
        run(["--seed-order", "random", "check", path])
    assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0


def test_reports_byte_identical(tmp_path, capsys):
    path = write_ring(tmp_path, fr.f21_character_ring())
    _, out1, _ = run_cli(capsys, "--format", "json", "verdict", path)
    _, out2, _ = run_cli(capsys, "--format", "json", "verdict", path)
    assert out1 == out2
