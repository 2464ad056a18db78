"""The command-line surface: verbs, formats, exit codes, round trips."""
import json

import pytest

from sepcomplex import build
from sepcomplex.cli import main
from sepcomplex.complexes import Complex


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_and_fvector(tmp_path, capsys):
    out = tmp_path / "ss4.json"
    code, _, _ = run_cli(capsys, "build", "--n", "4", "--relation", "ss", "--out", str(out))
    assert code == 0
    code, stdout, _ = run_cli(capsys, "fvector", str(out))
    assert code == 0
    assert stdout.strip() == "8 16 8"


def test_round_trip_preserves_facets(tmp_path, capsys):
    out = tmp_path / "ws4.json"
    assert run_cli(capsys, "build", "--n", "4", "--relation", "ws", "--out", str(out))[0] == 0
    loaded = Complex.from_dict(json.loads(out.read_text()))
    direct = build(4, "ws").complex
    assert loaded.facets == direct.facets
    assert loaded.labels == direct.labels


def test_fvector_from_flags(capsys):
    code, stdout, _ = run_cli(capsys, "fvector", "--n", "4", "--relation", "ws")
    assert code == 0
    assert stdout.strip() == "8 17 10"


def test_homology_text_and_json(capsys):
    code, stdout, _ = run_cli(capsys, "homology", "--n", "4", "--relation", "ss")
    assert code == 0
    assert stdout.splitlines() == ["H~0 = 0", "H~1 = Z", "H~2 = 0"]
    code, stdout, _ = run_cli(capsys, "homology", "--n", "4", "--relation", "ss",
                              "--format", "json")
    assert json.loads(stdout) == [
        {"dim": 0, "rank": 0, "torsion": []},
        {"dim": 1, "rank": 1, "torsion": []},
        {"dim": 2, "rank": 0, "torsion": []},
    ]


def test_link_verb_matches_library(tmp_path, capsys):
    src = tmp_path / "ss5.json"
    run_cli(capsys, "build", "--n", "5", "--relation", "ss", "--out", str(src))
    code, stdout, _ = run_cli(capsys, "link", str(src), "--face", "2,23,234")
    assert code == 0
    got = Complex.from_dict(json.loads(stdout))
    sc = build(5, "ss")
    want = sc.complex.link(sc.face_indices(["2", "23", "234"]))
    assert got.facets == want.facets


def test_star_and_deletion_verbs(capsys):
    code, stdout, _ = run_cli(capsys, "star", "--n", "4", "--relation", "ss",
                              "--face", "13")
    assert code == 0
    star = Complex.from_dict(json.loads(stdout))
    assert not star.is_empty
    code, stdout, _ = run_cli(capsys, "deletion", "--n", "4", "--relation", "ss",
                              "--face", "13")
    assert code == 0
    deleted = Complex.from_dict(json.loads(stdout))
    assert "13" not in {deleted.labels[v] for f in deleted.facet_tuples() for v in f}


def test_boundary_verb_and_gate(capsys):
    code, stdout, _ = run_cli(capsys, "boundary", "--n", "5", "--relation", "ws")
    assert code == 0
    bd = Complex.from_dict(json.loads(stdout))
    assert bd.dimension() == 4
    code, _, err = run_cli(capsys, "boundary", "--n", "6", "--relation", "ss")
    assert code == 3
    assert "allow-heavy" in err


def test_bad_face_label(capsys):
    code, _, err = run_cli(capsys, "link", "--n", "4", "--relation", "ss",
                           "--face", "99")
    assert code == 2
    assert "not a vertex label" in err


def test_missing_input(capsys):
    code, _, err = run_cli(capsys, "fvector")
    assert code == 2
    assert "input file" in err
    code, _, _ = run_cli(capsys, "fvector", "/nonexistent/path.json")
    assert code == 2


def test_cap_exit_code(capsys):
    code, _, err = run_cli(capsys, "build", "--n", "9", "--relation", "ss")
    assert code == 3
    assert "cap" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-check", "--n", "4"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_verb(capsys):
    code, stdout, _ = run_cli(capsys, "verify", "lemma-4-4", "--n", "4")
    assert code == 0
    assert "PASS" in stdout
    code, stdout, _ = run_cli(capsys, "verify", "purity", "--n", "4",
                              "--format", "json")
    assert code == 0
    assert json.loads(stdout)["summary"]["fail"] == 0


def test_reproduce_paper_small_and_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code, _, _ = run_cli(capsys, "reproduce-paper", "--n", "4",
                         "--format", "json", "--out", str(a))
    assert code == 0
    code, _, _ = run_cli(capsys, "reproduce-paper", "--n", "4",
                         "--format", "json", "--out", str(b))
    assert code == 0
    assert a.read_bytes() == b.read_bytes()
    payload = json.loads(a.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(payload["checks"])


def test_reproduce_paper_text_output(capsys):
    code, stdout, _ = run_cli(capsys, "reproduce-paper", "--n", "4")
    assert code == 0
    assert "f-vector ss(4) [n=4]: PASS" in stdout
