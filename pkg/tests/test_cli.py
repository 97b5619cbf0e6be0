import json

from exkh.cli import main

TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_trefoil(capsys):
    code, out, _ = run(capsys, "info", "-i", TREFOIL)
    assert code == 0
    assert "j_min" in out and "-9" in out


def test_info_unknot(capsys):
    code, out, _ = run(capsys, "info", "-i", "O:1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["crossings"] == 0
    assert data["j_min"] == -1
    assert data["j_max"] == 1


def test_info_is_deterministic(capsys):
    _, out1, _ = run(capsys, "info", "-i", TREFOIL)
    _, out2, _ = run(capsys, "info", "-i", TREFOIL)
    assert out1 == out2


def test_parse_error_names_token(capsys):
    code, _, err = run(capsys, "info", "-i", "X[1,2,3];X[4,5,6,7]")
    assert code == 2
    assert "X[1,2,3]" in err


def test_homology_min(capsys):
    code, out, _ = run(capsys, "homology", "-i", TREFOIL, "--grading", "min")
    assert code == 0
    assert "j = -9" in out
    assert "i=-3: Z" in out


def test_homology_both_match(capsys):
    code, out, _ = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "min", "--via", "both"
    )
    assert code == 0
    assert "MATCH" in out


def test_homology_explicit_grading_requires_oracle(capsys):
    code, _, err = run(capsys, "homology", "-i", TREFOIL, "--grading", "-5")
    assert code == 2
    assert "oracle" in err
    code, out, _ = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "-5", "--via", "oracle"
    )
    assert code == 0
    assert "i=-2: Z" in out


def test_big_entry_completes_without_cube(capsys, corpus):
    big = next(e for e in corpus if e.name == "big_torus_2_35")
    code, out, _ = run(capsys, "homology", "-i", big.pd_text, "--grading", "min")
    assert code == 0
    assert "i=-35: Z" in out


def test_big_entry_oracle_refuses(capsys, corpus):
    big = next(e for e in corpus if e.name == "big_torus_2_35")
    code, _, err = run(
        capsys, "homology", "-i", big.pd_text, "--grading", "min", "--via", "oracle"
    )
    assert code == 3
    assert "cube cap" in err


def test_cube_cap_flag_and_env(capsys, monkeypatch):
    code, _, err = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "min",
        "--via", "oracle", "--cube-cap", "2",
    )
    assert code == 3
    monkeypatch.setenv("EXKH_CUBE_CAP", "2")
    code, _, err = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "min", "--via", "oracle"
    )
    assert code == 3
    monkeypatch.setenv("EXKH_CUBE_CAP", "20")
    code, _, _ = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "min", "--via", "oracle"
    )
    assert code == 0


def test_homology_max_both_match(capsys):
    code, out, _ = run(
        capsys, "homology", "-i", TREFOIL, "--grading", "max", "--via", "both"
    )
    assert code == 0
    assert "j = -1" in out
    assert "MATCH" in out


def test_verify_single_input(capsys):
    code, out, _ = run(capsys, "verify", "-i", TREFOIL)
    assert code == 0
    assert "pass" in out


def test_verify_single_big_input_needs_cube(capsys, corpus):
    big = next(e for e in corpus if e.name == "big_torus_2_35")
    code, _, err = run(capsys, "verify", "-i", big.pd_text)
    assert code == 3
    assert "cube" in err


def test_verify_writes_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "-i", TREFOIL, "--out", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["passed"] is True


def test_verify_corpus_with_bad_expectation(capsys, tmp_path):
    bad = {
        "entries": [
            {
                "name": "lying_trefoil",
                "pd": TREFOIL,
                "expected": {
                    "n": 3,
                    "n_plus": 0,
                    "n_minus": 3,
                    "circles_zero": 3,
                    "j_min": -7,  # wrong on purpose
                    "j_max": -1,
                    "lando_vertices": 0,
                    "lando_edges": 0,
                    "x_faces": 1,
                    "extreme": {"-3": {"betti": 1, "torsion": []}},
                    "top": {"0": {"betti": 1, "torsion": []}},
                },
            }
        ]
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, err = run(capsys, "verify", "--corpus", str(path))
    assert code == 1
    assert "FAIL" in out
    assert "j_min" in err or "minimal" in err


def test_verify_empty_corpus(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text('{"entries": []}')
    code, _, err = run(capsys, "verify", "--corpus", str(path))
    assert code == 2


def test_verify_reads_file_input(capsys, tmp_path):
    path = tmp_path / "diagram.pd"
    path.write_text(TREFOIL + "\n")
    code, out, _ = run(capsys, "verify", "-i", str(path))
    assert code == 0


def test_homology_json_out(capsys, tmp_path):
    out_path = tmp_path / "h.json"
    code, _, _ = run(
        capsys,
        "homology", "-i", TREFOIL, "--grading", "min", "--via", "both",
        "--format", "json", "--out", str(out_path),
    )
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["match"] is True
    assert data["quantum_grading"] == -9
