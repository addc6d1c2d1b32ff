import json

from conftest import FIXTURES
from kmc.cli import load_diagram, main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *args):
    code, out, err = run(capsys, *args, "--json")
    assert code == 0, err
    return json.loads(out)


def test_load_diagram_sniffing(tmp_path):
    p = tmp_path / "knot.txt"
    p.write_text("O1+ U1+\n")
    assert load_diagram(p).n == 1
    p.write_text("X 1 2 1 2\n")
    assert load_diagram(p).n == 1


def test_bracket_text(capsys):
    code, out, _ = run(capsys, "bracket", str(FIXTURES / "trefoil.pd"))
    assert code == 0
    assert "span: 12" in out
    assert "1-complete: yes" in out


def test_bracket_json(capsys):
    data = run_json(capsys, "bracket", str(FIXTURES / "trefoil.pd"))
    assert data["schema"] == 1
    assert data["terms"] == {"7": 1, "3": -1, "-5": -1}
    assert data["span"] == 12
    assert data["bound"] == 12
    assert data["one_complete"] is True


def test_atom_json(capsys):
    data = run_json(capsys, "atom", str(FIXTURES / "virtual_trefoil.gauss"))
    assert data == {
        "schema": 1,
        "a": 1,
        "b": 2,
        "chi": 1,
        "orientable": False,
        "twice_genus": 1,
    }


def test_atom_text_half_genus(capsys):
    code, out, _ = run(capsys, "atom", str(FIXTURES / "virtual_trefoil.gauss"))
    assert code == 0
    assert "genus: 1/2" in out


def test_kh_table_layout(capsys):
    code, out, _ = run(capsys, "kh", str(FIXTURES / "trefoil.pd"), "--field", "q")
    assert code == 0
    assert "thickness: 2" in out
    assert "q-span: 8" in out
    # rows are q descending
    rows = [line for line in out.splitlines() if line.startswith("q=")]
    qs = [int(line.split()[0][2:]) for line in rows]
    assert qs == sorted(qs, reverse=True)


def test_kh_json(capsys):
    data = run_json(capsys, "kh", str(FIXTURES / "trefoil.pd"), "--field", "q")
    assert data["field"] == "q"
    assert {(e["t"], e["q"]): e["dim"] for e in data["entries"]} == {
        (-3, -9): 1,
        (-2, -5): 1,
        (0, -3): 1,
        (0, -1): 1,
    }
    assert data["thickness"] == 2
    assert data["q_span"] == 8


def test_k1_json(capsys):
    data = run_json(capsys, "k1", str(FIXTURES / "virtual_trefoil.gauss"))
    assert data["size"] == 3
    assert data["b_histogram"] == {"0": 1, "1": 2}
    assert data["window"] == [0, 1]
    assert data["checks"]["within_window"] is True
    assert data["checks"]["parity_consistent"] is False


def test_certify_json(capsys):
    data = run_json(
        capsys, "certify", str(FIXTURES / "trefoil.pd"), "--fields", "q"
    )
    assert data["verdict"] == "MINIMAL"
    assert data["strict_1_complete"] is True
    assert data["fields"]["q"]["thickness"] == 2


def test_certify_table_13n3663(capsys):
    code, out, _ = run(
        capsys, "certify-table", str(FIXTURES / "13n3663_khq.json"), "--n", "13"
    )
    assert code == 0
    assert "verdict: MINIMAL" in out


def test_certify_json_roundtrips_as_table(capsys, tmp_path):
    data = run_json(
        capsys, "certify", str(FIXTURES / "trefoil.pd"), "--fields", "q"
    )
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "certify-table", str(path), "--n", "3", "--json")
    assert code == 0
    table_cert = json.loads(out)
    assert table_cert["fields"]["q"]["thickness"] == data["fields"]["q"]["thickness"]
    assert table_cert["fields"]["q"]["q_span"] == data["fields"]["q"]["q_span"]
    assert table_cert["verdict"] == "MINIMAL"


def test_missing_file_exit_code(capsys):
    code, out, err = run(capsys, "kh", "missing.pd")
    assert code == 1
    assert "missing.pd" in err


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.pd"
    p.write_text("X 1 2 3\n")
    code, out, err = run(capsys, "bracket", str(p))
    assert code == 1
    assert "line 1" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "bracket")[0] == 2
    assert run(capsys, "unknown-command")[0] == 2


def test_max_crossings_flag(capsys):
    code, _, err = run(
        capsys, "kh", str(FIXTURES / "trefoil.pd"), "--max-crossings", "2"
    )
    assert code == 1
    assert "limit" in err


def test_batch(capsys, tmp_path):
    for name in ("trefoil.pd", "kinked_trefoil.pd", "virtual_trefoil.gauss"):
        (tmp_path / name).write_text((FIXTURES / name).read_text())
    code, out, _ = run(capsys, "batch", str(tmp_path))
    assert code == 0
    lines = out.strip().splitlines()
    assert any("trefoil.pd: MINIMAL" in line for line in lines)
    assert any("kinked_trefoil.pd: INCONCLUSIVE" in line for line in lines)
    assert "total: 3 files, 2 MINIMAL, 1 INCONCLUSIVE, 0 errors" in lines[-1]


def test_batch_empty_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "batch", str(tmp_path))
    assert code == 0
    assert "total: 0 files" in out


def test_batch_with_malformed_file(capsys, tmp_path):
    (tmp_path / "good.pd").write_text((FIXTURES / "trefoil.pd").read_text())
    (tmp_path / "bad.pd").write_text("X 1 2 3\n")
    code, out, _ = run(capsys, "batch", str(tmp_path))
    assert code == 1
    assert "error" in out


def test_json_output_deterministic(capsys):
    first = run(capsys, "certify", str(FIXTURES / "figure8.pd"), "--json")
    second = run(capsys, "certify", str(FIXTURES / "figure8.pd"), "--json")
    assert first == second


def test_nonpositive_limit_is_usage_error(capsys):
    code, _, _ = run(
        capsys, "kh", str(FIXTURES / "trefoil.pd"), "--max-crossings", "0"
    )
    assert code == 2


def test_certify_table_needs_field_choice_for_multi_field_json(capsys, tmp_path):
    import json as _json

    code, out, _ = run(
        capsys, "certify", str(FIXTURES / "trefoil.pd"), "--fields", "gf2,q", "--json"
    )
    assert code == 0
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, _, err = run(capsys, "certify-table", str(path), "--n", "3")
    assert code == 1
    assert "pick one" in err
    code, out, _ = run(
        capsys, "certify-table", str(path), "--n", "3", "--field", "q"
    )
    assert code == 0
    assert "verdict: MINIMAL" in out


def test_batch_field_error_counts_as_error(capsys, tmp_path):
    (tmp_path / "vt.gauss").write_text(
        (FIXTURES / "virtual_trefoil.gauss").read_text()
    )
    code, out, _ = run(capsys, "batch", str(tmp_path), "--fields", "q")
    assert code == 1
    assert "error" in out
