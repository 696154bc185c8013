import io
import json

from nodecurves.cli import main

SQUARE = '{"nodes": [["0","0"],["1","0"],["0","1"],["1","1"]]}'
FOUR = '{"nodes": [["0","0"],["1","0"],["2","0"],["0","1"]]}'
COLLINEAR = '{"nodes": [["0","0"],["1","0"],["2","0"]]}'


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dstar_exact_output(capsys):
    code, out, _ = run(capsys, "dstar", "-n", "5", "-k", "3")
    assert code == 0
    assert out == '{"d": 15, "K": 13}\n'


def test_indep_collinear(capsys):
    code, out, _ = run(capsys, "indep", "-n", "1", COLLINEAR)
    assert code == 0
    assert json.loads(out) == {"independent": False, "hilbert": 2}


def test_poised(capsys):
    code, out, _ = run(capsys, "poised", "-n", "1",
                       '{"nodes": [["0","0"],["1","0"],["0","1"]]}')
    assert code == 0
    assert json.loads(out) == {"poised": True}


def test_basis_dimension(capsys):
    code, out, _ = run(capsys, "basis", "-n", "2", FOUR)
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 2
    assert len(data["basis"]) == 2


def test_fund_polynomial_and_null(capsys):
    code, out, _ = run(capsys, "fund", "-n", "1", "--node", "0",
                       '{"nodes": [["0","0"],["1","0"],["0","1"]]}')
    assert code == 0
    assert json.loads(out) == {"n": 1, "coeffs": ["1", "-1", "-1"]}
    # no fundamental on a dependent collinear triple
    code, out, _ = run(capsys, "fund", "-n", "1", "--node", "0", COLLINEAR)
    assert code == 0
    assert out == "null\n"


def test_fund_index_out_of_range(capsys):
    code, _, err = run(capsys, "fund", "-n", "1", "--node", "7", COLLINEAR)
    assert code == 1
    assert "error" in json.loads(err)


def test_degree_from_file_when_flag_absent(capsys):
    code, out, _ = run(capsys, "indep", '{"n": 1, "nodes": [["0","0"]]}')
    assert code == 0
    assert json.loads(out)["independent"] is True
    code, _, err = run(capsys, "indep", '{"nodes": [["0","0"]]}')
    assert code == 1
    assert "error" in json.loads(err)


def test_gen_br_meta_and_shape(capsys):
    code, out, _ = run(capsys, "gen", "br", "-n", "3", "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 3
    assert len(data["nodes"]) == 10
    meta = data["meta"]
    assert meta["kind"] == "br" and meta["seed"] == 5
    assert len(meta["lines"]) == 4
    assert meta["counts"] == [4, 3, 2, 1]


def test_gen_defect_meta(capsys):
    code, out, _ = run(capsys, "gen", "defect", "-n", "2", "-k", "2",
                       "--seed", "7")
    assert code == 0
    meta = json.loads(out)["meta"]
    assert meta["kind"] == "defect"
    assert meta["mu"]["degree"] == 1
    assert meta["outlier_index"] == 3


def test_gen_defect_requires_k(capsys):
    code, _, err = run(capsys, "gen", "defect", "-n", "2", "--seed", "7")
    assert code == 1
    assert "error" in json.loads(err)


def test_gen_verify_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "defect", "-n", "3", "-k", "2",
                       "--seed", "19")
    assert code == 0
    generated = out
    meta = json.loads(generated)["meta"]
    code, out, _ = run(capsys, "verify", "defect", "-n", "3", "-k", "2",
                       generated)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["dim"] == 2
    assert report["outlier_index"] == meta["outlier_index"]


def test_gen_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, "gen", "poised", "-n", "3", "--seed", "2")
    _, second, _ = run(capsys, "gen", "poised", "-n", "3", "--seed", "2")
    assert first == second


def test_extend_to_poised(capsys):
    code, out, _ = run(capsys, "extend", "-n", "1", '{"nodes": []}')
    assert code == 0
    assert json.loads(out)["nodes"] == [["0", "0"], ["1", "0"], ["0", "1"]]


def test_extend_on_curve(capsys):
    code, out, _ = run(capsys, "extend", "-n", "2", "--on-curve",
                       '{"a":"0","b":"1","c":"0"}', '{"nodes": [["0","0"]]}')
    assert code == 0
    assert json.loads(out)["nodes"] == [["0", "0"], ["1", "0"], ["-1", "0"]]


def test_extend_on_curve_line_list(capsys):
    lines = '[{"a":"0","b":"1","c":"0"}, {"a":"1","b":"0","c":"0"}]'
    code, out, _ = run(capsys, "extend", "-n", "2", "--on-curve", lines,
                       '{"nodes": []}')
    assert code == 0
    assert len(json.loads(out)["nodes"]) == 5


def test_verify_twocurves(capsys):
    code, out, _ = run(capsys, "verify", "twocurves", "-k", "2", "--at=1,1",
                       FOUR)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["curve"]["poly"]["coeffs"] == \
        ["0", "0", "-1", "0", "0", "1"]


def test_verify_uniqueness_size_precondition(capsys):
    code, _, err = run(capsys, "verify", "uniqueness", "-n", "2", "-k", "2",
                       FOUR)
    assert code == 1
    assert "error" in json.loads(err)


def test_verify_defect_inconsistency_is_exit_2(capsys):
    # dimension 2 without any single off-curve node: a loud failure
    code, _, err = run(capsys, "verify", "defect", "-n", "2", "-k", "2",
                       SQUARE)
    assert code == 2
    assert "error" in json.loads(err)


def test_verify_lineusage(capsys):
    _, generated, _ = run(capsys, "gen", "br", "-n", "3", "--seed", "5")
    code, out, _ = run(capsys, "verify", "lineusage", "-n", "3", generated)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    for entry in report["reports"]:
        assert len(entry["nodes_on_line"]) == 3
        assert len(entry["users"]) in (1, 3)


def test_invalid_arguments_exit_1(capsys):
    code, _, err = run(capsys, "dstar", "-n", "5")
    assert code == 1
    assert json.loads(err.splitlines()[-1]) == {"error": "invalid arguments"}
    code, _, _ = run(capsys, "nonsense")
    assert code == 1


def test_file_and_stdin_inputs(tmp_path, capsys, monkeypatch):
    path = tmp_path / "nodes.json"
    path.write_text(FOUR)
    code, from_file, _ = run(capsys, "basis", "-n", "2", str(path))
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(FOUR))
    code, from_stdin, _ = run(capsys, "basis", "-n", "2", "-")
    assert code == 0
    assert from_file == from_stdin


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "dstar", "-n", "5", "-k", "3",
                       "-o", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == '{"d": 15, "K": 13}\n'


def test_render_svg(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "render", FOUR, "--curve",
                       '{"n":2,"coeffs":["0","0","-1","0","0","1"]}',
                       "-o", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("<svg")
    assert text.count("<circle") == 4
    assert "<path" in text
    again = tmp_path / "fig2.svg"
    run(capsys, "render", FOUR, "--curve",
        '{"n":2,"coeffs":["0","0","-1","0","0","1"]}', "-o", str(again))
    assert again.read_text() == text


def test_render_accepts_line_and_curve_objects(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "render", FOUR, "--curve",
                     '{"a":"0","b":"1","c":"0"}', "--curve",
                     '{"degree":2,"poly":{"n":2,"coeffs":'
                     '["0","0","-1","0","0","1"]}}', "-o", str(target))
    assert code == 0
    assert target.read_text().count("<path") == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
