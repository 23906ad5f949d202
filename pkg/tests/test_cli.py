import json
import shutil

import pytest

from jacobi_designs.cli import main
from jacobi_designs.code import catalog, format_code
from jacobi_designs.golden import default_golden_dir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_we(capsys):
    assert run(capsys, "we", "--catalog", "tetracode") == (0, "x^4+8xy^3\n", "")
    assert run(capsys, "we", "--catalog", "i2^2")[1] == "x^4+6x^2y^2+9y^4\n"


def test_we_k0_file(capsys, tmp_path):
    path = tmp_path / "zero.txt"
    path.write_text("q=3 n=5\n0 0 0 0 0\n")
    assert run(capsys, "we", "--file", str(path))[1] == "x^5\n"


def test_jacobi(capsys):
    code, out, _ = run(capsys, "jacobi", "--catalog", "golay12", "--T", "1")
    assert code == 0
    assert out == "w(x^11+132x^5y^6+110x^2y^9)+z(132x^6y^5+330x^3y^8+24y^11)\n"
    assert run(capsys, "jacobi", "--catalog", "tetracode", "--T", "1,2")[1] == "w^2x^2+4wzy^2+4z^2xy\n"


def test_jacobi_via_polarization(capsys):
    code, out, _ = run(capsys, "jacobi", "--catalog", "golay12", "--t", "5", "--via-polarization")
    assert code == 0
    assert out.splitlines()[-1] == "MATCH"
    assert out.startswith("w^5(x^7+2xy^6)+30w^4zx^2y^5")


def test_jacobi_refs(capsys):
    code, out, _ = run(capsys, "jacobi", "--catalog", "tetracode", "--refs", "1,0,0,0")
    assert (code, out) == (0, "w(x^3+2y^3)+6zxy^2\n")


def test_jacobi_nonintegral(capsys, tmp_path):
    path = tmp_path / "lop.txt"
    path.write_text("q=3 n=4\n1 0 0 0\n")
    code, _, err = run(capsys, "jacobi", "--file", str(path), "--t", "1", "--via-polarization")
    assert code in (1, 2)
    assert err


def test_mw(capsys):
    code, out, _ = run(capsys, "mw", "--catalog", "tetracode", "--T", "1")
    assert code == 0
    assert out == "w(x^3+2y^3)+6zxy^2\nSELF-DUAL-CONSISTENT\n"
    code, out, _ = run(capsys, "mw", "--poly", "x^4", "--ell", "0", "--q", "3", "--size", "1")
    assert out == "x^4+8x^3y+24x^2y^2+32xy^3+16y^4\n"


def test_mw_round_trip(capsys, tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("q=3 n=4\n1 2 0 1\n")
    code, out, _ = run(capsys, "mw", "--file", str(path), "--T", "2")
    assert code == 0
    transformed, status = out.splitlines()
    assert status == "DUAL-CONSISTENT"
    code, back, _ = run(capsys, "mw", "--poly", transformed, "--ell", "1", "--q", "3", "--size", "27")
    code, direct, _ = run(capsys, "jacobi", "--file", str(path), "--T", "2")
    assert back == direct


def test_polarize(capsys):
    code, out, _ = run(capsys, "polarize", "--poly", "x^4+8xy^3", "--ell", "0", "--j", "1", "--divide", "4")
    assert (code, out) == (0, "w(x^3+2y^3)+6zxy^2\n")


def test_design(capsys):
    code, out, _ = run(capsys, "design", "--catalog", "tetracode^2", "--k", "3", "--t", "2")
    assert code == 0
    assert out == "2-(8,3,(0^{16},2^{12})) ; D_2(8,3,2) ≤ 8 ≤ C_0(8,3,2)\n"
    code, out, _ = run(capsys, "design", "--catalog", "golay12", "--k", "6", "--t", "5")
    assert out.splitlines()[-1] == "t-design: lambda=1"


def test_design_empty(capsys):
    code, out, _ = run(capsys, "design", "--catalog", "tetracode", "--k", "2", "--t", "1")
    assert code == 0
    assert out.startswith("no blocks")


def test_design_partition(capsys):
    code, out, _ = run(
        capsys, "design", "--catalog", "golay12", "--k", "3,3", "--t", "1,1", "--partition", "6,7,8,9,10,11|1,2,3,4,5,12"
    )
    assert code == 0
    assert "20" in out


def test_design_json(capsys):
    code, out, _ = run(capsys, "design", "--catalog", "tetracode^2", "--k", "3", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert data["spectrum"] == [{"count": 16, "lambda": 0}, {"count": 12, "lambda": 2}]
    assert data["statement"] == "D_2(8,3,2) ≤ 8 ≤ C_0(8,3,2)"


def test_molien(capsys):
    assert run(capsys, "molien", "--group", "g3", "--part", "4")[1] == "u^4+u^3v+u^2v^2+uv^3+v^4\n"
    assert run(capsys, "molien", "--group", "g4", "--part", "2")[1] == "u^2+uv+v^2\n"
    assert run(capsys, "molien", "--group", "identity", "--part", "3")[1] == "4u^3+6u^2v+6uv^2+4v^3\n"
    data = json.loads(run(capsys, "molien", "--group", "g4", "--part", "2", "--format", "json")[1])
    assert data == {"coefficients": [1, 1, 1], "degree": 2, "order": 12, "polynomial": "u^2+uv+v^2"}


def test_molien_denominator(capsys):
    code, out, _ = run(capsys, "molien", "--group", "g4", "--max-degree", "20", "--denominator", "(1-u^2)(1-u^6)")
    assert code == 0 and "DENOMINATOR-OK" in out
    code, out, _ = run(capsys, "molien", "--group", "g4", "--max-degree", "20", "--denominator", "1-u")
    assert code == 1 and "DENOMINATOR-FAIL" in out


def test_molien_group_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("conductor=4\n1/2 3/2 ; 1/2 -1/2\n1 0 ; 0 -1\n")
    assert run(capsys, "molien", "--group", f"file:{path}", "--part", "2")[1] == "u^2+uv+v^2\n"


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "golay12" in out and "dc16" in out
    code, out, _ = run(capsys, "catalog", "tetracode")
    assert format_code(catalog("tetracode")).splitlines()[0] in out


def test_determinism(capsys):
    first = run(capsys, "jacobi", "--catalog", "golay12", "--T", "1,5", "--format", "json")
    second = run(capsys, "jacobi", "--catalog", "golay12", "--T", "1,5", "--format", "json")
    assert first == second
    json.loads(first[1])


@pytest.mark.parametrize(
    "argv",
    [
        ["we"],
        ["we", "--catalog", "nonesuch"],
        ["jacobi", "--catalog", "tetracode", "--T", "9"],
        ["jacobi", "--catalog", "tetracode", "--refs", "1,0"],
        ["design", "--catalog", "tetracode", "--k", "0", "--t", "1"],
        ["molien", "--group", "g5"],
        ["bogus"],
        ["we", "--catalog", "golay12", "--budget", "5"],
    ],
)
def test_usage_errors(capsys, argv):
    code = main(argv)
    assert code == 2
    assert capsys.readouterr().err


def test_missing_file_reports_path(capsys, tmp_path):
    code, _, err = run(capsys, "we", "--file", str(tmp_path / "none.txt"))
    assert code == 2 and "none.txt" in err


def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "golden")
    assert code == 0
    assert out.splitlines()[-1] == "101/101 passed"


def test_verify_corrupted(capsys, tmp_path):
    golden = tmp_path / "golden"
    shutil.copytree(default_golden_dir(), golden)
    (golden / "tetracode_J1.txt").write_text("w(x^3+2y^3)+7zxy^2\n")
    code, out, _ = run(capsys, "verify", "--golden-dir", str(golden), "--only", "III-4")
    assert code == 1
    assert "FAIL III-4-J1-direct" in out
    assert "PASS III-4-J2-direct" in out


def test_verify_empty_selection(capsys):
    code, _, err = run(capsys, "verify", "--only", "nothing-matches")
    assert code == 2 and "no cases" in err
