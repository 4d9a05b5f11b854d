import io
import subprocess
import sys

from cubicfq.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def build_curve(tmp_path, *args):
    path = tmp_path / "curve.txt"
    code, out, _ = run("canon", "build", *args, "--out", str(path))
    assert code == 0 and out.startswith("wrote=")
    return path


def test_canon_build_and_info(tmp_path):
    path = build_curve(tmp_path, "--family", "nine", "--q", "7", "--c", "3")
    assert path.read_text().splitlines()[0] == "field p=7 h=1 modulus=0,1"
    code, out, _ = run("cubic", "info", str(path))
    assert code == 0
    assert "singular=no" in out
    assert "inflexions=9 " in out


def test_info_names_singular_point(tmp_path):
    path = build_curve(tmp_path, "--family", "N1_1", "--q", "7")
    code, out, _ = run("cubic", "info", str(path))
    assert code == 0
    assert "singular=yes" in out and "rational_singular_points=(0:0:1)" in out


def test_group_commands(tmp_path):
    path = build_curve(tmp_path, "--family", "weierstrass", "--q", "5", "--c", "1", "--d", "0")
    code, out, _ = run("group", "structure", str(path), "--identity", "(0:1:0)")
    assert code == 0 and "factors=2,2 structure=Z/2 x Z/2" in out
    code, out, _ = run("group", "add", str(path), "--identity", "(0:1:0)", "(0:0:1)", "(2:0:1)")
    assert code == 0 and "sum=(1:0:2)" in out


def test_census_commands():
    code, out, _ = run("census", "run", "--q", "2")
    assert code == 0 and "P_q=6 A_q=5 n=(1,4,1,0)" in out.splitlines()
    code, out, _ = run("census", "spectrum", "--q", "5")
    assert code == 0
    assert "t=-4,-3,-2,-1,0,1,2,3,4" in out and "N_max=10 N_min=2" in out


def test_arcs_build_then_verify(tmp_path):
    path = build_curve(tmp_path, "--family", "weierstrass", "--q", "41", "--c", "0", "--d", "1")
    code, out, _ = run("arcs", "build", "--curve", str(path), "--identity", "(0:1:0)", "--r", "7")
    assert code == 0
    assert "size=6 guaranteed_k=1,2,3,4,5,6" in out
    assert "certificate k=2 status=pass" in out
    pts = tmp_path / "arc.txt"
    pts.write_text(out)
    for k in ("1", "2"):
        code, res, _ = run("arcs", "verify", "--curve", str(path), "--points", str(pts), "--k", k)
        assert code == 0 and "status=pass" in res


def test_arcs_verify_reports_witness(tmp_path):
    path = build_curve(tmp_path, "--family", "nine", "--q", "7", "--c", "3")
    pts = tmp_path / "pts.txt"
    pts.write_text("(1:0:3)\n(1:0:5)\n(1:0:6)\n")
    code, out, _ = run("arcs", "verify", "--curve", str(path), "--points", str(pts), "--k", "1")
    assert code == 0
    assert "status=fail" in out and "witness_form=Y:1" in out


def test_ecdh_demo(tmp_path):
    path = build_curve(tmp_path, "--family", "weierstrass", "--q", "7", "--c", "1", "--d", "3")
    code, out, _ = run("ecdh", "demo", "--curve", str(path), "--identity", "(0:1:0)", "--seed", "4")
    assert code == 0
    assert out.splitlines()[0] == "base=(1:2:2) order=6 q=7"
    assert "message from=A frame=ECDH1|q=7|pt=" in out
    assert out.splitlines()[-1] == "agreed=yes"


def test_errors_are_one_line(tmp_path):
    code, _, err = run("canon", "build", "--family", "nine", "--q", "8")
    assert code == 1 and err.startswith("error=ResidueError ") and err.count("\n") == 1
    code, _, err = run("canon", "build", "--family", "bogus", "--q", "8")
    assert code == 2 and err.startswith("error=usage ")
    code, _, err = run("cubic", "info", str(tmp_path / "missing.txt"))
    assert code == 1 and err.startswith("error=FileNotFoundError ")
    code, _, err = run("census", "run", "--q", "7")
    assert code == 1 and "q=7" in err
    code, _, err = run()
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cubicfq", "census", "run", "--q", "2"],
                         capture_output=True, text=True, check=True)
    assert "P_q=6 A_q=5 n=(1,4,1,0)" in res.stdout
