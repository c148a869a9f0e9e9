from qtcatalan.cli import grid_to_tsv, main, parse_grid_tsv
from qtcatalan.polynomial import coefficient_grid
from qtcatalan.verify import refined_catalan

CONE_FILE = """dim 5
apex 0 0 0 0 0
gen closed 1 0 0 0 0
gen closed 0 0 1 0 0
gen closed 1 1 0 1 0
gen open 1 0 0 1 1
gen open 0 1 0 0 1
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_paths_listing(capsys):
    code, out, _ = run(capsys, "paths", "--k", "1,1,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ranks=0,1,2 east=0,0,3 area=3 bounce=0"
    assert lines[-1] == "ranks=0,0,0 east=1,1,1 area=0 bounce=3"
    assert [line.split()[-2:] for line in lines] == [
        ["area=3", "bounce=0"],
        ["area=2", "bounce=1"],
        ["area=1", "bounce=1"],
        ["area=1", "bounce=2"],
        ["area=0", "bounce=3"],
    ]


def test_catalan_output(capsys):
    code, out, _ = run(capsys, "catalan", "--k", "1,1,1")
    assert code == 0
    assert out.strip() == "q*t + q^3 + q^2*t + q*t^2 + t^3"

    code, out, _ = run(capsys, "catalan", "--lambda", "2,1")
    assert code == 0
    assert out.strip() == "q + t + q^2 + q*t + t^2"


def test_symmetric_exit_codes(capsys):
    code, out, _ = run(capsys, "symmetric", "--k", "1,1,1")
    assert code == 0 and out.strip() == "symmetric"

    code, out, _ = run(capsys, "symmetric", "--k", "1,1,3,1")
    assert code == 1
    assert out.strip() == "q^4*t^2=2 vs q^2*t^4=1"


def test_grid_tsv_round_trip(capsys):
    code, out, _ = run(capsys, "grid", "--k", "1,2,1", "--format", "tsv")
    assert code == 0
    assert parse_grid_tsv(out) == refined_catalan((1, 2, 1))
    # header lists q exponents
    assert out.splitlines()[0] == "0\t1\t2\t3\t4"


def test_grid_tsv_helper_matches_module():
    poly = refined_catalan((2, 1))
    text = grid_to_tsv(coefficient_grid(poly))
    assert parse_grid_tsv(text) == poly


def test_cone_subcommands(tmp_path, capsys):
    path = tmp_path / "cone.txt"
    path.write_text(CONE_FILE)

    code, out, _ = run(capsys, "cone", str(path), "--pi")
    assert code == 0
    assert out.splitlines() == ["1 1 0 1 1", "1 1 0 1 2"]

    code, out, _ = run(capsys, "cone", str(path), "--index")
    assert code == 0
    assert out.strip() == "index=2 unimodular=no"

    code, out, _ = run(capsys, "cone", str(path), "--transform")
    assert code == 0
    assert out.strip() == (
        "(z1*z2*z4*z5 + z1*z2*z4*z5^2) / "
        "(1 - z3)(1 - z2*z5)(1 - z1)(1 - z1*z4*z5)(1 - z1*z2*z4)"
    )


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "three", "--bound", "4")
    assert code == 0
    assert out.splitlines() == [
        "formula_match: pass",
        "series_match: pass",
        "symmetric: pass",
    ]


def test_scan_family(capsys):
    code, out, _ = run(capsys, "scan", "--family", "kaaa", "--max", "2", "--lengths", "4")
    assert code == 0
    assert "(1,2,2,2) symmetric" in out.splitlines()


def test_scan_all_length_finds_asymmetry(capsys):
    code, out, _ = run(capsys, "scan", "--all-length", "4", "--max", "2")
    assert code == 1
    assert "(1,1,2,1) asymmetric q^3*t^2=2 vs q^2*t^3=1" in out


def test_lastparam(capsys):
    code, out, _ = run(capsys, "lastparam", "--prefix", "1,1,1", "--m", "2", "--l", "3")
    assert code == 0 and out.strip() == "equal"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "catalan", "--k", "1,x")
    assert code == 2 and "error" in err

    code, _, _ = run(capsys, "frobnicate")
    assert code == 2

    code, _, err = run(capsys, "cone", "/nonexistent/file", "--pi")
    assert code == 2

    code, _, err = run(capsys, "catalan", "--k", "0,1")
    assert code == 2

    code, _, _ = run(capsys, "lastparam", "--prefix", "1", "--m", "0", "--l", "1")
    assert code == 2


def test_outputs_are_reproducible(capsys):
    first = run(capsys, "catalan", "--k", "2,1,2")
    second = run(capsys, "catalan", "--k", "2,1,2")
    assert first == second
