from fractions import Fraction

import pytest

from fatcheck.cli import main
from fatcheck.obstruction import OrbitCurve, invariant_form
from fatcheck.symfun import from_records
from fatcheck.weinstein import GroupSpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_text(capsys):
    code, out, _ = run(capsys, "invariant", "--group", "T", "--rank", "2", "--m", "2", "--orbit", "1,1")
    assert code == 0
    assert out.strip() == "c1^2 + 2*c1*c2 + c2^2"


def test_invariant_records_round_trip(capsys):
    code, out, _ = run(capsys, "invariant", "--group", "U(2)", "--m", "2", "--curve", "rank2", "--format", "records")
    assert code == 0
    header, _, body = out.partition("\n")
    assert header == "# variables: t, c1, c2"
    poly = from_records(body, 3)
    tf = invariant_form(GroupSpec("U", 2), 2).at_curve(OrbitCurve.rank2().coordinates())
    want = {(i,) + e: c for e, row in tf.rows.items() for i, c in enumerate(row.coeffs) if c}
    assert dict(poly.terms) == want
    # 3 c1^2 + t^2 (c1^2 - 4 c2) up to the constant 2
    assert want == {(0, 2, 0): 6, (2, 2, 0): 2, (2, 0, 1): -8}


def test_full_form_records(capsys):
    code, out, _ = run(capsys, "invariant", "--group", "Sp", "--rank", "1", "--m", "2", "--format", "records")
    assert code == 0 and out.startswith("# variables: y1..y1, p1")


def test_check_g2_bundle(capsys, bundle_dir):
    code, out, _ = run(capsys, "check", str(bundle_dir / "g2_so4.bundle"))
    assert code == 1
    assert "VanishesOnOrbits" in out and "y ~ (1, 0)" in out and "y ~ (1, -2)" in out


@pytest.mark.parametrize("name, code", [("cp2_9_1", 0), ("cp2_9_3", 1)])
def test_check_complex_sphere(capsys, bundle_dir, name, code):
    got, out, _ = run(capsys, "check", str(bundle_dir / f"{name}.bundle"), "--domain", "sphere-complex")
    assert got == code
    assert "closed-form rule" in out


def test_check_real_sphere(capsys, bundle_dir):
    code, out, _ = run(capsys, "check", str(bundle_dir / "s8_k1_l1.bundle"), "--domain", "sphere-real")
    assert code == 1 and "ObstructionViolated" in out


def test_check_cp4_tangent(capsys, bundle_dir):
    code, out, _ = run(capsys, "check", str(bundle_dir / "cp4_tangent.bundle"), "--domain", "sphere-complex")
    assert code == 1
    assert "vanishing orbits: 3" in out


@pytest.mark.parametrize("p, q, code", [("2", "1", 0), ("2", "-1", 1)])
def test_check_lens(capsys, bundle_dir, p, q, code):
    got, _, _ = run(capsys, "check", str(bundle_dir / "lens_m2.bundle"), "--domain", "lens", p, q)
    assert got == code


def test_check_single_orbit(capsys, bundle_dir):
    code, out, _ = run(capsys, "check", str(bundle_dir / "g2_so4.bundle"), "--domain", "orbit", "1,0")
    assert code == 1


def test_check_half_line(capsys, bundle_dir):
    code, out, _ = run(capsys, "check", str(bundle_dir / "g2_so4.bundle"), "--domain", "t>=4")
    assert code == 0


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "9,0,-10,0,1")
    assert code == 0
    assert out.splitlines()[1].endswith(": 4")


def test_roots_on_negative_interval(capsys):
    code, out, _ = run(capsys, "roots", "14,119,219,119,14", "--domain=-1,0")
    assert code == 0 and out.splitlines()[1].endswith(": 2")


def test_reproduce_single_case(capsys):
    code, out, _ = run(capsys, "reproduce", "g2-so4")
    assert code == 0 and out.startswith("g2-so4: MATCH")


def test_reproduce_reports_the_known_mismatch(capsys):
    code, out, _ = run(capsys, "reproduce", "cp4-tangent")
    assert code == 1 and "MISMATCH" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--group", "SO(3)", "--y", "1", "--k1", "4", "--k2", "2", "--samples", "100000", "--seed", "4")
    assert code == 0 and "PASS" in out


def test_oracle_negative_control(capsys):
    argv = ["oracle", "--group", "SO(3)", "--y", "1", "--k1", "4", "--k2", "2", "--samples", "200000", "--seed", "4"]
    code, out, _ = run(capsys, *argv, "--corrupt-symbolic", "11/10")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["invariant", "--group", "E8", "--m", "2"],
        ["invariant", "--group", "U(2)", "--m", "2", "--orbit", "1,2,3"],
        ["invariant", "--group", "U(3)", "--m", "2", "--curve", "rank2"],
        ["check", "/nonexistent/file.bundle"],
        ["reproduce", "no-such-case"],
        ["roots", "1,x"],
        ["roots", "1,0,1", "--domain", "nowhere"],
    ],
)
def test_invalid_input_exits_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_lens_needs_two_slopes(capsys, bundle_dir):
    code, _, err = run(capsys, "check", str(bundle_dir / "lens_m2.bundle"), "--domain", "lens", "2")
    assert code == 2


def test_trace_zero_group_needs_an_orbit(capsys, tmp_path):
    path = tmp_path / "su2.bundle"
    path.write_text("group=U\nrank=2\nm=2\nsu=true\nc2 = 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "orbit" in err
    code, _, _ = run(capsys, "check", str(path), "--domain", "orbit", "1,-1")
    assert code == 0


def test_precision_flag(capsys):
    # a leading minus sign needs the option terminator
    code, out, _ = run(capsys, "roots", "--precision", "1/100", "--", "-2,0,1")
    assert code == 0
    lo, hi = (Fraction(v) for v in out.splitlines()[-1].strip().strip("[]").split(", "))
    assert hi - lo <= Fraction(1, 50)
