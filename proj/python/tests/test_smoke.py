import math

import pytest

import qalg


def test_verify_report():
    r = qalg.report("verify", "s3-diff", "--m", 4, "--a", "2/7")
    assert r["system"] == "S3"
    assert all(c["status"] == "pass" for c in r["checks"])
    assert r["operators"]["X"]["kind"] == "differential"


def test_exit_codes():
    code, out, err = qalg.run(["verify", "s3-diff", "--m", "4", "--a", "bogus"])
    assert code == 2
    assert "bogus" in err
    with pytest.raises(qalg.UsageError):
        qalg.report("pdm", "--k", "3/2")
    code, out, _ = qalg.run(["quantize", "--model", "S3-II", "--mu", "3/2", "--a", "1/4", "--gauge", "alternate"])
    assert code == 1


def test_dual_hahn_values():
    assert qalg.dual_hahn_orthogonality(2, "1/3", 0, 0) == ("14/5", "14/5")
    assert qalg.dual_hahn_orthogonality(2, "1/3", 1, 1) == ("7/2", "7/2")
    assert qalg.dual_hahn_orthogonality(2, "1/3", 0, 1) == ("0", "0")


def test_exact_helpers():
    assert qalg.normalize("6/4") == "3/2"
    assert qalg.rep_structure_ok(4, "1/3")
    assert qalg.s9_verify("1/2", "1/3", "1/5", "7/4")
    e = qalg.eigen_correspondence("1", "3/2", 1)
    assert e == {"lambda_S": "-63/4", "lambda_Q": "15", "pass": True}
    with pytest.raises(qalg.MathError):
        qalg.normalize("bogus")
    with pytest.raises(ValueError):
        qalg.eigen_correspondence("1", "-1", 1)


def test_sphere():
    assert qalg.sphere_coords(0, 0, 1) == (0.0, 1.0, 0.0)
    s = qalg.sphere_coords(0.7, -1.3, 1.5)
    assert math.isclose(sum(v * v for v in s), 1.0, rel_tol=1e-12)


def test_classical_report_is_seeded():
    a = qalg.report("classical", "--system", "S3-II", "--E", "-5/3", "--alpha", "3/7", "--seed", 4)
    b = qalg.report("classical", "--system", "S3-II", "--E", "-5/3", "--alpha", "3/7", "--seed", 4)
    a.pop("timing")
    b.pop("timing")
    assert a == b
    assert a["seed"] == 4
