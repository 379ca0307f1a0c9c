import json
import math

import pytest

import graphdim as gd


def test_evaluate():
    assert gd.evaluate("x^2+1", 0.5) == 1.25
    assert gd.evaluate("weier(0.5,3,30)", 0.0) == pytest.approx(2.0 * (1.0 - 0.5**31))
    assert gd.evaluate("peano_x()", 0.0) == 0.0
    assert gd.evaluate("peano_x()", 1.0) == 1.0


def test_parse_error():
    with pytest.raises(ValueError):
        gd.evaluate("x +", 0.5)


def test_sample_grid():
    values = gd.sample("x", m=6)
    assert len(values) == 2**6 + 1
    assert values[0] == 0.0
    assert values[-1] == 1.0
    assert values[32] == 0.5


def test_estimate_identity():
    result = gd.estimate("x", m=14, k_min=6, k_max=10)
    assert result["slope"] == pytest.approx(1.0, abs=0.02)
    assert result["lower_proxy"] <= result["slope"] <= result["upper_proxy"]
    assert len(result["scales"]) >= 5
    for rec in result["scales"]:
        assert rec["lower_bound"] <= rec["grid_count"] <= rec["upper_bound"]


def test_estimate_rough_fixture():
    result = gd.estimate("fixture(1.5)", m=16, k_min=4, k_max=12)
    assert result["slope"] == pytest.approx(1.5, abs=0.15)


def test_decompose_equal_dimension_targets():
    result = gd.decompose("fixture(1.5)", beta=1.5, m=14)
    assert result["recon_error"] <= 1e-9
    assert result["beta_target"] == 1.5


def test_decompose_infeasible():
    with pytest.raises(ValueError):
        gd.decompose("fixture(1.7)", beta=1.2, m=14)
    with pytest.raises(ValueError):
        gd.decompose("x+1", beta=2.0, m=14)


def test_verify_suite_deterministic():
    ok1, report1 = gd.verify("product_upper", seed=42, m=16)
    ok2, report2 = gd.verify("product_upper", seed=42, m=16)
    assert report1 == report2
    parsed = json.loads(report1)
    assert parsed[0]["suite"] == "product_upper"
    assert "elapsed" not in report1


def test_suite_names():
    names = gd.suite_names()
    assert "bilipschitz" in names
    assert len(names) == 9
