import pytest

import hilbkit


def test_hilbert_polynomial_of_two_lines():
    ideal = hilbkit.normal_form_ideal(3, "I")
    assert hilbkit.hilbert_series(ideal)["polynomial"] == "2*m + 2"
    assert hilbkit.pn_reference(3) == "2*m + 2"
    assert hilbkit.hilbert_function(ideal, 2) == 6


def test_ideal_roundtrip_and_membership():
    ideal = hilbkit.Ideal(3, ["x0*x2", "x0*x3", "x1*x2", "x1*x3"])
    assert ideal == hilbkit.normal_form_ideal(3, "I")
    assert ideal.contains("x0*x2*x3 + x1*x3^2")
    assert not ideal.contains("x0^2")
    assert ideal.normal_form("x0*x2 + x3^2") == "x3^2"


def test_intersection_and_quotient():
    a = hilbkit.Ideal(3, ["x0", "x1"])
    b = hilbkit.Ideal(3, ["x2", "x3"])
    union = hilbkit.intersect(a, b)
    assert union == hilbkit.normal_form_ideal(3, "I")
    assert hilbkit.quotient(union, hilbkit.Ideal(3, ["x0"])) == b


def test_flat_limit():
    fam = hilbkit.Ideal(3, ["x1*x2", "x0*x2", "x0*x1 + t*x1*x3", "x0^2 + t*x0*x3"], param=True)
    assert hilbkit.limit_ideal(fam) == hilbkit.normal_form_ideal(3, "III")
    assert hilbkit.is_flat(fam)


def test_tangent_and_classify():
    assert hilbkit.tangent_dimension(hilbkit.normal_form_ideal(3, "IV")) == 12
    result = hilbkit.classify(hilbkit.normal_form_ideal(3, "II"), seed=4)
    assert result["type"] == "II"
    assert not result["has_embedded"]


def test_cone():
    report = hilbkit.chamber("hn", 4, [1, 1])
    assert report["ample"] and report["model"] == "H_n"
    assert hilbkit.is_fano("hn", 4) and not hilbkit.is_fano("hn", 5)
    assert hilbkit.canonical_class("hn", 3) == [-2, -2]


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        hilbkit.Ideal(3, ["x0 +"])
    with pytest.raises(ValueError):
        hilbkit.classify(hilbkit.Ideal(3, ["x0"]))
    with pytest.raises(ValueError):
        hilbkit.fixture("nope")


def test_fixtures_listed():
    ids = hilbkit.fixture_ids()
    assert "mu_matrix" in ids
    assert hilbkit.fixture("ideal_type_I_n3")["lines"] == ["x0*x2", "x0*x3", "x1*x2", "x1*x3"]
