import itertools

import pytest
from hypothesis import given, strategies as st

from fano3.chow import CISpec, euler_closed_form
from fano3.rationality import (
    Base,
    ConicBundleData,
    DPFibrationData,
    Parity,
    Status,
    classify_ci_model,
    conic_bundle_verdict,
    dp_fibration_verdict,
)


def cb(deg, standard=True, parity=Parity.UNKNOWN, base=Base.PLANE):
    return conic_bundle_verdict(ConicBundleData(base, deg, standard, parity)).status


def test_conic_bundle_examples():
    assert cb(7) is Status.NONRATIONAL
    assert cb(5, parity=Parity.ODD) is Status.NONRATIONAL
    assert cb(5, parity=Parity.EVEN) is Status.RATIONAL
    assert cb(5) is Status.UNDETERMINED
    for std in (True, False):
        assert cb(3, std) is Status.RATIONAL


def test_nonstandard_conic_bundle():
    assert cb(5, standard=False) is Status.RATIONAL
    assert cb(6, standard=False) is Status.UNDETERMINED


def test_quadric_base():
    assert cb((2, 7), base=Base.QUADRIC) is Status.RATIONAL
    assert cb((4, 5), base=Base.QUADRIC) is Status.UNDETERMINED


def test_conic_bundle_data_validation():
    with pytest.raises(ValueError):
        ConicBundleData(Base.PLANE, (2, 3))
    with pytest.raises(ValueError):
        ConicBundleData(Base.QUADRIC, 5)
    with pytest.raises(ValueError):
        ConicBundleData(Base.PLANE, -1)


@given(st.integers(0, 12), st.booleans(), st.sampled_from([Parity.ODD, Parity.EVEN]))
def test_theta_only_refines(deg, standard, parity):
    unknown = cb(deg, standard)
    known = cb(deg, standard, parity)
    if unknown is not Status.UNDETERMINED:
        assert known is unknown


@given(st.integers(5, 9), st.one_of(st.none(), st.integers(-100, 100)), st.booleans())
def test_high_degree_dp_rational(d, eu, smooth):
    assert dp_fibration_verdict(DPFibrationData(d, eu, smooth)).status is Status.RATIONAL


def test_dp4_trichotomy():
    v = lambda eu, smooth=True: dp_fibration_verdict(DPFibrationData(4, eu, smooth)).status
    assert v(-16) is Status.NONRATIONAL
    assert v(-8) is Status.RATIONAL and v(0) is Status.RATIONAL
    assert v(-4) is Status.UNDETERMINED
    assert v(None) is Status.UNDETERMINED
    assert v(-16, smooth=False) is Status.UNDETERMINED
    assert dp_fibration_verdict(DPFibrationData(3, -16)).status is Status.UNDETERMINED


def test_dp_degree_range():
    with pytest.raises(ValueError):
        DPFibrationData(10)


def test_classify_models():
    assert classify_ci_model(CISpec.build([0, 0, 0, 1, 1], [(2, 0), (2, 0)])).status is Status.NONRATIONAL
    assert classify_ci_model(CISpec.build([0] * 5, [(2, 0), (2, 0)])).inputs["euler"] == 16
    v = classify_ci_model(CISpec.build([0, 0, 0, 1, 1], [(2, 0), (2, -1)]))
    assert v.inputs["euler"] == 4 and v.status is Status.NONRATIONAL
    assert "smoothness" in v.citation


def test_classify_rejects_other_shapes():
    with pytest.raises(ValueError, match="not a dP4 model"):
        classify_ci_model(CISpec.build([0, 0, 0, 1, 1], [(2, 0), (1, 0)]))
    with pytest.raises(ValueError, match="not a dP4 model"):
        classify_ci_model(CISpec.build([0, 0, 0, 1], [(4, 0)]))


def test_verdict_json_shape():
    j = classify_ci_model(CISpec.build([0, 0, 1, 1, 1], [(2, -1), (2, 0)])).to_json()
    assert j["verdict"] == "Nonrational" and j["rule"] and j["inputs"]["euler"] == -12
    assert j["schema"] == "fano3/1"


def test_classify_agrees_with_closed_form_grid():
    for tw in itertools.combinations_with_replacement(range(4), 5):
        if tw[0] != 0:
            continue
        for b1, b2 in itertools.product(range(-3, 4), repeat=2):
            ci = CISpec.build(tw, [(2, b1), (2, b2)])
            expected = dp_fibration_verdict(DPFibrationData(4, euler_closed_form(sum(tw), b1 + b2), True))
            assert classify_ci_model(ci).status is expected.status
