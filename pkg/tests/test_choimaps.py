import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pptent import choimaps, duality, linalg
from pptent.choimaps import MapFamilyParams
from pptent.errors import InvalidInputError, UnsupportedParametersError


def test_classification_table():
    rep = choimaps.classify(MapFamilyParams(2, 0, 1))
    assert rep.positive and not rep.decomposable
    assert rep.indecomposable_positive
    assert not rep.completely_positive and not rep.completely_copositive

    rep = choimaps.classify(MapFamilyParams(3, 0, 0))
    assert rep.completely_positive and rep.decomposable and rep.positive

    rep = choimaps.classify(MapFamilyParams(2, 1, 0.25))
    assert rep.positive and rep.decomposable
    assert rep.on_decomposability_boundary
    assert not rep.completely_positive and not rep.completely_copositive


def test_classify_spectral_flags_match_predicates_on_samples():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a, b, c = rng.uniform(0, 4, size=3)
        rep = choimaps.classify(MapFamilyParams(a, b, c))
        # CP/coCP each imply decomposability, decomposability implies positivity
        if rep.completely_positive or rep.completely_copositive:
            assert rep.decomposable
        if rep.decomposable:
            assert rep.positive


def test_phi_apply_matches_choi_blocks():
    p = MapFamilyParams(2.0, 0.5, 1.5)
    rep = choimaps.phi_abc_choi(p)
    rng = np.random.default_rng(0)
    x = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert np.allclose(rep.apply(x), choimaps.phi_abc_apply(p, x), atol=1e-10)


def test_phi_choi_of_identity_argument():
    p = MapFamilyParams(1.0, 2.0, 3.0)
    out = choimaps.phi_abc_apply(p, np.eye(3))
    assert np.allclose(out, (p.a + p.b + p.c - 1) * np.eye(3))


@given(st.floats(1.0001, 2.9999), st.floats(0.05, 4.0))
@settings(max_examples=60)
def test_decomposition_identity_on_surface(a, ratio):
    # surface point with 4bc = (3-a)^2 and b/c = ratio^2
    half = (3 - a) / 2
    b = half * ratio
    c = half / ratio
    p = MapFamilyParams(a, b, c)
    dec = choimaps.canonical_decomposition(p)
    recon = (
        duality.choi_of_kraus(dec.cp, 3, 3).choi
        + duality.choi_of_kraus(dec.cocp, 3, 3).choi
    )
    assert np.linalg.norm(recon - choimaps.phi_abc_choi(p).choi) <= 1e-9


def test_decomposition_parts_are_cp_and_cocp():
    p = MapFamilyParams(2.0, 1.0, 0.25)
    dec = choimaps.canonical_decomposition(p)
    cp_rep = duality.choi_of_kraus(dec.cp, 3, 3)
    cocp_rep = duality.choi_of_kraus(dec.cocp, 3, 3)
    assert duality.is_completely_positive(cp_rep)[0]
    assert duality.is_completely_copositive(cocp_rep)[0]


def test_decomposition_rejects_off_surface_and_bad_domain():
    with pytest.raises(InvalidInputError):
        choimaps.canonical_decomposition(MapFamilyParams(2.0, 1.0, 1.0))
    with pytest.raises(UnsupportedParametersError):
        choimaps.canonical_decomposition(MapFamilyParams(2.0, 0.0, 1.0))
    with pytest.raises(InvalidInputError):
        choimaps.canonical_decomposition(MapFamilyParams(0.5, 1.0, 1.5625))


def test_shift_by_trace_identity():
    p = MapFamilyParams(2.0, 1.0, 0.5)
    eps = 0.25
    shifted = choimaps.shift_by_trace(p, eps)
    rng = np.random.default_rng(2)
    x = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    lhs = choimaps.phi_abc_apply(shifted, x)
    rhs = choimaps.phi_abc_apply(p, x) - eps * np.trace(x) * np.eye(3)
    assert np.allclose(lhs, rhs, atol=1e-10)


def test_shift_by_trace_rejects_large_eps():
    with pytest.raises(InvalidInputError):
        choimaps.shift_by_trace(MapFamilyParams(2.0, 0.1, 1.0), 0.2)


def test_boundary_parameter_oracle():
    # For (2, 0, 1) the decomposability boundary solves 3s^2 + 6s - 1 = 0,
    # giving s* = (-6 + sqrt(48)) / 6 and alpha = 1/(1+s*) = sqrt(3)/2.
    alpha = choimaps.boundary_parameter(MapFamilyParams(2, 0, 1))
    s_star = (-6 + np.sqrt(48)) / 6
    assert abs(alpha - 1 / (1 + s_star)) <= 1e-10
    assert abs(alpha - np.sqrt(3) / 2) <= 1e-10


def test_boundary_parameter_requires_indecomposable_positive():
    with pytest.raises(InvalidInputError):
        choimaps.boundary_parameter(MapFamilyParams(3, 0, 0))
    with pytest.raises(InvalidInputError):
        choimaps.boundary_parameter(MapFamilyParams(0.5, 0, 0))


def test_params_validation():
    with pytest.raises(InvalidInputError):
        MapFamilyParams(-1.0, 0.0, 0.0)
    with pytest.raises(InvalidInputError):
        MapFamilyParams(np.inf, 0.0, 0.0)


def test_cp_part_ops_sum_to_phi_300():
    reps = [
        duality.choi_of_kraus(duality.KrausSet(kind=duality.CP, ops=[v]))
        for v in choimaps.cp_part_ops()
    ]
    total = sum(r.choi for r in reps)
    assert np.allclose(total, choimaps.phi_abc_choi(MapFamilyParams(3, 0, 0)).choi)


def test_cocp_part_ops_sum_to_phi_1_b_c():
    lam = 1.3
    mu = 1 / lam
    reps = [
        duality.choi_of_kraus(duality.KrausSet(kind=duality.COCP, ops=[w]))
        for w in choimaps.cocp_part_ops(lam, mu)
    ]
    total = sum(r.choi for r in reps)
    target = choimaps.phi_abc_choi(MapFamilyParams(1, lam**2, mu**2)).choi
    assert np.allclose(total, target, atol=1e-10)
