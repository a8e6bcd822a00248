import numpy as np
import pytest

from pptent import construct, extremality, linalg
from pptent.construct import StateParams
from pptent.errors import InvalidInputError


def test_state_generates_extreme_ray(lam):
    st = construct.build_state(StateParams(lam))
    rep = extremality.extremality_check(st.matrix)
    assert rep.solution_dim == 1
    assert rep.extreme
    assert rep.status == "confident"
    assert rep.gap_ratio <= 1e-4


def test_identity_is_far_from_extreme():
    rep = extremality.extremality_check(np.eye(9, dtype=complex))
    assert rep.solution_dim == 81
    assert not rep.extreme
    assert rep.status == "confident"


def test_product_rank_one_state_is_extreme():
    rng = np.random.default_rng(17)
    for _ in range(5):
        u = rng.normal(size=3) + 1j * rng.normal(size=3)
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        rep = extremality.extremality_check(linalg.outer(np.outer(u, v)))
        assert rep.solution_dim == 1
        assert rep.extreme


def test_rank_two_mixture_is_not_extreme():
    rng = np.random.default_rng(23)
    u1, v1 = rng.normal(size=3), rng.normal(size=3)
    u2, v2 = rng.normal(size=3), rng.normal(size=3)
    a = linalg.outer(np.outer(u1, v1)) + linalg.outer(np.outer(u2, v2))
    rep = extremality.extremality_check(a.astype(complex))
    assert rep.solution_dim > 1
    assert not rep.extreme


def test_rejects_non_ppt_input():
    rng = np.random.default_rng(29)
    z = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    entangled_pure = linalg.outer(z)  # rank > 1 => not PPT
    with pytest.raises(InvalidInputError):
        extremality.extremality_check(entangled_pure)
    with pytest.raises(InvalidInputError):
        extremality.extremality_check(-np.eye(9, dtype=complex))
