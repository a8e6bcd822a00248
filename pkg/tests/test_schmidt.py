import numpy as np
import pytest

from pptent import construct, linalg, schmidt
from pptent.construct import StateParams
from pptent.errors import InvalidInputError


def test_zeta_closed_form(lam):
    sv = schmidt.schmidt_vectors(lam)
    assert sv.zeta == pytest.approx(np.sqrt(lam**2 / (2 + 2 * lam**6)), abs=1e-14)


def test_zeta_at_sqrt2_is_one_third():
    sv = schmidt.schmidt_vectors(np.sqrt(2))
    assert abs(sv.zeta - 1 / 3) <= 1e-12


def test_matrices_are_singular_rank_two(lam):
    for z in schmidt.schmidt_matrices(lam):
        assert abs(np.linalg.det(z)) <= 1e-9 * np.linalg.norm(z) ** 3
        assert linalg.numerical_rank(z) == 2


def test_decomposition_reconstructs_state(lam):
    st = construct.build_state(StateParams(lam))
    check = schmidt.verify_decomposition(st)
    assert check.residual <= 1e-8 * np.linalg.norm(st.matrix)
    assert check.schmidt_upper_bound_holds
    assert all(r == 2 for r in check.ranks)


def test_certificate_verdict(lam):
    cert = schmidt.schmidt_number_certificate(StateParams(lam))
    assert cert.lower_bound_entangled
    assert cert.upper_bound_schmidt2
    assert cert.verdict == "2"


def test_schmidt_vectors_rejects_bad_lambda():
    with pytest.raises(InvalidInputError):
        schmidt.schmidt_vectors(-1.0)
    with pytest.raises(InvalidInputError):
        schmidt.schmidt_vectors(1.0)
