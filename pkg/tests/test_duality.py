import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pptent import duality, linalg
from pptent.duality import CP, COCP, KrausSet
from pptent.errors import InvalidInputError

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False, width=64)


def cmat(m, n):
    re = arrays(np.float64, (m, n), elements=finite)
    im = arrays(np.float64, (m, n), elements=finite)
    return st.builds(lambda a, b: a + 1j * b, re, im)


def hermitian(n):
    return cmat(n, n).map(lambda z: z + z.conj().T)


def psd(n):
    return cmat(n, n).map(lambda z: z @ z.conj().T)


kraus_sets = st.builds(
    lambda kind, ops: KrausSet(kind=kind, ops=ops),
    st.sampled_from([CP, COCP]),
    st.lists(cmat(3, 3), min_size=1, max_size=3),
)


@given(kraus_sets, cmat(3, 3))
@settings(max_examples=100)
def test_choi_reproduces_kraus_action(k, x):
    rep = duality.choi_of_kraus(k)
    direct = duality.apply_kraus(k, x)
    assert np.allclose(rep.apply(x), direct, atol=1e-8)


@given(kraus_sets)
@settings(max_examples=100)
def test_choi_kraus_roundtrip(k):
    rep = duality.choi_of_kraus(k)
    k2 = duality.kraus_from_choi(rep.choi, k.kind, 3, 3)
    rep2 = duality.choi_of_kraus(k2, 3, 3)
    scale = max(1.0, np.linalg.norm(rep.choi))
    assert np.linalg.norm(rep.choi - rep2.choi) <= 1e-10 * scale


@given(hermitian(9), hermitian(9), kraus_sets, finite, finite)
@settings(max_examples=100)
def test_pairing_bilinearity(a, b, k, s, t):
    rep = duality.choi_of_kraus(k)
    lhs = duality.pairing(s * a + t * b, rep)
    rhs = s * duality.pairing(a, rep) + t * duality.pairing(b, rep)
    scale = max(1.0, abs(lhs), abs(rhs))
    assert abs(lhs - rhs) <= 1e-10 * scale


@given(psd(9), cmat(3, 3))
@settings(max_examples=100)
def test_pairing_with_cp_rank_one_map_is_squared_hs_inner(x, v):
    # <outer(z), phi_V> = |(z|V)|^2 in particular; in general, for PSD X
    # the pairing with phi_V equals vec(V)* X vec(V).
    rep = duality.choi_of_kraus(KrausSet(kind=CP, ops=[v]))
    val = duality.pairing(x, rep)
    expected = float(np.vdot(linalg.vec(v), x @ linalg.vec(v)).real)
    assert abs(val - expected) <= 1e-9 * max(1.0, abs(expected))


@given(cmat(3, 3), cmat(3, 3))
@settings(max_examples=100)
def test_pairing_rank_one_state_cp_map(z, v):
    rep = duality.choi_of_kraus(KrausSet(kind=CP, ops=[v]))
    val = duality.pairing(linalg.outer(z), rep)
    expected = abs(linalg.hs_inner(z, v)) ** 2
    assert abs(val - expected) <= 1e-9 * max(1.0, expected)


@given(psd(9), cmat(3, 3))
@settings(max_examples=100)
def test_pairing_cocp_map_is_partial_transpose_pairing(x, w):
    rep = duality.choi_of_kraus(KrausSet(kind=COCP, ops=[w]))
    xt = linalg.partial_transpose(x, 3, 3)
    expected = float(np.vdot(linalg.vec(w), xt @ linalg.vec(w)).real)
    assert abs(duality.pairing(x, rep) - expected) <= 1e-9 * max(1.0, abs(expected))


@given(psd(9))
@settings(max_examples=100)
def test_trace_map_pairing_is_trace(x):
    rep = duality.trace_map(3, 3)
    assert abs(duality.pairing(x, rep) - np.trace(x).real) <= 1e-9 * max(
        1.0, abs(np.trace(x).real)
    )


def test_cp_cocp_flags():
    v = np.array([[1.0, 2.0, 0.0], [0.0, 1.0, 1j], [0.0, 0.0, 1.0]])
    cp_rep = duality.choi_of_kraus(KrausSet(kind=CP, ops=[v]))
    ok, _ = duality.is_completely_positive(cp_rep)
    assert ok
    cocp_rep = duality.choi_of_kraus(KrausSet(kind=COCP, ops=[v]))
    ok, _ = duality.is_completely_copositive(cocp_rep)
    assert ok
    # transposition itself is coCP but not CP
    t_choi = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            t_choi[3 * i + j, 3 * j + i] = 1.0
    rep = duality.LinearMapRep(m=3, n=3, choi=t_choi)
    assert not duality.is_completely_positive(rep)[0]
    assert duality.is_completely_copositive(rep)[0]


def test_kraus_from_choi_rejects_non_psd():
    with pytest.raises(InvalidInputError):
        duality.kraus_from_choi(-np.eye(9, dtype=complex), CP, 3, 3)


def test_kraus_set_validates_kind_and_shapes():
    with pytest.raises(InvalidInputError):
        KrausSet(kind="weird", ops=[np.eye(3)])
    with pytest.raises(InvalidInputError):
        KrausSet(kind=CP, ops=[np.eye(3), np.eye(2)])


def test_positivity_probe_detects_non_positive_map():
    # phi(X) = X - diag-flip: choose the transpose-minus map known negative.
    choi = -np.eye(9, dtype=complex)
    rep = duality.LinearMapRep(m=3, n=3, choi=choi)
    val, u = duality.positivity_probe(rep, samples=50)
    assert val < 0
    assert abs(np.linalg.norm(u) - 1.0) <= 1e-8


def test_positivity_probe_on_positive_map():
    rep = duality.trace_map(3, 3)
    val, _ = duality.positivity_probe(rep, samples=50)
    assert val >= -1e-10
