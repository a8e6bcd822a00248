import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pptent import construct, serialize
from pptent.construct import StateParams
from pptent.duality import CP, KrausSet, LinearMapRep
from pptent.errors import InvalidInputError

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False, width=64)


def cmat(m, n):
    re = arrays(np.float64, (m, n), elements=finite)
    im = arrays(np.float64, (m, n), elements=finite)
    return st.builds(lambda a, b: a + 1j * b, re, im)


@given(cmat(3, 4))
@settings(max_examples=100)
def test_matrix_roundtrip_is_exact(z):
    obj = serialize.matrix_to_json(z)
    # must survive an actual JSON text round trip bit-for-bit
    back = serialize.matrix_from_json(json.loads(json.dumps(obj)))
    assert np.array_equal(back, z)


def test_matrix_from_json_validates_length():
    with pytest.raises(InvalidInputError):
        serialize.matrix_from_json({"rows": 2, "cols": 2, "data": [[0.0, 0.0]]})


def test_block_matrix_roundtrip():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    obj = serialize.block_matrix_to_json(a, 3, 3)
    assert obj["m"] == 3 and obj["n"] == 3
    back, m, n = serialize.block_matrix_from_json(obj)
    assert (m, n) == (3, 3)
    assert np.array_equal(back, a)
    with pytest.raises(InvalidInputError):
        serialize.block_matrix_to_json(a[:6, :6], 3, 3)


def test_map_roundtrip():
    rng = np.random.default_rng(2)
    z = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    rep = LinearMapRep(m=3, n=3, choi=z + z.conj().T)
    back = serialize.map_from_json(json.loads(json.dumps(serialize.map_to_json(rep))))
    assert np.array_equal(back.choi, rep.choi)
    assert (back.m, back.n) == (3, 3)


def test_kraus_roundtrip():
    rng = np.random.default_rng(3)
    ops = [rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) for _ in range(2)]
    k = KrausSet(kind=CP, ops=ops)
    back = serialize.kraus_from_json(json.loads(json.dumps(serialize.kraus_to_json(k))))
    assert back.kind == CP
    assert all(np.array_equal(a, b) for a, b in zip(back.ops, ops))


def test_state_roundtrip_and_file_io(tmp_path):
    st = construct.build_state(StateParams(np.sqrt(2)))
    path = tmp_path / "state.json"
    serialize.dump(serialize.state_to_json(st), str(path))
    back = serialize.state_from_json(serialize.load(str(path)))
    assert back.lam == st.lam
    assert np.array_equal(back.matrix, st.matrix)
