"""JSON formats for matrices, block matrices, maps, Kraus sets and states.

A matrix is {"rows": R, "cols": C, "data": [[re, im], ...]} with data
row-major of length R*C.  Block matrices add {"m": M, "n": N}.  Floats
are emitted with Python's shortest round-trip representation, which
reproduces the IEEE double exactly on reload.
"""

from __future__ import annotations

import json

import numpy as np

from .construct import EntangledState
from .duality import KrausSet, LinearMapRep
from .errors import InvalidInputError


def matrix_to_json(mat: np.ndarray) -> dict:
    mat = np.asarray(mat, dtype=complex)
    rows, cols = mat.shape
    data = [[float(z.real), float(z.imag)] for z in mat.reshape(-1)]
    return {"rows": rows, "cols": cols, "data": data}


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise InvalidInputError(f"data length {len(data)} != rows*cols = {rows*cols}")
    flat = np.array([complex(re, im) for re, im in data])
    return flat.reshape(rows, cols)


def block_matrix_to_json(mat: np.ndarray, m: int, n: int) -> dict:
    if mat.shape != (m * n, m * n):
        raise InvalidInputError(f"matrix shape {mat.shape} is not ({m*n}, {m*n})")
    obj = matrix_to_json(mat)
    obj.update({"m": m, "n": n})
    return obj


def block_matrix_from_json(obj: dict) -> tuple[np.ndarray, int, int]:
    mat = matrix_from_json(obj)
    m, n = int(obj["m"]), int(obj["n"])
    if mat.shape != (m * n, m * n):
        raise InvalidInputError("block structure inconsistent with matrix shape")
    return mat, m, n


def map_to_json(rep: LinearMapRep) -> dict:
    return {"m": rep.m, "n": rep.n, "choi": block_matrix_to_json(rep.choi, rep.m, rep.n)}


def map_from_json(obj: dict) -> LinearMapRep:
    choi, m, n = block_matrix_from_json(obj["choi"])
    if m != int(obj["m"]) or n != int(obj["n"]):
        raise InvalidInputError("map dimensions inconsistent with Choi block structure")
    return LinearMapRep(m=m, n=n, choi=choi)


def kraus_to_json(k: KrausSet) -> dict:
    return {"kind": k.kind, "ops": [matrix_to_json(np.asarray(v)) for v in k.ops]}


def kraus_from_json(obj: dict) -> KrausSet:
    return KrausSet(kind=obj["kind"], ops=[matrix_from_json(o) for o in obj["ops"]])


def state_to_json(st: EntangledState) -> dict:
    return {"lambda": st.lam, "A": block_matrix_to_json(st.matrix, 3, 3)}


def state_from_json(obj: dict) -> EntangledState:
    mat, m, n = block_matrix_from_json(obj["A"])
    if (m, n) != (3, 3):
        raise InvalidInputError("state block structure must be 3x3 blocks of 3x3")
    return EntangledState(lam=float(obj["lambda"]), matrix=mat)


def dump(obj: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
