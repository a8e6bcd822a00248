"""Dense complex linear algebra on small matrices.

Conventions used throughout the package:

* An m x n matrix z is flattened row-major, so coordinate (i-1)*n + k of
  vec(z) is z[i, k] (0-based: index i*n + k).  Under this identification
  the block (i, j) of vec(z) vec(z)* equals (row i of z)(row j of z)*,
  i.e. the mn x mn matrix is an m x m array of n x n blocks.
* The Hilbert-Schmidt inner product (x|y) = sum_{ik} x_{ik} conj(y_{ik})
  makes vec an inner-product isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import InvalidInputError

HERMITICITY_RTOL = 1e-9
PSD_TOL = 1e-9
RANK_RTOL = 1e-8
GENERATOR_NORM_FLOOR = 1e-12


@dataclass(frozen=True)
class HermitianSpectrum:
    """Eigenvalues (real, descending) and matching unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal (Hilbert-Schmidt) basis of a subspace of M_{rows x cols}."""

    ambient_rows: int
    ambient_cols: int
    basis: list  # list of np.ndarray, each ambient_rows x ambient_cols

    @property
    def dim(self) -> int:
        return len(self.basis)


def vec(z: np.ndarray) -> np.ndarray:
    """Row-major flattening of a matrix into a vector."""
    return np.asarray(z, dtype=complex).reshape(-1)


def unvec(v: np.ndarray, m: int, n: int) -> np.ndarray:
    """Inverse of vec; requires len(v) == m*n."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.size != m * n:
        raise InvalidInputError(f"vector of length {v.size} is not {m}x{n}")
    return v.reshape(m, n)


def outer(z: np.ndarray) -> np.ndarray:
    """vec(z) vec(z)*: Hermitian PSD of rank <= 1 with block (i,j) = z_i z_j*."""
    v = vec(z)
    return np.outer(v, v.conj())


def partial_transpose(a: np.ndarray, m: int, n: int) -> np.ndarray:
    """Block transpose: block (i,j) of the result is block (j,i) of the input.

    Blocks are swapped whole, not transposed internally.
    """
    a = np.asarray(a, dtype=complex)
    if a.shape != (m * n, m * n):
        raise InvalidInputError(f"matrix shape {a.shape} is not ({m*n}, {m*n})")
    return a.reshape(m, n, m, n).transpose(2, 1, 0, 3).reshape(m * n, m * n)


def hadamard(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise (Schur) product; shapes must agree."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise InvalidInputError(f"shape mismatch {a.shape} vs {b.shape}")
    return a * b


def hs_inner(x: np.ndarray, y: np.ndarray) -> complex:
    """(x|y) = sum_{ik} x_{ik} conj(y_{ik})."""
    return complex(np.vdot(np.asarray(y, dtype=complex), np.asarray(x, dtype=complex)))


def asymmetry_norm(a: np.ndarray) -> float:
    """Frobenius norm of A - A*."""
    a = np.asarray(a, dtype=complex)
    return float(np.linalg.norm(a - a.conj().T))


def hermitian_eig(a: np.ndarray) -> HermitianSpectrum:
    """Spectral decomposition of a Hermitian matrix, eigenvalues descending."""
    a = np.asarray(a, dtype=complex)
    nrm = float(np.linalg.norm(a))
    asym = asymmetry_norm(a)
    if asym > HERMITICITY_RTOL * max(1.0, nrm):
        raise InvalidInputError(f"matrix is not Hermitian: ||A - A*||_F = {asym:.3e}")
    w, u = np.linalg.eigh((a + a.conj().T) / 2)
    order = np.argsort(w)[::-1]
    return HermitianSpectrum(eigenvalues=w[order], eigenvectors=u[:, order])


def is_psd(a: np.ndarray, tol: float = PSD_TOL) -> tuple[bool, float]:
    """PSD test for a Hermitian matrix; returns (flag, min eigenvalue)."""
    spec = hermitian_eig(a)
    w = spec.eigenvalues
    min_eig = float(w[-1])
    max_eig = float(w[0])
    return min_eig >= -tol * max(1.0, max_eig), min_eig


def numerical_rank(a: np.ndarray, rel_tol: float = RANK_RTOL) -> int:
    """Number of singular values above rel_tol * sigma_max; 0 for the zero matrix."""
    s = np.linalg.svd(np.asarray(a, dtype=complex), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def _stack_vecs(gens: list[np.ndarray]) -> np.ndarray:
    return np.array([vec(g) for g in gens])


def matrix_span_basis(gens: list[np.ndarray]) -> SubspaceBasis:
    """Orthonormal basis (Hilbert-Schmidt) of span(gens)."""
    if not gens:
        raise InvalidInputError("need at least one generator to infer the span")
    rows, cols = np.asarray(gens[0]).shape
    kept = [g for g in gens if np.linalg.norm(g) >= GENERATOR_NORM_FLOOR]
    for g in kept:
        if np.asarray(g).shape != (rows, cols):
            raise InvalidInputError("generators do not share a common shape")
    if not kept:
        return SubspaceBasis(rows, cols, [])
    stack = _stack_vecs(kept)
    u_, s, vt = np.linalg.svd(stack)
    rank = int(np.sum(s > RANK_RTOL * s[0])) if s[0] > 0 else 0
    basis = [unvec(vt[i].conj(), rows, cols) for i in range(rank)]
    return SubspaceBasis(rows, cols, basis)


def orthogonal_complement(
    gens: list[np.ndarray], rows: int | None = None, cols: int | None = None
) -> SubspaceBasis:
    """Orthonormal basis of span(gens)^perp inside M_{rows x cols}.

    For an empty generator list the ambient shape must be given; the result
    is then the full standard basis.  Generators with norm below 1e-12 are
    dropped before orthonormalization.
    """
    if gens:
        shape = np.asarray(gens[0]).shape
        if rows is None:
            rows, cols = shape
        elif shape != (rows, cols):
            raise InvalidInputError("generators do not match the ambient shape")
        for g in gens:
            if np.asarray(g).shape != (rows, cols):
                raise InvalidInputError("generators do not share a common shape")
    elif rows is None or cols is None:
        raise InvalidInputError("ambient shape required when no generators are given")

    kept = [g for g in gens if np.linalg.norm(g) >= GENERATOR_NORM_FLOOR]
    if not kept:
        basis = []
        for i in range(rows):
            for k in range(cols):
                e = np.zeros((rows, cols), dtype=complex)
                e[i, k] = 1.0
                basis.append(e)
        return SubspaceBasis(rows, cols, basis)

    # g is orthogonal to all generators iff conj(stack) @ vec(g) = 0.
    null = scipy.linalg.null_space(_stack_vecs(kept).conj())
    basis = [unvec(null[:, i], rows, cols) for i in range(null.shape[1])]
    return SubspaceBasis(rows, cols, basis)


def hermitian_basis(n: int) -> list[np.ndarray]:
    """Orthonormal real basis of the n x n Hermitian matrices (n^2 elements)."""
    out = []
    for i in range(n):
        e = np.zeros((n, n), dtype=complex)
        e[i, i] = 1.0
        out.append(e)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = inv_sqrt2
            e[j, i] = inv_sqrt2
            out.append(e)
            f = np.zeros((n, n), dtype=complex)
            f[i, j] = 1j * inv_sqrt2
            f[j, i] = -1j * inv_sqrt2
            out.append(f)
    return out
