"""Numerical extreme-ray verification inside the PPT cone.

The face of the PPT cone generated by a PPT matrix A consists of the PPT
matrices X with range X inside range A and range X^tau inside range
A^tau.  A generates an extreme ray exactly when the Hermitian solutions
of the corresponding kernel-inclusion linear system

    X k = 0  for k in ker A,      X^tau k' = 0  for k' in ker A^tau

form a one-dimensional real space.  The decision is a numerical rank
call, so the report exposes the singular-value gap that justifies it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvalidInputError, NumericInconsistencyError

KERNEL_RTOL = 1e-8
GAP_CONFIDENCE = 1e-4


@dataclass(frozen=True)
class ExtremalityReport:
    solution_dim: int
    extreme: bool
    smallest_retained_singular_value: float
    largest_discarded: float
    status: str  # "confident" or "inconclusive"

    @property
    def gap_ratio(self) -> float:
        if self.smallest_retained_singular_value == np.inf:
            return 0.0
        return self.largest_discarded / self.smallest_retained_singular_value


def _kernel_vectors(a: np.ndarray, rel_tol: float) -> list[np.ndarray]:
    spec = linalg.hermitian_eig(a)
    top = max(float(spec.eigenvalues[0]), 0.0)
    return [
        spec.eigenvectors[:, i]
        for i in range(len(spec.eigenvalues))
        if spec.eigenvalues[i] <= rel_tol * max(top, 1.0)
    ]


def extremality_check(
    a: np.ndarray, m: int = 3, n: int = 3, tol: float = KERNEL_RTOL
) -> ExtremalityReport:
    """Decide whether a PPT matrix generates an extreme ray of the PPT cone."""
    a = np.asarray(a, dtype=complex)
    psd, min_eig = linalg.is_psd(a)
    if not psd:
        raise InvalidInputError(f"matrix is not PSD (min eigenvalue {min_eig:.3e})")
    at = linalg.partial_transpose(a, m, n)
    ppt, pt_min = linalg.is_psd(at)
    if not ppt:
        raise InvalidInputError(
            f"partial transpose is not PSD (min eigenvalue {pt_min:.3e})"
        )
    kern = _kernel_vectors(a, tol)
    kern_pt = _kernel_vectors(at, tol)
    side = m * n
    basis = linalg.hermitian_basis(side)

    if not kern and not kern_pt:
        return ExtremalityReport(
            solution_dim=len(basis),
            extreme=False,
            smallest_retained_singular_value=np.inf,
            largest_discarded=0.0,
            status="confident",
        )

    cols = []
    for h in basis:
        ht = linalg.partial_transpose(h, m, n)
        pieces = [h @ k for k in kern] + [ht @ k for k in kern_pt]
        flat = np.concatenate(pieces)
        cols.append(np.concatenate([flat.real, flat.imag]))
    mat = np.array(cols).T

    # A itself must solve the system.
    coeffs_a = np.array([np.vdot(h, a).real for h in basis])
    resid = float(np.linalg.norm(mat @ coeffs_a))
    if resid > 1e-10 * max(1.0, float(np.linalg.norm(a))):
        raise NumericInconsistencyError(
            f"input does not satisfy its own kernel constraints (residual {resid:.3e})"
        )

    sv = np.linalg.svd(mat, compute_uv=False)
    if sv[0] == 0:
        solution_dim = len(basis)
        retained, discarded = np.inf, 0.0
    else:
        mask = sv < tol * sv[0]
        solution_dim = int(np.sum(mask)) + max(len(basis) - len(sv), 0)
        retained = float(sv[~mask][-1]) if np.any(~mask) else np.inf
        discarded = float(sv[mask][0]) if np.any(mask) else 0.0
    ratio = 0.0 if retained == np.inf else discarded / retained
    status = "confident" if ratio <= GAP_CONFIDENCE else "inconclusive"
    return ExtremalityReport(
        solution_dim=solution_dim,
        extreme=solution_dim == 1,
        smallest_retained_singular_value=retained,
        largest_discarded=discarded,
        status=status,
    )
