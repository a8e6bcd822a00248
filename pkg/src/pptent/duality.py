"""Pairing between block matrices and linear maps; Choi/Kraus representations.

A linear map phi: M_m -> M_n is stored through its Choi block matrix
[phi(e_ij)], an mn x mn matrix whose (i, j) block of size n x n is
phi(e_ij).  Complete positivity is equivalent to that matrix being PSD;
complete copositivity to its partial transpose being PSD.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import InvalidInputError, NumericInconsistencyError

CP = "cp"
COCP = "cocp"

KRAUS_EIG_CUTOFF = 1e-10
PAIRING_IMAG_TOL = 1e-9
PAIRING_FORM_TOL = 1e-10


@dataclass(frozen=True)
class KrausSet:
    """A finite family of m x n matrices defining a CP or coCP map."""

    kind: str  # CP or COCP
    ops: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in (CP, COCP):
            raise InvalidInputError(f"unknown Kraus kind {self.kind!r}")
        shapes = {np.asarray(v).shape for v in self.ops}
        if len(shapes) > 1:
            raise InvalidInputError("Kraus operators do not share a common shape")


@dataclass(frozen=True)
class LinearMapRep:
    """A linear map M_m -> M_n stored as its Choi block matrix."""

    m: int
    n: int
    choi: np.ndarray  # mn x mn, block (i,j) = phi(e_ij)

    def __post_init__(self):
        if self.choi.shape != (self.m * self.n, self.m * self.n):
            raise InvalidInputError("Choi matrix shape does not match (m, n)")

    def block(self, i: int, j: int) -> np.ndarray:
        n = self.n
        return self.choi[i * n : (i + 1) * n, j * n : (j + 1) * n]

    def apply(self, x: np.ndarray) -> np.ndarray:
        """phi(X) = sum_ij X[i,j] * phi(e_ij)."""
        x = np.asarray(x, dtype=complex)
        if x.shape != (self.m, self.m):
            raise InvalidInputError(f"argument shape {x.shape} is not ({self.m}, {self.m})")
        blocks = self.choi.reshape(self.m, self.n, self.m, self.n)
        return np.einsum("ij,ikjl->kl", x, blocks)


def apply_kraus(k: KrausSet, x: np.ndarray) -> np.ndarray:
    """sum_i V_i* X V_i for CP; sum_i V_i* X^t V_i for coCP."""
    x = np.asarray(x, dtype=complex)
    if not k.ops:
        raise InvalidInputError("cannot infer dimensions from an empty Kraus set")
    m, n = np.asarray(k.ops[0]).shape
    if x.shape != (m, m):
        raise InvalidInputError(f"argument shape {x.shape} is not ({m}, {m})")
    arg = x.T if k.kind == COCP else x
    out = np.zeros((n, n), dtype=complex)
    for v in k.ops:
        v = np.asarray(v, dtype=complex)
        out += v.conj().T @ arg @ v
    return out


def choi_of_kraus(k: KrausSet, m: int | None = None, n: int | None = None) -> LinearMapRep:
    """Choi matrix [phi(e_ij)] of the map defined by a Kraus set.

    An empty set is the zero map; its dimensions must then be supplied.
    """
    if k.ops:
        m, n = np.asarray(k.ops[0]).shape
    elif m is None or n is None:
        raise InvalidInputError("dimensions required for an empty Kraus set")
    choi = np.zeros((m * n, m * n), dtype=complex)
    for i in range(m):
        for j in range(m):
            e = np.zeros((m, m), dtype=complex)
            e[i, j] = 1.0
            if k.ops:
                choi[i * n : (i + 1) * n, j * n : (j + 1) * n] = apply_kraus(k, e)
    return LinearMapRep(m=m, n=n, choi=choi)


def pairing(a: np.ndarray, phi: LinearMapRep) -> float:
    """Bilinear pairing <A, phi> = sum_ij Tr(a_ij phi(e_ij)^t).

    The double-sum form is authoritative; the one-line trace form
    Tr[Choi(phi) A^t] is computed as an internal cross-check.  Both the
    imaginary residual and the disagreement of the two forms must stay
    below tolerance, otherwise the inputs were not Hermitian /
    Hermitian-preserving as required.
    """
    a = np.asarray(a, dtype=complex)
    m, n = phi.m, phi.n
    if a.shape != (m * n, m * n):
        raise InvalidInputError(f"block matrix shape {a.shape} is not ({m*n}, {m*n})")
    total = 0.0 + 0.0j
    for i in range(m):
        for j in range(m):
            aij = a[i * n : (i + 1) * n, j * n : (j + 1) * n]
            total += np.trace(aij @ phi.block(i, j).T)
    one_line = np.trace(phi.choi @ a.T)
    scale = max(1.0, abs(total))
    if abs(total - one_line) > PAIRING_FORM_TOL * scale:
        raise NumericInconsistencyError(
            f"pairing forms disagree: {total} vs {one_line}"
        )
    if abs(total.imag) > PAIRING_IMAG_TOL * scale:
        raise NumericInconsistencyError(
            f"pairing has imaginary part {total.imag:.3e}; inputs not Hermitian?"
        )
    return float(total.real)


def kraus_from_choi(c: np.ndarray, kind: str, m: int, n: int) -> KrausSet:
    """Kraus operators from a Choi matrix via spectral decomposition.

    CP: C = sum_k lam_k u_k u_k* with lam_k > 0 gives V_k = conj(unvec(
    sqrt(lam_k) u_k)).  coCP: the same applied to the partial transpose.
    """
    c = np.asarray(c, dtype=complex)
    if kind == COCP:
        c = linalg.partial_transpose(c, m, n)
    elif kind != CP:
        raise InvalidInputError(f"unknown Kraus kind {kind!r}")
    flag, min_eig = linalg.is_psd(c)
    if not flag:
        raise InvalidInputError(f"Choi matrix is not PSD (min eigenvalue {min_eig:.3e})")
    spec = linalg.hermitian_eig(c)
    lam_max = max(float(spec.eigenvalues[0]), 0.0)
    ops = []
    for lam, u in zip(spec.eigenvalues, spec.eigenvectors.T):
        if lam > KRAUS_EIG_CUTOFF * max(lam_max, 1e-300):
            ops.append(linalg.unvec(np.sqrt(lam) * u, m, n).conj())
    return KrausSet(kind=kind, ops=ops)


def is_completely_positive(phi: LinearMapRep, tol: float = linalg.PSD_TOL) -> tuple[bool, float]:
    """PSD test on the Choi matrix."""
    return linalg.is_psd(phi.choi, tol)


def is_completely_copositive(phi: LinearMapRep, tol: float = linalg.PSD_TOL) -> tuple[bool, float]:
    """PSD test on the partially transposed Choi matrix."""
    return linalg.is_psd(linalg.partial_transpose(phi.choi, phi.m, phi.n), tol)


def trace_map(m: int, n: int) -> LinearMapRep:
    """X -> Tr(X) I_n; its Choi matrix is the mn x mn identity."""
    return LinearMapRep(m=m, n=n, choi=np.eye(m * n, dtype=complex))


def positivity_probe(
    phi: LinearMapRep, samples: int, refine_steps: int = 50, seed: int = 0
) -> tuple[float, np.ndarray]:
    """Heuristic falsifier for positivity of a map.

    Draws Haar-random unit vectors u, evaluates the smallest eigenvalue of
    phi(u u*), and locally refines the worst candidate by projected
    gradient descent on the unit sphere.  A negative return value
    certifies the map is not positive; a nonnegative value only means no
    violation was found.
    """
    if samples < 1:
        raise InvalidInputError("need at least one sample")
    rng = np.random.default_rng(seed)
    m = phi.m
    blocks = phi.choi.reshape(m, phi.n, m, phi.n)

    def min_eig_and_vec(u):
        out = np.einsum("i,j,ikjl->kl", u, u.conj(), blocks)
        w, vv = np.linalg.eigh((out + out.conj().T) / 2)
        return float(w[0]), vv[:, 0]

    best_val = np.inf
    best_u = None
    for _ in range(samples):
        u = rng.normal(size=m) + 1j * rng.normal(size=m)
        u /= np.linalg.norm(u)
        val, _ = min_eig_and_vec(u)
        if val < best_val:
            best_val, best_u = val, u

    u = best_u
    step = 0.5
    for _ in range(refine_steps):
        val, v = min_eig_and_vec(u)
        # gradient of u -> v* phi(u u*) v with v frozen
        cmat = np.einsum("k,l,ikjl->ij", v.conj(), v, blocks)
        grad = cmat.T @ u
        cand = u - step * grad
        nrm = np.linalg.norm(cand)
        if nrm < 1e-14:
            break
        cand /= nrm
        cand_val, _ = min_eig_and_vec(cand)
        if cand_val < val:
            u = cand
            best_val = min(best_val, cand_val)
        else:
            step /= 2
            if step < 1e-12:
                break
    return best_val, u
