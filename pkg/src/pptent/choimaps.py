"""The three-parameter family of diagonal-type maps on M_3.

Phi[a,b,c] sends x to

    diag(a x11 + b x22 + c x33,
         a x22 + b x33 + c x11,
         a x33 + b x11 + c x22) - x.

Closed-form criteria: the map is positive iff a >= 1, a+b+c >= 3 and
(1 <= a <= 2 implies bc >= (2-a)^2); it is decomposable iff a >= 1 and
(1 <= a <= 3 implies bc >= ((3-a)/2)^2).  On the surface 4bc = (3-a)^2
with 1 <= a <= 3 and b, c > 0 it splits exactly as

    Phi[a,b,c] = (a-1)/2 * Phi[3,0,0] + (3-a)/2 * Phi[1, sqrt(b/c), sqrt(c/b)]

with the first summand completely positive and the second completely
copositive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import duality, linalg
from .errors import (
    InvalidInputError,
    NumericInconsistencyError,
    UnsupportedParametersError,
)

BOUNDARY_RTOL = 1e-12
SURFACE_TOL = 1e-9
BISECTION_TOL = 1e-12


@dataclass(frozen=True)
class MapFamilyParams:
    """The (a, b, c) triple; all components nonnegative and finite."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c)
        if not all(np.isfinite(v) for v in vals):
            raise InvalidInputError("parameters must be finite")
        if min(vals) < 0:
            raise InvalidInputError("parameters must be nonnegative")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class ClassificationReport:
    positive: bool
    decomposable: bool
    completely_positive: bool
    completely_copositive: bool
    indecomposable_positive: bool
    on_decomposability_boundary: bool
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.completely_positive and not self.decomposable:
            raise NumericInconsistencyError("CP map classified as non-decomposable")
        if self.decomposable and not self.positive:
            raise NumericInconsistencyError("decomposable map classified as non-positive")
        if self.indecomposable_positive != (self.positive and not self.decomposable):
            raise NumericInconsistencyError("indecomposable_positive flag inconsistent")


def phi_abc_apply(p: MapFamilyParams, x: np.ndarray) -> np.ndarray:
    """Evaluate Phi[a,b,c] on a 3x3 matrix."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (3, 3):
        raise InvalidInputError(f"argument shape {x.shape} is not (3, 3)")
    a, b, c = p.as_tuple()
    d = np.diag(
        [
            a * x[0, 0] + b * x[1, 1] + c * x[2, 2],
            a * x[1, 1] + b * x[2, 2] + c * x[0, 0],
            a * x[2, 2] + b * x[0, 0] + c * x[1, 1],
        ]
    )
    return d - x


def phi_abc_choi(p: MapFamilyParams) -> duality.LinearMapRep:
    """Choi block matrix of Phi[a,b,c]."""
    choi = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            e = np.zeros((3, 3), dtype=complex)
            e[i, j] = 1.0
            choi[i * 3 : (i + 1) * 3, j * 3 : (j + 1) * 3] = phi_abc_apply(p, e)
    return duality.LinearMapRep(m=3, n=3, choi=choi)


def _positive_predicate(a: float, b: float, c: float) -> bool:
    if a < 1 or a + b + c < 3:
        return False
    if 1 <= a <= 2 and b * c < (2 - a) ** 2:
        return False
    return True


def _decomposable_predicate(a: float, b: float, c: float) -> bool:
    if a < 1:
        return False
    if 1 <= a <= 3 and 4 * b * c < (3 - a) ** 2:
        return False
    return True


def classify(p: MapFamilyParams) -> ClassificationReport:
    """Closed-form positivity/decomposability plus spectral CP/coCP flags."""
    a, b, c = p.as_tuple()
    positive = _positive_predicate(a, b, c)
    decomposable = _decomposable_predicate(a, b, c)
    rep = phi_abc_choi(p)
    cp, cp_min = duality.is_completely_positive(rep)
    cocp, cocp_min = duality.is_completely_copositive(rep)
    surface_residual = 4 * b * c - (3 - a) ** 2
    on_boundary = (
        positive
        and 1 <= a <= 3
        and abs(surface_residual) <= BOUNDARY_RTOL * max(1.0, (3 - a) ** 2)
    )
    return ClassificationReport(
        positive=positive,
        decomposable=decomposable,
        completely_positive=cp,
        completely_copositive=cocp,
        indecomposable_positive=positive and not decomposable,
        on_decomposability_boundary=on_boundary,
        evidence={
            "a_minus_1": a - 1,
            "trace_sum_minus_3": a + b + c - 3,
            "bc_minus_sq_2_minus_a": b * c - (2 - a) ** 2,
            "surface_residual_4bc_minus_sq_3_minus_a": surface_residual,
            "choi_min_eig": cp_min,
            "choi_pt_min_eig": cocp_min,
        },
    )


# Kraus generators of the split Phi[3,0,0] = phi_{V1} + phi_{V2} + phi_{V3}.
def cp_part_ops() -> list[np.ndarray]:
    v1 = np.diag([1.0, -1.0, 0.0]).astype(complex)
    v2 = np.diag([0.0, 1.0, -1.0]).astype(complex)
    v3 = np.diag([-1.0, 0.0, 1.0]).astype(complex)
    return [v1, v2, v3]


def cocp_part_ops(lam: float, mu: float) -> list[np.ndarray]:
    """W_i with mu above and -lam below the diagonal, cyclically placed."""
    w1 = np.zeros((3, 3), dtype=complex)
    w1[0, 1] = mu
    w1[1, 0] = -lam
    w2 = np.zeros((3, 3), dtype=complex)
    w2[1, 2] = mu
    w2[2, 1] = -lam
    w3 = np.zeros((3, 3), dtype=complex)
    w3[0, 2] = -lam
    w3[2, 0] = mu
    return [w1, w2, w3]


@dataclass(frozen=True)
class CanonicalDecomposition:
    cp_weight: float
    cp: duality.KrausSet
    cocp_weight: float
    cocp: duality.KrausSet


def canonical_decomposition(p: MapFamilyParams) -> CanonicalDecomposition:
    """Exact CP + coCP split, valid on the boundary surface 4bc = (3-a)^2.

    The CP part is (a-1)/2 * Phi[3,0,0]; the coCP part is
    (3-a)/2 * Phi[1, lam^2, mu^2] with lam = (b/c)^(1/4), mu = 1/lam.
    Weights are folded into the Kraus operators.
    """
    a, b, c = p.as_tuple()
    if b <= 0 or c <= 0:
        raise UnsupportedParametersError("decomposition requires b > 0 and c > 0")
    if not 1 <= a <= 3:
        raise InvalidInputError(f"a = {a} outside [1, 3]")
    residual = 4 * b * c - (3 - a) ** 2
    if abs(residual) > SURFACE_TOL:
        raise InvalidInputError(
            f"parameters off the boundary surface: 4bc - (3-a)^2 = {residual:.3e}"
        )
    cp_weight = (a - 1) / 2
    cocp_weight = (3 - a) / 2
    lam = (b / c) ** 0.25
    mu = (c / b) ** 0.25
    cp_ops = [np.sqrt(cp_weight) * v for v in cp_part_ops()] if cp_weight > 0 else []
    cocp_ops = (
        [np.sqrt(cocp_weight) * w for w in cocp_part_ops(lam, mu)]
        if cocp_weight > 0
        else []
    )
    cp_set = duality.KrausSet(kind=duality.CP, ops=cp_ops)
    cocp_set = duality.KrausSet(kind=duality.COCP, ops=cocp_ops)

    recon = duality.choi_of_kraus(cp_set, 3, 3).choi + duality.choi_of_kraus(cocp_set, 3, 3).choi
    err = float(np.linalg.norm(recon - phi_abc_choi(p).choi))
    if err > 1e-9:
        raise NumericInconsistencyError(f"decomposition reconstruction residual {err:.3e}")
    return CanonicalDecomposition(
        cp_weight=cp_weight, cp=cp_set, cocp_weight=cocp_weight, cocp=cocp_set
    )


def shift_by_trace(p: MapFamilyParams, eps: float) -> MapFamilyParams:
    """Phi[a,b,c] - eps*Tr = Phi[a-eps, b-eps, c-eps]; eps must keep the domain."""
    a, b, c = p.as_tuple()
    if eps > min(a, b, c):
        raise InvalidInputError(
            f"shift {eps} exceeds min(a, b, c) = {min(a, b, c)}"
        )
    return MapFamilyParams(a - eps, b - eps, c - eps)


def boundary_parameter(p: MapFamilyParams) -> float:
    """Largest t for which (1-t)Tr + t*Phi[a,b,c] stays decomposable.

    Uses (1/t)((1-t)Tr + t*Phi[a,b,c]) = Phi[a+s, b+s, c+s] with
    s = (1-t)/t >= 0 and bisects s on the closed-form decomposability
    predicate; returns alpha = 1/(1+s*).
    """
    report = classify(p)
    if not report.positive:
        raise InvalidInputError("map is not positive; no boundary parameter")
    if report.decomposable:
        raise InvalidInputError("map is already decomposable; alpha >= 1")
    a, b, c = p.as_tuple()

    def decomposable_at(s: float) -> bool:
        return _decomposable_predicate(a + s, b + s, c + s)

    lo, hi = 0.0, max(3.0 - a, 0.0) + 1.0
    if not decomposable_at(hi):
        raise NumericInconsistencyError("no decomposable shift found in bracket")
    while hi - lo > BISECTION_TOL:
        mid = (lo + hi) / 2
        if decomposable_at(mid):
            hi = mid
        else:
            lo = mid
    s_star = (lo + hi) / 2
    if not decomposable_at(s_star + 1e-10):
        raise NumericInconsistencyError("bracket guarantee failed above s*")
    if s_star > 1e-10 and decomposable_at(s_star - 1e-10):
        raise NumericInconsistencyError("bracket guarantee failed below s*")
    return 1.0 / (1.0 + s_star)
