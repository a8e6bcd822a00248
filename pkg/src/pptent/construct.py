"""Construction and certification of the canonical 3x3 PPT entangled state.

For lam > 0, lam != 1 and mu = 1/lam the four generators

    x = I_3,  y1 = lam e12 + mu e21,  y2 = lam e23 + mu e32,
    y3 = mu e13 + lam e31

span the orthogonal complement of span{V1, V2, V3, W1, W2, W3}, and

    A(lam) = vec(x)vec(x)* + sum_i vec(y_i)vec(y_i)*

is a rank-four PSD matrix with PSD partial transpose that pairs to zero
with the boundary map Phi[2, lam^2/2, mu^2/2].  Shifting that map by a
small multiple of the trace map produces a positive map pairing strictly
negatively with A(lam): an entanglement witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import choimaps, duality, linalg
from .choimaps import MapFamilyParams
from .duality import CP, COCP, KrausSet
from .errors import (
    DegenerateParameterError,
    InvalidInputError,
    NoCandidateError,
    NumericInconsistencyError,
)

PAIRING_TOL = 1e-9
LAMBDA_DEGENERACY_GAP = 1e-6


@dataclass(frozen=True)
class StateParams:
    """The state parameter lam > 0, lam != 1, with derived map parameters."""

    lam: float

    def __post_init__(self):
        if not np.isfinite(self.lam) or self.lam <= 0:
            raise InvalidInputError(f"lambda must be positive, got {self.lam}")
        if abs(self.lam - 1.0) <= LAMBDA_DEGENERACY_GAP:
            raise DegenerateParameterError(
                "construction degenerates at lambda = 1 (requires lam*mu = 1, lam != 1)"
            )

    @property
    def mu(self) -> float:
        return 1.0 / self.lam

    @property
    def b(self) -> float:
        return self.lam**2 / 2

    @property
    def c(self) -> float:
        return self.mu**2 / 2

    def map_params(self) -> MapFamilyParams:
        """The boundary map Phi[2, b, c] with 4bc = 1."""
        return MapFamilyParams(2.0, self.b, self.c)


@dataclass(frozen=True)
class EntangledState:
    lam: float
    matrix: np.ndarray  # 9x9 Hermitian, viewed as 3x3 blocks of 3x3

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


@dataclass(frozen=True)
class Generators:
    x: np.ndarray
    y1: np.ndarray
    y2: np.ndarray
    y3: np.ndarray

    def as_list(self) -> list[np.ndarray]:
        return [self.x, self.y1, self.y2, self.y3]


@dataclass(frozen=True)
class KrausGenerators:
    v1: np.ndarray
    v2: np.ndarray
    v3: np.ndarray
    w1: np.ndarray
    w2: np.ndarray
    w3: np.ndarray

    def cp_set(self) -> KrausSet:
        return KrausSet(kind=CP, ops=[self.v1, self.v2, self.v3])

    def cocp_set(self) -> KrausSet:
        return KrausSet(kind=COCP, ops=[self.w1, self.w2, self.w3])

    def as_list(self) -> list[np.ndarray]:
        return [self.v1, self.v2, self.v3, self.w1, self.w2, self.w3]


@dataclass(frozen=True)
class FacePair:
    d: linalg.SubspaceBasis  # CP side
    e: linalg.SubspaceBasis  # coCP side


@dataclass(frozen=True)
class WitnessCertificate:
    eps: float
    witness_params: MapFamilyParams
    witness_positive: bool
    pairing_value: float
    entangled_verdict: bool


@dataclass(frozen=True)
class VerificationReport:
    psd: bool
    psd_min_eig: float
    ppt: bool
    ppt_min_eig: float
    rank: int
    rank_partial_transpose: int
    face_pairings: list = field(default_factory=list)  # (label, value)
    all_pass: bool = False


def canonical_generators(s: StateParams) -> Generators:
    lam, mu = s.lam, s.mu
    y1 = np.zeros((3, 3), dtype=complex)
    y1[0, 1] = lam
    y1[1, 0] = mu
    y2 = np.zeros((3, 3), dtype=complex)
    y2[1, 2] = lam
    y2[2, 1] = mu
    y3 = np.zeros((3, 3), dtype=complex)
    y3[0, 2] = mu
    y3[2, 0] = lam
    return Generators(x=np.eye(3, dtype=complex), y1=y1, y2=y2, y3=y3)


def kraus_generators(s: StateParams) -> KrausGenerators:
    v1, v2, v3 = choimaps.cp_part_ops()
    w1, w2, w3 = choimaps.cocp_part_ops(s.lam, s.mu)
    return KrausGenerators(v1=v1, v2=v2, v3=v3, w1=w1, w2=w2, w3=w3)


def build_state(s: StateParams) -> EntangledState:
    """A(lam) as the sum of vectorized outer products of the generators."""
    gens = canonical_generators(s)
    a = sum(linalg.outer(g) for g in gens.as_list())
    return EntangledState(lam=s.lam, matrix=a)


def _single_op_rep(op: np.ndarray, kind: str) -> duality.LinearMapRep:
    return duality.choi_of_kraus(KrausSet(kind=kind, ops=[op]))


def verify_state(st: EntangledState) -> VerificationReport:
    """PSD/PPT/rank checks plus the face pairings that must vanish."""
    a = st.matrix
    s = StateParams(st.lam)
    psd, psd_min = linalg.is_psd(a)
    at = linalg.partial_transpose(a, 3, 3)
    ppt, ppt_min = linalg.is_psd(at)
    kg = kraus_generators(s)
    pairings = []
    for i, v in enumerate([kg.v1, kg.v2, kg.v3], start=1):
        pairings.append((f"phi_V{i}", duality.pairing(a, _single_op_rep(v, CP))))
    for i, w in enumerate([kg.w1, kg.w2, kg.w3], start=1):
        pairings.append((f"phi^W{i}", duality.pairing(a, _single_op_rep(w, COCP))))
    pairings.append(
        ("Phi[2,b,c]", duality.pairing(a, choimaps.phi_abc_choi(s.map_params())))
    )
    all_pass = psd and ppt and all(abs(val) <= PAIRING_TOL for _, val in pairings)
    return VerificationReport(
        psd=psd,
        psd_min_eig=psd_min,
        ppt=ppt,
        ppt_min_eig=ppt_min,
        rank=linalg.numerical_rank(a),
        rank_partial_transpose=linalg.numerical_rank(at),
        face_pairings=pairings,
        all_pass=all_pass,
    )


def witness_epsilon_bound(s: StateParams) -> float:
    """Largest shift keeping Phi[2-eps, b-eps, c-eps] positive."""
    b, c = s.b, s.c
    return min((b + c - 1) / 3, b * c / (b + c))


def entanglement_witness(s: StateParams, eps: float | None = None) -> WitnessCertificate:
    """Certify entanglement of A(lam) with the shifted boundary map.

    The default shift is half the closed-form validity bound.  The pairing
    must equal -eps * Tr A exactly (the unshifted map pairs to zero and
    the trace map contributes Tr A); this identity is cross-checked.
    """
    bound = witness_epsilon_bound(s)
    if eps is None:
        eps = bound / 2
    elif not 0 < eps <= bound:
        raise InvalidInputError(
            f"epsilon {eps} outside the validity bound (0, {bound}]"
        )
    params = choimaps.shift_by_trace(s.map_params(), eps)
    positive = choimaps.classify(params).positive
    st = build_state(s)
    value = duality.pairing(st.matrix, choimaps.phi_abc_choi(params))
    expected = -eps * st.trace
    if abs(value - expected) > PAIRING_TOL:
        raise NumericInconsistencyError(
            f"witness pairing {value} != -eps*Tr A = {expected}"
        )
    return WitnessCertificate(
        eps=eps,
        witness_params=params,
        witness_positive=positive,
        pairing_value=value,
        entangled_verdict=positive and value < -PAIRING_TOL,
    )


def _face_ray(
    span_vecs: list[np.ndarray], cocp_ops: list[np.ndarray], side: int
) -> tuple[int, np.ndarray | None]:
    """Solve the Hermitian linear system cutting out the face candidate.

    Constraints: X k = 0 for every k in the vectorized operator span
    (support inside the orthogonal complement) and X^tau vec(W) = 0 for
    the coCP operators (zero pairing against each phi^W).  Returns the
    real solution dimension and, when it is one, the unit-trace generator.
    """
    basis = linalg.hermitian_basis(side * side)
    cocp_vecs = [linalg.vec(w) for w in cocp_ops]
    cols = []
    for h in basis:
        ht = linalg.partial_transpose(h, side, side)
        pieces = [h @ k for k in span_vecs] + [ht @ w for w in cocp_vecs]
        flat = np.concatenate(pieces)
        cols.append(np.concatenate([flat.real, flat.imag]))
    mat = np.array(cols).T
    u_, sv, vt = np.linalg.svd(mat)
    if sv[0] == 0:
        return len(basis), None
    null_dim = int(np.sum(sv < linalg.RANK_RTOL * sv[0]))
    if null_dim != 1:
        return null_dim, None
    coeffs = vt[-1]
    x = sum(c * h for c, h in zip(coeffs, basis))
    tr = float(np.trace(x).real)
    if abs(tr) < 1e-12:
        return null_dim, None
    return null_dim, x / tr


@dataclass(frozen=True)
class PipelineResult:
    face: FacePair
    candidate: np.ndarray
    face_dim: int
    refined: bool
    report: VerificationReport


def construct_from_boundary_map(cp: KrausSet, cocp: KrausSet) -> PipelineResult:
    """Candidate PPT entangled state from the Kraus sets of a boundary map.

    The candidate is supported on the orthogonal complement of
    span(cp.ops + cocp.ops).  The plain sum of outer products over an
    orthonormal complement basis already pairs to zero with every phi_V,
    but the coCP-side pairings are not guaranteed; when they fail, the
    candidate is refined to the (unique, if one-dimensional) ray of
    Hermitian matrices satisfying both sides, returned with unit trace.
    Reported pairings and PSD/PPT flags are verified numerically either
    way.
    """
    ops = list(cp.ops) + list(cocp.ops)
    if not ops:
        raise InvalidInputError("need at least one Kraus operator")
    shape = np.asarray(ops[0]).shape
    if any(np.asarray(o).shape != shape for o in ops):
        raise InvalidInputError("Kraus sets do not share a common shape")
    m, n = shape
    if m != n:
        raise InvalidInputError("pipeline supports square Kraus operators only")

    span = linalg.matrix_span_basis(ops)
    complement = linalg.orthogonal_complement(ops, m, n)
    if complement.dim == 0:
        raise NoCandidateError("operator span covers the whole matrix space")
    face = FacePair(d=span, e=span)

    candidate = sum(linalg.outer(g) for g in complement.basis)
    face_dim = 0
    refined = False
    if cocp.ops:
        cand_pt = linalg.partial_transpose(candidate, m, n)
        cocp_ok = all(
            abs(duality.pairing(candidate, _single_op_rep(w, COCP))) <= PAIRING_TOL
            for w in cocp.ops
        ) and linalg.is_psd(cand_pt)[0]
        if not cocp_ok:
            span_vecs = [linalg.vec(b) for b in span.basis]
            face_dim, ray = _face_ray(span_vecs, list(cocp.ops), m)
            if ray is not None:
                candidate = ray
                refined = True

    report = _pipeline_report(candidate, cp, cocp, m, n)
    return PipelineResult(
        face=face,
        candidate=candidate,
        face_dim=face_dim,
        refined=refined,
        report=report,
    )


def _pipeline_report(candidate, cp, cocp, m, n) -> VerificationReport:
    psd, psd_min = linalg.is_psd(candidate)
    cand_pt = linalg.partial_transpose(candidate, m, n)
    ppt, ppt_min = linalg.is_psd(cand_pt)
    pairings = []
    for i, v in enumerate(cp.ops, start=1):
        pairings.append((f"phi_V{i}", duality.pairing(candidate, _single_op_rep(v, CP))))
    for i, w in enumerate(cocp.ops, start=1):
        pairings.append((f"phi^W{i}", duality.pairing(candidate, _single_op_rep(w, COCP))))
    all_pass = psd and ppt and all(abs(val) <= PAIRING_TOL for _, val in pairings)
    return VerificationReport(
        psd=psd,
        psd_min_eig=psd_min,
        ppt=ppt,
        ppt_min_eig=ppt_min,
        rank=linalg.numerical_rank(candidate),
        rank_partial_transpose=linalg.numerical_rank(cand_pt),
        face_pairings=pairings,
        all_pass=all_pass,
    )


@dataclass(frozen=True)
class RankOneCensus:
    matrices: list
    all_rank_one: bool
    all_in_operator_span: bool
    span_dim: int
    max_orthogonal_subset: int
    gram: np.ndarray

    @property
    def upb_excluded(self) -> bool:
        """No five of the six are mutually orthogonal."""
        return self.max_orthogonal_subset <= 4


def rank_one_matrices(s: StateParams) -> list[np.ndarray]:
    """The six rank-one matrices inside the operator span, up to scale."""
    lam, mu = s.lam, s.mu
    # The (0, 2)/(2, 0) pair follows the W3 direction (-lam, mu); the
    # other corners follow W1 and W2 with (mu, -lam).
    mats = [
        np.array([[1, mu, 0], [-lam, -1, 0], [0, 0, 0]], dtype=complex),
        np.array([[1, 0, -lam], [0, 0, 0], [mu, 0, -1]], dtype=complex),
        np.array([[0, 0, 0], [0, 1, mu], [0, -lam, -1]], dtype=complex),
        np.array([[-1, mu, 0], [-lam, 1, 0], [0, 0, 0]], dtype=complex),
        np.array([[-1, 0, -lam], [0, 0, 0], [mu, 0, 1]], dtype=complex),
        np.array([[0, 0, 0], [0, -1, mu], [0, -lam, 1]], dtype=complex),
    ]
    return mats


def rank_one_census(s: StateParams) -> RankOneCensus:
    """Verify the six rank-one matrices and the non-UPB observation.

    Each must be rank one, orthogonal to all four state generators (so it
    lies in the operator span), and together they must span that
    five-dimensional space.  Brute force over all subsets shows at most
    four of them are mutually orthogonal.
    """
    mats = rank_one_matrices(s)
    gens = canonical_generators(s).as_list()
    all_rank_one = all(linalg.numerical_rank(r) == 1 for r in mats)
    all_in_span = all(
        abs(linalg.hs_inner(r, g)) <= PAIRING_TOL for r in mats for g in gens
    )
    span_dim = linalg.matrix_span_basis(mats).dim
    gram = np.array([[linalg.hs_inner(ri, rj) for rj in mats] for ri in mats])
    tol = PAIRING_TOL * max(1.0, float(np.abs(gram).max()))
    best = 1
    for size in range(2, 7):
        for subset in combinations(range(6), size):
            if all(
                abs(gram[i, j]) <= tol for i, j in combinations(subset, 2)
            ):
                best = size
                break
    return RankOneCensus(
        matrices=mats,
        all_rank_one=all_rank_one,
        all_in_operator_span=all_in_span,
        span_dim=span_dim,
        max_orthogonal_subset=best,
        gram=gram,
    )
