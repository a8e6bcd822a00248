"""PPT entangled states from indecomposable positive maps on M3.

Library layout:

- ``linalg``: vectorization, partial transpose, Hermitian spectral tools.
- ``duality``: Choi matrices, Kraus forms, the bilinear pairing.
- ``choimaps``: the Phi[a,b,c] family, classification, decomposition,
  boundary parameter.
- ``construct``: the state A(lambda), face pairings, entanglement
  witness, boundary-map pipeline, rank-one census.
- ``schmidt``: the explicit rank-two decomposition and Schmidt-number
  certificate.
- ``extremality``: numerical extreme-ray check in the PPT cone.
- ``serialize``: JSON wire formats.
- ``cli``: command-line front end (``pptent``).
"""

from .choimaps import (
    CanonicalDecomposition,
    ClassificationReport,
    MapFamilyParams,
    boundary_parameter,
    canonical_decomposition,
    classify,
    phi_abc_apply,
    phi_abc_choi,
    shift_by_trace,
)
from .construct import (
    EntangledState,
    PipelineResult,
    RankOneCensus,
    StateParams,
    VerificationReport,
    WitnessCertificate,
    build_state,
    canonical_generators,
    construct_from_boundary_map,
    entanglement_witness,
    kraus_generators,
    rank_one_census,
    verify_state,
    witness_epsilon_bound,
)
from .duality import (
    KrausSet,
    LinearMapRep,
    apply_kraus,
    choi_of_kraus,
    is_completely_copositive,
    is_completely_positive,
    kraus_from_choi,
    pairing,
    trace_map,
)
from .errors import (
    DegenerateParameterError,
    InvalidInputError,
    NoCandidateError,
    NumericInconsistencyError,
    UnsupportedParametersError,
)
from .extremality import ExtremalityReport, extremality_check
from .schmidt import (
    SchmidtCertificate,
    schmidt_matrices,
    schmidt_number_certificate,
    schmidt_vectors,
    verify_decomposition,
)

__all__ = [
    "CanonicalDecomposition",
    "ClassificationReport",
    "DegenerateParameterError",
    "EntangledState",
    "ExtremalityReport",
    "InvalidInputError",
    "KrausSet",
    "LinearMapRep",
    "MapFamilyParams",
    "NoCandidateError",
    "NumericInconsistencyError",
    "PipelineResult",
    "RankOneCensus",
    "SchmidtCertificate",
    "StateParams",
    "UnsupportedParametersError",
    "VerificationReport",
    "WitnessCertificate",
    "apply_kraus",
    "boundary_parameter",
    "build_state",
    "canonical_decomposition",
    "canonical_generators",
    "choi_of_kraus",
    "classify",
    "construct_from_boundary_map",
    "entanglement_witness",
    "extremality_check",
    "is_completely_copositive",
    "is_completely_positive",
    "kraus_from_choi",
    "kraus_generators",
    "pairing",
    "phi_abc_apply",
    "phi_abc_choi",
    "rank_one_census",
    "schmidt_matrices",
    "schmidt_number_certificate",
    "schmidt_vectors",
    "shift_by_trace",
    "trace_map",
    "verify_decomposition",
    "verify_state",
    "witness_epsilon_bound",
]

__version__ = "0.1.0"
