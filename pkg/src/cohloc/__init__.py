"""Local, average and localizable coherence, and their relation to concurrence."""

from .coherence import (
    CoherenceVectors,
    LambdaPair,
    PairProjector,
    avg_coherence,
    coherence_vectors,
    d_F,
    d_FL,
    d_frob,
    d_l1,
    lambda_pairs,
    localizable_coherence_qubit,
    min_avg_coherence_qubit,
    pair_projectors,
    pure_coherence,
    qubit_lambda,
    subspace_state,
)
from .entanglement import (
    TheoremReport,
    coherence_gap,
    concurrence_from_reduced,
    concurrence_pure,
    reduced_state,
    theorem2_check,
    theorem4_check,
    theorem5_check,
    wootters_concurrence,
)
from .numerics import hermitian_eig, kron, partial_trace, singular_values
from .oracle import ExtremeSearchResult, search_extremes, verify_thompson
from .states import (
    DensityMatrix,
    Ensemble,
    PureState,
    ensemble_from_unitary,
    mix,
    purify,
    random_density,
    random_isometry,
    random_pure,
    random_unitary,
    validate_density,
)

__version__ = "0.1.0"
