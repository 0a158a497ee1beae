"""Euclidean statespace geometry of quantum pure and mixed states.

Every d-dimensional state maps to a unique point in a real
(d^2-1)-dimensional space where distances, angles, simplex coordinates,
decoherence leaves and barycentric mixtures are ordinary Euclidean geometry.
"""

from .config import Config, DEFAULT
from .densmat import (
    DensityMatrix,
    Spectrum,
    StateClass,
    change_basis,
    classify,
    eig_hermitian,
    entropy_and_w,
    frobenius_norm_sq,
    purity,
    trace_product,
    validate_density,
)
from .embedding import (
    GeneratorBasis,
    StatePoint,
    angle,
    distance,
    from_statepoint,
    generator_basis,
    origin_radius,
    to_statepoint,
)
from .errors import StatespaceError
from .hierarchy import (
    HierarchyMetrics,
    cross_level_distance,
    embed_in_dimension,
    hierarchy_metrics,
    maximally_mixed,
)
from .leaves import (
    LeafCoordinates,
    leaf_coordinates,
    leaf_radius,
    project_to_simplex,
    same_leaf,
)
from .measurement import (
    MeasurementBasis,
    TomographyRecord,
    computational_basis,
    decohere,
    default_bases,
    measure_probabilities,
    measurement_basis,
    reconstruct,
    simulate_record,
)
from .mixtures import WeightedEnsemble, cut_ratio, mix
from .purestate import (
    PureKet,
    basis_ket,
    column_coordinates,
    complete_qubit_basis,
    ket,
    overlap,
    pure_distance,
    to_density,
)
from .scenes import SceneDocument, scene_bloch, scene_simplex
from .simplex import (
    ProbabilityVector,
    SimplexChart,
    build_chart,
    center_distance,
    parallel_cut_lengths,
    probability_vector,
    simplex_distance,
    simplex_point,
)

__version__ = "0.1.0"
