"""Exact-arithmetic toolkit for Hermitian self-orthogonal bivariate
evaluation codes over GF(q²) and the quantum stabilizer code parameters
they yield.

Layers: ``gf`` (field tower), ``evalcode`` (points, weights, generator
matrices), ``selforth`` (closed-form self-orthogonality thresholds),
``oracle`` (exhaustive ground truth), ``quantum`` (parameter records,
existence bound, code families), ``cli`` (command-line surface).
"""

__version__ = "0.1.0"

from .evalcode import (  # noqa: F401
    CodeConfig,
    ConfigError,
    EvaluationData,
    GenMatrix,
    Monomial,
    build_evaluation_data,
    build_gen_matrix,
    delta_set,
    footprint_bound,
)
from .gf import (  # noqa: F401
    Felt,
    FieldCtx,
    FieldError,
    build_field_ctx,
    conjugate,
    ctx_for_prime_power,
    norm_solve,
    root_of_unity,
    vandermonde_kernel,
)
from .quantum import QuantumRecord, family, qgv_beats, size_delta, stabilizer_params  # noqa: F401
from .selforth import lattice_base, tstar_ny_points, tstar_two_points  # noqa: F401
