"""Symbolic loop-space decomposition calculator.

Decomposes loop spaces of highly connected Poincaré duality complexes
into products of loops on spheres, with independent series,
combinatorial, and spectral-sequence oracles backing every rewrite.
"""

from .decompose import (
    DEFAULT_CAP,
    BundleSpec,
    ConfigSpec,
    ConnSumSpec,
    FourManifoldSpec,
    PDSpec,
    WallSpec,
    decompose_bundle,
    decompose_config,
    decompose_conn_sum,
    decompose_four_manifold,
    decompose_general,
    decompose_spec,
    decompose_wall,
    loop_equivalent,
    parse_manifold_spec,
)
from .errors import (
    DomainError,
    ExcludedCaseError,
    HypothesisError,
    LoopcalcError,
    OracleError,
    OutOfScopeError,
    UnsupportedExpressionError,
    UsageError,
    ValidationError,
)
from .expr import SphereWedge, canonicalize, loop, parse, product, render, sphere, wedge
from .hilton import (
    FactorList,
    WeightedAlphabet,
    hilton_milnor,
    lyndon_multiplicities,
    lyndon_words,
    witt_counts,
)
from .homotopy import RankTable, free_lie_ranks, rational_ranks, to_base
from .normalize import (
    factor_series,
    half_smash_split,
    james_split,
    normal_form,
    smash_desuspendables,
)
from .series import (
    TruncatedSeries,
    geometric_factor,
    loop_sphere_series,
    polynomial_two_var_series,
    tensor_algebra_series,
)
from .ss_oracle import (
    GradedModule,
    IntersectionForm,
    SSInput,
    fiber_e_infinity,
    five_complex_from_form,
    pairing_witness,
    path_loop_series_check,
)
from .verify import run_suite

__version__ = "0.1.0"
