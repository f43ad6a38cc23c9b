"""Numerical verification of operator entropy and power inequalities.

The package evaluates both sides of a family of matrix inequalities
(weighted operator means, a deformed relative entropy, their behavior
under positive unital maps, and several norm and expectation bounds),
decides each instance in the Loewner order up to a relative tolerance,
and ships a fuzzer plus a CLI for reproducing the pinned reference
values.
"""

from .checks import (
    FAILS,
    HOLDS,
    HYPOTHESIS_VIOLATED,
    REGISTRY,
    CheckReport,
    InstanceSpec,
    compute_sandwich,
    run_check,
)
from .errors import OpineqError
from .fuzz import FUZZ_TOL_REL, run_fuzz
from .linalg import (
    DEFAULT_TOL_REL,
    loewner_compare,
    norm_hs,
    norm_op,
    norm_tr,
    numerical_radius,
    power,
    spectral_radius,
)
from .maps import MapSpec, apply_map, verify_map
from .means import tsallis_entropy, weighted_mean
from .repro import run_all as run_repro_all
from .repro import run_repro
from .sampling import SamplerConfig, rng_for

__version__ = "0.1.0"

__all__ = [
    "HOLDS",
    "FAILS",
    "HYPOTHESIS_VIOLATED",
    "CheckReport",
    "InstanceSpec",
    "REGISTRY",
    "run_check",
    "compute_sandwich",
    "OpineqError",
    "FUZZ_TOL_REL",
    "run_fuzz",
    "DEFAULT_TOL_REL",
    "loewner_compare",
    "norm_op",
    "norm_hs",
    "norm_tr",
    "numerical_radius",
    "spectral_radius",
    "power",
    "MapSpec",
    "apply_map",
    "verify_map",
    "weighted_mean",
    "tsallis_entropy",
    "run_repro",
    "run_repro_all",
    "SamplerConfig",
    "rng_for",
    "__version__",
]
