"""Loopcut.

Loop cutsets for Bayesian-network conditioning via weighted vertex feedback
sets: greedy approximations, an exact oracle for small instances and an
experiment harness.
"""

__version__ = "0.1.0"

from .core.config import LoopcutConfig
from .core.errors import LoopcutError, SolverError, ValidationError

__all__ = [
    "__version__",
    "LoopcutConfig",
    "LoopcutError",
    "SolverError",
    "ValidationError",
]
