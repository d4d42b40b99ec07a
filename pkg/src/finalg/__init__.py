"""Finite commutative rings and modules with S-prime and S-primary classification.

Public APIs are listed in ``__all__``; subpackages ``finalg.verify`` and
``finalg.language`` hold the property suites and the input-document tooling.
"""

from __future__ import annotations

__version__ = '0.1.0'

from .classify import ClassificationReport, WitnessVerdict, classify, is_s_prime, is_s_primary
from .errors import (
    AlgebraError,
    AxiomViolationError,
    CapExceededError,
    ConstructionError,
    InputError,
)
from .localization import localize_module, localize_ring, localize_submodule, saturate
from .modules import ModuleDescriptor, Submodule, cyclic_module, regular_module, submodule
from .rings import Ideal, MultClosedSet, RingDescriptor, validate_mult_closed, zmod
from .settings import Limits, get_limits, load_limits, use_limits

__all__: list[str] = [
    "AlgebraError",
    "AxiomViolationError",
    "CapExceededError",
    "ClassificationReport",
    "ConstructionError",
    "Ideal",
    "InputError",
    "Limits",
    "ModuleDescriptor",
    "MultClosedSet",
    "RingDescriptor",
    "Submodule",
    "WitnessVerdict",
    "__version__",
    "classify",
    "cyclic_module",
    "get_limits",
    "is_s_prime",
    "is_s_primary",
    "load_limits",
    "localize_module",
    "localize_ring",
    "localize_submodule",
    "regular_module",
    "saturate",
    "submodule",
    "use_limits",
    "validate_mult_closed",
    "zmod",
]
