"""Executable property suites and separation search."""

from __future__ import annotations

from finalg.verify.families import FamilyMode, InstanceFamily, RingVariant
from finalg.verify.properties import (
    ALIASES,
    REGISTRY,
    Property,
    get_property,
    property_names,
)
from finalg.verify.runner import Failure, SuiteResult, replay, run_suite
from finalg.verify.search import (
    SearchBounds,
    SearchResult,
    SeparationTarget,
    revalidate,
    search_separation,
)

__all__ = [
    "ALIASES",
    "REGISTRY",
    "Failure",
    "FamilyMode",
    "InstanceFamily",
    "Property",
    "RingVariant",
    "SearchBounds",
    "SearchResult",
    "SeparationTarget",
    "SuiteResult",
    "get_property",
    "property_names",
    "replay",
    "revalidate",
    "run_suite",
    "search_separation",
]
