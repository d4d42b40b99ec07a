"""Bounded separation search in canonical instance order."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from finalg.classify import is_primary_submodule, is_s_prime, is_s_primary
from finalg.codec import cached_module_from_payload, multset_from_payload, submodule_from_payload
from finalg.errors import UnknownTargetError
from finalg.localization import localize_submodule
from finalg.modules import Submodule
from finalg.rings import MultClosedSet
from finalg.verify.families import InstanceFamily, Payload, triple_instances

__all__ = [
    "SearchBounds",
    "SearchResult",
    "SeparationTarget",
    "TARGET_ALIASES",
    "revalidate",
    "search_separation",
]

logger = logging.getLogger(__name__)

TARGET_ALIASES = {'converse-4c-failure': 'localized-primary-not-s-primary'}


class SeparationTarget(str, Enum):
    S_PRIMARY_NOT_PRIMARY = 's-primary-not-primary'
    S_PRIMARY_NOT_S_PRIME = 's-primary-not-s-prime'
    LOCALIZED_PRIMARY_NOT_S_PRIMARY = 'localized-primary-not-s-primary'

    @property
    def cyclic_first(self) -> bool:
        """Whether Z/d over Z/n is tried before the regular module of the same ring."""
        return self is SeparationTarget.S_PRIMARY_NOT_S_PRIME

    @classmethod
    def parse(cls, raw: str | SeparationTarget) -> SeparationTarget:
        if isinstance(raw, str) and raw in TARGET_ALIASES:
            return cls(TARGET_ALIASES[raw])
        try:
            return cls(raw)
        except ValueError:
            known = ', '.join(target.value for target in cls)
            msg = f'Unknown search target {raw!r}; known targets: {known}.'
            raise UnknownTargetError(msg) from None


@dataclass(frozen=True, slots=True)
class SearchBounds:
    max_ring: int = 8
    max_module: int = 8
    skip_trivial_set: bool = False

    def family(self) -> InstanceFamily:
        return InstanceFamily(name='search', max_ring=self.max_ring, max_module=self.max_module)


@dataclass(frozen=True, slots=True)
class SearchResult:
    target: SeparationTarget
    found: Payload | None
    exhausted: bool
    examined: int

    def to_json_dict(self) -> Payload:
        return {
            'target': self.target.value,
            'found': self.found,
            'exhausted': self.exhausted,
            'examined': self.examined,
        }


def _s_primary_not_primary(candidate: Submodule, subset: MultClosedSet) -> bool:
    return is_s_primary(candidate, subset).holds and not is_primary_submodule(candidate)


def _s_primary_not_s_prime(candidate: Submodule, subset: MultClosedSet) -> bool:
    # S = {1} only separates primary from prime.
    if len(subset) == 1:
        return False
    prime = is_s_prime(candidate, subset)
    return prime.applicable and not prime.holds and is_s_primary(candidate, subset).holds


def _localized_primary_not_s_primary(candidate: Submodule, subset: MultClosedSet) -> bool:
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable or verdict.holds:
        return False
    _, localized = localize_submodule(candidate, subset)
    return is_primary_submodule(localized)


_PREDICATES: dict[SeparationTarget, Callable[[Submodule, MultClosedSet], bool]] = {
    SeparationTarget.S_PRIMARY_NOT_PRIMARY: _s_primary_not_primary,
    SeparationTarget.S_PRIMARY_NOT_S_PRIME: _s_primary_not_s_prime,
    SeparationTarget.LOCALIZED_PRIMARY_NOT_S_PRIMARY: _localized_primary_not_s_primary,
}


def _decode(instance: Payload) -> tuple[Submodule, MultClosedSet]:
    module = cached_module_from_payload(instance['module'])
    return (
        submodule_from_payload(module, instance['sub']),
        multset_from_payload(module.ring, instance['set']),
    )


def revalidate(target: SeparationTarget | str, instance: Payload) -> bool:
    """Decode ``instance`` from scratch and re-evaluate the target predicate."""
    return _PREDICATES[SeparationTarget.parse(target)](*_decode(instance))


def search_separation(
    target: SeparationTarget | str, bounds: SearchBounds | None = None
) -> SearchResult:
    """Return the first (M, P, S) in canonical order that separates the two notions."""
    goal = SeparationTarget.parse(target)
    bounds = bounds or SearchBounds()
    predicate = _PREDICATES[goal]
    examined = 0
    for instance in triple_instances(bounds.family(), cyclic_first=goal.cyclic_first):
        candidate, subset = _decode(instance)
        if bounds.skip_trivial_set and len(subset) == 1:
            continue
        examined += 1
        if predicate(candidate, subset):
            if not revalidate(goal, instance):
                msg = f'Instance for {goal.value} failed revalidation: {instance!r}'
                raise RuntimeError(msg)
            logger.info('%s found after %d instances', goal.value, examined)
            return SearchResult(target=goal, found=instance, exhausted=False, examined=examined)
    logger.info('%s exhausted after %d instances', goal.value, examined)
    return SearchResult(target=goal, found=None, exhausted=True, examined=examined)
