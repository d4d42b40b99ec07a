"""Enumeration limits and their environment overrides."""

from __future__ import annotations

import os
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

MAX_CARD_ENV = 'ALG_MAX_CARD'
AUDIT_BOUND_ENV = 'ALG_AUDIT_BOUND'

DEFAULT_ENUMERATION_CAP = 64
DEFAULT_AUDIT_BOUND = 32
DEFAULT_SUBSET_CAP = 16


@dataclass(frozen=True, slots=True)
class Limits:
    """Caps that keep exhaustive computations at desk scale."""

    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    audit_bound: int = DEFAULT_AUDIT_BOUND
    subset_cap: int = DEFAULT_SUBSET_CAP
    workers: int = 1

    def with_overrides(self, **changes: int) -> Limits:
        """Return a copy with the provided fields replaced."""
        return replace(self, **changes)


def _positive_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        msg = f'{name} must be an integer, got {raw!r}.'
        raise ValueError(msg) from None
    if value < 1:
        msg = f'{name} must be positive, got {value}.'
        raise ValueError(msg)
    return value


def load_limits(environ: Mapping[str, str] | None = None) -> Limits:
    """Build limits from defaults plus ``ALG_MAX_CARD`` / ``ALG_AUDIT_BOUND``."""
    env = os.environ if environ is None else environ
    return Limits(
        enumeration_cap=_positive_int(env, MAX_CARD_ENV, DEFAULT_ENUMERATION_CAP),
        audit_bound=_positive_int(env, AUDIT_BOUND_ENV, DEFAULT_AUDIT_BOUND),
    )


_ACTIVE: ContextVar[Limits | None] = ContextVar('finalg_limits', default=None)


def get_limits() -> Limits:
    """Return the limits in force for the current context."""
    active = _ACTIVE.get()
    if active is not None:
        return active
    return load_limits()


@contextmanager
def use_limits(limits: Limits) -> Iterator[Limits]:
    """Scope ``limits`` to the enclosed block."""
    token = _ACTIVE.set(limits)
    try:
        yield limits
    finally:
        _ACTIVE.reset(token)
