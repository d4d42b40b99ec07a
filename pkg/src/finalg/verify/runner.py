"""Execute registered properties over instance families."""

from __future__ import annotations

import logging
import multiprocessing
import random
import time
from collections.abc import Callable, Sequence
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from finalg.errors import AlgebraError, CapExceededError
from finalg.settings import Limits, get_limits, use_limits
from finalg.verify.families import FamilyMode, InstanceFamily, Payload
from finalg.verify.properties import get_property

__all__ = ["Failure", "SuiteResult", "replay", "run_suite"]

logger = logging.getLogger(__name__)

CHUNK_SIZE = 64

ProgressCallback = Callable[[int], None]


@dataclass(frozen=True, slots=True)
class Failure:
    """A counterexample together with its position in the family."""

    index: int
    instance: Payload
    detail: str

    def to_json_dict(self) -> Payload:
        return {'index': self.index, 'instance': self.instance, 'detail': self.detail}


@dataclass(frozen=True, slots=True)
class SuiteResult:
    property: str
    family: InstanceFamily
    checked: int
    failures: tuple[Failure, ...]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> Payload:
        """Serialisable view; elapsed time is left out so reruns compare byte-for-byte."""
        return {
            'property': self.property,
            'family': self.family.as_dict(),
            'checked': self.checked,
            'passed': self.passed,
            'failures': [failure.to_json_dict() for failure in self.failures],
        }


def _evaluate(name: str, instance: Payload) -> str | None:
    check = get_property(name).check
    try:
        return check(instance)
    except CapExceededError:
        raise
    except AlgebraError as exc:
        return f'{type(exc).__name__}: {exc}'


def _check_chunk(
    name: str, limits: Limits, chunk: Sequence[tuple[int, Payload]]
) -> list[Failure]:
    """Worker entry point; limits are passed explicitly since context variables stay behind."""
    failures: list[Failure] = []
    with use_limits(limits):
        for index, instance in chunk:
            detail = _evaluate(name, instance)
            if detail is not None:
                failures.append(Failure(index=index, instance=instance, detail=detail))
    return failures


def _make_executor(workers: int) -> Executor:
    try:
        context = multiprocessing.get_context('fork')
        return ProcessPoolExecutor(max_workers=workers, mp_context=context)
    except (ValueError, OSError) as exc:
        logger.warning('Process pool unavailable (%s); falling back to threads.', exc)
        return ThreadPoolExecutor(max_workers=workers)


def _select(instances: list[Payload], family: InstanceFamily) -> list[tuple[int, Payload]]:
    indexed = list(enumerate(instances))
    if family.mode is FamilyMode.EXHAUSTIVE or family.samples >= len(indexed):
        return indexed
    chosen = random.Random(family.seed).sample(range(len(indexed)), family.samples)  # noqa: S311
    return [indexed[i] for i in sorted(chosen)]


def _chunks(
    items: Sequence[tuple[int, Payload]], size: int
) -> list[Sequence[tuple[int, Payload]]]:
    return [items[start : start + size] for start in range(0, len(items), size)]


def run_suite(
    name: str,
    family: InstanceFamily | None = None,
    *,
    workers: int | None = None,
    limits: Limits | None = None,
    progress: ProgressCallback | None = None,
) -> SuiteResult:
    """Check property ``name`` on every selected instance of ``family``.

    Failures are merged in instance order, so serial and parallel runs agree.
    """
    prop = get_property(name)
    name = prop.name
    family = family or InstanceFamily()
    active = limits or get_limits()
    pool_size = workers if workers is not None else active.workers
    started = time.perf_counter()
    with use_limits(active):
        selected = _select(list(prop.generate(family)), family)
    logger.info('Running %s over %d instances (%s)', name, len(selected), family.mode.value)

    failures: list[Failure] = []
    chunks = _chunks(selected, CHUNK_SIZE)
    if pool_size <= 1:
        for chunk in chunks:
            failures.extend(_check_chunk(name, active, chunk))
            if progress is not None:
                progress(len(chunk))
    else:
        with _make_executor(pool_size) as executor:
            futures = {
                executor.submit(_check_chunk, name, active, chunk): len(chunk) for chunk in chunks
            }
            for future in as_completed(futures):
                failures.extend(future.result())
                if progress is not None:
                    progress(futures[future])
    failures.sort(key=lambda failure: failure.index)

    elapsed = time.perf_counter() - started
    logger.info('%s: %d checked, %d failures in %.2fs', name, len(selected), len(failures), elapsed)
    return SuiteResult(
        property=name,
        family=family,
        checked=len(selected),
        failures=tuple(failures),
        elapsed=elapsed,
    )


def replay(name: str, instance: Payload) -> str | None:
    """Re-run one property on a serialized instance; returns the failure detail, if any."""
    return _evaluate(name, instance)
