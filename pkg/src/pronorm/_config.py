"""Engine configuration and the active-configuration context."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

DEFAULT_SEED = 20120


@dataclass(frozen=True)
class EngineConfig:
    """Configuration for group computations.

    Attributes:
        seed: Seed for every randomized step (chain prefill, Sylow search).
        exhaustive_bound: Largest group order accepted by exhaustive subgroup search.
        max_order: Largest group order the CLI accepts before refusing the input.
        prefill_rounds: Random elements sifted into a chain before the exact
            Schreier generator pass.
        sylow_random_tries: Random draws spent looking for p-elements before
            falling back to a deterministic scan.
    """

    seed: int = DEFAULT_SEED
    exhaustive_bound: int = 2000
    max_order: int = 100_000
    prefill_rounds: int = 12
    sylow_random_tries: int = 64


_active: ContextVar[EngineConfig] = ContextVar("pronorm_config", default=EngineConfig())


def current_config(config: EngineConfig | None = None) -> EngineConfig:
    """Return ``config`` if given, otherwise the active configuration."""
    return config if config is not None else _active.get()


@contextmanager
def use_config(config: EngineConfig) -> Iterator[EngineConfig]:
    """Make ``config`` the active configuration inside the ``with`` block."""
    token = _active.set(config)
    try:
        yield config
    finally:
        _active.reset(token)
