"""Timing of composition in B_n across ranks."""

from __future__ import annotations

import random
import timeit

from .group import compose, random_element


def time_compose(n: int, rng: random.Random, repeats: int = 5) -> float:
    """Best-of-``repeats`` wall time (seconds) of a single compose at rank n."""
    a = random_element(n, rng)
    b = random_element(n, rng)
    # timeit switches the garbage collector off while timing
    return min(timeit.repeat(lambda: compose(a, b), number=1, repeat=repeats))


def scaling(ranks: list[int], rng: random.Random, repeats: int = 5) -> list[tuple[int, float]]:
    return [(n, time_compose(n, rng, repeats)) for n in ranks]


def linear_window(n_small: int, n_large: int, slack: float = 3.0) -> tuple[float, float]:
    """Acceptable time ratio for linear scaling, within a factor ``slack``."""
    k = n_large / n_small
    return k / slack, k * slack
