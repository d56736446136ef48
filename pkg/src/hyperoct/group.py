"""Arithmetic in the hyperoctahedral group B_n (signed permutations of rank n).

Elements are stored in window (one-line) notation ``(w[1], ..., w[n])`` where
``w[i] = pi(i)``; the value on negatives follows from ``pi(-i) = -pi(i)``.
Products are read left to right: in ``compose(a, b)`` the permutation ``a``
acts first, so ``compose(a, b)(i) == b(a(i))``.

All public indices are 1-based.
"""

from __future__ import annotations

import math
import operator
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAPermutation, RankMismatch, ZeroEntry


def group_order(n: int) -> int:
    """|B_n| = 2^n * n!."""
    return (1 << n) * math.factorial(n)


@dataclass(frozen=True, eq=True)
class SignedPermutation:
    """An element of B_n in window notation.

    Construct through :func:`validate` (or :meth:`parse`) unless the window is
    already known to be valid; the constructor itself does not check.
    """

    window: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Evaluate on ``[+-n]``, extending by ``pi(-i) = -pi(i)``."""
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"{i} is outside [+-{self.n}]")
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __pow__(self, e: int) -> SignedPermutation:
        return power(self, e)

    def __invert__(self) -> SignedPermutation:
        return inverse(self)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse the space-separated window form, e.g. ``"3 -1 2"``."""
        try:
            values = [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise NotAPermutation(f"bad window text {text!r}") from exc
        return validate(len(values), values)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.window)

    @property
    def unsigned(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.window)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, 1))


def validate(n: int, window: Iterable[int]) -> SignedPermutation:
    w = tuple(int(v) for v in window)
    if len(w) != n:
        raise RankMismatch(f"window has length {len(w)}, expected rank {n}")
    seen = [False] * (n + 1)
    for v in w:
        if v == 0:
            raise ZeroEntry("window entries must be nonzero")
        a = abs(v)
        if a > n:
            raise NotAPermutation(f"|{v}| is outside [1, {n}]")
        if seen[a]:
            raise NotAPermutation(f"absolute value {a} repeated")
        seen[a] = True
    return SignedPermutation(w)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def _check_rank(a: SignedPermutation, b: SignedPermutation) -> None:
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} vs rank {b.n}")


def _extended(b: SignedPermutation) -> list[int]:
    # ext[k] == b(k) for k in [-n, n] via Python's negative indexing
    w = b.window
    return [0, *w, *map(operator.neg, reversed(w))]


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Return the product with ``a`` acting first: ``i -> b(a(i))``. O(n)."""
    _check_rank(a, b)
    ext = _extended(b)
    return SignedPermutation(tuple(map(ext.__getitem__, a.window)))


def inverse(a: SignedPermutation) -> SignedPermutation:
    out = [0] * a.n
    for i, v in enumerate(a.window, 1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return SignedPermutation(tuple(out))


def power(a: SignedPermutation, e: int) -> SignedPermutation:
    """``a`` composed with itself ``e`` times, by binary square-and-multiply."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = identity(a.n)
    base = a
    while e:
        if e & 1:
            result = compose(result, base)
        e >>= 1
        if e:
            base = compose(base, base)
    return result


@dataclass(frozen=True)
class SignedCycle:
    """Cycle ``i_1 -> s_1*i_2 -> ... , i_l -> s_l*i_1`` of a signed permutation."""

    support: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.support or len(self.support) != len(self.signs):
            raise ValueError("cycle needs equal-length, non-empty support and signs")
        if len(set(self.support)) != len(self.support):
            raise ValueError("cycle support must be distinct")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def __len__(self) -> int:
        return len(self.support)

    @property
    def sign(self) -> int:
        return math.prod(self.signs)

    @property
    def order(self) -> int:
        # a negative cycle needs two trips round before the signs cancel
        return len(self) if self.sign == 1 else 2 * len(self)

    def to_permutation(self, n: int) -> SignedPermutation:
        w = list(range(1, n + 1))
        l = len(self.support)
        for j, (i, s) in enumerate(zip(self.support, self.signs)):
            w[i - 1] = s * self.support[(j + 1) % l]
        return validate(n, w)


def cycle_decompose(a: SignedPermutation) -> list[SignedCycle]:
    """Disjoint cycles of ``a``, each starting at its least element, sorted."""
    seen = [False] * (a.n + 1)
    cycles = []
    for start in range(1, a.n + 1):
        if seen[start]:
            continue
        support, signs = [], []
        i = start
        while not seen[i]:
            seen[i] = True
            v = a.window[i - 1]
            support.append(i)
            signs.append(1 if v > 0 else -1)
            i = abs(v)
        cycles.append(SignedCycle(tuple(support), tuple(signs)))
    return cycles


def from_cycles(n: int, cycles: Sequence[SignedCycle]) -> SignedPermutation:
    """Product of disjoint cycles (their order is irrelevant since they commute)."""
    result = identity(n)
    for c in cycles:
        result = compose(result, c.to_permutation(n))
    return result


def order(a: SignedPermutation) -> int:
    """Least m >= 1 with a^m = identity: lcm of l (positive) or 2l (negative cycle)."""
    return math.lcm(*(c.order for c in cycle_decompose(a)))


def random_element(n: int, rng: random.Random) -> SignedPermutation:
    """Uniform sample from B_n."""
    if n < 1:
        raise ValueError("rank must be positive")
    values = list(range(1, n + 1))
    rng.shuffle(values)
    # one fair sign bit per position, read off a single n-bit draw
    bits = format(rng.getrandbits(n), f"0{n}b")
    return SignedPermutation(tuple(-v if b == "1" else v for b, v in zip(bits, values)))
