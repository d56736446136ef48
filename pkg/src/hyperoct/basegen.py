"""Bases of B_n whose order has prescribed smoothness.

For a prime ``p`` and cycle lengths ``1 <= l_i <= p`` with ``p + sum(l_i) <= n``,
a p-cycle times disjoint l_i-cycles has order ``lcm(p, l_1, ..., l_k)``, which
is p-smooth but not (p-1)-smooth.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import NotPrime, SpecInfeasible
from .group import SignedCycle, SignedPermutation, cycle_decompose, from_cycles, order


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def trial_factor(N: int, limit: int) -> tuple[list[tuple[int, int]], int]:
    """Strip every prime factor <= limit from N; return (factors, cofactor)."""
    if N < 1:
        raise ValueError("N must be positive")
    factors = []
    for q in primes_upto(limit):
        if N == 1:
            break
        e = 0
        while N % q == 0:
            N //= q
            e += 1
        if e:
            factors.append((q, e))
    return factors, N


def is_b_smooth(N: int, B: int) -> bool:
    """True iff no prime factor of N exceeds B."""
    return trial_factor(N, B)[1] == 1


def factor_order(pi: SignedPermutation) -> list[tuple[int, int]]:
    """Factorization of order(pi).

    Cycle orders are l or 2l with l <= n, so trial division up to max(n, 2)
    always finishes the job.
    """
    factors, rest = trial_factor(order(pi), max(pi.n, 2))
    assert rest == 1
    return factors


def format_factors(factors: list[tuple[int, int]]) -> str:
    return " ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in factors)


@dataclass(frozen=True)
class BaseSpec:
    n: int
    p: int
    lengths: tuple[int, ...] = ()
    # optional sign product (+1/-1) for the p-cycle followed by each l_i-cycle
    signs: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if any(not 1 <= l <= self.p for l in self.lengths):
            raise SpecInfeasible(f"cycle lengths must lie in [1, {self.p}]")
        if self.p + sum(self.lengths) > self.n:
            raise SpecInfeasible(
                f"p + sum(lengths) = {self.p + sum(self.lengths)} exceeds n = {self.n}"
            )
        if self.signs is not None:
            if len(self.signs) != 1 + len(self.lengths):
                raise SpecInfeasible("need one sign per cycle (p-cycle first)")
            if any(s not in (1, -1) for s in self.signs):
                raise SpecInfeasible("signs must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> BaseSpec:
        """Parse ``"n=36,p=7,lengths=5+4+3"`` (lengths may be empty)."""
        fields = {}
        for part in text.split(","):
            key, sep, value = part.partition("=")
            if not sep:
                raise SpecInfeasible(f"bad spec component {part!r}")
            fields[key.strip()] = value.strip()
        try:
            n = int(fields["n"])
            p = int(fields["p"])
            raw = fields.get("lengths", "")
            lengths = tuple(int(x) for x in raw.split("+")) if raw else ()
        except (KeyError, ValueError) as exc:
            raise SpecInfeasible(f"bad spec {text!r}") from exc
        return cls(n, p, lengths)

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return (self.p, *self.lengths)


def construct_base(
    spec: BaseSpec, rng: random.Random, random_signs: bool = False
) -> SignedPermutation:
    """A p-cycle times disjoint l_i-cycles on randomly drawn positions.

    Cycles are positive unless ``spec.signs`` or ``random_signs`` says otherwise;
    only then can the order pick up an extra factor of 2.
    """
    lengths = spec.cycle_lengths
    positions = rng.sample(range(1, spec.n + 1), sum(lengths))
    cycles = []
    start = 0
    for idx, l in enumerate(lengths):
        support = tuple(positions[start:start + l])
        start += l
        if random_signs:
            step_signs = tuple(rng.choice((1, -1)) for _ in range(l))
        else:
            step_signs = [1] * l
            if spec.signs is not None:
                step_signs[-1] = spec.signs[idx]
            step_signs = tuple(step_signs)
        cycles.append(SignedCycle(support, step_signs))
    return from_cycles(spec.n, cycles)


def landau(n: int) -> int:
    """Landau's g(n): the largest order of an element of S_n.

    Knapsack over prime powers: each prime contributes at most one power q^k
    (a q^k-cycle of cost q^k), the leftover points are fixed.
    """
    best = [1] * (n + 1)
    for q in primes_upto(n):
        new = best[:]
        qk = q
        while qk <= n:
            for s in range(qk, n + 1):
                cand = best[s - qk] * qk
                if cand > new[s]:
                    new[s] = cand
            qk *= q
        best = new
    return best[n]


def max_achievable_order(n: int) -> int:
    """Largest element order in B_n.

    Making a cycle negative turns its contribution l into 2l, and
    lcm(2a, 2b, ...) = 2 lcm(a, b, ...), so the maximum is 2 * g(n).
    """
    if n < 1:
        raise ValueError("rank must be positive")
    return 2 * landau(n)


def cycle_type(pi: SignedPermutation) -> list[tuple[int, int]]:
    """Sorted (length, sign) pairs; the order depends only on this."""
    return sorted((len(c), c.sign) for c in cycle_decompose(pi))
