"""Generic discrete-log solvers over a cyclic group, with operation counting.

A :class:`CyclicGroup` wraps a generator ``g`` of known order.  Every group
multiplication or inversion done through :meth:`CyclicGroup.op`,
:meth:`CyclicGroup.inv` or :meth:`CyclicGroup.pow` bumps ``ops``, which is the
cost metric used to compare solvers.  Answers are always re-checked with an
uncounted exponentiation before they are returned.
"""

from __future__ import annotations

import array
import math
from dataclasses import dataclass, field
from typing import Any, Hashable

from .basegen import factor_order, trial_factor
from .errors import FactorizationMissing, ModuliNotCoprime, NotFound
from .group import SignedPermutation, compose, identity, inverse, order


class CyclicGroup:
    """The subgroup generated by ``generator``; subclasses supply the arithmetic."""

    def __init__(self, generator: Any, order: int, factorization=None):
        self.generator = generator
        self.order = order
        self.factorization = None if factorization is None else [tuple(f) for f in factorization]
        self.ops = 0

    # subclass hooks
    identity: Any = None

    def _mul(self, x, y):
        raise NotImplementedError

    def _inv(self, x):
        raise NotImplementedError

    def key(self, x) -> Hashable:
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return self.key(x) == self.key(y)

    # counted arithmetic
    def op(self, x, y):
        self.ops += 1
        return self._mul(x, y)

    def inv(self, x):
        self.ops += 1
        return self._inv(x)

    def pow(self, x, e: int, counted: bool = True):
        mul = self.op if counted else self._mul
        result = self.identity
        first = True
        while e:
            if e & 1:
                # multiplying into the identity is free
                result = x if first else mul(result, x)
                first = False
            e >>= 1
            if e:
                x = mul(x, x)
        return result

    def check(self, x: int, y) -> bool:
        return self.eq(self.pow(self.generator, x, counted=False), y)


class ModularGroup(CyclicGroup):
    """Powers of ``g`` in the multiplicative group modulo ``modulus``."""

    def __init__(self, modulus: int, g: int, order: int | None = None):
        if math.gcd(g, modulus) != 1:
            raise ValueError("generator must be a unit")
        if order is None:
            order, t = 1, g % modulus
            while t != 1 % modulus:
                t = t * g % modulus
                order += 1
        factors, rest = trial_factor(order, math.isqrt(order) + 1)
        if rest > 1:
            factors.append((rest, 1))
        super().__init__(g % modulus, order, factors)
        self.modulus = modulus
        self.identity = 1 % modulus

    def _mul(self, x, y):
        return x * y % self.modulus

    def _inv(self, x):
        return pow(x, -1, self.modulus)

    def key(self, x):
        return x.to_bytes((self.modulus.bit_length() + 7) // 8, "big")

    def power_table(self) -> list[int]:
        """g, g^2, ..., g^order by repeated multiplication."""
        out, t = [], self.identity
        for _ in range(self.order):
            t = self.op(t, self.generator)
            out.append(t)
        return out


class PermutationGroup(CyclicGroup):
    """The cyclic subgroup <beta> of B_n."""

    def __init__(self, beta: SignedPermutation):
        super().__init__(beta, order(beta), factor_order(beta))
        self.identity = identity(beta.n)

    def _mul(self, x, y):
        return compose(x, y)

    def _inv(self, x):
        return inverse(x)

    def key(self, x):
        return array.array("i", x.window).tobytes()


@dataclass
class DlogResult:
    method: str
    order: int
    ops: int
    x: int
    verified: bool
    # (prime, ops) for every inner order-q BSGS run of Pohlig-Hellman
    subproblems: list[tuple[int, int]] = field(default_factory=list)

    def report(self) -> str:
        return (
            f"method={self.method} order={self.order} ops={self.ops} "
            f"x={self.x} verified={str(self.verified).lower()}"
        )


def dlp_bruteforce(group: CyclicGroup, y, bound: int | None = None) -> int:
    """Least x in [0, bound) with g^x = y, by stepping through the powers."""
    if bound is None:
        bound = group.order
    if bound > group.order:
        raise ValueError("bound exceeds the generator order")
    cur = group.identity
    ky = group.key(y)
    for x in range(bound):
        if group.key(cur) == ky:
            return x
        if x + 1 < bound:
            cur = group.op(cur, group.generator)
    raise NotFound(f"no solution below {bound}")


def bsgs(group: CyclicGroup, y, g=None, order: int | None = None) -> int:
    """Baby-step giant-step for g^x = y in a cyclic group of the given order.

    ``g``/``order`` default to the group's own generator; Pohlig-Hellman passes
    an element of prime order instead.
    """
    if g is None:
        g, order = group.generator, group.order
    if order is None:
        raise ValueError("order of g is required")
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    ky = group.key(y)
    table: dict[Hashable, int] = {}
    cur = group.identity
    for j in range(m):
        k = group.key(cur)
        if k == ky:
            return j
        table.setdefault(k, j)
        if j + 1 < m:
            cur = group.op(cur, g)
    if m >= order:
        raise NotFound("y is not in the subgroup")
    giant = _giant_step(group, g, order, m, cur)
    t = y
    for i in range(1, m):
        t = group.op(t, giant)
        j = table.get(group.key(t))
        if j is not None:
            return (i * m + j) % order
    raise NotFound("y is not in the subgroup")


def _pow_cost(e: int) -> int:
    return max(e.bit_length() - 1, 0) + max(bin(e).count("1") - 1, 0)


def _giant_step(group: CyclicGroup, g, order: int, m: int, last_baby):
    """g^-m, either as inv(g^(m-1) * g) or directly as g^(order - m)."""
    if _pow_cost(order - m) < 2:
        return group.pow(g, order - m)
    return group.inv(group.op(last_baby, g))


def _projections(group: CyclicGroup, x, moduli: list[int]) -> list:
    """[x^(M/m) for m in moduli] with M = prod(moduli), via a product tree.

    Splitting the moduli in halves costs about log2(M) multiplications per
    tree level instead of log2(M) per modulus.
    """
    if len(moduli) == 1:
        return [x]
    half = len(moduli) // 2
    left, right = moduli[:half], moduli[half:]
    return (
        _projections(group, group.pow(x, math.prod(right)), left)
        + _projections(group, group.pow(x, math.prod(left)), right)
    )


def crt_combine(residues: list[tuple[int, int]]) -> int:
    """Unique x mod prod(m_i) with x = x_i (mod m_i); moduli pairwise coprime."""
    x, M = 0, 1
    for xi, mi in residues:
        if math.gcd(M, mi) != 1:
            raise ModuliNotCoprime(f"modulus {mi} shares a factor with {M}")
        # lift x (mod M) to the solution mod M*mi
        t = (xi - x) * pow(M, -1, mi) % mi
        x += M * t
        M *= mi
    return x % M


def pohlig_hellman(group: CyclicGroup, y, subproblems: list | None = None) -> int:
    """Solve modulo each prime power q^e digit by digit, then glue with CRT.

    Each base-q digit is an order-q discrete log handed to :func:`bsgs`; the
    ops it consumed are appended to ``subproblems`` as ``(q, ops)``.
    """
    if not group.factorization:
        if group.order == 1:
            if group.eq(y, group.identity):
                return 0
            raise NotFound("y is not the identity")
        raise FactorizationMissing("group order must come factored")
    N = group.order
    if math.prod(q**e for q, e in group.factorization) != N:
        raise FactorizationMissing("factorization does not match the order")
    prime_powers = [q**e for q, e in group.factorization]
    g_parts = _projections(group, group.generator, prime_powers)
    y_parts = _projections(group, y, prime_powers)
    residues = []
    for (q, e), g_i, y_i in zip(group.factorization, g_parts, y_parts):
        qe = q**e
        gamma = group.pow(g_i, qe // q) if e > 1 else g_i  # order exactly q
        g_i_inv = None
        x_i = 0
        shifted = y_i  # y_i * g_i^-x_i for the digits found so far
        for k in range(e):
            h = group.pow(shifted, q ** (e - 1 - k))
            before = group.ops
            d = bsgs(group, h, gamma, q)
            if subproblems is not None:
                subproblems.append((q, group.ops - before))
            if d and k + 1 < e:
                if g_i_inv is None:
                    g_i_inv = group.inv(g_i)
                shifted = group.op(shifted, group.pow(g_i_inv, d * q**k))
            x_i += d * q**k
        residues.append((x_i, qe))
    x = crt_combine(residues)
    if not group.check(x, y):
        raise NotFound("y is not in the subgroup")
    return x


SOLVERS = {
    "brute": dlp_bruteforce,
    "bsgs": bsgs,
    "ph": pohlig_hellman,
}


def solve(method: str, group: CyclicGroup, y) -> DlogResult:
    """Run one solver from a zeroed counter and verify the answer."""
    group.ops = 0
    subs: list[tuple[int, int]] = []
    if method == "ph":
        x = pohlig_hellman(group, y, subs)
    else:
        x = SOLVERS[method](group, y)
    verified = group.check(x, y)
    if not verified:
        raise NotFound(f"{method} produced an unverifiable answer")
    return DlogResult(method, group.order, group.ops, x, verified, subs)
