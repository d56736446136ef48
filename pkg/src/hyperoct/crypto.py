"""Diffie-Hellman, ElGamal and Massey-Omura over a base of B_n.

Every operation that needs randomness takes a caller-owned ``random.Random``
(or ``random.SystemRandom``); nothing here keeps global state.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .basegen import factor_order
from .errors import DegenerateBase, RankMismatch
from .group import SignedPermutation, compose, group_order, inverse, order, power


@dataclass(frozen=True)
class PublicParams:
    n: int
    beta: SignedPermutation
    beta_order: int
    order_factorization: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.beta.n != self.n:
            raise RankMismatch(f"base has rank {self.beta.n}, params say {self.n}")
        if math.prod(q**e for q, e in self.order_factorization) != self.beta_order:
            raise ValueError("factorization does not multiply back to the order")

    @classmethod
    def from_base(cls, beta: SignedPermutation) -> PublicParams:
        return cls(beta.n, beta, order(beta), tuple(factor_order(beta)))


@dataclass(frozen=True)
class KeyPair:
    secret: int
    public_point: SignedPermutation


@dataclass(frozen=True)
class ElGamalCiphertext:
    m1: SignedPermutation
    m2: SignedPermutation

    def __post_init__(self):
        if self.m1.n != self.m2.n:
            raise RankMismatch("ciphertext halves have different ranks")


@dataclass(frozen=True)
class MasseyOmuraKey:
    c: int
    c_inv: int
    modulus: int


def _exponent_bound(params: PublicParams, paper_bound: bool) -> int:
    if params.beta_order == 1:
        raise DegenerateBase("the base has order 1")
    return group_order(params.n) if paper_bound else params.beta_order


def keygen(params: PublicParams, rng: random.Random, paper_bound: bool = False) -> KeyPair:
    """Secret uniform in (0, order(beta)), or (0, B_n) with ``paper_bound``."""
    bound = _exponent_bound(params, paper_bound)
    secret = rng.randrange(1, bound)
    return KeyPair(secret, power(params.beta, secret))


def _same_rank(a: SignedPermutation, b: SignedPermutation) -> None:
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} vs rank {b.n}")


def dh_shared(own: KeyPair, other_public: SignedPermutation) -> SignedPermutation:
    _same_rank(own.public_point, other_public)
    return power(other_public, own.secret)


def elgamal_encrypt(
    mu: SignedPermutation,
    recipient_public: SignedPermutation,
    params: PublicParams,
    rng: random.Random,
    paper_bound: bool = False,
) -> ElGamalCiphertext:
    """(beta^a, mu * (beta^b)^a) with a fresh ephemeral a per call."""
    _same_rank(mu, params.beta)
    _same_rank(recipient_public, params.beta)
    a = rng.randrange(1, _exponent_bound(params, paper_bound))
    return ElGamalCiphertext(power(params.beta, a), compose(mu, power(recipient_public, a)))


def elgamal_decrypt(ct: ElGamalCiphertext, own: KeyPair) -> SignedPermutation:
    _same_rank(ct.m1, own.public_point)
    mask = power(ct.m1, own.secret)
    return compose(ct.m2, inverse(mask))


def mo_keygen(n: int, rng: random.Random) -> MasseyOmuraKey:
    """Rejection-sample 0 < c < B_n with gcd(c, B_n) = 1."""
    modulus = group_order(n)
    if modulus == 2:
        return MasseyOmuraKey(1, 1, 2)
    while True:
        c = rng.randrange(1, modulus) | 1
        if math.gcd(c, modulus) == 1:
            return MasseyOmuraKey(c, pow(c, -1, modulus), modulus)


def mo_pass(x: SignedPermutation, e: int, reduce: bool = False) -> SignedPermutation:
    """One transmission step, x^e.  ``reduce`` first cuts e modulo order(x)."""
    if reduce:
        e %= order(x)
    return power(x, e)


def mo_session(
    mu: SignedPermutation, alice: MasseyOmuraKey, bob: MasseyOmuraKey, reduce: bool = False
) -> list[SignedPermutation]:
    """Three-pass transcript plus Bob's result: [mu^c, mu^cd, mu^d, mu]."""
    if alice.modulus != bob.modulus or alice.modulus != group_order(mu.n):
        raise RankMismatch("keys were generated for a different rank")
    first = mo_pass(mu, alice.c, reduce)
    second = mo_pass(first, bob.c, reduce)
    third = mo_pass(second, alice.c_inv, reduce)
    return [first, second, third, mo_pass(third, bob.c_inv, reduce)]
