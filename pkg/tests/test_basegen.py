import itertools
import math
import random

import pytest

from hyperoct.basegen import (
    BaseSpec,
    construct_base,
    cycle_type,
    factor_order,
    format_factors,
    is_b_smooth,
    is_prime,
    landau,
    max_achievable_order,
    primes_upto,
)
from hyperoct.errors import NotPrime, SpecInfeasible
from hyperoct.group import cycle_decompose, identity, order, random_element

from conftest import all_signed_perms


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k, *rest)


def max_order_by_cycle_types(n):
    """Max lcm over every partition of n and every sign choice per part."""
    best = 0
    for part in partitions(n):
        for signs in itertools.product((1, 2), repeat=len(part)):
            best = max(best, math.lcm(*(l * s for l, s in zip(part, signs))))
    return best


class TestSmoothness:
    @pytest.mark.parametrize(
        "N, B, expected",
        [
            (1, 1, True),
            (1, 100, True),
            (60, 5, True),
            (60, 4, False),
            (2**20 * math.factorial(19), 19, True),
            (2**20 * math.factorial(19), 18, False),
            (101, 100, False),
        ],
    )
    def test_examples(self, N, B, expected):
        assert is_b_smooth(N, B) is expected

    def test_primes(self):
        assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert [p for p in range(100) if is_prime(p)] == primes_upto(99)


class TestFactorOrder:
    def test_identity(self):
        assert factor_order(identity(5)) == []

    def test_order_60(self, rng):
        beta = construct_base(BaseSpec(12, 5, (4, 3)), rng)
        assert order(beta) == 60
        assert factor_order(beta) == [(2, 2), (3, 1), (5, 1)]
        assert format_factors(factor_order(beta)) == "2^2 3 5"

    def test_rank_one_negative(self):
        from hyperoct.group import validate
        assert factor_order(validate(1, [-1])) == [(2, 1)]

    def test_random(self, rng):
        for _ in range(200):
            pi = random_element(rng.randint(1, 12), rng)
            assert math.prod(q**e for q, e in factor_order(pi)) == order(pi)


class TestConstructBase:
    def test_seven_three(self, rng):
        beta = construct_base(BaseSpec(10, 7, (3,)), rng)
        assert order(beta) == 21
        assert is_b_smooth(21, 7) and not is_b_smooth(21, 6)

    def test_single_p_cycle(self, rng):
        beta = construct_base(BaseSpec(11, 11), rng)
        assert order(beta) == 11
        assert [len(c) for c in cycle_decompose(beta)] == [11]

    def test_five_four_three(self, rng):
        assert order(construct_base(BaseSpec(12, 5, (4, 3)), rng)) == 60

    def test_smoothness_sweep(self):
        r = random.Random(11)
        for p in primes_upto(13):
            for _ in range(25):
                n = r.randint(p, 40)
                lengths = []
                while True:
                    l = r.randint(1, p)
                    if p + sum(lengths) + l > n or r.random() < 0.2:
                        break
                    lengths.append(l)
                spec = BaseSpec(n, p, tuple(lengths))
                beta = construct_base(spec, r)
                o = order(beta)
                assert o == math.lcm(p, *lengths)
                assert is_b_smooth(o, p) and not is_b_smooth(o, p - 1)
                cycles = [c for c in cycle_decompose(beta) if len(c) > 1 or c.sign < 0]
                moved = sum(len(c) for c in cycles)
                assert moved == p + sum(l for l in lengths if l > 1)
                assert all(c.sign == 1 for c in cycle_decompose(beta))

    def test_random_signs_stay_p_smooth(self):
        r = random.Random(12)
        for _ in range(50):
            spec = BaseSpec(30, 7, (5, 4, 3, 2))
            o = order(construct_base(spec, r, random_signs=True))
            assert is_b_smooth(o, 7) and o % 7 == 0

    def test_explicit_signs(self, rng):
        beta = construct_base(BaseSpec(10, 3, (3,), signs=(1, -1)), rng)
        assert order(beta) == 6
        assert sorted(c.sign for c in cycle_decompose(beta) if len(c) == 3) == [-1, 1]

    @pytest.mark.parametrize(
        "args, exc",
        [
            ((10, 4, ()), NotPrime),
            ((10, 1, ()), NotPrime),
            ((10, 7, (8,)), SpecInfeasible),
            ((10, 7, (4,)), SpecInfeasible),
            ((10, 7, (0,)), SpecInfeasible),
            ((6, 7, ()), SpecInfeasible),
        ],
    )
    def test_infeasible(self, args, exc):
        with pytest.raises(exc):
            BaseSpec(*args)

    def test_parse(self):
        assert BaseSpec.parse("n=36,p=7,lengths=5+4+3") == BaseSpec(36, 7, (5, 4, 3))
        assert BaseSpec.parse("n=7,p=7,lengths=") == BaseSpec(7, 7, ())
        assert BaseSpec.parse("n=7,p=7") == BaseSpec(7, 7, ())
        with pytest.raises(SpecInfeasible):
            BaseSpec.parse("n=7;p=7")


class TestMaxOrder:
    def test_small(self):
        assert max_achievable_order(1) == 2
        assert max_achievable_order(3) == 6

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_against_full_enumeration(self, n):
        assert max_achievable_order(n) == max(order(pi) for pi in all_signed_perms(n))

    @pytest.mark.parametrize("n", range(1, 15))
    def test_against_cycle_types(self, n):
        assert max_achievable_order(n) == max_order_by_cycle_types(n)

    def test_landau_known_values(self):
        # OEIS A000793
        assert [landau(n) for n in range(1, 16)] == [
            1, 2, 3, 4, 6, 6, 12, 15, 20, 30, 30, 60, 60, 84, 105]

    def test_cycle_type(self):
        from hyperoct.group import validate
        assert cycle_type(validate(7, [3, 6, -2, 7, -5, -1, 4])) == [(1, -1), (2, 1), (4, 1)]
