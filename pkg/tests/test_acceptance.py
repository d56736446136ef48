"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL table is printed
in the terminal summary.
"""

import itertools
import math
import random
import statistics
import time

from hyperoct.attacks import ModularGroup, PermutationGroup, solve
from hyperoct.basegen import BaseSpec, construct_base, is_b_smooth
from hyperoct.bench import linear_window, time_compose
from hyperoct.codec import (
    digits_to_int,
    digits_to_signed_perm,
    int_to_digits,
    int_to_signed_perm,
    perm_to_subexceedant,
    place_value,
    signed_perm_to_digits,
    signed_perm_to_int,
    subexceedant_to_perm,
)
from hyperoct.crypto import (
    PublicParams,
    dh_shared,
    elgamal_decrypt,
    elgamal_encrypt,
    keygen,
    mo_keygen,
    mo_session,
)
from hyperoct.group import (
    compose,
    cycle_decompose,
    identity,
    order,
    power,
    random_element,
    validate,
)

from conftest import all_signed_perms, brute_order


def test_criterion_01_codec_bijection():
    t0 = time.perf_counter()
    images = {int_to_signed_perm(N, 4) for N in range(384)}
    assert len(images) == 384 == 2**4 * math.factorial(4)
    assert images == set(all_signed_perms(4))
    for N in range(place_value(5)):
        d = int_to_digits(N)
        pi = digits_to_signed_perm(d, 5)
        assert digits_to_int(signed_perm_to_digits(pi)) == N
        assert signed_perm_to_int(pi) == N
    assert time.perf_counter() - t0 < 1.0


def test_criterion_02_subexceedant_bijection():
    t0 = time.perf_counter()
    n = 6
    fs = list(itertools.product(*(range(1, i + 1) for i in range(1, n + 1))))
    assert len(fs) == 720
    images = set()
    for f in fs:
        sigma = subexceedant_to_perm(f)
        assert sigma.window[n - 1] == f[n - 1]
        assert perm_to_subexceedant(sigma) == f
        images.add(sigma.window)
    assert images == set(itertools.permutations(range(1, n + 1)))
    assert time.perf_counter() - t0 < 1.0


def test_criterion_03_worked_examples():
    a = validate(4, [1, -3, 4, 2])
    b = validate(4, [3, -2, 4, 1])
    assert compose(a, b).window == (3, -4, 1, -2)
    cycles = cycle_decompose(validate(7, [3, 6, -2, 7, -5, -1, 4]))
    # 1->3, 3->-2, 2->6, 6->-1 ; 4->7, 7->4 ; 5->-5
    assert [(c.support, c.signs) for c in cycles] == [
        ((1, 3, 2, 6), (1, -1, 1, -1)),
        ((4, 7), (1, 1)),
        ((5,), (-1,)),
    ]


def test_criterion_04_order_oracle():
    for pi in all_signed_perms(3):
        assert order(pi) == brute_order(pi)
    r = random.Random(4)
    for _ in range(100):
        pi = random_element(8, r)
        assert order(pi) == brute_order(pi)
    neg = validate(1, [-1])
    assert order(neg) == 2 == brute_order(neg)
    assert len(cycle_decompose(neg)[0]) == 1


def test_criterion_05_order_bounds():
    for k in range(1, 6):
        values = [
            digits_to_int(ds)
            for ds in itertools.product(*(range(2 * i + 2) for i in range(k)))
        ]
        assert min(values) == 0 and max(values) == place_value(k) - 1
        assert len(set(values)) == len(values) == place_value(k)
    r = random.Random(5)
    for _ in range(1000):
        N = r.randrange(1, place_value(20))
        ds = int_to_digits(N).digits
        k = len(ds) - 1
        assert ds[k] * place_value(k) <= N < (ds[k] + 1) * place_value(k)


def test_criterion_06_protocol_round_trips():
    t0 = time.perf_counter()
    r = random.Random(6)
    n = 64
    while True:
        params = PublicParams.from_base(random_element(n, r))
        if params.beta_order > 1:
            break
    for _ in range(100):
        a, b = keygen(params, r), keygen(params, r)
        assert dh_shared(a, b.public_point) == dh_shared(b, a.public_point)
    bob = keygen(params, r)
    for _ in range(100):
        mu = random_element(n, r)
        assert elgamal_decrypt(elgamal_encrypt(mu, bob.public_point, params, r), bob) == mu
    for _ in range(100):
        mu = random_element(n, r)
        assert mo_session(mu, mo_keygen(n, r), mo_keygen(n, r))[-1] == mu
    assert time.perf_counter() - t0 < 10.0


def test_criterion_07_smooth_base_falls_to_pohlig_hellman():
    t0 = time.perf_counter()
    r = random.Random(7)
    beta = construct_base(BaseSpec(36, 7, (5, 4, 3)), r)
    o = order(beta)
    assert o == 420
    assert is_b_smooth(o, 7) and not is_b_smooth(o, 6)
    G = PermutationGroup(beta)
    ops = {"brute": [], "bsgs": [], "ph": []}
    for _ in range(200):
        x = r.randrange(o)
        y = power(beta, x)
        for method in ops:
            res = solve(method, G, y)
            assert res.x == x and res.verified
            ops[method].append(res.ops)
    brute, ph = statistics.mean(ops["brute"]), statistics.mean(ops["ph"])
    print(f"\nmean ops over 200 challenges: brute={brute:.1f} "
          f"bsgs={statistics.mean(ops['bsgs']):.1f} ph={ph:.1f} ratio={brute / ph:.2f}")
    assert time.perf_counter() - t0 < 5.0
    assert brute >= 5 * ph


def test_criterion_08_large_prime_floor():
    r = random.Random(8)
    beta = construct_base(BaseSpec(101, 101), r)
    G = PermutationGroup(beta)
    assert G.order == 101
    target = 2 * math.ceil(math.sqrt(101))
    inner = []
    for _ in range(50):
        x = r.randrange(101)
        res = solve("ph", G, power(beta, x))
        assert res.x == x
        (q, cost), = res.subproblems
        assert q == 101
        inner.append(cost)
    mean = statistics.mean(inner)
    print(f"\ninner order-101 BSGS: mean={mean:.1f} max={max(inner)} target={target}")
    assert target / 3 <= mean <= target * 3
    assert max(inner) <= target * 3


def test_criterion_09_modular_example():
    G = ModularGroup(19, 2)
    assert G.power_table() == [2, 4, 8, 16, 13, 7, 14, 9, 18, 17, 15, 11, 3, 6, 12, 5, 10, 1]
    for method in ("brute", "bsgs", "ph"):
        assert solve(method, G, 9).x == 8


def test_criterion_10_linear_composition():
    r = random.Random(10)
    small = time_compose(10**5, r, repeats=15)
    large = time_compose(10**6, r, repeats=15)
    lo, hi = linear_window(10**5, 10**6)
    ratio = large / small
    print(f"\ncompose: n=1e5 {small:.4f}s  n=1e6 {large:.4f}s  ratio={ratio:.2f}")
    assert (lo, hi) == (10 / 3, 30)
    assert lo <= ratio <= hi
