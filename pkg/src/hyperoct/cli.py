"""Command line interface: ``hyperoct <subcommand> [options]``.

Subcommands::

    encode, decode                   integer / byte codec
    keygen, dh                       key generation, Diffie-Hellman demo
    elgamal-encrypt, elgamal-decrypt ElGamal on files
    mo-session                       Massey-Omura three-pass transcript
    basegen                          smooth-order base construction
    attack                           discrete-log solvers against a challenge
    bench                            compose() timing across ranks

Every command is deterministic under ``--seed``.  Exit status is 0 only when
the command checked its own result.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import attacks, basegen, bench, codec, crypto, formats
from .errors import HyperoctError
from .group import SignedPermutation, power, random_element


def _rng(seed: int | None) -> random.Random:
    return random.SystemRandom() if seed is None else random.Random(seed)


def _out(args, data: str | bytes) -> None:
    if args.out:
        mode = "wb" if isinstance(data, bytes) else "w"
        with open(args.out, mode) as fh:
            fh.write(data)
    elif isinstance(data, bytes):
        sys.stdout.buffer.write(data)
    else:
        sys.stdout.write(data)


def _params(args, rng: random.Random) -> crypto.PublicParams:
    """Base from --base FILE, else --spec, else a random element of B_n."""
    if getattr(args, "base", None):
        return formats.load_params(formats.read_text(args.base))
    if getattr(args, "spec", None):
        spec = basegen.BaseSpec.parse(args.spec)
        return crypto.PublicParams.from_base(basegen.construct_base(spec, rng))
    if not args.n:
        raise HyperoctError("need one of --base, --spec or --n")
    while True:
        params = crypto.PublicParams.from_base(random_element(args.n, rng))
        if params.beta_order > 1:
            return params


# -- codec ------------------------------------------------------------------

def cmd_encode(args) -> int:
    if args.infile:
        data = Path(args.infile).read_bytes()
        bs = codec.max_block_size(args.n)
        units = codec.bytes_to_units(data, args.n, bs)
        if args.format == "bin":
            _out(args, codec.write_unit_stream(units, args.n, bs))
        else:
            _out(args, formats.dump_windows(units))
        return 0
    if args.value is None:
        raise HyperoctError("give an integer or --in FILE")
    N = int(args.value)
    pi = codec.int_to_signed_perm(N, args.n)
    digits = codec.int_to_digits(N)
    _out(args, f"window: {pi}\ndigits: {digits}\n")
    return 0


def cmd_decode(args) -> int:
    if args.window:
        pi = SignedPermutation.parse(args.window)
        if args.n and pi.n != args.n:
            raise HyperoctError(f"window has rank {pi.n}, --n says {args.n}")
        digits = codec.signed_perm_to_digits(pi)
        _out(args, f"integer: {codec.digits_to_int(digits)}\ndigits: {digits.canonical()}\n")
        return 0
    if not args.infile:
        raise HyperoctError("give --window or --in FILE")
    blob = Path(args.infile).read_bytes()
    if args.format == "bin":
        n, bs, units = codec.read_unit_stream(blob)
    else:
        units = formats.load_windows(blob.decode())
        n = units[0].n if units else args.n
        bs = codec.max_block_size(n)
    _out(args, codec.units_to_bytes(units, n, bs))
    return 0


# -- protocols ----------------------------------------------------------------

def cmd_keygen(args) -> int:
    rng = _rng(args.seed)
    params = _params(args, rng)
    key = crypto.keygen(params, rng, paper_bound=args.paper_bound)
    prefix = args.out or "hyperoct"
    formats.write_text(prefix + ".key", formats.dump_private(params, key))
    formats.write_text(prefix + ".pub", formats.dump_public(params, key))
    print(f"wrote {prefix}.key and {prefix}.pub (n={params.n} order={params.beta_order})")
    return 0


def cmd_dh(args) -> int:
    rng_a = _rng(args.seed)
    params = _params(args, rng_a)
    peer_seed = args.peer_seed
    if peer_seed is None and args.seed is not None:
        peer_seed = args.seed + 1
    rng_b = _rng(peer_seed)
    alice = crypto.keygen(params, rng_a, paper_bound=args.paper_bound)
    bob = crypto.keygen(params, rng_b, paper_bound=args.paper_bound)
    k_a = crypto.dh_shared(alice, bob.public_point)
    k_b = crypto.dh_shared(bob, alice.public_point)
    print(f"beta: {params.beta}")
    print(f"order: {params.beta_order}")
    print(f"alice public: {alice.public_point}")
    print(f"bob public: {bob.public_point}")
    print(f"alice key: {k_a}")
    print(f"bob key: {k_b}")
    print(f"match={str(k_a == k_b).lower()}")
    return 0 if k_a == k_b else 1


def cmd_elgamal_encrypt(args) -> int:
    params, recipient = formats.load_key(formats.read_text(args.key))
    rng = _rng(args.seed)
    data = Path(args.infile).read_bytes() if args.infile else (args.message or "").encode()
    units = codec.bytes_to_units(data, params.n)
    cts = [
        crypto.elgamal_encrypt(u, recipient.public_point, params, rng, args.paper_bound)
        for u in units
    ]
    _out(args, formats.dump_ciphertexts(cts))
    return 0


def cmd_elgamal_decrypt(args) -> int:
    params, own = formats.load_key(formats.read_text(args.key))
    if own.secret == 0:
        raise HyperoctError("decryption needs a private key file")
    cts = formats.load_ciphertexts(formats.read_text(args.infile))
    units = [crypto.elgamal_decrypt(ct, own) for ct in cts]
    _out(args, codec.units_to_bytes(units, params.n))
    return 0


def cmd_mo_session(args) -> int:
    rng = _rng(args.seed)
    if args.n is None:
        raise HyperoctError("--n is required")
    data = Path(args.infile).read_bytes() if args.infile else (args.message or "").encode()
    units = codec.bytes_to_units(data, args.n)
    alice = crypto.mo_keygen(args.n, rng)
    bob = crypto.mo_keygen(args.n, rng)
    print(f"alice c={alice.c} c'={alice.c_inv}")
    print(f"bob d={bob.c} d'={bob.c_inv}")
    received = []
    for idx, mu in enumerate(units):
        first, second, third, got = crypto.mo_session(mu, alice, bob)
        print(f"unit {idx} pass1: {first}")
        print(f"unit {idx} pass2: {second}")
        print(f"unit {idx} pass3: {third}")
        received.append(got)
    recovered = codec.units_to_bytes(received, args.n)
    ok = recovered == data
    print(f"recovered: {recovered.decode(errors='replace')}")
    print(f"match={str(ok).lower()}")
    return 0 if ok else 1


# -- bases, attacks, benchmarks ----------------------------------------------

def cmd_basegen(args) -> int:
    if not args.spec:
        raise HyperoctError("--spec is required")
    spec = basegen.BaseSpec.parse(args.spec)
    beta = basegen.construct_base(spec, _rng(args.seed), random_signs=args.random_signs)
    params = crypto.PublicParams.from_base(beta)
    p_smooth = basegen.is_b_smooth(params.beta_order, spec.p)
    not_lower = not basegen.is_b_smooth(params.beta_order, spec.p - 1)
    if args.out:
        formats.write_text(args.out, formats.dump_params(params))
    print(f"beta: {beta}")
    print(f"order={params.beta_order} factors={basegen.format_factors(list(params.order_factorization))}")
    return 0 if p_smooth and not_lower else 1


def _challenge(args, params: crypto.PublicParams, rng: random.Random):
    if args.infile:
        text = formats.read_text(args.infile)
        if "public=" in text:
            return formats.load_key(text)[1].public_point, None
        return SignedPermutation.parse(text), None
    x = rng.randrange(params.beta_order)
    return power(params.beta, x), x


def cmd_attack(args) -> int:
    rng = _rng(args.seed)
    params = _params(args, rng)
    y, planted = _challenge(args, params, rng)
    if y.n != params.n:
        raise HyperoctError("challenge rank differs from the base")
    group = attacks.PermutationGroup(params.beta)
    result = attacks.solve(args.method, group, y)
    print(result.report())
    if planted is not None and planted != result.x:
        return 1
    return 0 if result.verified else 1


def cmd_bench(args) -> int:
    ranks = [int(r) for r in args.ranks.split(",")]
    rows = bench.scaling(ranks, _rng(args.seed), args.repeats)
    for n, t in rows:
        print(f"n={n} seconds={t:.6f}")
    ok = True
    for (n0, t0), (n1, t1) in zip(rows, rows[1:]):
        lo, hi = bench.linear_window(n0, n1)
        ratio = t1 / t0
        inside = lo <= ratio <= hi
        ok &= inside
        print(f"ratio {n1}/{n0}: {ratio:.2f} expected=[{lo:.2f}, {hi:.2f}] linear={str(inside).lower()}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank of B_n")
    common.add_argument("--seed", type=int, help="RNG seed (default: system randomness)")
    common.add_argument("--in", dest="infile", help="input file")
    common.add_argument("--out", help="output file (keygen: path prefix)")
    common.add_argument("--format", choices=("text", "bin"), default="text")

    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--base", help="base file written by basegen or keygen")
    base.add_argument("--spec", help='base spec, e.g. "n=36,p=7,lengths=5+4+3"')
    base.add_argument("--paper-bound", action="store_true",
                      help="draw secrets below B_n instead of below order(beta)")

    parser = argparse.ArgumentParser(prog="hyperoct", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="integer or file -> signed permutations")
    p.add_argument("value", nargs="?")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="signed permutations -> integer or file")
    p.add_argument("--window")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("keygen", parents=[common, base])
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("dh", parents=[common, base])
    p.add_argument("--peer-seed", type=int)
    p.set_defaults(func=cmd_dh)

    p = sub.add_parser("elgamal-encrypt", parents=[common])
    p.add_argument("--key", required=True, help="recipient public key file")
    p.add_argument("--message", help="text message (instead of --in)")
    p.add_argument("--paper-bound", action="store_true")
    p.set_defaults(func=cmd_elgamal_encrypt)

    p = sub.add_parser("elgamal-decrypt", parents=[common])
    p.add_argument("--key", required=True, help="own private key file")
    p.set_defaults(func=cmd_elgamal_decrypt)

    p = sub.add_parser("mo-session", parents=[common])
    p.add_argument("--message", help="text message (instead of --in)")
    p.set_defaults(func=cmd_mo_session)

    p = sub.add_parser("basegen", parents=[common])
    p.add_argument("--spec", help='e.g. "n=36,p=7,lengths=5+4+3"')
    p.add_argument("--random-signs", action="store_true")
    p.set_defaults(func=cmd_basegen)

    p = sub.add_parser("attack", parents=[common, base])
    p.add_argument("--method", choices=sorted(attacks.SOLVERS), default="ph")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("bench", parents=[common])
    p.add_argument("--ranks", default="100000,1000000")
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HyperoctError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
