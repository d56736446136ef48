"""Text file formats for bases, keys and ciphertexts.

Base / key files are ``key=value`` lines::

    n=<rank>
    beta=<window>
    order=<decimal>
    secret=<decimal>      (private key file)
    public=<window>       (public key file)

A ciphertext file holds window lines in (m1, m2) pairs, one pair per unit.
"""

from __future__ import annotations

from pathlib import Path

from .crypto import ElGamalCiphertext, KeyPair, PublicParams
from .errors import FormatError, RankMismatch
from .group import SignedPermutation, power


def _read_fields(text: str) -> dict[str, str]:
    fields = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"line {lineno}: expected key=value")
        fields[key.strip()] = value.strip()
    return fields


def _params_lines(params: PublicParams) -> list[str]:
    return [f"n={params.n}", f"beta={params.beta}", f"order={params.beta_order}"]


def dump_params(params: PublicParams) -> str:
    return "\n".join(_params_lines(params)) + "\n"


def dump_private(params: PublicParams, key: KeyPair) -> str:
    return "\n".join([*_params_lines(params), f"secret={key.secret}"]) + "\n"


def dump_public(params: PublicParams, key: KeyPair) -> str:
    return "\n".join([*_params_lines(params), f"public={key.public_point}"]) + "\n"


def load_params(text: str) -> PublicParams:
    fields = _read_fields(text)
    try:
        n = int(fields["n"])
        beta = SignedPermutation.parse(fields["beta"])
        stated = int(fields["order"]) if "order" in fields else None
    except (KeyError, ValueError) as exc:
        raise FormatError(f"incomplete base description: {exc}") from exc
    if beta.n != n:
        raise RankMismatch(f"beta has rank {beta.n}, file says n={n}")
    params = PublicParams.from_base(beta)
    if stated is not None and stated != params.beta_order:
        raise FormatError(f"stated order {stated} but beta has order {params.beta_order}")
    return params


def load_key(text: str) -> tuple[PublicParams, KeyPair]:
    """Load a private or public key file.

    A public file yields a KeyPair whose secret is 0 (unknown).
    """
    params = load_params(text)
    fields = _read_fields(text)
    if "secret" in fields:
        secret = int(fields["secret"])
        return params, KeyPair(secret, power(params.beta, secret))
    if "public" in fields:
        point = SignedPermutation.parse(fields["public"])
        if point.n != params.n:
            raise RankMismatch("public point rank differs from the base")
        return params, KeyPair(0, point)
    raise FormatError("key file has neither secret= nor public=")


def dump_ciphertexts(cts: list[ElGamalCiphertext]) -> str:
    return "".join(f"{ct.m1}\n{ct.m2}\n" for ct in cts)


def load_ciphertexts(text: str) -> list[ElGamalCiphertext]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) % 2:
        raise FormatError("ciphertext file needs an even number of window lines")
    perms = [SignedPermutation.parse(ln) for ln in lines]
    return [ElGamalCiphertext(perms[i], perms[i + 1]) for i in range(0, len(perms), 2)]


def dump_windows(units: list[SignedPermutation]) -> str:
    return "".join(f"{u}\n" for u in units)


def load_windows(text: str) -> list[SignedPermutation]:
    return [SignedPermutation.parse(ln) for ln in text.splitlines() if ln.strip()]


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)

