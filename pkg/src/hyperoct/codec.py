"""Integer <-> signed permutation codec.

The chain is::

    N  <->  hyperoctahedral digits (place values B_i = 2^i i!, 0 <= d_i <= 2i+1)
       <->  (subexceedant function f, sign vector eps)
       <->  signed permutation  w[i] = eps_i * sigma_f(i)

where ``sigma_f = (1 f(1))(2 f(2))...(n f(n))`` with the leftmost factor acting
first.  Digits are stored little-endian (``d_0`` first) and displayed
most-significant first, colon separated: ``"5:3:1"``.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BlockTooLarge,
    DigitOutOfRange,
    FormatError,
    SignedInput,
    TooManyDigits,
    ValueOutOfRange,
)
from .group import SignedPermutation, group_order, validate


def place_value(i: int) -> int:
    """B_i = 2^i * i!, the cardinality of B_i."""
    return group_order(i)


@dataclass(frozen=True)
class HyperoctDigits:
    digits: tuple[int, ...]  # little-endian

    def __post_init__(self):
        for i, d in enumerate(self.digits):
            if not 0 <= d <= 2 * i + 1:
                raise DigitOutOfRange(f"digit d_{i}={d} outside [0, {2 * i + 1}]")

    def __str__(self) -> str:
        return ":".join(str(d) for d in reversed(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    @classmethod
    def parse(cls, text: str) -> HyperoctDigits:
        try:
            ds = [int(tok) for tok in text.strip().split(":")]
        except ValueError as exc:
            raise FormatError(f"bad digit string {text!r}") from exc
        return cls(tuple(reversed(ds)))

    def canonical(self) -> HyperoctDigits:
        ds = list(self.digits)
        while len(ds) > 1 and ds[-1] == 0:
            ds.pop()
        return HyperoctDigits(tuple(ds) or (0,))

    def padded(self, k: int) -> HyperoctDigits:
        c = self.canonical().digits
        if any(c[k:]):
            raise TooManyDigits(f"{len(c)} significant digits do not fit in {k}")
        return HyperoctDigits((c + (0,) * k)[:k])

    @property
    def value(self) -> int:
        return digits_to_int(self)


def int_to_digits(N: int) -> HyperoctDigits:
    """Repeated division: by 2, then 4, then 6, ... until the quotient is 0."""
    if N < 0:
        raise ValueOutOfRange("only non-negative integers have a representation")
    digits = []
    q = N
    radix = 2
    while True:
        q, r = divmod(q, radix)
        digits.append(r)
        if q == 0:
            break
        radix += 2
    return HyperoctDigits(tuple(digits))


def digits_to_int(d: HyperoctDigits | Sequence[int]) -> int:
    """Horner evaluation: start from the top digit, then ``d <- d*2*i + d_{i-1}``."""
    if not isinstance(d, HyperoctDigits):
        d = HyperoctDigits(tuple(d))
    ds = d.digits
    if not ds:
        return 0
    value = ds[-1]
    for i in range(len(ds) - 1, 0, -1):
        value = value * 2 * i + ds[i - 1]
    return value


def _check_subexceedant(f: Sequence[int]) -> None:
    for i, v in enumerate(f, 1):
        if not 1 <= v <= i:
            raise ValueError(f"f({i})={v} violates 1 <= f(i) <= i")


def subexceedant_to_perm(f: Sequence[int]) -> SignedPermutation:
    """sigma_f as an all-positive signed permutation; sigma_f(n) == f(n)."""
    _check_subexceedant(f)
    n = len(f)
    w = list(range(1, n + 1))
    pos = list(range(n + 1))  # pos[v] = index holding value v
    # right-multiplying by (i f(i)) swaps the values i and f(i) in the window
    for i, fi in enumerate(f, 1):
        if fi == i:
            continue
        pi, pf = pos[i], pos[fi]
        w[pi - 1], w[pf - 1] = fi, i
        pos[i], pos[fi] = pf, pi
    return SignedPermutation(tuple(w))


def perm_to_subexceedant(sigma: SignedPermutation) -> tuple[int, ...]:
    """Peel off ``(k sigma_k(k))`` on the right for k = n, n-1, ..., 1."""
    if any(v < 0 for v in sigma.window):
        raise SignedInput("expected an unsigned (all-positive) permutation")
    n = sigma.n
    w = list(sigma.window)
    pos = [0] * (n + 1)
    for i, v in enumerate(w, 1):
        pos[v] = i
    f = [0] * n
    for k in range(n, 0, -1):
        v = w[k - 1]
        f[k - 1] = v
        if v != k:
            # swap values k and v: afterwards k is a fixed point
            pk = pos[k]
            w[k - 1], w[pk - 1] = k, v
            pos[k], pos[v] = k, pk
    return tuple(f)


def digits_to_signed_perm(d: HyperoctDigits | Sequence[int], n: int) -> SignedPermutation:
    if not isinstance(d, HyperoctDigits):
        d = HyperoctDigits(tuple(d))
    ds = d.padded(n).digits
    f = []
    eps = []
    for dig in ds:
        q, r = divmod(dig, 2)
        f.append(1 + q)
        eps.append(-1 if r else 1)
    sigma = subexceedant_to_perm(f)
    return SignedPermutation(tuple(e * s for e, s in zip(eps, sigma.window)))


def signed_perm_to_digits(pi: SignedPermutation) -> HyperoctDigits:
    """n digits (leading zeros kept) with ``d_i = 2(f(i+1)-1) + r_i``."""
    f = perm_to_subexceedant(SignedPermutation(pi.unsigned))
    r = [1 if v < 0 else 0 for v in pi.window]
    return HyperoctDigits(tuple(2 * (fi - 1) + ri for fi, ri in zip(f, r)))


def int_to_signed_perm(N: int, n: int) -> SignedPermutation:
    if not 0 <= N < place_value(n):
        raise ValueOutOfRange(f"{N} is not in [0, B_{n})")
    return digits_to_signed_perm(int_to_digits(N), n)


def signed_perm_to_int(pi: SignedPermutation) -> int:
    return digits_to_int(signed_perm_to_digits(pi))


# -- byte blocking --------------------------------------------------------

def max_block_size(n: int) -> int:
    """Largest k with 256^k <= B_n, so every k-byte block is below B_n."""
    return (place_value(n).bit_length() - 1) // 8


def bytes_to_units(
    data: bytes, n: int, block_size: int | None = None
) -> list[SignedPermutation]:
    """Split ``data`` into big-endian blocks and map each one into B_n.

    The first unit is a header holding the number of zero bytes appended to
    the final block, so the stream decodes back to exactly ``data``.
    """
    if block_size is None:
        block_size = max_block_size(n)
    if block_size < 1 or 1 << (8 * block_size) > place_value(n):
        raise BlockTooLarge(f"{block_size}-byte blocks do not fit below B_{n}")
    pad = -len(data) % block_size
    padded = bytes(data) + bytes(pad)
    units = [int_to_signed_perm(pad, n)]
    for off in range(0, len(padded), block_size):
        block = int.from_bytes(padded[off:off + block_size], "big")
        units.append(int_to_signed_perm(block, n))
    return units


def units_to_bytes(
    units: Sequence[SignedPermutation], n: int, block_size: int | None = None
) -> bytes:
    if block_size is None:
        block_size = max_block_size(n)
    if not units:
        raise FormatError("unit list is missing its header")
    for u in units:
        if u.n != n:
            raise FormatError(f"unit of rank {u.n} in a rank-{n} stream")
    pad = signed_perm_to_int(units[0])
    if pad >= block_size or (pad and len(units) == 1):
        raise FormatError(f"invalid pad count {pad}")
    out = bytearray()
    for u in units[1:]:
        value = signed_perm_to_int(u)
        if value >> (8 * block_size):
            raise BlockTooLarge(f"unit value {value} exceeds {block_size} bytes")
        out += value.to_bytes(block_size, "big")
    if pad:
        del out[-pad:]
    return bytes(out)


# -- binary unit stream ---------------------------------------------------

STREAM_MAGIC = b"HOCU"
_HEADER = struct.Struct(">4sHH")


def write_unit_stream(units: Iterable[SignedPermutation], n: int, block_size: int) -> bytes:
    """Magic, rank (u16), block size (u16), then windows as signed 32-bit ints."""
    out = bytearray(_HEADER.pack(STREAM_MAGIC, n, block_size))
    fmt = struct.Struct(f">{n}i")
    for u in units:
        if u.n != n:
            raise FormatError(f"unit of rank {u.n} in a rank-{n} stream")
        out += fmt.pack(*u.window)
    return bytes(out)


def read_unit_stream(blob: bytes) -> tuple[int, int, list[SignedPermutation]]:
    """Inverse of :func:`write_unit_stream`; returns ``(n, block_size, units)``."""
    if len(blob) < _HEADER.size:
        raise FormatError("truncated unit stream header")
    magic, n, block_size = _HEADER.unpack_from(blob)
    if magic != STREAM_MAGIC:
        raise FormatError("bad magic bytes")
    body = blob[_HEADER.size:]
    width = 4 * n
    if n == 0 or len(body) % width:
        raise FormatError("unit stream body is not a whole number of windows")
    fmt = struct.Struct(f">{n}i")
    units = [validate(n, fmt.unpack_from(body, off)) for off in range(0, len(body), width)]
    return n, block_size, units
