"""Binary codings: natural value, Gray index, and the Gray sequence.

S(n,2) is a path, and the additive recoordinatization carries it onto the
reflected binary Gray code; eta is the natural base-2 value of a bit tuple
and gamma the position of a codeword in the Gray order. Everything here is
plain integer arithmetic, so n can exceed the machine word size.
"""
from __future__ import annotations

from typing import Sequence

from .graphs import Vertex
from .maps import phi_forward


def _check_bits(v: Sequence[int]) -> None:
    for d in v:
        if d not in (0, 1):
            raise ValueError(f"digit {d} is not a bit")


def eta(v: Sequence[int]) -> int:
    """Base-2 value of a bit tuple, most significant bit first."""
    _check_bits(v)
    value = 0
    for d in v:
        value = value * 2 + d
    return value


def eta_inverse(ell: int, n: int) -> Vertex:
    """The n-bit binary expansion of ell, most significant bit first."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= ell < 2**n:
        raise ValueError(f"{ell} is out of range for {n} bits")
    return tuple((ell >> (n - 1 - i)) & 1 for i in range(n))


def gamma(w: Sequence[int]) -> int:
    """Position of a codeword in the Gray order: bit i is the prefix parity.

    gamma(w) = sum over i of (w_1 xor ... xor w_i) * 2^(n-i); equal to
    eta(phi_inverse(w)) with m = 2, which the tests check rather than assume.
    """
    _check_bits(w)
    value = 0
    parity = 0
    for d in w:
        parity ^= d
        value = value * 2 + parity
    return value


def gray_sequence(n: int) -> list[Vertex]:
    """All 2^n codewords in Gray order: entry ell is phi applied to binary ell.

    Consecutive entries differ in exactly one bit, and the sequence equals
    the classic reflect-and-prefix construction.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [phi_forward(eta_inverse(ell, n), 2) for ell in range(2**n)]
