"""Strands that are both ``ell``-runlength limited and ``eps``-balanced.

Layout of a codeword of length ``n``::

    P_t(s3) g S_{N-t}(s3) g' p f(g) f(g')

where ``s3`` is the RLL-encoded payload with its first ``t`` symbols flipped,
``g``/``g'`` are splice symbols that break runs at the two seams, ``p`` is the
index pointer for ``t`` and the trailing pair restores balance for the splice
symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from . import rll_enum, rll_replace
from .alphabet import FLIP, Word, bits_to_int, flip_prefix_q, int_to_bits, psi, psi_inv
from .gc_balance import (
    BalanceError,
    as_eps,
    balance_set,
    find_balance_index_q,
    index_decode,
    index_digits,
    index_encode,
)

ENUM = "enum"
REPLACE = "replace"
RLL_MODES = (ENUM, REPLACE)


class ParamsError(ValueError):
    pass


class DecodeError(ValueError):
    pass


def _rll_redundancy(N: int, ell: int, mode: str) -> int:
    if mode == ENUM:
        count = rll_enum.count_rll(N, ell, 4)
        return N - (count.bit_length() - 1) // 2
    if mode == REPLACE:
        return rll_replace.replace_redundancy(N, ell, 4)
    raise ParamsError(f"unknown rll mode {mode!r}")


@dataclass(frozen=True)
class ConstrainedParams:
    n: int
    ell: int
    eps: Fraction
    rll_mode: str = REPLACE

    def __post_init__(self):
        object.__setattr__(self, "eps", as_eps(self.eps))
        if self.rll_mode not in RLL_MODES:
            raise ParamsError(f"rll mode must be one of {RLL_MODES}")
        if self.ell < 3:
            raise ParamsError("ell >= 3 required (ell in {1, 2} is not supported)")
        if self.n % 2:
            raise ParamsError(f"n={self.n} must be even")
        N = self.N
        if N < 2:
            raise ParamsError(f"n={self.n} leaves no room for data (N={N})")
        try:
            S = balance_set(self.eps, N)
        except BalanceError as exc:
            raise ParamsError(str(exc)) from None
        if len(S) > 4**self.k:
            raise ParamsError(
                f"{len(S)} balancing indices for N={N} exceed 4^{self.k}; "
                "increase n"
            )
        if self.m <= 0:
            raise ParamsError("no payload capacity left")

    @cached_property
    def k(self) -> int:
        return index_digits(self.eps)

    @cached_property
    def N(self) -> int:
        return self.n - 2 * self.k - 4

    @cached_property
    def r_rll(self) -> int:
        return _rll_redundancy(self.N, self.ell, self.rll_mode)

    @cached_property
    def redundancy(self) -> int:
        """Redundant symbols: ``r_rll + 2k + 4``."""
        return self.r_rll + 2 * self.k + 4

    @cached_property
    def m(self) -> int:
        return 2 * self.n - 2 * self.redundancy

    @property
    def rate(self) -> float:
        return self.m / self.n

    @cached_property
    def index_set(self):
        return balance_set(self.eps, self.N)


def splice_symbol(left: int | None, right: int | None) -> int:
    """Smallest symbol distinct from both neighbours (either may be absent)."""
    for g in range(4):
        if g != left and g != right:
            return g
    raise AssertionError("unreachable")


def splice_rll(a: Sequence[int], b: Sequence[int]):
    g = splice_symbol(a[-1] if a else None, b[0] if b else None)
    return g, tuple(a) + (g,) + tuple(b)


def _rll_encode(bits: Sequence[int], params: ConstrainedParams) -> Word:
    N, ell = params.N, params.ell
    if params.rll_mode == ENUM:
        return rll_enum.unrank(N, ell, 4, bits_to_int(bits) + 1)
    src = psi_inv(bits)
    if N <= rll_replace.max_block_len(ell, 4):
        return rll_replace.encode_rll_b(src, ell, 4)
    return rll_replace.encode_rll_b_multi(src, ell, 4, total=N)


def _rll_decode(word: Sequence[int], params: ConstrainedParams) -> Word:
    N, ell = params.N, params.ell
    try:
        if params.rll_mode == ENUM:
            M = rll_enum.rank(N, ell, 4, word) - 1
            if M >> params.m:
                raise DecodeError("RLL word ranks beyond the payload range")
            return int_to_bits(M, params.m)
        if N <= rll_replace.max_block_len(ell, 4):
            return psi(rll_replace.decode_rll_b(word, ell, 4))
        return psi(rll_replace.decode_rll_b_multi(word, ell, 4))
    except (rll_enum.RankError, rll_replace.ReplaceError) as exc:
        raise DecodeError(str(exc)) from None


def encode_constrained(x: Sequence[int], params: ConstrainedParams) -> Word:
    if len(x) != params.m:
        raise ParamsError(f"payload must be {params.m} bits, got {len(x)}")
    N = params.N
    s2 = _rll_encode(x, params)
    S = params.index_set
    t = find_balance_index_q(s2, params.eps)
    s3 = flip_prefix_q(s2, t)
    p = index_encode(t, S, params.k)
    head, tail = s3[:t], s3[t:]
    g = splice_symbol(head[-1] if t else None, tail[0] if t < N else None)
    g2 = splice_symbol(tail[-1] if t < N else g, p[0] if p else None)
    return head + (g,) + tail + (g2,) + p + (FLIP[g], FLIP[g2])


def decode_constrained(sigma: Sequence[int], params: ConstrainedParams) -> Word:
    n, k, N = params.n, params.k, params.N
    if len(sigma) != n:
        raise DecodeError(f"strand length {len(sigma)} != {n}")
    p = sigma[n - 2 * k - 2 : n - 2]
    if any(FLIP[a] != b for a, b in zip(p[0::2], p[1::2])):
        raise DecodeError("index pointer is not f-interleaved")
    try:
        t = index_decode(p, params.index_set)
    except BalanceError as exc:
        raise DecodeError(str(exc)) from None
    body = flip_prefix_q(sigma[: N + 1], t)
    return _rll_decode(body[:t] + body[t + 1 :], params)


def capacity_root(ell: int, q: int = 4, tol: float = 1e-12) -> float:
    """Largest real root of ``x^ell - (q-1) * sum_{i<ell} x^i``."""
    if ell < 1 or q < 2:
        raise ValueError("need ell >= 1 and q >= 2")

    def poly(x):
        return x**ell - (q - 1) * sum(x**i for i in range(ell))

    lo, hi = 1.0, float(q)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if poly(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def capacity_asymptotic(ell: int, q: int = 4) -> float:
    """Bits per symbol, ``log2`` of the growth rate of RLL words."""
    return math.log2(capacity_root(ell, q))


def finite_rate(n: int, ell: int, q: int = 4) -> float:
    if n < 1:
        raise ValueError("n >= 1 required")
    return math.log2(rll_enum.count_rll(n, ell, q)) / n


def encoder_rate(params: ConstrainedParams) -> float:
    return params.rate
