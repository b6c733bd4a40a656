"""Knuth-style GC balancing with a constant-size index.

Flipping a prefix of length ``t`` drawn from a sparse index set is always
enough to bring the weight within ``eps`` of one half. Two encoders are
provided: one that hides the index in the lower rail of the quaternary word
(``encode_gc_c``) and one that flips quaternary symbols directly and appends a
balanced, run-free index pointer (``encode_gc_d``).

The index is represented by its zero-based rank inside the sorted index set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Sequence, Tuple

from .alphabet import (
    FLIP,
    Word,
    digits_to_int,
    flip_prefix_b,
    flip_prefix_q,
    from_rails,
    int_to_bits,
    int_to_digits,
    lower,
    psi,
    psi_inv,
    upper,
    bits_to_int,
    ceil_log,
)


class BalanceError(ValueError):
    pass


def as_eps(eps) -> Fraction:
    if isinstance(eps, str):
        eps = Fraction(eps.strip())
    eps = Fraction(eps) if not isinstance(eps, float) else Fraction(str(eps))
    if eps <= 0:
        raise BalanceError("eps must be positive")
    return eps


def index_points(eps) -> int:
    """``floor(1/(2 eps)) + 1``: the nominal number of balancing indices."""
    eps = as_eps(eps)
    return int(1 / (2 * eps)) + 1


def index_bits(eps) -> int:
    return ceil_log(index_points(eps), 2)


def index_digits(eps) -> int:
    return ceil_log(index_points(eps), 4)


@dataclass(frozen=True)
class BalanceIndexSet:
    eps: Fraction
    n: int
    indices: Tuple[int, ...]

    @cached_property
    def slack(self) -> int:
        """Largest admissible ``|2*wt - n|``."""
        return int(2 * self.eps * self.n)

    def rank_of(self, t: int) -> int:
        try:
            return self.indices.index(t)
        except ValueError:
            raise BalanceError(f"{t} is not a balancing index for n={self.n}") from None

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def balance_set(eps, n: int) -> BalanceIndexSet:
    return _balance_set(as_eps(eps), n)


@lru_cache(maxsize=256)
def _balance_set(eps: Fraction, n: int) -> BalanceIndexSet:
    if n % 2:
        raise BalanceError(f"length {n} must be even")
    step = int(eps * n)
    if step < 1:
        raise BalanceError(f"floor(eps*n) = 0 for eps={eps}, n={n}")
    idx = set(range(0, n + 1, 2 * step))
    idx.add(n)
    return BalanceIndexSet(eps, n, tuple(sorted(idx)))


def _first_balancing(ones: int, prefix_ones, S: BalanceIndexSet) -> int:
    # weight after flipping the first t positions: ones + t - 2*prefix_ones[t]
    n, lim = S.n, S.slack
    for t in S.indices:
        w = ones + t - 2 * prefix_ones[t]
        if abs(2 * w - n) <= lim:
            return t
    raise BalanceError("no balancing index found")  # unreachable for valid input


def _prefix_counts(bits: Sequence[int]):
    acc = [0]
    s = 0
    for b in bits:
        s += b
        acc.append(s)
    return acc


def find_balance_index_b(x: Sequence[int], eps) -> int:
    S = balance_set(eps, len(x))
    pre = _prefix_counts(x)
    return _first_balancing(pre[-1], pre, S)


def find_balance_index_q(w: Sequence[int], eps) -> int:
    return find_balance_index_b(upper(w), eps)


def check_capacity(S: BalanceIndexSet, points: int) -> None:
    if len(S) > points:
        raise BalanceError(
            f"{len(S)} balancing indices for n={S.n}, eps={S.eps} exceed the "
            f"{points} index code points; choose a larger n"
        )


def encode_gc_c(x: Sequence[int], y: Sequence[int], eps) -> Word:
    """Binary-template encoder: ``n`` upper bits plus ``n - k`` lower bits."""
    n = len(x)
    k = index_bits(eps)
    if len(y) != n - k:
        raise BalanceError(f"lower payload must be {n - k} bits, got {len(y)}")
    S = balance_set(eps, n)
    check_capacity(S, 2**k)
    pre = _prefix_counts(x)
    t = _first_balancing(pre[-1], pre, S)
    z = int_to_bits(S.rank_of(t), k)
    return from_rails(flip_prefix_b(x, t), tuple(y) + z)


def decode_gc_c(sigma: Sequence[int], eps) -> Tuple[Word, Word]:
    n = len(sigma)
    k = index_bits(eps)
    S = balance_set(eps, n)
    up, low = upper(sigma), lower(sigma)
    r = bits_to_int(low[n - k :])
    if r >= len(S):
        raise BalanceError(f"index code {r} unused for n={n}")
    return flip_prefix_b(up, S.indices[r]), low[: n - k]


def index_encode(t: int, S: BalanceIndexSet, k: int) -> Word:
    """Interleave the base-4 rank of ``t`` with its flipped image."""
    out = []
    for d in int_to_digits(S.rank_of(t), k, 4):
        out.append(d)
        out.append(FLIP[d])
    return tuple(out)


def index_decode(p: Sequence[int], S: BalanceIndexSet) -> int:
    r = digits_to_int(p[0::2], 4)
    if r >= len(S):
        raise BalanceError(f"index pointer rank {r} unused (|S|={len(S)})")
    return S.indices[r]


def gc_d_payload_bits(n: int, eps) -> int:
    return 2 * n - 4 * index_digits(eps)


def encode_gc_d(x: Sequence[int], n: int, eps) -> Word:
    k = index_digits(eps)
    m = 2 * n - 4 * k
    if len(x) != m:
        raise BalanceError(f"payload must be {m} bits, got {len(x)}")
    S = balance_set(eps, n - 2 * k)
    check_capacity(S, 4**k)
    body = psi_inv(x)
    t = find_balance_index_q(body, S.eps)
    return flip_prefix_q(body, t) + index_encode(t, S, k)


def decode_gc_d(sigma: Sequence[int], eps) -> Word:
    k = index_digits(eps)
    n = len(sigma)
    S = balance_set(eps, n - 2 * k)
    t = index_decode(sigma[n - 2 * k :], S)
    return psi(flip_prefix_q(sigma[: n - 2 * k], t))
