"""Enumerative coding of q-ary words whose runs are at most ``ell`` long.

Words of length ``n > ell`` are partitioned by the length ``i`` of their
terminal run. A word of class ``i`` is ``x + (a,) * i`` with ``x`` an RLL word
of length ``n - i`` and ``a`` the ``j``-th smallest symbol different from the
last symbol of ``x``. Words are ordered by class first, then by the rank of
``x``, then by ``j``. Words of length ``n <= ell`` are ordered
lexicographically. Ranks are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence

from .alphabet import Word, bits_to_int, int_to_bits, int_to_digits, max_runlength


class RankError(ValueError):
    pass


@dataclass
class RllCountTable:
    """Counts ``c[m] = |C(m, ell, q)|`` for ``0 <= m <= n_max``.

    The table grows on demand; previously computed entries never change.
    """

    ell: int
    q: int
    counts: List[int] = field(default_factory=lambda: [1])

    def __post_init__(self):
        if self.ell < 1 or self.q < 2:
            raise ValueError("need ell >= 1 and q >= 2")

    def __getitem__(self, m: int) -> int:
        self.extend(m)
        return self.counts[m]

    def extend(self, n_max: int) -> None:
        c = self.counts
        ell, q = self.ell, self.q
        while len(c) <= n_max:
            m = len(c)
            if m <= ell:
                c.append(q**m)
            else:
                c.append((q - 1) * sum(c[m - i] for i in range(1, ell + 1)))


@lru_cache(maxsize=None)
def count_table(ell: int, q: int) -> RllCountTable:
    return RllCountTable(ell, q)


def count_rll(n: int, ell: int, q: int) -> int:
    if n < 0:
        raise ValueError("negative length")
    return count_table(ell, q)[n]


def _nth_other(j: int, exclude: int) -> int:
    # j-th (1-based) smallest symbol != exclude
    return j - 1 if j - 1 < exclude else j


def unrank(n: int, ell: int, q: int, M: int) -> Word:
    table = count_table(ell, q)
    table.extend(n)
    c = table.counts
    if not 1 <= M <= c[n]:
        raise RankError(f"rank {M} outside [1, {c[n]}]")
    tails = []  # (run length, symbol index j), outermost first
    while n > ell:
        r = M
        for i in range(1, ell + 1):
            block = (q - 1) * c[n - i]
            if r <= block:
                break
            r -= block
        xrank = (r + q - 2) // (q - 1)
        tails.append((i, r - (xrank - 1) * (q - 1)))
        n -= i
        M = xrank
    out = list(int_to_digits(M - 1, n, q))
    for i, j in reversed(tails):
        a = _nth_other(j, out[-1])
        out.extend([a] * i)
    return tuple(out)


def rank(n: int, ell: int, q: int, w: Sequence[int]) -> int:
    if len(w) != n:
        raise RankError(f"word length {len(w)} != {n}")
    if any(not 0 <= s < q for s in w):
        raise RankError("symbol outside alphabet")
    if max_runlength(w) > ell:
        raise RankError(f"word has a run longer than {ell}")
    c = count_table(ell, q)
    c.extend(n)
    c = c.counts
    steps = []  # (offset, j) from the outside in
    end = n
    while end > ell:
        a = w[end - 1]
        i = 1
        while w[end - 1 - i] == a:
            i += 1
        prev = w[end - 1 - i]
        j = a + 1 if a < prev else a  # 1-based index among symbols != prev
        offset = sum((q - 1) * c[end - k] for k in range(1, i))
        steps.append((offset, j))
        end -= i
    M = 0
    for s in w[:end]:
        M = M * q + s
    M += 1
    for offset, j in reversed(steps):
        M = offset + (M - 1) * (q - 1) + j
    return M


def payload_bits(n: int, ell: int, q: int = 4) -> int:
    """``floor(log2 |C(n, ell, q)|)``."""
    return count_rll(n, ell, q).bit_length() - 1


def encode_rll_a(x: Sequence[int], n: int, ell: int, q: int = 4) -> Word:
    m = payload_bits(n, ell, q)
    if len(x) != m:
        raise ValueError(f"payload must be {m} bits, got {len(x)}")
    return unrank(n, ell, q, bits_to_int(x) + 1)


def decode_rll_a(c: Sequence[int], ell: int, q: int = 4) -> Word:
    n = len(c)
    m = payload_bits(n, ell, q)
    M = rank(n, ell, q, c) - 1
    if M >> m:
        raise RankError("word ranks beyond the payload range")
    return int_to_bits(M, m)
