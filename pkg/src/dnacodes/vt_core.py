"""Varshamov-Tenengolts style single-error codes.

* ``VT_a(n)``: binary words with ``syn(x) = a (mod n+1)``; one indel.
* ``L_a(n)``: binary words with ``syn(x) = a (mod 2n)``; one edit.
* ``T_{a,b}(n; q)``: q-ary words whose signature lies in ``VT_a(n-1)`` and
  whose symbol sum is ``b (mod q)``; one indel.

Positions are 1-indexed in the syndrome. Decoders raise :class:`VTError` when
the received word is inconsistent with every codeword they could return.
"""

from __future__ import annotations

from typing import Sequence

from .alphabet import Word


class VTError(ValueError):
    pass


def syn(x: Sequence[int]) -> int:
    return sum(i for i, b in enumerate(x, 1) if b)


def signature(x: Sequence[int]) -> Word:
    if not x:
        raise VTError("signature of the empty word is undefined")
    return tuple(1 if x[i + 1] >= x[i] else 0 for i in range(len(x) - 1))


def _insert_bit(y: Sequence[int], d: int) -> Word:
    """Undo one deletion given the syndrome deficiency ``d``."""
    w = sum(y)
    y = list(y)
    if d <= w:
        # a 0 was lost; it had d ones to its right
        seen = 0
        pos = len(y)
        while seen < d:
            pos -= 1
            seen += y[pos]
        y.insert(pos, 0)
        return tuple(y)
    zeros_left = d - w - 1
    if zeros_left > len(y) - w:
        raise VTError("syndrome deficiency inconsistent with a single deletion")
    pos = 0
    seen = 0
    while seen < zeros_left:
        seen += 1 - y[pos]
        pos += 1
    y.insert(pos, 1)
    return tuple(y)


def _delete_bit(y: Sequence[int], d: int) -> Word:
    """Undo one insertion given the syndrome excess ``d``."""
    w = sum(y)
    y = list(y)
    if d == 0:
        del y[-1]
    elif d < w:
        seen = 0
        for pos in range(len(y) - 1, -1, -1):
            if y[pos]:
                seen += 1
            elif seen == d:
                del y[pos]
                break
        else:
            raise VTError("no zero with the required ones to its right")
    elif d == w:
        del y[0]
    else:
        target = d - w
        seen = 0
        for pos, b in enumerate(y):
            if b:
                if seen == target:
                    del y[pos]
                    break
            else:
                seen += 1
        else:
            raise VTError("no one with the required zeros to its left")
    return tuple(y)


def vt_correct(y: Sequence[int], a: int, n: int, modulus: int) -> Word:
    """Correct at most one indel in ``y`` for the code ``syn = a (mod modulus)``.

    ``modulus`` must be at least ``n + 1``.
    """
    if modulus < n + 1:
        raise ValueError("modulus must be >= n + 1 for indel correction")
    if len(y) == n:
        x = tuple(y)
    elif len(y) == n - 1:
        x = _insert_bit(y, (a - syn(y)) % modulus)
    elif len(y) == n + 1:
        x = _delete_bit(y, (syn(y) - a) % modulus)
    else:
        raise VTError(f"length {len(y)} is not within one of {n}")
    if syn(x) % modulus != a % modulus:
        raise VTError("received word is not within one indel of the code")
    return x


def decode_vt_indel(y: Sequence[int], a: int, n: int) -> Word:
    return vt_correct(y, a, n, n + 1)


def decode_lev_edit(y: Sequence[int], a: int, n: int) -> Word:
    """Correct one substitution, deletion or insertion for ``L_a(n)``."""
    M = 2 * n
    if len(y) != n:
        return vt_correct(y, a, n, M)
    d = (a - syn(y)) % M
    x = list(y)
    if d:
        if d <= n and x[d - 1] == 0:
            x[d - 1] = 1
        elif d >= n and x[M - d - 1] == 1:
            x[M - d - 1] = 0
        else:
            raise VTError("syndrome does not point at a correctable bit")
    return tuple(x)


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    i = 0
    for u, v in zip(a, b):
        if u != v:
            break
        i += 1
    return i


def _reinsert_symbol(y: Sequence[int], s: int, target: Sequence[int]) -> Word:
    """Insert ``s`` into ``y`` so that the signature becomes ``target``."""
    L = len(y)
    g = signature(y) if L else ()
    pm = _common_prefix(target, g)
    s0 = L  # smallest i >= 1 with target[i] == g[i-1] for all i in [s0, L-1]
    while s0 > 1 and target[s0 - 1] == g[s0 - 2]:
        s0 -= 1
    for j in range(L + 1):
        if j >= 1 and (j - 1 > pm or target[j - 1] != (1 if s >= y[j - 1] else 0)):
            continue
        if j <= L - 1 and target[j] != (1 if y[j] >= s else 0):
            continue
        if j + 1 < s0 and j + 1 <= L - 1:
            continue
        return tuple(y[:j]) + (s,) + tuple(y[j:])
    raise VTError("no insertion point reproduces the signature")


def _remove_symbol(y: Sequence[int], s: int, target: Sequence[int]) -> Word:
    """Delete one ``s`` from ``y`` so that the signature becomes ``target``."""
    L = len(y)
    h = signature(y)
    pm = _common_prefix(target, h)
    s0 = L - 2  # smallest i with target[i] == h[i+1] for all i in [s0, L-3]
    while s0 > 0 and target[s0 - 1] == h[s0]:
        s0 -= 1
    for j in range(L):
        if y[j] != s or j < s0:
            continue
        if j >= 1 and j - 1 > pm:
            continue
        if 1 <= j <= L - 2 and target[j - 1] != (1 if y[j + 1] >= y[j - 1] else 0):
            continue
        return tuple(y[:j]) + tuple(y[j + 1 :])
    raise VTError("no deletion reproduces the signature")


def in_tenengolts(x: Sequence[int], a: int, b: int, q: int) -> bool:
    n = len(x)
    return sum(x) % q == b % q and syn(signature(x)) % n == a % n


def decode_tenengolts(y: Sequence[int], a: int, b: int, n: int, q: int = 4) -> Word:
    """Correct at most one indel for ``T_{a,b}(n; q)``."""
    if len(y) == n:
        x = tuple(y)
    elif len(y) == n - 1:
        s = (b - sum(y)) % q
        if n == 1:
            x = (s,)
        else:
            sig = signature(y) if y else ()
            x = _reinsert_symbol(y, s, vt_correct(sig, a, n - 1, n))
    elif len(y) == n + 1:
        s = (sum(y) - b) % q
        if n == 1:
            if s not in y:
                raise VTError("inserted symbol not present")
            x = list(y)
            x.remove(s)
            x = tuple(x)
        else:
            x = _remove_symbol(y, s, vt_correct(signature(y), a, n - 1, n))
    else:
        raise VTError(f"length {len(y)} is not within one of {n}")
    if not in_tenengolts(x, a, b, q):
        raise VTError("received word is not within one indel of the code")
    return x
