"""Sequence-replacement RLL encoder working in the differential domain.

The encoder appends a terminator to the source block, then repeatedly removes
the leftmost ``0^ell`` and appends an ``ell``-symbol pointer ``R e`` naming its
position. The pointer's last symbol ``e`` is never the terminator, so the
decoder peels pointers off the end until it sees the terminator. A word whose
differential has no ``0^ell`` is ``ell``-runlength limited, so the codeword is
the inverse differential of the replaced block.

Single-block mode terminates with ``0`` and uses ``e != 0``. Multi-block mode
terminates each block with ``1`` and uses ``e not in {0, 1}``, so every block
ends in a nonzero differential symbol and zero runs never span blocks.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .alphabet import Word

SINGLE = "single"
MULTI = "multi"


class ReplaceError(ValueError):
    pass


def diff(x: Sequence[int], q: int = 4) -> Word:
    prev = 0
    out = []
    for s in x:
        out.append((s - prev) % q)
        prev = s
    return tuple(out)


def diff_inv(y: Sequence[int], q: int = 4) -> Word:
    acc = 0
    out = []
    for s in y:
        acc = (acc + s) % q
        out.append(acc)
    return tuple(out)


def _e_min(variant: str) -> int:
    if variant == SINGLE:
        return 1
    if variant == MULTI:
        return 2
    raise ValueError(f"unknown variant {variant!r}")


def max_block_len(ell: int, q: int = 4, variant: str = SINGLE) -> int:
    """Longest encoded block (source length + 1) the pointer space can address."""
    if ell < 2:
        raise ValueError("sequence replacement needs ell >= 2")
    return (q - _e_min(variant)) * q ** (ell - 1) + ell - 1


def pointer_encode(p: int, ell: int, q: int, variant: str) -> Word:
    v = p - 1
    hi, lo = divmod(v, q ** (ell - 1))
    e = _e_min(variant) + hi
    if v < 0 or e >= q:
        raise ReplaceError(f"position {p} not addressable")
    digits = []
    for _ in range(ell - 1):
        lo, r = divmod(lo, q)
        digits.append(r)
    return tuple(reversed(digits)) + (e,)


def pointer_decode(ptr: Sequence[int], ell: int, q: int, variant: str) -> int:
    e = ptr[-1]
    if e < _e_min(variant):
        raise ReplaceError("pointer tail symbol out of range")
    lo = 0
    for d in ptr[:-1]:
        lo = lo * q + d
    return (e - _e_min(variant)) * q ** (ell - 1) + lo + 1


def _find_zero_run(y: List[int], ell: int) -> int:
    """0-based start of the leftmost ``0^ell`` or -1."""
    run = 0
    for i, s in enumerate(y):
        if s == 0:
            run += 1
            if run == ell:
                return i - ell + 1
        else:
            run = 0
    return -1


def replace_block(x: Sequence[int], ell: int, q: int, variant: str) -> Word:
    """Differential-domain block: ``x`` + terminator with all ``0^ell`` replaced."""
    length = len(x) + 1
    if length > max_block_len(ell, q, variant):
        raise ReplaceError(
            f"block of {length} symbols exceeds {max_block_len(ell, q, variant)}"
        )
    y = list(x)
    y.append(0 if variant == SINGLE else 1)
    while True:
        start = _find_zero_run(y, ell)
        if start < 0:
            return tuple(y)
        del y[start : start + ell]
        y.extend(pointer_encode(start + 1, ell, q, variant))


def restore_block(y: Sequence[int], ell: int, q: int, variant: str) -> Word:
    term = 0 if variant == SINGLE else 1
    w = list(y)
    if not w:
        raise ReplaceError("empty block")
    # each undo step strictly grows the zero count; bound guards corrupt input
    for _ in range(len(w) + 1):
        if w[-1] == term:
            return tuple(w[:-1])
        if len(w) < ell:
            raise ReplaceError("truncated pointer")
        ptr = w[-ell:]
        del w[-ell:]
        p = pointer_decode(ptr, ell, q, variant)
        if p > len(w) + 1:
            raise ReplaceError(f"pointer position {p} beyond block")
        w[p - 1 : p - 1] = [0] * ell
    raise ReplaceError("malformed block: no terminator reached")


def encode_rll_b(x: Sequence[int], ell: int, q: int = 4) -> Word:
    return diff_inv(replace_block(x, ell, q, SINGLE), q)


def decode_rll_b(c: Sequence[int], ell: int, q: int = 4) -> Word:
    return restore_block(diff(c, q), ell, q, SINGLE)


def multi_block_layout(total: int, ell: int, q: int = 4) -> Tuple[int, ...]:
    """Encoded block lengths for an output of ``total`` symbols."""
    cap = max_block_len(ell, q, MULTI)
    if total < 1:
        raise ReplaceError("need at least one output symbol")
    blocks = -(-total // cap)
    return (cap,) * (blocks - 1) + (total - cap * (blocks - 1),)


def multi_output_len(source_len: int, ell: int, q: int = 4) -> int:
    cap = max_block_len(ell, q, MULTI)
    return source_len + max(1, -(-source_len // (cap - 1)))


def encode_rll_b_multi(
    x: Sequence[int], ell: int, q: int = 4, total: int | None = None
) -> Word:
    """Encode ``x`` block by block; output length is ``total`` (default: minimal)."""
    if q < 3:
        raise ReplaceError("multi-block replacement needs q >= 3")
    if total is None:
        total = multi_output_len(len(x), ell, q)
    layout = multi_block_layout(total, ell, q)
    if len(x) != total - len(layout):
        raise ReplaceError(
            f"source of {len(x)} symbols does not fit {total} output symbols"
        )
    y: List[int] = []
    pos = 0
    for size in layout:
        y.extend(replace_block(x[pos : pos + size - 1], ell, q, MULTI))
        pos += size - 1
    return diff_inv(y, q)


def decode_rll_b_multi(c: Sequence[int], ell: int, q: int = 4) -> Word:
    """Inverse of :func:`encode_rll_b_multi`; block boundaries follow from ``len(c)``."""
    y = diff(c, q)
    out: List[int] = []
    pos = 0
    for size in multi_block_layout(len(y), ell, q):
        out.extend(restore_block(y[pos : pos + size], ell, q, MULTI))
        pos += size
    return tuple(out)


def replace_redundancy(total: int, ell: int, q: int = 4) -> int:
    """Redundant symbols when encoding to ``total`` output symbols."""
    if total <= max_block_len(ell, q, SINGLE):
        return 1
    return len(multi_block_layout(total, ell, q))
