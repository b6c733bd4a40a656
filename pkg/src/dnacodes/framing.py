"""Strand codecs and byte-stream framing for files.

The file's bits are prefixed with one byte holding the number of whole
padding bytes, then split into ``m``-bit chunks with the last chunk
zero-padded. The sub-byte part of the padding follows from ``strands * m``
modulo 8, so the header fits in 8 bits whenever ``m <= 2048``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from . import gc_balance
from .alphabet import Word
from .constrained import REPLACE, ConstrainedParams, DecodeError
from .error_control import NONE, decode_protected, encode_protected, strand_len

GC_C = "c"
GC_D = "d"
MAX_CHUNK_BITS = 2048


class FramingError(ValueError):
    pass


@dataclass(frozen=True)
class StrandCodec:
    """A fixed-rate map between ``m``-bit chunks and DNA strands."""

    m: int
    length: int
    encode: Callable[[Sequence[int]], Word]
    decode: Callable[[Sequence[int]], Word]
    description: str


def make_codec(
    n: int,
    ell: int,
    eps,
    rll_mode: str = REPLACE,
    protect: str = NONE,
    gc_mode: Optional[str] = None,
) -> StrandCodec:
    if gc_mode is None:
        params = ConstrainedParams(n, ell, eps, rll_mode)
        return StrandCodec(
            params.m,
            strand_len(params, protect),
            lambda x: encode_protected(x, params, protect),
            lambda w: decode_protected(w, params, protect),
            f"constrained n={n} ell={ell} eps={params.eps} rll={rll_mode} protect={protect}",
        )
    if protect != NONE:
        raise ValueError("--gc-mode codecs carry no error protection; use --protect none")
    eps = gc_balance.as_eps(eps)
    if gc_mode == GC_C:
        k = gc_balance.index_bits(eps)
        gc_balance.check_capacity(gc_balance.balance_set(eps, n), 2**k)

        def enc(x):
            return gc_balance.encode_gc_c(x[:n], x[n:], eps)

        def dec(w):
            up, low = gc_balance.decode_gc_c(w, eps)
            return up + low

        return StrandCodec(2 * n - k, n, enc, dec, f"gc-c n={n} eps={eps}")
    if gc_mode == GC_D:
        k = gc_balance.index_digits(eps)
        gc_balance.check_capacity(gc_balance.balance_set(eps, n - 2 * k), 4**k)
        return StrandCodec(
            gc_balance.gc_d_payload_bits(n, eps),
            n,
            lambda x: gc_balance.encode_gc_d(x, n, eps),
            lambda w: gc_balance.decode_gc_d(w, eps),
            f"gc-d n={n} eps={eps}",
        )
    raise ValueError(f"unknown gc mode {gc_mode!r}")


def _bits_of(data: bytes) -> str:
    if not data:
        return ""
    return format(int.from_bytes(data, "big"), f"0{8 * len(data)}b")


def frame_bits(data: bytes, m: int) -> List[Word]:
    """Split ``data`` into ``m``-bit chunks behind a one-byte padding header."""
    if not data:
        return []
    if m > MAX_CHUNK_BITS:
        raise FramingError(f"chunks of {m} bits exceed the {MAX_CHUNK_BITS}-bit framing limit")
    total = 8 + 8 * len(data)
    strands = -(-total // m)
    pad = strands * m - total
    stream = _bits_of(bytes([pad // 8]) + data) + "0" * pad
    return [tuple(map(int, stream[i : i + m])) for i in range(0, len(stream), m)]


def unframe_bits(chunks: Sequence[Sequence[int]], m: int) -> bytes:
    if not chunks:
        return b""
    if any(len(c) != m for c in chunks):
        raise FramingError("chunk length mismatch")
    stream = "".join("".join(map(str, c)) for c in chunks)
    pad = 8 * int(stream[:8], 2) + len(stream) % 8
    body = stream[8 : len(stream) - pad]
    if pad >= m or len(body) % 8:
        raise FramingError("inconsistent padding header")
    if "1" in stream[len(stream) - pad :]:
        raise FramingError("nonzero padding bits")
    return int(body, 2).to_bytes(len(body) // 8, "big") if body else b""


def encode_file(data: bytes, codec: StrandCodec) -> List[Word]:
    return [codec.encode(c) for c in frame_bits(data, codec.m)]


def decode_file(strands: Sequence[Sequence[int]], codec: StrandCodec) -> bytes:
    chunks = []
    for i, s in enumerate(strands, 1):
        try:
            chunks.append(codec.decode(s))
        except (DecodeError, ValueError) as exc:
            raise DecodeError(f"strand {i}: {exc}") from None
    return unframe_bits(chunks, codec.m)

