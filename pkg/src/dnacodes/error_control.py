"""Constrained strands that also survive one indel or one edit.

A constrained codeword ``s`` of length ``n`` is followed by a pointer of
symbol pairs ``u f(u)``::

    indel: beta f(beta) [digits of a] b f(b)          a = syn(signature(s)) mod n
    edit:  beta f(beta) [digits of a] [digits of b] c f(c)
                                                      a, b = rail syndromes mod 2n

``beta`` differs from both the last symbol of ``s`` and its flip, so the
decoder can tell whether an indel hit the payload or the pointer by checking
where the ``u f(u)`` pairing still lines up. Every pair contributes exactly one
GC symbol, so the pointer is balanced and never extends a run past two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .alphabet import (
    FLIP,
    Word,
    ceil_log,
    digits_to_int,
    from_rails,
    int_to_digits,
    lower,
    upper,
)
from .constrained import (
    ConstrainedParams,
    DecodeError,
    decode_constrained,
    encode_constrained,
)
from .vt_core import VTError, decode_lev_edit, decode_tenengolts, signature, syn

NONE = "none"
INDEL = "indel"
EDIT = "edit"
PROTECT_MODES = (NONE, INDEL, EDIT)


def syndrome_digits(n: int, kind: str) -> int:
    """Quaternary digits per syndrome: ``ceil(log4(modulus))``."""
    if kind == INDEL:
        return ceil_log(n, 4)
    if kind == EDIT:
        return ceil_log(2 * n, 4)
    raise ValueError(f"unknown protection {kind!r}")


def k_prime(n: int, kind: str) -> int:
    return 2 * syndrome_digits(n, kind)


def pointer_len(n: int, kind: str) -> int:
    if kind == NONE:
        return 0
    if kind == INDEL:
        return k_prime(n, kind) + 4
    return 2 * k_prime(n, kind) + 4


def strand_len(params: ConstrainedParams, kind: str) -> int:
    return params.n + pointer_len(params.n, kind)


@dataclass(frozen=True)
class EccPointer:
    beta: int
    digits: Tuple[int, ...]
    tail: int

    def symbols(self) -> Word:
        out = []
        for d in (self.beta,) + self.digits + (self.tail,):
            out.append(d)
            out.append(FLIP[d])
        return tuple(out)


def pick_beta(alpha: int) -> int:
    return min(s for s in range(4) if s != alpha and s != FLIP[alpha])


def indel_pointer(s: Sequence[int]) -> EccPointer:
    n = len(s)
    a = syn(signature(s)) % n
    return EccPointer(pick_beta(s[-1]), int_to_digits(a, syndrome_digits(n, INDEL)), sum(s) % 4)


def edit_pointer(s: Sequence[int]) -> EccPointer:
    n = len(s)
    kd = syndrome_digits(n, EDIT)
    a = syn(upper(s)) % (2 * n)
    b = syn(lower(s)) % (2 * n)
    digits = int_to_digits(a, kd) + int_to_digits(b, kd)
    return EccPointer(pick_beta(s[-1]), digits, sum(s) % 4)


def _read_pointer(p: Sequence[int]) -> EccPointer:
    # only the leading symbol of each pair carries a value
    vals = tuple(p[0::2])
    return EccPointer(vals[0], vals[1:-1], vals[-1])


def _payload_locus(r: Sequence[int], n: int, kind: str):
    """Split a received word of length ``n + P +- 1`` into (payload, pointer or None).

    A ``None`` pointer means the indel hit the pointer and ``payload`` is the
    untouched constrained codeword.
    """
    P = pointer_len(n, kind)
    if len(r) == n + P - 1:
        if r[n] == FLIP[r[n - 1]]:
            return r[: n - 1], r[n - 1 :]
        return r[:n], None
    # insertion: the pair starting at n+1 lines up only if the payload grew
    if r[n + 1] != FLIP[r[n]] and r[n + 2] == FLIP[r[n + 1]]:
        return r[: n + 1], r[n + 1 :]
    return r[:n], None


def _check_len(r: Sequence[int], n: int, kind: str) -> None:
    P = pointer_len(n, kind)
    if abs(len(r) - (n + P)) > 1:
        raise DecodeError(f"strand length {len(r)} is not within one of {n + P}")


def encode_indel(x: Sequence[int], params: ConstrainedParams) -> Word:
    s = encode_constrained(x, params)
    return s + indel_pointer(s).symbols()


def decode_indel(r: Sequence[int], params: ConstrainedParams) -> Word:
    n = params.n
    r = tuple(r)
    _check_len(r, n, INDEL)
    if len(r) == n + pointer_len(n, INDEL):
        return decode_constrained(r[:n], params)
    payload, ptr = _payload_locus(r, n, INDEL)
    if ptr is not None:
        ep = _read_pointer(ptr)
        a = digits_to_int(ep.digits, 4)
        try:
            payload = decode_tenengolts(payload, a, ep.tail, n, 4)
        except VTError as exc:
            raise DecodeError(str(exc)) from None
    return decode_constrained(payload, params)


def encode_edit(x: Sequence[int], params: ConstrainedParams) -> Word:
    s = encode_constrained(x, params)
    return s + edit_pointer(s).symbols()


def _edit_correct(payload: Sequence[int], ep: EccPointer, n: int) -> Word:
    kd = syndrome_digits(n, EDIT)
    a = digits_to_int(ep.digits[:kd], 4)
    b = digits_to_int(ep.digits[kd:], 4)
    if a >= 2 * n or b >= 2 * n:
        raise DecodeError("syndrome digits out of range")
    try:
        return from_rails(
            decode_lev_edit(upper(payload), a, n), decode_lev_edit(lower(payload), b, n)
        )
    except VTError as exc:
        raise DecodeError(str(exc)) from None


def decode_edit(r: Sequence[int], params: ConstrainedParams) -> Word:
    n = params.n
    r = tuple(r)
    _check_len(r, n, EDIT)
    if len(r) == n + pointer_len(n, EDIT):
        payload, ep = r[:n], _read_pointer(r[n:])
        if ep.tail != sum(payload) % 4:
            # the payload is corrupt, or the tail was hit and the payload is clean
            payload = _edit_correct(payload, ep, n)
        return decode_constrained(payload, params)
    payload, ptr = _payload_locus(r, n, EDIT)
    if ptr is not None:
        payload = _edit_correct(payload, _read_pointer(ptr), n)
    return decode_constrained(payload, params)


def encode_protected(x: Sequence[int], params: ConstrainedParams, kind: str) -> Word:
    if kind == NONE:
        return encode_constrained(x, params)
    if kind == INDEL:
        return encode_indel(x, params)
    if kind == EDIT:
        return encode_edit(x, params)
    raise ValueError(f"unknown protection {kind!r}")


def decode_protected(r: Sequence[int], params: ConstrainedParams, kind: str) -> Word:
    if kind == NONE:
        return decode_constrained(r, params)
    if kind == INDEL:
        return decode_indel(r, params)
    if kind == EDIT:
        return decode_edit(r, params)
    raise ValueError(f"unknown protection {kind!r}")
