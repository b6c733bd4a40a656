"""Quaternary/binary word primitives shared by every codec.

Words are plain tuples of ints. Quaternary symbols live in {0, 1, 2, 3} and
render to DNA as 0->A, 1->T, 2->C, 3->G. A symbol v corresponds to the bit
pair (v // 2, v % 2); the high bits form the *upper* rail and the low bits
the *lower* rail of a word.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]

DNA = "ATCG"
_DNA_INDEX = {c: i for i, c in enumerate(DNA)}

# flipping rule: 0<->2, 1<->3 (toggles GC membership, keeps the low bit)
FLIP = (2, 3, 0, 1)


class AlphabetError(ValueError):
    pass


def as_word(symbols: Iterable[int], q: int = 4) -> Word:
    w = tuple(int(s) for s in symbols)
    for s in w:
        if not 0 <= s < q:
            raise AlphabetError(f"symbol {s} outside alphabet of size {q}")
    return w


def as_bits(bits: Iterable[int]) -> Word:
    return as_word(bits, 2)


def word_from_str(text: str) -> Word:
    """Parse a digit string such as ``"020313"``."""
    return tuple(int(c, 36) for c in text)


def word_to_str(w: Sequence[int]) -> str:
    return "".join("0123456789abcdefghijklmnopqrstuvwxyz"[s] for s in w)


def render_dna(w: Sequence[int]) -> str:
    return "".join(DNA[s] for s in w)


def parse_dna(text: str) -> Word:
    try:
        return tuple(_DNA_INDEX[c] for c in text)
    except KeyError as exc:
        raise AlphabetError(f"invalid nucleotide {exc.args[0]!r}") from None


def psi(w: Sequence[int]) -> Word:
    out = []
    for v in w:
        out.append(v >> 1)
        out.append(v & 1)
    return tuple(out)


def psi_inv(bits: Sequence[int]) -> Word:
    if len(bits) % 2:
        raise AlphabetError("odd-length bit word has no quaternary image")
    return tuple(2 * bits[i] + bits[i + 1] for i in range(0, len(bits), 2))


def upper(w: Sequence[int]) -> Word:
    return tuple(v >> 1 for v in w)


def lower(w: Sequence[int]) -> Word:
    return tuple(v & 1 for v in w)


def from_rails(up: Sequence[int], low: Sequence[int]) -> Word:
    """Inverse of ``(upper(w), lower(w))``."""
    if len(up) != len(low):
        raise AlphabetError("rails differ in length")
    return tuple(2 * u + b for u, b in zip(up, low))


def interleave(x: Sequence[int], y: Sequence[int]) -> Word:
    if len(x) != len(y):
        raise AlphabetError(f"cannot interleave lengths {len(x)} and {len(y)}")
    out = []
    for a, b in zip(x, y):
        out.append(a)
        out.append(b)
    return tuple(out)


def gc_count(w: Sequence[int]) -> int:
    return sum(1 for v in w if v >= 2)


def gc_weight(w: Sequence[int]) -> Fraction:
    """Fraction of symbols in {2, 3} (C or G)."""
    if not w:
        raise AlphabetError("GC weight of the empty word is undefined")
    return Fraction(gc_count(w), len(w))


def within_balance(ones: int, length: int, eps: Fraction) -> bool:
    """``|ones/length - 1/2| <= eps`` in exact arithmetic."""
    return abs(2 * ones - length) <= 2 * eps * length


def is_eps_balanced(w: Sequence[int], eps) -> bool:
    if not w:
        raise AlphabetError("balance of the empty word is undefined")
    eps = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    return within_balance(gc_count(w), len(w), eps)


def max_runlength(w: Sequence[int]) -> int:
    best = run = 0
    prev = None
    for s in w:
        run = run + 1 if s == prev else 1
        prev = s
        if run > best:
            best = run
    return best


def is_rll(w: Sequence[int], ell: int) -> bool:
    return max_runlength(w) <= ell


def flip_sym(s: int) -> int:
    return FLIP[s]


def flip_prefix_q(w: Sequence[int], t: int) -> Word:
    if not 0 <= t <= len(w):
        raise AlphabetError(f"flip index {t} outside [0, {len(w)}]")
    return tuple(FLIP[s] for s in w[:t]) + tuple(w[t:])


def flip_prefix_b(x: Sequence[int], t: int) -> Word:
    if not 0 <= t <= len(x):
        raise AlphabetError(f"flip index {t} outside [0, {len(x)}]")
    return tuple(1 - b for b in x[:t]) + tuple(x[t:])


def bits_to_int(bits: Sequence[int]) -> int:
    """Most-significant bit first."""
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def int_to_bits(value: int, width: int) -> Word:
    if value < 0 or value >> width:
        raise AlphabetError(f"{value} does not fit in {width} bits")
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def int_to_digits(value: int, width: int, base: int = 4) -> Word:
    """Fixed-width base-``base`` representation, most significant digit first."""
    digits = []
    for _ in range(width):
        value, r = divmod(value, base)
        digits.append(r)
    if value:
        raise AlphabetError(f"value does not fit in {width} base-{base} digits")
    return tuple(reversed(digits))


def digits_to_int(digits: Sequence[int], base: int = 4) -> int:
    v = 0
    for d in digits:
        v = v * base + d
    return v


def ceil_log(value: int, base: int) -> int:
    """Smallest ``k`` with ``base**k >= value``."""
    k, cap = 0, 1
    while cap < value:
        cap *= base
        k += 1
    return k
