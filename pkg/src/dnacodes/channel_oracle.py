"""Single-error balls and seeded error injection.

Kinds: ``D`` (deletion), ``I`` (insertion), ``S`` (substitution, the ball
includes the word itself), ``indel`` = D + I, ``edit`` = D + I + S.
Positions in :class:`ErrorSpec` are 1-indexed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Set, Tuple

from .alphabet import Word

DELETION = "D"
INSERTION = "I"
SUBSTITUTION = "S"
KINDS = {
    DELETION: (DELETION,),
    INSERTION: (INSERTION,),
    SUBSTITUTION: (SUBSTITUTION,),
    "indel": (DELETION, INSERTION),
    "edit": (DELETION, INSERTION, SUBSTITUTION),
}


class ChannelError(ValueError):
    pass


@dataclass(frozen=True)
class ErrorSpec:
    kind: str
    position: int
    symbol: Optional[int] = None

    def __str__(self):
        sym = "" if self.symbol is None else f":{self.symbol}"
        return f"{self.kind}@{self.position}{sym}"


def _kinds(kind: str) -> Tuple[str, ...]:
    try:
        return KINDS[kind]
    except KeyError:
        raise ChannelError(f"unknown error kind {kind!r}") from None


def error_specs(x: Sequence[int], kind: str, q: int = 4) -> Iterator[ErrorSpec]:
    """Every single error of ``kind`` applicable to ``x`` (not deduplicated)."""
    n = len(x)
    for k in _kinds(kind):
        if k == DELETION:
            for i in range(1, n + 1):
                yield ErrorSpec(DELETION, i)
        elif k == INSERTION:
            for i in range(1, n + 2):
                for s in range(q):
                    yield ErrorSpec(INSERTION, i, s)
        else:
            for i in range(1, n + 1):
                for s in range(q):
                    if s != x[i - 1]:
                        yield ErrorSpec(SUBSTITUTION, i, s)


def inject(x: Sequence[int], spec: ErrorSpec) -> Word:
    x = tuple(x)
    i = spec.position
    if spec.kind == DELETION:
        if not 1 <= i <= len(x):
            raise ChannelError(f"deletion position {i} outside 1..{len(x)}")
        return x[: i - 1] + x[i:]
    if spec.kind == INSERTION:
        if not 1 <= i <= len(x) + 1 or spec.symbol is None:
            raise ChannelError(f"invalid insertion {spec}")
        return x[: i - 1] + (spec.symbol,) + x[i - 1 :]
    if spec.kind == SUBSTITUTION:
        if not 1 <= i <= len(x) or spec.symbol is None:
            raise ChannelError(f"invalid substitution {spec}")
        if x[i - 1] == spec.symbol:
            raise ChannelError("substitution must change the symbol")
        return x[: i - 1] + (spec.symbol,) + x[i:]
    raise ChannelError(f"unknown error kind {spec.kind!r}")


def ball(x: Sequence[int], kind: str, q: int = 4) -> Set[Word]:
    x = tuple(x)
    out = {inject(x, spec) for spec in error_specs(x, kind, q)}
    if SUBSTITUTION in _kinds(kind):
        out.add(x)
    return out


def random_spec(x: Sequence[int], kind: str, rng: random.Random, q: int = 4) -> ErrorSpec:
    k = rng.choice(_kinds(kind))
    n = len(x)
    if k == DELETION:
        if n == 0:
            raise ChannelError("cannot delete from an empty word")
        return ErrorSpec(DELETION, rng.randint(1, n))
    if k == INSERTION:
        return ErrorSpec(INSERTION, rng.randint(1, n + 1), rng.randrange(q))
    if n == 0:
        raise ChannelError("cannot substitute in an empty word")
    i = rng.randint(1, n)
    s = rng.choice([v for v in range(q) if v != x[i - 1]])
    return ErrorSpec(SUBSTITUTION, i, s)


def inject_random(x: Sequence[int], kind: str, seed: int, q: int = 4) -> Tuple[Word, ErrorSpec]:
    spec = random_spec(x, kind, random.Random(seed), q)
    return inject(x, spec), spec
