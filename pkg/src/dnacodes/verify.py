"""Self-checks against brute-force oracles, grouped into suites.

Each criterion returns a :class:`CheckResult`; ``fast=True`` shrinks the
exhaustive bounds or sample sizes so the whole run stays under a minute.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from . import rll_enum, rll_replace
from .alphabet import flip_prefix_b, is_eps_balanced, is_rll, max_runlength, within_balance
from .channel_oracle import ball, error_specs, inject
from .constrained import (
    ENUM,
    REPLACE,
    ConstrainedParams,
    capacity_asymptotic,
    decode_constrained,
    encode_constrained,
    finite_rate,
)
from .error_control import EDIT, INDEL, decode_protected, encode_protected
from .gc_balance import find_balance_index_b, index_bits
from .tables import REFERENCE_CAPACITY, REFERENCE_RATE
from .vt_core import (
    decode_lev_edit,
    decode_tenengolts,
    decode_vt_indel,
    signature,
    syn,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"[{tag}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], tuple]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


def _words(q: int, n: int):
    return itertools.product(range(q), repeat=n)


def criterion_1(fast: bool = False) -> CheckResult:
    def run():
        got = [rll_enum.count_rll(m, 3, 4) for m in range(1, 6)]
        brute = [sum(1 for w in _words(4, m) if max_runlength(w) <= 3) for m in range(1, 6)]
        ok = got == [4, 16, 64, 252, 996] == brute
        return ok, f"counts {got}, brute force {brute}"

    return _timed("1 count table", run)


def criterion_2(fast: bool = False) -> CheckResult:
    def run():
        got = [rll_replace.max_block_len(ell, 4) for ell in range(2, 6)]
        return got == [13, 50, 195, 772], f"bounds {got}"

    return _timed("2 replacement bounds", run)


def criterion_3(fast: bool = False) -> CheckResult:
    n_max = 6 if fast else 9

    def run():
        cases = 0
        for q in (2, 3, 4):
            for ell in range(1, 5):
                for n in range(n_max + 1):
                    words = [w for w in _words(q, n) if max_runlength(w) <= ell]
                    count = rll_enum.count_rll(n, ell, q)
                    if count != len(words):
                        return False, f"count mismatch q={q} ell={ell} n={n}"
                    ranks = set()
                    for w in words:
                        r = rll_enum.rank(n, ell, q, w)
                        if rll_enum.unrank(n, ell, q, r) != w:
                            return False, f"unrank(rank({w})) differs"
                        ranks.add(r)
                    if ranks != set(range(1, count + 1)):
                        return False, f"rank image wrong q={q} ell={ell} n={n}"
                    cases += 1
        return True, f"{cases} (q, ell, n) cases bijective up to n={n_max}"

    return _timed("3 rank/unrank bijection", run)


def criterion_4(fast: bool = False) -> CheckResult:
    def run():
        parts, ok = [], True
        for n in (100, 200, 300):
            r = finite_rate(n, 4, 4)
            ok &= abs(r - REFERENCE_CAPACITY[n]) <= 5e-4
            parts.append(f"n={n}: {r:.5f} vs {REFERENCE_CAPACITY[n]}")
        cap = capacity_asymptotic(4, 4)
        ok &= 1.9947 <= cap <= 1.9967
        parts.append(f"asymptotic {cap:.5f}")
        return ok, "; ".join(parts)

    return _timed("4 finite rate", run)


def criterion_5(fast: bool = False) -> CheckResult:
    def run():
        parts, ok = [], True
        for mode in (REPLACE, ENUM):
            p = ConstrainedParams(200, 4, Fraction(1, 10), mode)
            red = p.r_rll + 2 * p.k + 4
            ok &= p.redundancy == red and p.m == 2 * p.n - 2 * red and p.rate >= 1.90
            parts.append(f"{mode}: redundancy {p.redundancy}, rate {p.rate:.3f}")
        parts.append(f"reference {REFERENCE_RATE[200]}")
        return ok, "; ".join(parts)

    return _timed("5 constrained rate", run)


def criterion_6(fast: bool = False) -> CheckResult:
    def run():
        k1, k2 = index_bits(Fraction(1, 10)), index_bits(Fraction(1, 20))
        r1, r2 = (400 - k1) / 200, (400 - k2) / 200
        ok = (k1, k2) == (3, 4) and round(r1, 3) == 1.985 and round(r2, 3) == 1.98
        return ok, f"index bits {k1}/{k2}, rates {r1:.3f}/{r2:.3f} at n=200"

    return _timed("6 GC redundancy", run)


def criterion_7(fast: bool = False) -> CheckResult:
    eps = Fraction(1, 10)
    samples = 20_000 if fast else 1_000_000

    def check(x):
        t = find_balance_index_b(x, eps)
        return within_balance(sum(flip_prefix_b(x, t)), len(x), eps)

    def run():
        rng = random.Random(7)
        total = 0
        for n in range(2, 21, 2):
            if int(eps * n) < 1:
                continue
            if n <= 16:
                it = itertools.product((0, 1), repeat=n)
            else:
                it = (tuple(rng.getrandbits(1) for _ in range(n)) for _ in range(samples))
            for x in it:
                if not check(x):
                    return False, f"no balancing index for {x}"
                total += 1
        return True, f"{total} words balanced (exhaustive n<=16, {samples} samples at 18, 20)"

    return _timed("7 balancing existence", run)


def criterion_8(fast: bool = False) -> CheckResult:
    modes = (REPLACE,) if fast else (REPLACE, ENUM)

    def run():
        for mode in modes:
            p = ConstrainedParams(16, 3, Fraction(1, 4), mode)
            for x in itertools.product((0, 1), repeat=p.m):
                c = encode_constrained(x, p)
                if not (is_rll(c, 3) and is_eps_balanced(c, p.eps)):
                    return False, f"{mode}: constraint violated for {x}"
                if decode_constrained(c, p) != x:
                    return False, f"{mode}: round trip failed for {x}"
        return True, f"all 2^{p.m} payloads at n=16 ({', '.join(modes)})"

    return _timed("8 constrained exhaustive", run)


def criterion_9(fast: bool = False) -> CheckResult:
    vt_max, lev_max, ten_max = (9, 8, 6) if fast else (11, 10, 8)

    def run():
        checked = 0
        for n in range(1, vt_max + 1):
            for x in itertools.product((0, 1), repeat=n):
                a = syn(x) % (n + 1)
                for y in ball(x, "indel", 2):
                    if decode_vt_indel(y, a, n) != x:
                        return False, f"VT failed x={x} y={y}"
                    checked += 1
        for n in range(1, lev_max + 1):
            for x in itertools.product((0, 1), repeat=n):
                a = syn(x) % (2 * n)
                for y in ball(x, "edit", 2):
                    if decode_lev_edit(y, a, n) != x:
                        return False, f"Levenshtein failed x={x} y={y}"
                    checked += 1
        for n in range(1, ten_max + 1):
            for x in _words(4, n):
                a, b = syn(signature(x)) % n, sum(x) % 4
                for y in ball(x, "indel", 4):
                    if decode_tenengolts(y, a, b, n, 4) != x:
                        return False, f"Tenengolts failed x={x} y={y}"
                    checked += 1
        return True, f"{checked} (codeword, received) pairs, n<= {vt_max}/{lev_max}/{ten_max}"

    return _timed("9 VT oracles", run)


# small instances whose protected strands are at most 26 symbols long
ECC_INSTANCES = ((EDIT, 10), (INDEL, 12))


def criterion_10(fast: bool = False) -> CheckResult:
    def run():
        parts = []
        rng = random.Random(10)
        for kind, n in ECC_INSTANCES:
            for mode in (REPLACE, ENUM):
                p = ConstrainedParams(n, 3, Fraction(1, 4), mode)
                pairs = 0
                if fast:
                    for _ in range(10_000 // (2 * len(ECC_INSTANCES))):
                        x = tuple(rng.getrandbits(1) for _ in range(p.m))
                        c = encode_protected(x, p, kind)
                        spec = rng.choice(list(error_specs(c, kind)))
                        if decode_protected(inject(c, spec), p, kind) != x:
                            return False, f"{kind}/{mode}: {x} with {spec}"
                        pairs += 1
                else:
                    for x in itertools.product((0, 1), repeat=p.m):
                        c = encode_protected(x, p, kind)
                        if len(c) > 26:
                            return False, f"strand length {len(c)} exceeds 26"
                        if not (is_rll(c, 3) and is_eps_balanced(c, p.eps)):
                            return False, f"{kind}/{mode}: constraint violated"
                        for y in ball(c, kind):
                            if decode_protected(y, p, kind) != x:
                                return False, f"{kind}/{mode}: {x} -> {y}"
                            pairs += 1
                parts.append(f"{kind}/{mode} n={n}: {pairs}")
        return True, "; ".join(parts)

    return _timed("10 error control", run)


def criterion_11(fast: bool = False) -> CheckResult:
    from .channel_oracle import inject_random
    from .framing import decode_file, encode_file, make_codec

    size = (64 << 10) if fast else (1 << 20)

    def run():
        data = random.Random(11).randbytes(size)
        codec = make_codec(200, 4, Fraction(1, 20), REPLACE, EDIT)
        strands = encode_file(data, codec)
        rng = random.Random(2024)
        noisy = [inject_random(s, "edit", rng.getrandbits(64))[0] for s in strands]
        ok = decode_file(noisy, codec) == data
        return ok, f"{size} bytes in {len(strands)} strands, one edit each"

    return _timed("11 end-to-end", run)


CRITERIA: Dict[int, Callable[[bool], CheckResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
}

SUITES: Dict[str, tuple] = {
    "rll": (1, 2, 3),
    "gc": (6, 7),
    "constrained": (4, 5, 8),
    "vt": (9,),
    "ecc": (10,),
    "e2e": (11,),
}
SUITES["all"] = tuple(sorted({c for v in SUITES.values() for c in v}))


def run_suite(name: str = "all", fast: bool = False) -> List[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [CRITERIA[i](fast) for i in SUITES[name]]


def summarize(results: List[CheckResult]) -> str:
    passed = sum(r.ok for r in results)
    return f"{passed}/{len(results)} checks passed"

