import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dnacodes.alphabet import (
    flip_prefix_b,
    flip_prefix_q,
    gc_count,
    is_eps_balanced,
    max_runlength,
    upper,
    within_balance,
    word_from_str as w,
)
from dnacodes.gc_balance import (
    BalanceError,
    as_eps,
    balance_set,
    decode_gc_c,
    decode_gc_d,
    encode_gc_c,
    encode_gc_d,
    find_balance_index_b,
    find_balance_index_q,
    gc_d_payload_bits,
    index_bits,
    index_decode,
    index_digits,
    index_encode,
)

E10 = Fraction(1, 10)


def test_as_eps():
    assert as_eps("1/20") == as_eps("0.05") == as_eps(0.05) == Fraction(1, 20)
    with pytest.raises(BalanceError):
        as_eps(0)


def test_balance_sets():
    assert balance_set(E10, 10).indices == (0, 2, 4, 6, 8, 10)
    assert balance_set(E10, 200).indices == (0, 40, 80, 120, 160, 200)
    assert balance_set(Fraction(1, 2), 12).indices == (0, 12)
    assert balance_set(E10, 30).indices == (0, 6, 12, 18, 24, 30)
    with pytest.raises(BalanceError):
        balance_set(E10, 8)
    with pytest.raises(BalanceError):
        balance_set(E10, 11)


def test_index_sizes():
    assert index_bits(E10) == 3 and index_bits(Fraction(1, 20)) == 4
    assert index_digits(E10) == 2 and index_digits(Fraction(1, 4)) == 1


def test_example_all_zero():
    x = (0,) * 10
    assert find_balance_index_b(x, E10) == 4
    assert find_balance_index_q(x, E10) == 4
    assert flip_prefix_q(x, 4) == w("2222000000")
    assert encode_gc_c(x, (0,) * 7, E10) == w("2222000010")


def test_already_balanced_gives_zero():
    assert find_balance_index_b(w("0101010101"), E10) == 0


@pytest.mark.parametrize("n", [10, 12, 14])
def test_index_exists_exhaustive(n):
    S = balance_set(E10, n)
    for x in itertools.product((0, 1), repeat=n):
        t = find_balance_index_b(x, E10)
        assert t in S.indices
        assert within_balance(sum(flip_prefix_b(x, t)), n, E10)
        # first admissible index
        assert not any(
            within_balance(sum(flip_prefix_b(x, s)), n, E10) for s in S.indices if s < t
        )


def test_quaternary_agrees_with_upper_rail():
    rng = random.Random(1)
    for _ in range(10_000):
        s = tuple(rng.randrange(4) for _ in range(20))
        t = find_balance_index_q(s, E10)
        assert t == find_balance_index_b(upper(s), E10)
        assert is_eps_balanced(flip_prefix_q(s, t), E10)


def test_index_pointer():
    S = balance_set(Fraction(1, 4), 8)
    assert index_encode(0, S, 1) == (0, 2)
    S200 = balance_set(Fraction(1, 20), 200)
    assert index_encode(S200.indices[5], S200, 2) == w("1313")
    for eps in (Fraction(1, 20), E10):
        S = balance_set(eps, 200)
        k = index_digits(eps)
        for t in S.indices:
            p = index_encode(t, S, k)
            assert len(p) == 2 * k and index_decode(p, S) == t
            assert gc_count(p) == k and max_runlength(p) <= 2
    with pytest.raises(BalanceError):
        index_encode(7, S200, 2)
    with pytest.raises(BalanceError):
        index_decode(w("3131"), S200)


def test_encoder_c_exhaustive():
    eps, n = Fraction(1, 8), 8
    k = index_bits(eps)
    for x in itertools.product((0, 1), repeat=n):
        for y in itertools.product((0, 1), repeat=n - k):
            s = encode_gc_c(x, y, eps)
            assert is_eps_balanced(s, eps)
            assert decode_gc_c(s, eps) == (x, y)


def test_encoder_c_rejects_bad_lengths():
    with pytest.raises(BalanceError):
        encode_gc_c((0,) * 10, (0,) * 6, E10)


def test_encoder_c_rejects_unused_index_code():
    s = encode_gc_c((0,) * 10, (0,) * 7, E10)
    bad = s[:-3] + (1, 1, 1)
    with pytest.raises(BalanceError):
        decode_gc_c(bad, E10)


def test_encoder_d_exhaustive():
    eps, n = Fraction(1, 4), 8
    m = gc_d_payload_bits(n, eps)
    for x in itertools.product((0, 1), repeat=m):
        s = encode_gc_d(x, n, eps)
        assert len(s) == n and is_eps_balanced(s, eps)
        assert decode_gc_d(s, eps) == x


def test_encoder_d_balanced_payload_uses_rank_zero():
    eps, n = Fraction(1, 4), 8
    s = encode_gc_d((1, 0, 0, 0) * 3, n, eps)
    assert s[-2:] == (0, 2)


def test_encoder_d_sampled_at_200():
    eps, n = Fraction(1, 20), 200
    m = gc_d_payload_bits(n, eps)
    rng = random.Random(2)
    for _ in range(2000):
        x = tuple(rng.getrandbits(1) for _ in range(m))
        s = encode_gc_d(x, n, eps)
        assert is_eps_balanced(s, eps) and decode_gc_d(s, eps) == x


@given(st.lists(st.integers(0, 1), min_size=40, max_size=40).map(tuple))
def test_encoder_c_property(bits):
    eps = Fraction(1, 20)
    x, y = bits[:20] + bits[:20], bits[20:] + bits[:16]
    s = encode_gc_c(x, y, eps)
    assert is_eps_balanced(s, eps) and decode_gc_c(s, eps) == (x, y)
