import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dnacodes.alphabet import is_rll, word_from_str as w
from dnacodes.rll_replace import (
    MULTI,
    SINGLE,
    ReplaceError,
    decode_rll_b,
    decode_rll_b_multi,
    diff,
    diff_inv,
    encode_rll_b,
    encode_rll_b_multi,
    max_block_len,
    multi_block_layout,
    multi_output_len,
    pointer_decode,
    pointer_encode,
    replace_block,
    replace_redundancy,
)


def test_diff():
    assert diff(w("1111")) == w("1000")
    assert diff(w("0123")) == w("0111")
    assert diff_inv(w("0101")) == w("0112")


@given(st.lists(st.integers(0, 3), max_size=30).map(tuple))
def test_diff_roundtrip(x):
    assert diff_inv(diff(x)) == x


def test_block_bounds():
    assert [max_block_len(ell, 4) for ell in range(2, 6)] == [13, 50, 195, 772]
    assert [max_block_len(ell, 4, MULTI) for ell in range(2, 6)] == [9, 34, 131, 516]
    with pytest.raises(ValueError):
        max_block_len(1, 4)


@pytest.mark.parametrize("variant", [SINGLE, MULTI])
def test_pointer_bijection(variant):
    ell, q = 3, 4
    top = max_block_len(ell, q, variant) - ell + 1
    seen = set()
    for p in range(1, top + 1):
        ptr = pointer_encode(p, ell, q, variant)
        assert len(ptr) == ell and ptr[-1] >= (1 if variant == SINGLE else 2)
        assert pointer_decode(ptr, ell, q, variant) == p
        seen.add(ptr)
    assert len(seen) == top
    with pytest.raises(ReplaceError):
        pointer_encode(top + 1 + (q ** (ell - 1)) * 4, ell, q, variant)


def test_hand_trace():
    assert replace_block(w("000"), 2, 4, SINGLE) == w("0101")
    assert encode_rll_b(w("000"), 2) == w("0112")
    assert decode_rll_b(w("0112"), 2) == w("000")


def test_no_replacement_needed():
    x = w("12312")
    assert encode_rll_b(x, 3) == diff_inv(x + (0,))


def test_single_block_exhaustive_q3_ell2():
    # encoded blocks of up to 7 symbols, the bound for q=3, ell=2
    assert max_block_len(2, 3) == 7
    for n in range(7):
        for x in itertools.product(range(3), repeat=n):
            c = encode_rll_b(x, 2, 3)
            assert len(c) == n + 1 and is_rll(c, 2)
            assert decode_rll_b(c, 2, 3) == x


def test_block_too_long():
    with pytest.raises(ReplaceError):
        encode_rll_b((0,) * 13, 2, 4)
    encode_rll_b((0,) * 12, 2, 4)


def test_decoder_rejects_garbage():
    with pytest.raises(ReplaceError):
        decode_rll_b((), 3)
    for c in itertools.product(range(4), repeat=4):
        try:
            decode_rll_b(c, 3)
        except ReplaceError:
            pass


def test_multi_layout():
    cap = max_block_len(3, 4, MULTI)
    assert multi_block_layout(cap, 3) == (cap,)
    assert multi_block_layout(cap + 1, 3) == (cap, 1)
    assert multi_output_len(cap - 1, 3) == cap
    assert multi_output_len(2 * (cap - 1), 3) == 2 * (cap - 1) + 2


def test_multi_short_input_costs_one_symbol():
    x = w("1230")
    assert len(encode_rll_b_multi(x, 3)) == len(x) + 1


def test_multi_all_totals():
    rng = random.Random(3)
    cap = max_block_len(3, 4, MULTI)
    for total in range(1, 3 * cap + 2):
        blocks = len(multi_block_layout(total, 3))
        x = tuple(rng.choice((0, 0, 0, 1)) for _ in range(total - blocks))
        c = encode_rll_b_multi(x, 3, 4, total=total)
        assert len(c) == total and is_rll(c, 3)
        assert decode_rll_b_multi(c, 3) == x


def test_multi_random_three_blocks():
    rng = random.Random(4)
    cap = max_block_len(3, 4, MULTI)
    for _ in range(10_000):
        x = tuple(rng.choice((0, 0, 1, 2, 3)) for _ in range(3 * (cap - 1)))
        c = encode_rll_b_multi(x, 3)
        assert len(c) == len(x) + 3 and is_rll(c, 3)
        assert decode_rll_b_multi(c, 3) == x


def test_multi_needs_q3():
    with pytest.raises(ReplaceError):
        encode_rll_b_multi((0, 1), 2, 2)


def test_redundancy():
    assert replace_redundancy(195, 4) == 1
    assert replace_redundancy(196, 4) == 2
    assert replace_redundancy(296, 4) == 3


@settings(max_examples=200)
@given(st.integers(2, 5), st.data())
def test_single_roundtrip_property(ell, data):
    n = data.draw(st.integers(0, max_block_len(ell, 4) - 1))
    x = tuple(data.draw(st.lists(st.sampled_from([0, 0, 0, 1, 2, 3]), min_size=n, max_size=n)))
    c = encode_rll_b(x, ell)
    assert is_rll(c, ell) and decode_rll_b(c, ell) == x
