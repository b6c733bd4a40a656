import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dnacodes.alphabet import is_rll, max_runlength
from dnacodes.rll_enum import (
    RankError,
    count_rll,
    decode_rll_a,
    encode_rll_a,
    payload_bits,
    rank,
    unrank,
)


def brute(n, ell, q):
    return [x for x in itertools.product(range(q), repeat=n) if max_runlength(x) <= ell]


def test_count_table_known_values():
    assert [count_rll(m, 3, 4) for m in range(1, 6)] == [4, 16, 64, 252, 996]
    assert count_rll(3, 2, 2) == 6
    assert count_rll(0, 3, 4) == 1


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_count_matches_brute_force(q, ell):
    limit = {2: 12, 3: 9, 4: 7}[q]
    for n in range(limit + 1):
        assert count_rll(n, ell, q) == len(brute(n, ell, q))


def test_short_words_are_lexicographic():
    words = [unrank(3, 3, 4, M) for M in range(1, 65)]
    assert words == sorted(words) == list(itertools.product(range(4), repeat=3))


def test_example_900():
    # rank 900 of length-5, ell=3 words; the reference spelling uses digits 1..4
    word = unrank(5, 3, 4, 900)
    assert "".join(str(s + 1) for s in word) == "34433"
    assert rank(5, 3, 4, word) == 900


def test_classes_ordered_by_terminal_run():
    n, ell, q = 6, 3, 4
    seen = []
    for M in range(1, count_rll(n, ell, q) + 1):
        x = unrank(n, ell, q, M)
        run = 1
        while run < n and x[-1 - run] == x[-1]:
            run += 1
        seen.append(run)
    assert seen == sorted(seen)


def test_full_bijection_7_3_4():
    n, ell, q = 7, 3, 4
    total = count_rll(n, ell, q)
    words = [unrank(n, ell, q, M) for M in range(1, total + 1)]
    assert len(set(words)) == total
    assert all(is_rll(x, ell) for x in words)
    assert [rank(n, ell, q, x) for x in words] == list(range(1, total + 1))


def test_rank_of_all_words_6_2_3():
    for x in brute(6, 2, 3):
        assert unrank(6, 2, 3, rank(6, 2, 3, x)) == x


def test_first_and_last():
    n, ell, q = 8, 3, 4
    assert rank(n, ell, q, unrank(n, ell, q, 1)) == 1
    last = count_rll(n, ell, q)
    assert rank(n, ell, q, unrank(n, ell, q, last)) == last


def test_errors():
    with pytest.raises(RankError):
        unrank(5, 3, 4, 0)
    with pytest.raises(RankError):
        unrank(5, 3, 4, 997)
    with pytest.raises(RankError):
        rank(5, 3, 4, (0, 0, 0, 0, 1))
    with pytest.raises(RankError):
        rank(5, 3, 4, (0, 1))


def test_encoder_a_exhaustive_8_3_4():
    n, ell = 8, 3
    m = payload_bits(n, ell)
    assert m == count_rll(n, ell, 4).bit_length() - 1
    assert encode_rll_a((0,) * m, n, ell) == unrank(n, ell, 4, 1)
    for x in itertools.product((0, 1), repeat=m):
        c = encode_rll_a(x, n, ell)
        assert is_rll(c, ell)
        assert decode_rll_a(c, ell) == x


def test_decoder_rejects_out_of_range_rank():
    n, ell = 5, 3
    m = payload_bits(n, ell)
    with pytest.raises(RankError):
        decode_rll_a(unrank(n, ell, 4, 2**m + 1), ell)


@settings(max_examples=50, deadline=None)
@given(st.integers(20, 300), st.integers(2, 6), st.data())
def test_random_large_roundtrip(n, ell, data):
    M = data.draw(st.integers(1, count_rll(n, ell, 4)))
    x = unrank(n, ell, 4, M)
    assert is_rll(x, ell) and rank(n, ell, 4, x) == M


def test_growth_matches_capacity_root():
    from dnacodes.constrained import capacity_root

    lam = count_rll(200, 4, 4) ** (1 / 200)
    assert abs(lam - capacity_root(4, 4)) < 5e-3
