"""Letter generators against independent bitmask/doubling references."""

import pytest

from skinnyanimals.letters import (
    Interval,
    gen_letters_anchored,
    gen_letters_boarded,
    gen_parity_letters,
    gen_square_letters,
    is_parity_letter,
    is_valid_letter,
    letter_span,
    letter_start_parity,
    letter_weight,
)


def L(*pairs):
    return tuple(Interval(a, b) for a, b in pairs)


# --- independent references ---


def mask_to_letter(mask, lo, hi):
    """Maximal-interval form of a row subset given as a bitmask."""
    intervals = []
    r = lo
    while r <= hi:
        if mask >> (r - lo) & 1:
            start = r
            while r <= hi and mask >> (r - lo) & 1:
                r += 1
            intervals.append(Interval(start, r - 1))
        else:
            r += 1
    return tuple(intervals)


def square_letters_reference(lo, hi):
    n = hi - lo + 1
    return {mask_to_letter(m, lo, hi) for m in range(1 << n)}


def parity_letters_reference(lo, hi):
    """The doubling construction: every parity letter is a half-height letter
    with each interval [a, b] blown up to [lo + 2a, lo + 2b + 1], optionally
    shifted up one row when it still fits."""
    out = {()}
    half = (hi - lo + 1) // 2
    for base in square_letters_reference(0, half - 1) if half > 0 else {()}:
        if not base:
            continue
        doubled = tuple(Interval(lo + 2 * a, lo + 2 * b + 1) for a, b in base)
        if doubled[-1].hi <= hi:
            out.add(doubled)
        shifted = tuple(Interval(a + 1, b + 1) for a, b in doubled)
        if shifted[-1].hi <= hi:
            out.add(shifted)
    return out


# --- structure checks ---


def test_valid_letter():
    assert is_valid_letter(L((0, 1), (3, 5)))
    assert not is_valid_letter(L((0, 1), (2, 3)))  # touching blocks merge
    assert not is_valid_letter(L((3, 2)))
    assert is_valid_letter(())


def test_parity_letter_predicate():
    assert is_parity_letter(L((0, 1), (4, 5)))
    assert is_parity_letter(L((1, 4)))
    assert not is_parity_letter(L((0, 1), (3, 4)))  # mixed start parity
    assert not is_parity_letter(L((0, 2)))  # odd size
    assert is_parity_letter(())


def test_start_parity():
    assert letter_start_parity(L((2, 3))) == 0
    assert letter_start_parity(L((1, 2))) == 1
    with pytest.raises(ValueError):
        letter_start_parity(())


# --- the fixed conformance listings ---


def test_square_letters_0_2():
    got = set(gen_square_letters(0, 2))
    want = {
        (),
        L((0, 0)),
        L((0, 1)),
        L((1, 1)),
        L((0, 2)),
        L((1, 2)),
        L((2, 2)),
        L((0, 0), (2, 2)),
    }
    assert got == want
    assert len(gen_square_letters(0, 2)) == 8


def test_square_letters_0_4_is_all_subsets():
    # every subset of five rows is a letter: 2^5 of them
    got = gen_square_letters(0, 4)
    assert len(got) == 32
    assert set(got) == square_letters_reference(0, 4)


def test_square_letters_match_bitmask_reference():
    for lo, hi in [(0, 0), (0, 5), (2, 7), (0, 9)]:
        got = gen_square_letters(lo, hi)
        assert len(got) == len(set(got))
        assert set(got) == square_letters_reference(lo, hi)


def test_parity_letters_0_5():
    got = set(gen_parity_letters(0, 5))
    want = {
        (),
        L((0, 1)),
        L((1, 2)),
        L((0, 3)),
        L((1, 4)),
        L((2, 3)),
        L((3, 4)),
        L((0, 5)),
        L((2, 5)),
        L((4, 5)),
        L((0, 1), (4, 5)),
    }
    assert got == want
    assert len(gen_parity_letters(0, 5)) == 11


def test_parity_letters_match_doubling_reference():
    for lo, hi in [(0, 1), (0, 5), (0, 8), (0, 11), (1, 9)]:
        got = gen_parity_letters(lo, hi)
        assert len(got) == len(set(got))
        assert set(got) == parity_letters_reference(lo, hi)
        for letter in got:
            assert is_parity_letter(letter)


def test_parity_letters_empty_strip():
    assert gen_parity_letters(0, 0) == [()]


# --- boarded and anchored generators ---


def test_boarded_square_0_2_one_interval():
    got = set(gen_letters_boarded(0, 2, 1, "square"))
    want = {L((0, 0)), L((0, 1)), L((1, 1)), L((0, 2)), L((1, 2)), L((2, 2))}
    assert got == want


def test_boarded_parity_0_5_two_intervals():
    assert gen_letters_boarded(0, 5, 2, "hex") == [L((0, 1), (4, 5))]


def test_boarded_is_filter_of_full_generator():
    for lo, hi in [(0, 4), (0, 7), (1, 6)]:
        full = gen_square_letters(lo, hi)
        for k in range(0, 4):
            got = set(gen_letters_boarded(lo, hi, k, "square"))
            assert got == {x for x in full if len(x) == k}
        fullp = gen_parity_letters(lo, hi)
        for k in range(0, 3):
            got = set(gen_letters_boarded(lo, hi, k, "hex"))
            assert got == {x for x in fullp if len(x) == k}


def test_boarded_union_reconstructs_generator():
    full = set(gen_square_letters(0, 6))
    union = {()}
    k = 1
    while True:
        ks = set(gen_letters_boarded(0, 6, k, "square"))
        if not ks:
            break
        union |= ks
        k += 1
    assert union == full


def test_anchored_square_span4_two_intervals():
    # base-normalized two-interval letters spanning at most four rows
    got = set(gen_letters_anchored(4, 2, "square"))
    want = {
        L((0, 0), (2, 2)),
        L((0, 0), (2, 3)),
        L((0, 0), (3, 3)),
        L((0, 1), (3, 3)),
    }
    assert got == want


def test_anchored_all_start_at_zero():
    for span in (1, 5, 9):
        for k in (1, 2, 3):
            for letter in gen_letters_anchored(span, k, "square"):
                assert letter[0].lo == 0
                assert letter_span(letter, "square") <= span
            for letter in gen_letters_anchored(2 * span, k, "hex"):
                assert letter[0].lo == 0
                assert is_parity_letter(letter)
                assert letter[-1].hi <= 2 * span - 1


def test_anchored_hex_single_interval():
    got = gen_letters_anchored(6, 1, "hex")
    assert set(got) == {L((0, 1)), L((0, 3)), L((0, 5))}


# --- weight and span ---


def test_weight():
    assert letter_weight(L((0, 5)), "hex") == 3
    assert letter_weight(L((0, 5)), "square") == 6
    assert letter_weight(L((0, 1), (4, 5)), "hex") == 2
    assert letter_weight((), "square") == 0
    with pytest.raises(ValueError):
        letter_weight(L((0, 2)), "hex")


def test_span():
    assert letter_span(L((0, 1), (4, 5)), "hex") == 3
    assert letter_span(L((0, 1), (4, 5)), "square") == 6
    assert letter_span(L((2, 3)), "hex") == 1
    assert letter_span((), "hex") == 0
    with pytest.raises(ValueError):
        letter_span(L((1, 1)), "hex")
    with pytest.raises(ValueError):
        letter_weight(L((0, 1)), "triangular")
