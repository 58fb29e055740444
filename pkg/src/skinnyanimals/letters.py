"""Column cross-sections ("letters") for strip and board animals.

A letter is the set of occupied rows of one column, stored as a sorted tuple
of maximal closed intervals (lo, hi) with at least one empty row between
consecutive intervals.  Square-lattice animals use arbitrary letters; the
hexagonal lattice embeds into the square lattice as dominoes, so its columns
are "parity letters": every interval has even size and all interval starts
share one parity relative to absolute row numbers (which forces the gaps to
be even as well).

Hex-mode weights and spans are measured in hexagonal cells, i.e. half the
square-row figures.
"""

from __future__ import annotations

from typing import Iterator, Literal, NamedTuple


class Interval(NamedTuple):
    lo: int
    hi: int


Letter = tuple  # tuple[Interval, ...]; the empty tuple is the empty letter
Mode = Literal["square", "hex"]


def normalize_mode(mode) -> str:
    """Map the parity alias onto hex; reject unknown modes."""
    if mode == "parity":
        return "hex"
    if mode not in ("square", "hex"):
        raise ValueError(f"unknown lattice mode: {mode!r}")
    return mode


def _check_mode(mode):
    if mode not in ("square", "hex"):
        raise ValueError(f"unknown lattice mode: {mode!r}")


def is_valid_letter(letter) -> bool:
    """Sorted maximal intervals: lo <= hi and a gap of at least one row."""
    prev_hi = None
    for lo, hi in letter:
        if lo > hi:
            return False
        if prev_hi is not None and lo < prev_hi + 2:
            return False
        prev_hi = hi
    return True


def is_parity_letter(letter) -> bool:
    """Even interval sizes and a single start parity across the letter."""
    if not is_valid_letter(letter):
        return False
    if not letter:
        return True
    par = letter[0][0] % 2
    for lo, hi in letter:
        if lo % 2 != par or (hi - lo + 1) % 2 != 0:
            return False
    return True


def letter_start_parity(letter) -> int:
    """Start parity (0 even, 1 odd) of a nonempty parity letter."""
    if not letter:
        raise ValueError("the empty letter has no start parity")
    return letter[0][0] % 2


def letter_weight(letter, mode="square") -> int:
    """Number of native cells in the column."""
    _check_mode(mode)
    cells = sum(hi - lo + 1 for lo, hi in letter)
    if mode == "hex":
        if not is_parity_letter(letter):
            raise ValueError(f"not a parity letter: {letter}")
        return cells // 2
    return cells


def letter_span(letter, mode="square") -> int:
    """Extent max-min+1 in native cells, gap rows included; 0 when empty."""
    _check_mode(mode)
    if not letter:
        return 0
    rows = letter[-1][1] - letter[0][0] + 1
    if mode == "hex":
        if not is_parity_letter(letter):
            raise ValueError(f"not a parity letter: {letter}")
        return rows // 2
    return rows


def gen_square_letters(lo, hi):
    """All letters with rows inside [lo, hi], the empty letter included.

    Every subset of the rows has a unique maximal-interval form, so the
    output has exactly 2^(hi-lo+1) elements.
    """
    out = [()]

    def extend(prefix, start):
        for a in range(start, hi + 1):
            for b in range(a, hi + 1):
                letter = prefix + (Interval(a, b),)
                out.append(letter)
                extend(letter, b + 2)

    extend((), lo)
    return out


def gen_parity_letters(lo, hi):
    """All parity letters with rows inside [lo, hi], empty letter included.

    Generated natively by recursion over interval placements; agrees with
    the doubled-and-shifted construction (each parity letter is a doubled
    half-height letter, shifted up one row for the odd start parity)."""
    out = [()]

    def extend(prefix, start, par):
        first = start if start % 2 == par else start + 1
        for a in range(first, hi, 2):
            for b in range(a + 1, hi + 1, 2):
                letter = prefix + (Interval(a, b),)
                out.append(letter)
                extend(letter, b + 2, par)

    for par in (0, 1):
        extend((), lo, par)
    return out


def gen_letters_boarded(lo, hi, k, mode="square"):
    """Letters inside [lo, hi] with exactly k intervals.

    Equals the k-interval subset of gen_square_letters / gen_parity_letters
    output, but is enumerated directly so wide row ranges stay cheap.
    """
    _check_mode(mode)
    if k == 0:
        return [()]
    return list(_k_interval_letters(lo, hi, k, mode, anchored=False))


def gen_letters_anchored(max_span, k, mode="square"):
    """Base-normalized k-interval letters: first row 0, span <= max_span rows.

    These are the letters of the free (offset-edge) construction, where
    vertical placement lives on the edges instead of inside the letter.
    """
    _check_mode(mode)
    if k == 0 or max_span <= 0:
        return []
    return list(_k_interval_letters(0, max_span - 1, k, mode, anchored=True))


def _k_interval_letters(lo, hi, k, mode, anchored) -> Iterator:
    parity_mode = mode == "hex"

    def extend(prefix, start, par) -> Iterator:
        remaining = k - len(prefix) - 1
        if parity_mode:
            first = start if start % 2 == par else start + 1
            a_values = range(first, hi, 2)
        else:
            a_values = range(start, hi + 1)
        for a in a_values:
            if anchored and not prefix and a != 0:
                break
            b_values = (
                range(a + 1, hi + 1, 2) if parity_mode else range(a, hi + 1)
            )
            for b in b_values:
                letter = prefix + (Interval(a, b),)
                if remaining == 0:
                    yield letter
                else:
                    yield from extend(letter, b + 2, par)

    if parity_mode:
        for par in (0, 1) if not anchored else (0,):
            yield from extend((), lo, par)
    else:
        yield from extend((), lo, 0)
