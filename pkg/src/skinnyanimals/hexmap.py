"""Bijection between hexanimals and parity polyominoes.

A hexagonal column cell (x, j) maps to the vertical domino of unit squares
(x, y) and (x, y+1) with y = 2j + ((x + p) mod 2), where p is the start
parity of column 0.  Columns therefore alternate between even and odd
block starts, every block has even size, and two hexagons are adjacent
exactly when their dominoes share an edge.  Square polyominoes with these
properties are the parity polyominoes; the map is a bijection onto them,
and translation classes correspond.

The canonical representative places the leftmost column at x = 0 and the
lowest square of the embedding at y = 0; the parity bit records which of
the two embeddings is the normalized one.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .letters import is_valid_letter

PARITIES = ("even", "odd")


class HexAnimal(NamedTuple):
    cells: tuple  # sorted (column, cell index) pairs
    parity: int   # 0 or 1: embedding start parity of column 0


def hex_embed_base(x, j, parity):
    """Bottom row of the domino image of hex cell (x, j)."""
    return 2 * j + ((x + parity) % 2)


def hex_adjacent(a, b, parity) -> bool:
    """Hexagonal adjacency via the embedding: dominoes sharing an edge.

    Same column: cells one apart.  Adjacent columns: base rows differing
    by at most one (the two diagonal neighbors)."""
    (x1, j1), (x2, j2) = a, b
    if x1 == x2:
        return abs(j1 - j2) == 1
    if abs(x1 - x2) != 1:
        return False
    y1 = hex_embed_base(x1, j1, parity)
    y2 = hex_embed_base(x2, j2, parity)
    return abs(y1 - y2) <= 1


def _column_blocks(cells):
    """Maximal vertical runs per column: {x: [(lo, hi), ...]} sorted."""
    cols = {}
    for x, y in cells:
        cols.setdefault(x, set()).add(y)
    out = {}
    for x, ys in cols.items():
        runs = []
        for y in sorted(ys):
            if runs and y == runs[-1][1] + 1:
                runs[-1][1] = y
            else:
                runs.append([y, y])
        out[x] = [tuple(r) for r in runs]
    return out


def _connected(cells) -> bool:
    cells = set(cells)
    if not cells:
        return False
    todo = [next(iter(cells))]
    seen = {todo[0]}
    while todo:
        x, y = todo.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def is_parity_polyomino(cells):
    """(True, None) or (False, first failed property)."""
    cells = set(tuple(c) for c in cells)
    if not cells:
        return False, "empty cell set"
    blocks = _column_blocks(cells)
    start_parity = {}
    for x in sorted(blocks):
        pars = set()
        for lo, hi in blocks[x]:
            if (hi - lo + 1) % 2:
                return False, f"column {x} has a block of odd size"
            pars.add(lo % 2)
        if len(pars) > 1:
            return False, f"column {x} mixes block start parities"
        start_parity[x] = pars.pop()
    for x in sorted(blocks):
        if x + 1 in start_parity and start_parity[x] == start_parity[x + 1]:
            return False, f"columns {x} and {x + 1} share start parity"
    if not _connected(cells):
        return False, "not connected"
    if min(x for x, _ in cells) != 0 or min(y for _, y in cells) != 0:
        return False, "not normalized to min x = 0, min y = 0"
    return True, None


def parity_to_hex(cells) -> HexAnimal:
    """Inverse of hex_to_parity; rejects non-parity input with the reason."""
    ok, why = is_parity_polyomino(cells)
    if not ok:
        raise ValueError(f"not a parity polyomino: {why}")
    blocks = _column_blocks(set(tuple(c) for c in cells))
    parity = blocks[0][0][0] % 2  # start parity of column 0 = p
    hexes = []
    for x, runs in blocks.items():
        c = (x + parity) % 2
        for lo, hi in runs:
            for j in range((lo - c) // 2, (lo - c) // 2 + (hi - lo + 1) // 2):
                hexes.append((x, j))
    return HexAnimal(tuple(sorted(hexes)), parity)


def hex_to_parity(h: HexAnimal):
    """Square embedding of a normalized hexanimal, as a frozenset."""
    validate_hex(h)
    out = set()
    for x, j in h.cells:
        y = hex_embed_base(x, j, h.parity)
        out.add((x, y))
        out.add((x, y + 1))
    return frozenset(out)


def hex_animal(cells, parity) -> HexAnimal:
    """Normalize an arbitrary placement into the canonical HexAnimal.

    Embeds with the given parity, translates the embedding to min x = 0,
    min y = 0, and reads the animal back (which also validates it)."""
    cells = set(tuple(c) for c in cells)
    if not cells:
        raise ValueError("empty hexanimal")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 (even) or 1 (odd)")
    squares = set()
    for x, j in cells:
        y = hex_embed_base(x, j, parity)
        squares.add((x, y))
        squares.add((x, y + 1))
    dx = min(x for x, _ in squares)
    dy = min(y for _, y in squares)
    return parity_to_hex({(x - dx, y - dy) for x, y in squares})


def validate_hex(h: HexAnimal):
    """Raise ValueError unless h is a valid, normalized hexanimal."""
    again = hex_animal(h.cells, h.parity)
    if again != HexAnimal(tuple(sorted(set(h.cells))), h.parity):
        raise ValueError("hexanimal is not in normalized form")


# --- interval words -------------------------------------------------------


def encode_word(cells):
    """Column letters of a normalized connected polyomino, left to right."""
    cells = set(tuple(c) for c in cells)
    if not cells:
        raise ValueError("empty cell set")
    if min(x for x, _ in cells) != 0 or min(y for _, y in cells) != 0:
        raise ValueError("cell set is not normalized to min x = 0, min y = 0")
    if not _connected(cells):
        raise ValueError("cell set is not connected")
    blocks = _column_blocks(cells)
    return tuple(tuple(blocks[x]) for x in range(max(blocks) + 1))


def decode_word(word):
    """Cell set of a word; column x holds the x-th letter's intervals."""
    word = tuple(tuple(tuple(iv) for iv in letter) for letter in word)
    if not word:
        raise ValueError("empty word")
    cells = set()
    for x, letter in enumerate(word):
        if not letter or not is_valid_letter(letter):
            raise ValueError(f"letter {x} is not a valid nonempty letter")
        for lo, hi in letter:
            for y in range(lo, hi + 1):
                cells.add((x, y))
    return frozenset(cells)


# --- text formats ---------------------------------------------------------

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")
_IVAL = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")
_BRACE = re.compile(r"\{([^{}]*)\}")


def render_word(word) -> str:
    return ",".join(
        "{" + ",".join(f"[{lo},{hi}]" for lo, hi in letter) + "}"
        for letter in word
    )


def parse_word(text: str):
    groups = _BRACE.findall(text)
    if not groups:
        raise ValueError("no letters found in word text")
    word = []
    for g in groups:
        letter = tuple((int(a), int(b)) for a, b in _IVAL.findall(g))
        if not letter:
            raise ValueError(f"letter {{{g}}} contains no intervals")
        word.append(letter)
    return tuple(word)


def render_cells(cells) -> str:
    return "{" + ",".join(f"({x},{y})" for x, y in sorted(cells)) + "}"


def parse_cells(text: str):
    pairs = _PAIR.findall(text)
    if not pairs:
        raise ValueError("no (x,y) cells found in text")
    return frozenset((int(a), int(b)) for a, b in pairs)


def render_hex_text(h: HexAnimal) -> str:
    return f"parity: {PARITIES[h.parity]}\n{render_cells(h.cells)}\n"


def parse_hex_text(text: str) -> HexAnimal:
    """Hexanimal from text: optional 'parity: even|odd' plus (x,j) pairs."""
    m = re.search(r"parity\s*:\s*(even|odd)", text, re.IGNORECASE)
    parity = PARITIES.index(m.group(1).lower()) if m else 0
    body = text[m.end():] if m else text
    return hex_animal(parse_cells(body), parity)
