"""Brute-force enumeration of fixed animals, independent of the transfer
machinery.

Animals are grown cell by cell from the canonical single cell: every
connected animal keeps a removable cell (any leaf of a spanning tree), so
level n+1 is exactly the set of canonical one-cell extensions of level n.
Constraints are applied as a filter on the finished animals, never during
growth, because the board families are not closed under cell removal
(removing a cell can split a column block and change which bound applies).

Deliberately simple and slow; the point is an answer the transfer method
cannot have influenced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import EnvelopeError
from .hexmap import HexAnimal, hex_adjacent, hex_animal, hex_embed_base
from .letters import normalize_mode

HEX_CELL_CAP = 10
SQUARE_CELL_CAP = 12


@dataclass(frozen=True)
class Constraint:
    """Strip confinement (square rows) or a per-column board, not both."""

    strip_rows: int = None
    board: tuple = None

    def __post_init__(self):
        if self.strip_rows is not None and self.board is not None:
            raise ValueError("strip_rows and board are mutually exclusive")
        if self.strip_rows is not None and self.strip_rows < 1:
            raise ValueError("strip_rows must be >= 1")
        if self.board is not None:
            board = tuple(self.board)
            if not board or any(b < 1 for b in board):
                raise ValueError("board must be nonempty with positive bounds")
            object.__setattr__(self, "board", board)


class CanonicalAnimal(NamedTuple):
    lattice: str
    cells: tuple      # sorted; (x, y) squares or (x, j) hexagons
    parity: int = None  # hex only


_LEVELS = {"square": None, "hex": None}


def _square_canonical(cells):
    dx = min(x for x, _ in cells)
    dy = min(y for _, y in cells)
    return tuple(sorted((x - dx, y - dy) for x, y in cells))


def _grow_square(level):
    nxt = set()
    for animal in level:
        cells = set(animal)
        for x, y in animal:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in cells:
                    cells.add(nb)
                    nxt.add(_square_canonical(cells))
                    cells.remove(nb)
    return nxt


def _grow_hex(level):
    nxt = set()
    for h in level:
        cells = set(h.cells)
        for x, j in h.cells:
            around = [(x, j - 1), (x, j + 1)]
            around += [(x + dx, j + dj) for dx in (-1, 1) for dj in (-1, 0, 1)
                       if hex_adjacent((x, j), (x + dx, j + dj), h.parity)]
            for nb in around:
                if nb not in cells:
                    cells.add(nb)
                    nxt.add(hex_animal(cells, h.parity))
                    cells.remove(nb)
    return nxt


def _levels(lattice, n):
    """Canonical animals of sizes 1..n, grown lazily and cached."""
    levels = _LEVELS[lattice]
    if levels is None:
        if lattice == "square":
            levels = [{_square_canonical([(0, 0)])}]
        else:
            levels = [{hex_animal([(0, 0)], 0)}]
        _LEVELS[lattice] = levels
    while len(levels) < n:
        grow = _grow_square if lattice == "square" else _grow_hex
        levels.append(grow(levels[-1]))
    return levels


def _column_profile(cells):
    """Per column: (block count, span) over the native vertical axis."""
    cols = {}
    for x, v in cells:
        cols.setdefault(x, []).append(v)
    out = []
    for x in sorted(cols):
        vs = sorted(cols[x])
        blocks = 1 + sum(1 for a, b in zip(vs, vs[1:]) if b > a + 1)
        out.append((blocks, vs[-1] - vs[0] + 1))
    return out


def _satisfies(lattice, animal, constraint) -> bool:
    if constraint is None:
        return True
    if constraint.strip_rows is not None:
        if lattice == "square":
            height = max(y for _, y in animal) + 1  # normalized: min y = 0
        else:
            height = max(hex_embed_base(x, j, animal.parity)
                         for x, j in animal.cells) + 2
        return height <= constraint.strip_rows
    if constraint.board is not None:
        cells = animal.cells if lattice == "hex" else animal
        for blocks, span in _column_profile(cells):
            if blocks > len(constraint.board):
                return False
            if span > constraint.board[blocks - 1]:
                return False
    return True


def _check_envelope(lattice, n):
    cap = SQUARE_CELL_CAP if lattice == "square" else HEX_CELL_CAP
    if n < 1:
        raise ValueError("cell count must be >= 1")
    if n > cap:
        raise EnvelopeError(
            f"oracle enumeration supports at most {cap} {lattice} cells "
            f"(requested {n})")


def oracle_enumerate(lattice, n, constraint=None):
    """All translation classes of n-cell animals meeting the constraint."""
    lattice = normalize_mode(lattice)
    _check_envelope(lattice, n)
    level = _levels(lattice, n)[n - 1]
    out = set()
    for animal in level:
        if _satisfies(lattice, animal, constraint):
            if lattice == "square":
                out.add(CanonicalAnimal("square", animal))
            else:
                out.add(CanonicalAnimal("hex", animal.cells, animal.parity))
    return out


def oracle_count(lattice, n, constraint=None) -> int:
    lattice = normalize_mode(lattice)
    _check_envelope(lattice, n)
    level = _levels(lattice, n)[n - 1]
    return sum(1 for a in level if _satisfies(lattice, a, constraint))
