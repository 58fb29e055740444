"""Column-to-column transfer process for strip and board animals.

A state is (letter, partition): the current column's letter together with the
partition of its intervals into blocks that are already connected through the
columns read so far.  Reading the next column succeeds when every block keeps
contact with the new letter (otherwise a finished component would be stranded,
which can never happen inside a connected animal scanned left to right), and
the new intervals are grouped by the connectivity the old blocks induce.

Words of letters therefore biject with animals: paths from a start state
(first column: all intervals still separate) to an accept state (single block:
the animal is connected) in a weighted directed multigraph.  Strip mode places
letters at absolute rows and needs no multiplicities; free mode normalizes
each letter to base row 0 and carries the vertical offsets on the edges, one
multiplicity count per (target letter, target partition).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .letters import (
    gen_letters_anchored,
    gen_parity_letters,
    gen_square_letters,
    letter_start_parity,
    letter_weight,
)


class TransferState(NamedTuple):
    letter: tuple
    partition: tuple  # partition[i] = block label of interval i, labels 0,1,..
                      # in order of first appearance (restricted growth form)


@dataclass(frozen=True)
class Cmp:
    """Weighted directed multigraph with start and accept vertex sets.

    Parallel edges are aggregated: adj[i] lists (target index, multiplicity).
    labels[i] is the vertex's identity (a TransferState for built processes,
    an integer id for processes loaded from a file).
    """

    labels: tuple
    weights: tuple
    adj: tuple  # tuple[tuple[(int, int), ...], ...]
    start: tuple
    accept: tuple

    @property
    def size(self):
        return len(self.labels)

    def edge_count(self):
        return sum(len(a) for a in self.adj)


def intervals_adjacent(a, b) -> bool:
    """Two intervals in consecutive columns touch iff they share a row."""
    return a[0] <= b[1] and b[0] <= a[1]


def discrete_partition(k):
    return tuple(range(k))


def is_restricted_growth(partition) -> bool:
    top = -1
    for label in partition:
        if label > top + 1:
            return False
        top = max(top, label)
    return True


def _interval_mask(lo, hi, shift=0):
    return ((1 << (hi - lo + 1)) - 1) << (lo + shift)


def _block_masks(letter, partition, shift=0):
    masks = {}
    for idx, (lo, hi) in enumerate(letter):
        label = partition[idx]
        masks[label] = masks.get(label, 0) | _interval_mask(lo, hi, shift)
    return list(masks.values())


def _step_masks(block_masks, new_masks):
    """Connectivity regrouping: returns the restricted-growth partition of the
    new intervals, or None when some old block touches none of them."""
    k = len(new_masks)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for bm in block_masks:
        first = -1
        for j, nm in enumerate(new_masks):
            if bm & nm:
                if first < 0:
                    first = j
                else:
                    ra, rb = find(first), find(j)
                    if ra != rb:
                        parent[rb] = ra
        if first < 0:
            return None  # the block is stranded: dead transition
    labels = {}
    out = []
    for j in range(k):
        r = find(j)
        if r not in labels:
            labels[r] = len(labels)
        out.append(labels[r])
    return tuple(out)


def step(state, next_letter):
    """One transfer move with absolutely-placed letters.

    Returns the successor TransferState, or None when the transition is
    invalid because a connectivity block of `state` touches no interval of
    `next_letter` (abandonment).
    """
    if not next_letter:
        raise ValueError("words contain nonempty letters only")
    new_masks = [_interval_mask(lo, hi) for lo, hi in next_letter]
    partition = _step_masks(_block_masks(state.letter, state.partition), new_masks)
    if partition is None:
        return None
    return TransferState(next_letter, partition)


def step_parity_ok(prev_letter, next_letter) -> bool:
    """Adjacent hexagonal columns must have opposite start parity."""
    return letter_start_parity(prev_letter) != letter_start_parity(next_letter)


def _prune_and_index(states, weights, edges, starts, accepts):
    """Keep states on some start->accept path, index them in sorted order."""
    fwd = {s: [] for s in states}
    rev = {s: [] for s in states}
    for (src, dst), _m in edges.items():
        fwd[src].append(dst)
        rev[dst].append(src)

    def closure(seed, graph):
        seen = set(seed)
        todo = deque(seed)
        while todo:
            s = todo.popleft()
            for t in graph[s]:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return seen

    reachable = closure([s for s in starts], fwd)
    useful = closure([s for s in accepts], rev)
    keep = sorted(reachable & useful)
    index = {s: i for i, s in enumerate(keep)}
    adj = [[] for _ in keep]
    for (src, dst), mult in sorted(edges.items()):
        if src in index and dst in index:
            adj[index[src]].append((index[dst], mult))
    return Cmp(
        labels=tuple(keep),
        weights=tuple(weights[s] for s in keep),
        adj=tuple(tuple(a) for a in adj),
        start=tuple(index[s] for s in sorted(starts) if s in index),
        accept=tuple(index[s] for s in sorted(accepts) if s in index),
    )


def build_strip_cmp(rows, mode="square"):
    """Transfer process for animals whose columns live in rows [0, rows-1].

    Paths from start to accept states biject with animals anchored at column
    zero, one path per vertical placement inside the strip.  Hex mode uses
    parity letters, halved weights, and alternating column parity.
    """
    if rows < 0:
        raise ValueError("rows must be nonnegative")
    if mode == "hex":
        letters = [l for l in gen_parity_letters(0, rows - 1) if l]
    else:
        letters = [l for l in gen_square_letters(0, rows - 1) if l]
    parity_mode = mode == "hex"
    weights = {}
    starts = []
    accepts = set()
    edges = {}
    todo = deque()
    seen = set()
    for letter in letters:
        s = TransferState(letter, discrete_partition(len(letter)))
        starts.append(s)
        if s not in seen:
            seen.add(s)
            todo.append(s)
    letter_masks = {l: [_interval_mask(lo, hi) for lo, hi in l] for l in letters}
    while todo:
        s = todo.popleft()
        weights[s] = letter_weight(s.letter, mode)
        if max(s.partition, default=0) == 0:
            accepts.add(s)
        blocks = _block_masks(s.letter, s.partition)
        for nxt in letters:
            if parity_mode and not step_parity_ok(s.letter, nxt):
                continue
            partition = _step_masks(blocks, letter_masks[nxt])
            if partition is None:
                continue
            t = TransferState(nxt, partition)
            edges[(s, t)] = 1
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return _prune_and_index(weights.keys(), weights, edges, starts, accepts)


def build_free_cmp(bounds, mode="square"):
    """Transfer process for board animals: a column with exactly k blocks may
    span at most bounds[k-1] native cells, and more than len(bounds) blocks
    is forbidden.  Letters are base-normalized; each edge aggregates the
    vertical offsets that lead to the same (letter, partition) target, so the
    multiplicity is the number of admissible offsets.  Hex columns are
    dominoes in square rows: spans double and offsets must be odd.
    """
    bounds = list(bounds)
    if not bounds or any(b < 1 for b in bounds):
        raise ValueError("bounds must be a nonempty list of positive integers")
    parity_mode = mode == "hex"
    letters = []
    for k, bound in enumerate(bounds, start=1):
        span_rows = 2 * bound if parity_mode else bound
        letters.extend(gen_letters_anchored(span_rows, k, mode))
    letter_rows = {l: l[-1][1] + 1 for l in letters}
    letter_masks = {l: [_interval_mask(lo, hi) for lo, hi in l] for l in letters}
    weights = {}
    starts = []
    accepts = set()
    edges = {}
    todo = deque()
    seen = set()
    for letter in letters:
        s = TransferState(letter, discrete_partition(len(letter)))
        starts.append(s)
        if s not in seen:
            seen.add(s)
            todo.append(s)
    while todo:
        s = todo.popleft()
        weights[s] = letter_weight(s.letter, mode)
        if max(s.partition, default=0) == 0:
            accepts.add(s)
        rows_here = letter_rows[s.letter]
        for nxt in letters:
            rows_next = letter_rows[nxt]
            lo_d, hi_d = 1 - rows_next, rows_here - 1
            if parity_mode and lo_d % 2 == 0:
                lo_d += 1
            step_d = 2 if parity_mode else 1
            for d in range(lo_d, hi_d + 1, step_d):
                # align both columns in one nonnegative row frame
                blocks = _block_masks(s.letter, s.partition, shift=max(0, -d))
                new_masks = [m << max(0, d) for m in letter_masks[nxt]]
                partition = _step_masks(blocks, new_masks)
                if partition is None:
                    continue
                t = TransferState(nxt, partition)
                edges[(s, t)] = edges.get((s, t), 0) + 1
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return _prune_and_index(weights.keys(), weights, edges, starts, accepts)


# --- serialization to the document format of the cli module ---


def cmp_to_doc(cmp) -> dict:
    """Plain-dict form of a process in the interchange document schema.

    Vertices are identified by their index so the document is deterministic
    for a given process."""
    return {
        "version": 1,
        "vertices": [
            {"id": i, "weight": w} for i, w in enumerate(cmp.weights)
        ],
        "edges": [
            {"from": i, "to": j, "mult": m}
            for i in range(cmp.size)
            for (j, m) in cmp.adj[i]
        ],
        "start": list(cmp.start),
        "accept": list(cmp.accept),
    }


def cmp_from_doc(doc) -> Cmp:
    """Validate and load a process document; raises InputFileError."""
    from . import InputFileError

    def fail(msg):
        raise InputFileError(msg)

    if not isinstance(doc, dict):
        fail("document must be a JSON object")
    if doc.get("version") != 1:
        fail("unsupported or missing version (expected 1)")
    for key in ("vertices", "edges", "start", "accept"):
        if not isinstance(doc.get(key), list):
            fail(f"field {key!r} must be a list")
    ids = []
    weights = {}
    for v in doc["vertices"]:
        if not isinstance(v, dict) or not isinstance(v.get("id"), int):
            fail("each vertex needs an integer 'id'")
        if v["id"] in weights:
            fail(f"duplicate vertex id {v['id']}")
        w = v.get("weight")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            fail(f"vertex {v['id']} needs an integer weight >= 1")
        ids.append(v["id"])
        weights[v["id"]] = w
    order = sorted(ids)
    index = {vid: i for i, vid in enumerate(order)}
    adj = [{} for _ in order]
    for e in doc["edges"]:
        if not isinstance(e, dict):
            fail("each edge must be an object")
        src, dst, mult = e.get("from"), e.get("to"), e.get("mult", 1)
        if src not in index or dst not in index:
            fail(f"edge references unknown vertex: {e}")
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            fail(f"edge multiplicity must be a positive integer: {e}")
        adj[index[src]][index[dst]] = adj[index[src]].get(index[dst], 0) + mult
    for key in ("start", "accept"):
        for vid in doc[key]:
            if vid not in index:
                fail(f"{key} lists unknown vertex id {vid}")
    return Cmp(
        labels=tuple(order),
        weights=tuple(weights[vid] for vid in order),
        adj=tuple(tuple(sorted(d.items())) for d in adj),
        start=tuple(sorted({index[v] for v in doc["start"]})),
        accept=tuple(sorted({index[v] for v in doc["accept"]})),
    )
