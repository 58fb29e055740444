"""Tests for the column transfer grammar and process builders."""

import random

import pytest

from skinnyanimals import InputFileError
from skinnyanimals.letters import gen_square_letters
from skinnyanimals.transfer import (
    Cmp,
    TransferState,
    build_free_cmp,
    build_strip_cmp,
    cmp_from_doc,
    cmp_to_doc,
    discrete_partition,
    intervals_adjacent,
    is_restricted_growth,
    step,
    step_parity_ok,
)


def S(letter, partition=None):
    letter = tuple(tuple(iv) for iv in letter)
    if partition is None:
        partition = discrete_partition(len(letter))
    return TransferState(letter, tuple(partition))


def test_intervals_adjacent():
    assert intervals_adjacent((0, 1), (1, 2))
    assert intervals_adjacent((1, 2), (0, 1))
    assert intervals_adjacent((0, 5), (2, 3))
    assert intervals_adjacent((2, 2), (2, 2))
    assert not intervals_adjacent((0, 0), (1, 1))
    assert not intervals_adjacent((3, 4), (0, 2))


def test_step_single_interval_slide():
    out = step(S([(0, 1)]), ((1, 2),))
    assert out == S([(1, 2)], (0,))


def test_step_abandonment_returns_none():
    # the block at rows 4..5 touches nothing in the next column
    out = step(S([(0, 1), (4, 5)]), ((1, 2),))
    assert out is None


def test_step_merges_blocks_through_common_interval():
    out = step(S([(0, 1), (4, 5)]), ((0, 5),))
    assert out == S([(0, 5)], (0,))


def test_step_splits_single_block():
    # one old block feeds two new intervals: they stay co-blocked
    out = step(S([(0, 5)]), ((0, 1), (4, 5)))
    assert out == S([(0, 1), (4, 5)], (0, 0))


def test_step_keeps_separate_blocks_separate():
    out = step(S([(0, 0), (2, 2)]), ((0, 0), (2, 2)))
    assert out == S([(0, 0), (2, 2)], (0, 1))


def test_step_partial_merge():
    # blocks {0},{1},{2} of three intervals; new interval spans the top two
    state = S([(0, 0), (2, 2), (4, 4)])
    out = step(state, ((2, 4), (6, 6)))
    assert out is None  # block at row 0 is stranded
    out = step(state, ((0, 4),))
    assert out == S([(0, 4)], (0,))


def test_step_rejects_empty_letter():
    with pytest.raises(ValueError):
        step(S([(0, 0)]), ())


def test_step_parity_ok():
    assert step_parity_ok(((0, 1),), ((1, 2),))
    assert step_parity_ok(((3, 4), (7, 8)), ((0, 3),))
    assert not step_parity_ok(((0, 1),), ((2, 3),))
    assert not step_parity_ok(((1, 2),), ((1, 4),))


def _cells_of_word(word):
    cells = set()
    for col, letter in enumerate(word):
        for lo, hi in letter:
            for r in range(lo, hi + 1):
                cells.add((col, r))
    return cells


def _components(cells):
    comps = []
    left = set(cells)
    while left:
        seed = left.pop()
        comp = {seed}
        todo = [seed]
        while todo:
            x, y = todo.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in left:
                    left.remove(nb)
                    comp.add(nb)
                    todo.append(nb)
        comps.append(comp)
    return comps


def _run_word(word):
    state = S(word[0])
    trace = [state]
    for letter in word[1:]:
        state = step(state, tuple(letter))
        trace.append(state)
        if state is None:
            break
    return trace


def _partition_from_components(word, col):
    comps = _components(_cells_of_word(word[: col + 1]))
    comp_of = {}
    for i, comp in enumerate(comps):
        for cell in comp:
            comp_of[cell] = i
    raw = [comp_of[(col, lo)] for lo, hi in word[col]]
    relabel = {}
    out = []
    for r in raw:
        if r not in relabel:
            relabel[r] = len(relabel)
        out.append(relabel[r])
    return tuple(out)


def test_step_matches_component_bookkeeping_on_random_words():
    rng = random.Random(20260819)
    letters = [l for l in gen_square_letters(0, 4) if l]
    for _ in range(300):
        word = [rng.choice(letters) for _ in range(rng.randint(2, 5))]
        trace = _run_word(word)
        for col in range(1, len(word)):
            if col >= len(trace) or trace[col] is None:
                # the step died: some component lost contact exactly here
                comps = _components(_cells_of_word(word[:col + 1]))
                assert any(max(x for x, _ in comp) < col for comp in comps)
                break
            comps = _components(_cells_of_word(word[:col + 1]))
            assert all(max(x for x, _ in comp) == col for comp in comps)
            assert trace[col].partition == _partition_from_components(word, col)


def test_step_partitions_are_restricted_growth():
    rng = random.Random(7)
    letters = [l for l in gen_square_letters(0, 6) if l]
    for _ in range(200):
        state = S(rng.choice(letters))
        for _ in range(4):
            nxt = step(state, rng.choice(letters))
            if nxt is None:
                break
            assert is_restricted_growth(nxt.partition)
            assert len(nxt.partition) == len(nxt.letter)
            state = nxt


def _assert_well_formed(cmp):
    n = cmp.size
    assert len(cmp.weights) == n and len(cmp.adj) == n
    assert all(w >= 1 for w in cmp.weights)
    assert all(0 <= j < n and m >= 1 for row in cmp.adj for j, m in row)
    assert all(0 <= v < n for v in cmp.start)
    assert all(0 <= v < n for v in cmp.accept)
    # every vertex lies on some start -> accept path
    fwd = [set(j for j, _ in row) for row in cmp.adj]
    rev = [set() for _ in range(n)]
    for i in range(n):
        for j in fwd[i]:
            rev[j].add(i)

    def closure(seed, graph):
        seen = set(seed)
        todo = list(seed)
        while todo:
            v = todo.pop()
            for u in graph[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return seen

    assert closure(cmp.start, fwd) & closure(cmp.accept, rev) == set(range(n))


def test_strip_cmp_one_hex_row_is_empty():
    cmp = build_strip_cmp(1, "hex")
    assert cmp.size == 0


def test_strip_cmp_two_hex_rows_is_one_isolated_vertex():
    cmp = build_strip_cmp(2, "hex")
    assert cmp.size == 1
    assert cmp.weights == (1,)
    assert cmp.adj == ((),)
    assert cmp.start == (0,) and cmp.accept == (0,)


def test_strip_cmp_two_square_rows():
    cmp = build_strip_cmp(2, "square")
    _assert_well_formed(cmp)
    assert cmp.size == 3
    assert sorted(cmp.weights) == [1, 1, 2]
    assert cmp.start == (0, 1, 2)
    assert cmp.accept == (0, 1, 2)
    assert cmp.edge_count() == 7
    # the single cells do not touch each other diagonally
    idx = {s.letter: i for i, s in enumerate(cmp.labels)}
    lo, hi, full = idx[((0, 0),)], idx[((1, 1),)], idx[((0, 1),)]
    targets = {i: set(j for j, _ in cmp.adj[i]) for i in range(3)}
    assert targets[lo] == {lo, full}
    assert targets[hi] == {hi, full}
    assert targets[full] == {lo, hi, full}
    assert all(m == 1 for row in cmp.adj for _, m in row)


def test_strip_cmp_hex_edges_alternate_parity():
    cmp = build_strip_cmp(5, "hex")
    _assert_well_formed(cmp)
    for i in range(cmp.size):
        for j, _ in cmp.adj[i]:
            assert step_parity_ok(cmp.labels[i].letter, cmp.labels[j].letter)


def test_strip_cmp_starts_are_discrete_and_accepts_connected():
    for rows, mode in ((4, "square"), (6, "hex")):
        cmp = build_strip_cmp(rows, mode)
        _assert_well_formed(cmp)
        for v in cmp.start:
            s = cmp.labels[v]
            assert s.partition == discrete_partition(len(s.letter))
        for v in cmp.accept:
            assert max(cmp.labels[v].partition) == 0
        # accepts are exactly the single-block vertices
        for i, s in enumerate(cmp.labels):
            assert (max(s.partition) == 0) == (i in set(cmp.accept))


def test_strip_cmp_edges_have_multiplicity_one():
    cmp = build_strip_cmp(5, "square")
    assert all(m == 1 for row in cmp.adj for _, m in row)


def test_free_cmp_single_cell_board_square():
    cmp = build_free_cmp([1], "square")
    assert cmp.size == 1
    assert cmp.weights == (1,)
    assert cmp.adj == (((0, 1),),)


def test_free_cmp_single_cell_board_hex():
    # one hexagon per column, two odd offsets keep contact
    cmp = build_free_cmp([1], "hex")
    assert cmp.size == 1
    assert cmp.weights == (1,)
    assert cmp.adj == (((0, 2),),)


def test_free_cmp_span_two_board_square():
    cmp = build_free_cmp([2], "square")
    _assert_well_formed(cmp)
    assert cmp.size == 2
    idx = {s.letter: i for i, s in enumerate(cmp.labels)}
    one, two = idx[((0, 0),)], idx[((0, 1),)]
    assert cmp.weights[one] == 1 and cmp.weights[two] == 2
    adj = {i: dict(cmp.adj[i]) for i in range(2)}
    assert adj[one] == {one: 1, two: 2}
    assert adj[two] == {one: 2, two: 3}


def test_free_cmp_multiplicities_match_explicit_offsets():
    for bounds, mode in (([3], "square"), ([2, 4], "square"), ([2], "hex")):
        cmp = build_free_cmp(bounds, mode)
        _assert_well_formed(cmp)
        for i, src in enumerate(cmp.labels):
            got = dict(cmp.adj[i])
            want = {}
            rows_here = src.letter[-1][1] + 1
            for j, dst in enumerate(cmp.labels):
                rows_next = dst.letter[-1][1] + 1
                for d in range(1 - rows_next, rows_here):
                    if mode == "hex" and d % 2 == 0:
                        continue
                    shifted = tuple((lo + d, hi + d) for lo, hi in dst.letter)
                    up = max(0, -d)
                    lifted = TransferState(
                        tuple((lo + up, hi + up) for lo, hi in src.letter),
                        src.partition,
                    )
                    out = step(lifted, tuple((lo + up, hi + up) for lo, hi in shifted))
                    if out is not None and out.partition == dst.partition:
                        want[j] = want.get(j, 0) + 1
            assert got == want


def test_free_cmp_rejects_bad_bounds():
    with pytest.raises(ValueError):
        build_free_cmp([], "square")
    with pytest.raises(ValueError):
        build_free_cmp([2, 0], "square")


def test_cmp_doc_round_trip():
    cmp = build_strip_cmp(3, "square")
    doc = cmp_to_doc(cmp)
    back = cmp_from_doc(doc)
    assert back.weights == cmp.weights
    assert back.adj == cmp.adj
    assert back.start == cmp.start
    assert back.accept == cmp.accept
    assert cmp_to_doc(back) == doc


def test_cmp_doc_round_trip_free_hex():
    cmp = build_free_cmp([2, 2], "hex")
    doc = cmp_to_doc(cmp)
    back = cmp_from_doc(doc)
    assert (back.weights, back.adj, back.start, back.accept) == (
        cmp.weights, cmp.adj, cmp.start, cmp.accept)


def test_cmp_from_doc_validation():
    good = {
        "version": 1,
        "vertices": [{"id": 0, "weight": 1}, {"id": 1, "weight": 2}],
        "edges": [{"from": 0, "to": 1, "mult": 3}],
        "start": [0],
        "accept": [1],
    }
    cmp = cmp_from_doc(good)
    assert cmp.size == 2 and cmp.adj[0] == ((1, 3),)

    bad = [
        "not a dict",
        {**good, "version": 2},
        {**good, "vertices": [{"id": 0, "weight": 1}, {"id": 0, "weight": 1}]},
        {**good, "vertices": [{"id": 0, "weight": 0}, {"id": 1, "weight": 2}]},
        {**good, "vertices": [{"id": 0, "weight": 1.5}, {"id": 1, "weight": 2}]},
        {**good, "edges": [{"from": 0, "to": 9, "mult": 1}]},
        {**good, "edges": [{"from": 0, "to": 1, "mult": 0}]},
        {**good, "start": [7]},
        {**good, "accept": "x"},
    ]
    for doc in bad:
        with pytest.raises(InputFileError):
            cmp_from_doc(doc)


def test_cmp_from_doc_merges_parallel_edges():
    doc = {
        "version": 1,
        "vertices": [{"id": 5, "weight": 1}],
        "edges": [
            {"from": 5, "to": 5, "mult": 1},
            {"from": 5, "to": 5, "mult": 2},
        ],
        "start": [5],
        "accept": [5],
    }
    cmp = cmp_from_doc(doc)
    assert cmp.adj == (((0, 3),),)
    assert cmp.labels == (5,)
