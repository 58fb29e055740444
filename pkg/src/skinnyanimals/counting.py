"""Counting series and generating functions over transfer processes.

Two independent computation paths are exposed for every process: a truncated
dynamic program over path weights (cmp_series) and an exact solve of the
linear system

    F_v(z) = 1_T(v) z^wt(v) + z^wt(v) * sum_u n(v,u) F_u(z)

over the rational-function field (cmp_gf), summed over start vertices.  The
strip counters turn the answers into translation-class counts through the
telescoping difference W(rows) - W(rows-1): shifting a placement up one row
injects the (rows-1)-strip placements into the rows-strip ones, so the
difference counts each class once, at its bottom-touching placement.

Strip heights are given in square rows in both modes; in parity (hexagonal)
mode a hexagon column occupies two square rows, so all hexanimals of k cells
appear within 2k rows and khaya(L) = strip_series(2L, L, parity) is the
unrestricted count.
"""

from __future__ import annotations

from .algebra import Poly, RatFn, ratfn_series, solve_linear_system
from .letters import normalize_mode as _norm_mode
from .transfer import Cmp, build_free_cmp, build_strip_cmp


def _check_weights(cmp):
    if any(w < 1 for w in cmp.weights):
        raise ValueError("vertex weights must be >= 1")


def cmp_series(cmp: Cmp, length: int) -> list:
    """Number of start->accept paths of total vertex weight w, w = 1..length.

    Forward DP over the weight axis; every vertex weighs at least 1, so the
    table closes after `length` sweeps."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    _check_weights(cmp)
    n = cmp.size
    starts = set(cmp.start)
    rev = [[] for _ in range(n)]
    for u in range(n):
        for v, m in cmp.adj[u]:
            rev[v].append((u, m))
    f = [[0] * (length + 1) for _ in range(n)]
    for w in range(1, length + 1):
        for v in range(n):
            rest = w - cmp.weights[v]
            if rest < 0:
                continue
            c = 1 if (rest == 0 and v in starts) else 0
            if rest >= 1:
                for u, m in rev[v]:
                    fu = f[u][rest]
                    if fu:
                        c += m * fu
            f[v][w] = c
    accepts = set(cmp.accept)
    return [sum(f[v][w] for v in accepts) for w in range(1, length + 1)]


def cmp_gf(cmp: Cmp, deadline=None) -> RatFn:
    """Exact generating function of the start->accept path weights.

    Restricts the system to vertices that both see a start and reach an
    accept vertex (everything else has F identically zero or irrelevant),
    then solves one fraction-free elimination with an extra aggregate
    unknown for the start sum, so the answer reduces exactly once.
    """
    _check_weights(cmp)
    n = cmp.size
    fwd = [set(j for j, _ in row) for row in cmp.adj]
    rev = [set() for _ in range(n)]
    for i in range(n):
        for j in fwd[i]:
            rev[j].add(i)

    def closure(seed, graph):
        seen = set(seed)
        todo = list(seen)
        while todo:
            v = todo.pop()
            for u in graph[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return seen

    keep = sorted(closure(cmp.start, fwd) & closure(cmp.accept, rev))
    if not keep:
        return RatFn(Poly.zero(), Poly.one())
    index = {v: i + 1 for i, v in enumerate(keep)}  # slot 0 = start sum
    k = len(keep) + 1
    zero, one = Poly.zero(), Poly.one()
    matrix = [[zero] * k for _ in range(k)]
    rhs = [zero] * k
    matrix[0][0] = one
    for v in set(cmp.start):
        if v in index:
            matrix[0][index[v]] = Poly.const(-1)
    accepts = set(cmp.accept)
    for v in keep:
        i = index[v]
        zw = Poly.z_power(cmp.weights[v])
        row = matrix[i]
        row[i] = one
        for u, m in cmp.adj[v]:
            if u in index:
                j = index[u]
                row[j] = row[j] - Poly.const(m) * zw
        if v in accepts:
            rhs[i] = zw
    return solve_linear_system(matrix, rhs, deadline=deadline)[0]


# --- strip counting -------------------------------------------------------

_STRIP_CMPS = {}
_W_SERIES = {}
_W_GFS = {}


def _strip_cmp(rows, mode) -> Cmp:
    key = (rows, mode)
    if key not in _STRIP_CMPS:
        _STRIP_CMPS[key] = build_strip_cmp(rows, mode)
    return _STRIP_CMPS[key]


def _w_series(rows, length, mode):
    if rows <= 0:
        return [0] * length
    key = (rows, mode)
    cached = _W_SERIES.get(key)
    if cached is None or len(cached) < length:
        cached = cmp_series(_strip_cmp(rows, mode), length)
        _W_SERIES[key] = cached
    return list(cached[:length])


def _w_gf(rows, mode, deadline=None) -> RatFn:
    if rows <= 0:
        return RatFn(Poly.zero(), Poly.one())
    key = (rows, mode)
    if key not in _W_GFS:
        _W_GFS[key] = cmp_gf(_strip_cmp(rows, mode), deadline=deadline)
    return _W_GFS[key]


def strip_series(rows, length, mode="parity") -> list:
    """Translation classes of animals of strip height at most `rows`,
    by cell count 1..length."""
    mode = _norm_mode(mode)
    if rows < 1 or length < 1:
        raise ValueError("rows and length must be >= 1")
    big = _w_series(rows, length, mode)
    small = _w_series(rows - 1, length, mode)
    return [a - b for a, b in zip(big, small)]


def strip_gf(rows, mode="parity", deadline=None) -> RatFn:
    mode = _norm_mode(mode)
    if rows < 1:
        raise ValueError("rows must be >= 1")
    return _w_gf(rows, mode, deadline) - _w_gf(rows - 1, mode, deadline)


def exact_strip_series(rows, length, mode="parity") -> list:
    """Classes whose embedding height is exactly `rows`."""
    mode = _norm_mode(mode)
    if rows < 1 or length < 1:
        raise ValueError("rows and length must be >= 1")
    if rows == 1:
        return strip_series(1, length, mode)
    big = strip_series(rows, length, mode)
    small = strip_series(rows - 1, length, mode)
    return [a - b for a, b in zip(big, small)]


def exact_strip_gf(rows, mode="parity", deadline=None) -> RatFn:
    mode = _norm_mode(mode)
    if rows < 1:
        raise ValueError("rows must be >= 1")
    if rows == 1:
        return strip_gf(1, mode, deadline)
    return strip_gf(rows, mode, deadline) - strip_gf(rows - 1, mode, deadline)


def khaya(length) -> list:
    """Hexanimal counts by cell number, 1..length.

    A hexanimal with k cells embeds in at most 2k square rows, so the
    2*length-row strip already holds every animal counted here."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return strip_series(2 * length, length, "hex")


# --- board counting -------------------------------------------------------


def free_series(bounds, length, mode="parity") -> list:
    """Board animals by cell count: every column with k blocks spans at most
    bounds[k-1] cells (native units), any total height."""
    mode = _norm_mode(mode)
    if length < 1:
        raise ValueError("length must be >= 1")
    return cmp_series(build_free_cmp(bounds, mode), length)


def free_gf(bounds, mode="parity", deadline=None) -> RatFn:
    mode = _norm_mode(mode)
    return cmp_gf(build_free_cmp(bounds, mode), deadline=deadline)


def gf_series(gf: RatFn, length: int) -> list:
    """Cell-count series of a generating function: coefficients of z^1..z^L.

    The z^0 coefficient must vanish (no empty animal); it is checked."""
    coeffs = ratfn_series(gf, length)
    if coeffs[0] != 0:
        raise ValueError("generating function has a nonzero constant term")
    return coeffs[1:]
