"""Exact counting of proper colorings (two independent algorithms), graph
homomorphisms and independent sets, plus the independence number and the
deterministic greedy maximal matching.

All counts are exact Python integers; nothing here rounds.
"""
from __future__ import annotations

from typing import Sequence

from .errors import CapExceededError, InvalidParameterError
from .graphs import Graph, TargetGraph, _canonical_blocks, _pack_blocks, vertices_of

DEFAULT_POLY_CAP = 14


def _bfs_order(g: Graph) -> list[int]:
    # connected elimination order: BFS from vertex 0, restarting at the
    # smallest unvisited vertex for further components
    order: list[int] = []
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            order.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def count_colorings(g: Graph, q: int, method: str = "backtrack") -> int:
    """Number of functions V -> {1..q} with adjacent vertices mapped to
    different values.  `method` selects the backtracking counter or the
    deletion-contraction polynomial evaluated at q; both are exact and must
    agree."""
    if q < 0:
        raise InvalidParameterError("q must be non-negative")
    if method == "backtrack":
        return _count_backtrack(g, q)
    if method == "polynomial":
        return evaluate_polynomial(chromatic_polynomial(g), q)
    raise InvalidParameterError(f"unknown method {method!r}")


def _count_backtrack(g: Graph, q: int) -> int:
    if g.n == 0:
        return 1
    if q == 0:
        return 0
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = []
    for i, v in enumerate(order):
        earlier.append([pos[w] for w in g.neighbors(v) if pos[w] < i])
    n = g.n
    colors = [0] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        forbidden = 0
        for p in earlier[i]:
            forbidden |= 1 << colors[p]
        total = 0
        for c in range(q):
            if not (forbidden >> c) & 1:
                colors[i] = c
                total += rec(i + 1)
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# Chromatic polynomial by deletion-contraction
# ---------------------------------------------------------------------------

def _poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for j, bj in enumerate(b):
        out[j] -= bj
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _component_masks(rows: Sequence[int], n: int) -> list[int]:
    comps = []
    unseen = (1 << n) - 1
    while unseen:
        start = unseen & -unseen
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            v = 0
            while f:
                if f & 1:
                    nxt |= rows[v]
                f >>= 1
                v += 1
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        unseen &= ~seen
    return comps


def _induced_rows(rows: Sequence[int], mask: int) -> tuple[list[int], int]:
    verts = vertices_of(mask)
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        r = rows[v] & mask
        nr = 0
        for w in vertices_of(r):
            nr |= 1 << index[w]
        out.append(nr)
    return out, len(verts)


def chromatic_polynomial(g: Graph, cap: int = DEFAULT_POLY_CAP) -> tuple[int, ...]:
    """Coefficients of the chromatic polynomial in the monomial basis:
    coeffs[k] is the coefficient of q**k.  Deletion-contraction with
    memoization on the canonical form, factoring over components first."""
    if g.n > cap:
        raise CapExceededError(f"n={g.n} exceeds polynomial cap {cap}")
    memo: dict[tuple[int, int], tuple[int, ...]] = {}
    return _poly(list(g.rows), g.n, memo)


def _poly(rows: list[int], n: int, memo: dict) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    comps = _component_masks(rows, n)
    if len(comps) > 1:
        out: tuple[int, ...] = (1,)
        for cm in comps:
            sub, m = _induced_rows(rows, cm)
            out = _poly_mul(out, _poly(sub, m, memo))
        return out
    if all(r == 0 for r in rows):
        return (0,) * n + (1,)
    key = (n, _pack_blocks(_canonical_blocks(rows, n)))
    hit = memo.get(key)
    if hit is not None:
        return hit
    # contract toward the densest corner: edge at a maximum-degree vertex
    u = max(range(n), key=lambda v: rows[v].bit_count())
    nbrs = vertices_of(rows[u])
    v = max(nbrs, key=lambda w: rows[w].bit_count())
    deleted = list(rows)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    merged = list(rows)
    merged[u] = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
    for w in vertices_of(merged[u]):
        merged[w] |= 1 << u
    keep = ((1 << n) - 1) & ~(1 << v)
    for w in range(n):
        merged[w] &= keep
    contracted, m = _induced_rows(merged, keep)
    result = _poly_sub(_poly(deleted, n, memo), _poly(contracted, m, memo))
    memo[key] = result
    return result


def evaluate_polynomial(coeffs: Sequence[int], q: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * q + c
    return out


# ---------------------------------------------------------------------------
# Homomorphisms and independent sets
# ---------------------------------------------------------------------------

def count_homomorphisms(g: Graph, h: TargetGraph) -> int:
    """Number of maps V(g) -> V(h) sending edges to edges (loops in h allow
    adjacent preimages to coincide)."""
    if g.n == 0:
        return 1
    if h.k == 0:
        return 0
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = []
    for i, v in enumerate(order):
        earlier.append([pos[w] for w in g.neighbors(v) if pos[w] < i])
    full = (1 << h.k) - 1
    image = [0] * g.n

    def rec(i: int) -> int:
        if i == g.n:
            return 1
        cand = full
        for p in earlier[i]:
            cand &= h.rows[image[p]]
        total = 0
        while cand:
            t = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            image[i] = t
            total += rec(i + 1)
        return total

    return rec(0)


def count_independent_sets(g: Graph) -> int:
    """Number of independent sets, the empty set included."""
    rows = g.rows
    memo: dict[int, int] = {}

    def count(mask: int) -> int:
        if mask == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        # branch on a maximum-degree vertex of the induced subgraph
        best_v = -1
        best_d = -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            dv = (rows[v] & mask).bit_count()
            if dv > best_d:
                best_d = dv
                best_v = v
        v = best_v
        without = count(mask & ~(1 << v))
        with_v = count(mask & ~(rows[v] | (1 << v)))
        memo[mask] = out = without + with_v
        return out

    return count((1 << g.n) - 1)


def _clique_cover_bound(rows: Sequence[int], mask: int) -> int:
    # a partition into b cliques bounds any independent set by b
    bound = 0
    rem = mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        clique = 1 << v
        cand = rem & rows[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= rows[u]
        rem &= ~clique
        bound += 1
    return bound


def _alpha_mask(rows: Sequence[int], mask: int) -> int:
    """Exact independence number of the induced subgraph on `mask`."""
    size = 0
    # reductions: isolated and degree-1 vertices always enter some maximum set
    changed = True
    while changed and mask:
        changed = False
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nb = rows[v] & mask
            dv = nb.bit_count()
            if dv == 0:
                size += 1
                mask &= ~(1 << v)
                changed = True
                break
            if dv == 1:
                size += 1
                mask &= ~(nb | (1 << v))
                changed = True
                break
    if mask == 0:
        return size
    comps = []
    unseen = mask
    while unseen:
        start = unseen & -unseen
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= rows[v] & mask
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        unseen &= ~seen
    if len(comps) > 1:
        return size + sum(_alpha_mask(rows, c) for c in comps)
    # connected, minimum degree >= 2
    best_v = -1
    best_d = -1
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        dv = (rows[v] & mask).bit_count()
        if dv > best_d:
            best_d = dv
            best_v = v
    if best_d <= 2:
        # a connected graph with all degrees exactly 2 is a cycle
        return size + mask.bit_count() // 2
    v = best_v
    best = 1 + _alpha_mask(rows, mask & ~(rows[v] | (1 << v)))
    rest = mask & ~(1 << v)
    if _clique_cover_bound(rows, rest) > best:
        best = max(best, _alpha_mask(rows, rest))
    return size + best


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound over bit masks."""
    if g.n == 0:
        return 0
    return _alpha_mask(g.rows, (1 << g.n) - 1)


def maximum_independent_set(g: Graph) -> tuple[int, ...]:
    """The lexicographically first maximum independent set."""
    alpha = independence_number(g)
    chosen: list[int] = []
    avail = (1 << g.n) - 1
    for v in range(g.n):
        if not (avail >> v) & 1:
            continue
        # vertices below v are already settled, so avail only holds v and above
        after = avail & ~(g.rows[v] | (1 << v))
        if len(chosen) + 1 + _alpha_mask(g.rows, after) == alpha:
            chosen.append(v)
            avail = after
        else:
            avail &= ~(1 << v)
    return tuple(chosen)


def greedy_maximal_matching(g: Graph) -> list[tuple[int, int]]:
    """Scan edges in lexicographic order, taking every edge whose endpoints
    are both unmatched; deterministic and maximal."""
    matched = 0
    out = []
    for u, v in g.edges():
        if not ((matched >> u) & 1 or (matched >> v) & 1):
            out.append((u, v))
            matched |= (1 << u) | (1 << v)
    return out
