"""Counting and listing non-interlacing collections.

Wide subcategories of ``M(n, d)`` correspond to independent sets (empty set
included) of the graph whose vertices are the admissible sets and whose
edges join interlacing pairs.  Vertex sets are Python ints used as bitsets.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .classify import Collection, admissible_sets
from .errors import BudgetExceeded, CapExceeded
from .tuples import AdmissibleSet, masks_interlace

# Values of w_{n,d} computed in the literature, keyed by (n, d).
KNOWN_VALUES: dict[tuple[int, int], int] = {
    **{(n, 1): w for n, w in enumerate([2, 5, 14, 42, 132, 429, 1430, 4862], start=1)},
    **{(n, 2): w for n, w in enumerate(
        [2, 8, 47, 374, 4083, 62824, 1376012, 42579642], start=1)},
    **{(n, 3): w for n, w in enumerate([2, 12, 237, 16830, 4597078], start=1)},
    **{(n, 4): w for n, w in enumerate([2, 19, 1724, 3499884], start=1)},
    **{(n, 5): w for n, w in enumerate([2, 30, 17934], start=1)},
    **{(n, 6): w for n, w in enumerate([2, 48, 273092], start=1)},
    **{(n, 7): w for n, w in enumerate([2, 77, 5732137], start=1)},
}


class InterlaceGraph:
    """Admissible sets of ``(n, d)`` with bitset adjacency rows."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.sets: list[AdmissibleSet] = admissible_sets(n, d)
        masks = [s.mask for s in self.sets]
        size = len(masks)
        adj = [0] * size
        for i in range(size):
            a = masks[i]
            for j in range(i + 1, size):
                if masks_interlace(a, masks[j], d):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.adj = adj

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def full(self) -> int:
        return (1 << len(self.sets)) - 1

    def edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


@dataclass
class CountResult:
    n: int
    d: int
    w: int
    seconds: float
    nodes: int

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "w": str(self.w),
                "seconds": round(self.seconds, 6), "nodes": self.nodes}


class _Counter:
    """Branch on a maximum-degree vertex, ``#(G) = #(G - v) + #(G - N[v])``,
    splitting into connected components and memoising on the residual mask."""

    CHECK_EVERY = 4096

    def __init__(self, adj: list[int], deadline: Optional[float], memo: bool = True):
        self.adj = adj
        self.closed = [a | (1 << i) for i, a in enumerate(adj)]
        self.deadline = deadline
        self.memo: Optional[dict[int, int]] = {} if memo else None
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % self.CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("counting budget exhausted")

    def component(self, mask: int) -> int:
        low = mask & -mask
        comp = low
        frontier = low
        adj = self.adj
        while frontier:
            reach = 0
            while frontier:
                b = frontier & -frontier
                reach |= adj[b.bit_length() - 1]
                frontier ^= b
            frontier = reach & mask & ~comp
            comp |= frontier
        return comp

    def count(self, mask: int) -> int:
        if not mask:
            return 1
        memo = self.memo
        if memo is not None:
            hit = memo.get(mask)
            if hit is not None:
                return hit
        self._tick()
        comp = self.component(mask)
        if comp != mask:
            result = self.count_connected(comp) * self.count(mask & ~comp)
        else:
            result = self.count_connected(mask)
        if memo is not None:
            memo[mask] = result
        return result

    def count_connected(self, mask: int) -> int:
        if not mask & (mask - 1):
            return 2
        if self.memo is not None:
            hit = self.memo.get(mask)
            if hit is not None:
                return hit
        adj = self.adj
        best, best_deg = -1, -1
        rest = mask
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            deg = (adj[v] & mask).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
            rest ^= b
        without = mask & ~(1 << best)
        result = self.count(without) + self.count(mask & ~self.closed[best])
        if self.memo is not None:
            self.memo[mask] = result
        return result


def _split(adj: list[int], mask: int, pieces: int) -> list[int]:
    """Expand ``mask`` into at least ``pieces`` disjoint-branch residual masks
    whose independent-set counts sum to that of ``mask``."""
    closed = [a | (1 << i) for i, a in enumerate(adj)]
    frontier = [mask]
    while len(frontier) < pieces:
        frontier.sort(key=int.bit_count)
        m = frontier.pop()
        if not m:
            frontier.append(m)
            break
        v = max(_bits(m), key=lambda i: ((adj[i] & m).bit_count(), -i))
        frontier += [m & ~(1 << v), m & ~closed[v]]
    return frontier


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _count_piece(args) -> tuple[int, int]:
    adj, mask, deadline = args
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    c = _Counter(adj, deadline)
    return c.count(mask), c.nodes


def count_wide_stats(
    n: int,
    d: int,
    budget_secs: Optional[float] = None,
    jobs: int = 1,
    graph: Optional[InterlaceGraph] = None,
) -> CountResult:
    """Count wide subcategories of ``M(n, d)`` with timing and node statistics.

    Raises :class:`BudgetExceeded` if ``budget_secs`` elapses first (graph
    construction included).
    """
    start = time.monotonic()
    deadline = start + budget_secs if budget_secs is not None else None
    g = graph if graph is not None else InterlaceGraph(n, d)
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("counting budget exhausted")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    if jobs <= 1:
        c = _Counter(g.adj, deadline)
        w, nodes = c.count(g.full), c.nodes
    else:
        pieces = _split(g.adj, g.full, 4 * jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_count_piece, [(g.adj, m, deadline) for m in pieces]))
        w = sum(r[0] for r in results)
        nodes = sum(r[1] for r in results)
    return CountResult(n, d, w, time.monotonic() - start, nodes)


def count_wide(n: int, d: int, budget_secs: Optional[float] = None, jobs: int = 1) -> int:
    """``w_{n,d}``: the number of wide subcategories of ``M(n, d)``."""
    return count_wide_stats(n, d, budget_secs, jobs).w


def count_independent_sets_brute(adj: list[int]) -> int:
    """Reference count by scanning all vertex subsets; only for tiny graphs."""
    size = len(adj)
    total = 0
    for s in range(1 << size):
        if all(not (adj[v] & s) for v in _bits(s)):
            total += 1
    return total


def enumerate_collections(
    n: int, d: int, cap: Optional[int] = None, graph: Optional[InterlaceGraph] = None
) -> Iterator[Collection]:
    """Every non-interlacing collection once, attaching admissible sets in index order.

    With ``cap`` the total is checked first and :class:`CapExceeded` raised
    before anything is yielded.
    """
    g = graph if graph is not None else InterlaceGraph(n, d)
    if cap is not None:
        total = count_wide_stats(n, d, graph=g).w
        if total > cap:
            raise CapExceeded(f"{total} collections exceed the cap of {cap}")
    return _walk(g)


def _walk(g: InterlaceGraph) -> Iterator[Collection]:
    closed = [a | (1 << i) for i, a in enumerate(g.adj)]
    stack: list[tuple[tuple[int, ...], int]] = [((), g.full)]
    while stack:
        chosen, allowed = stack.pop()
        yield Collection(g.n, g.d, frozenset(g.sets[i] for i in chosen))
        # push in reverse so the smallest index is expanded first
        for i in reversed(list(_bits(allowed))):
            later = allowed & ~((1 << (i + 1)) - 1)
            stack.append((chosen + (i,), later & ~closed[i]))


def catalan_count(n: int) -> int:
    return comb(2 * n + 2, n + 1) // (n + 2)


def reference_counts(n: int, d: int) -> Optional[int]:
    """Known value of ``w_{n,d}`` from closed forms or the published table."""
    if n == 1:
        return 2
    if d == 1:
        return catalan_count(n)
    if n == 2:
        a, b = 5, 8
        for _ in range(d - 2):
            a, b = b, a + b - 1
        return b
    return KNOWN_VALUES.get((n, d))
