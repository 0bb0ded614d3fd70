"""The quiver ``Q^{n,m}`` with its commutativity and zero relations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .errors import InvalidTuple
from .tuples import IncTuple, check_context, generate_tuples, sigma


@dataclass(frozen=True, order=True)
class Arrow:
    """``alpha^x_k : x -> sigma_k^+(x)``."""

    source: IncTuple
    coord: int
    target: IncTuple

    @property
    def label(self) -> str:
        return f"alpha^{self.source.label}_{self.coord}"


@dataclass(frozen=True, order=True)
class Relation:
    """``rho^x_{kl}`` for ``k < l``.

    ``paths`` lists ``(coefficient, (first, second))`` where the path shifts
    coordinate ``first`` and then ``second``.  A commutativity relation has
    two paths with coefficients +1 and -1; a zero relation has one.
    """

    base: IncTuple
    k: int
    l: int
    kind: str
    paths: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def end(self) -> IncTuple:
        e = list(self.base.entries)
        e[self.k] += 1
        e[self.l] += 1
        return IncTuple(self.base.n, self.base.m, tuple(e))


@dataclass(frozen=True)
class QuiverPresentation:
    n: int
    m: int
    vertices: tuple[IncTuple, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]

    def arrow(self, source: IncTuple, coord: int) -> Optional[Arrow]:
        return self._arrow_index().get((source, coord))

    def _arrow_index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {(a.source, a.coord): a for a in self.arrows}
            object.__setattr__(self, "_idx", idx)
        return idx


def _relation(x: IncTuple, k: int, l: int) -> Optional[Relation]:
    e = list(x.entries)
    e[k] += 1
    e[l] += 1
    try:
        IncTuple(x.n, x.m, tuple(e))
    except InvalidTuple:
        return None
    via_k = sigma(x, k, 1) is not None
    via_l = sigma(x, l, 1) is not None
    if via_k and via_l:
        return Relation(x, k, l, "comm", ((1, (k, l)), (-1, (l, k))))
    if via_k:
        return Relation(x, k, l, "zero", ((1, (k, l)),))
    return Relation(x, k, l, "zero", ((1, (l, k)),))


@lru_cache(maxsize=None)
def build_quiver(n: int, m: int) -> QuiverPresentation:
    check_context(n, m)
    vertices = generate_tuples(n, m)
    arrows = []
    relations = []
    for x in vertices:
        for k in range(m + 1):
            y = sigma(x, k, 1)
            if y is not None:
                arrows.append(Arrow(x, k, y))
        for k, l in combinations(range(m + 1), 2):
            rel = _relation(x, k, l)
            if rel is not None:
                relations.append(rel)
    return QuiverPresentation(n, m, tuple(vertices), tuple(arrows), tuple(relations))


def _node_id(v: IncTuple) -> str:
    # plain concatenation is ambiguous once entries reach two digits
    return v.label if v.n + v.m < 10 else ".".join(map(str, v.entries))


def to_dot(q: QuiverPresentation) -> str:
    lines = [f"digraph Q_{q.n}_{q.m} {{"]
    for v in q.vertices:
        lines.append(f'  "{_node_id(v)}";')
    for a in q.arrows:
        lines.append(f'  "{_node_id(a.source)}" -> "{_node_id(a.target)}" [label="{a.coord}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(q: QuiverPresentation) -> dict:
    return {
        "n": q.n,
        "m": q.m,
        "vertices": [list(v.entries) for v in q.vertices],
        "arrows": [
            {"src": list(a.source.entries), "dst": list(a.target.entries), "k": a.coord}
            for a in q.arrows
        ],
        "relations": [
            {"x": list(r.base.entries), "k": r.k, "l": r.l, "kind": r.kind}
            for r in q.relations
        ],
    }


def to_json(q: QuiverPresentation) -> str:
    return json.dumps(to_dict(q))


def from_json(text: str) -> QuiverPresentation:
    data = json.loads(text)
    n, m = data["n"], data["m"]
    tup = lambda e: IncTuple(n, m, tuple(e))  # noqa: E731
    arrows = tuple(Arrow(tup(a["src"]), a["k"], tup(a["dst"])) for a in data["arrows"])
    relations = []
    for r in data["relations"]:
        x, k, l = tup(r["x"]), r["k"], r["l"]
        if r["kind"] == "comm":
            paths = ((1, (k, l)), (-1, (l, k)))
        elif sigma(x, k, 1) is not None:
            paths = ((1, (k, l)),)
        else:
            paths = ((1, (l, k)),)
        relations.append(Relation(x, k, l, r["kind"], paths))
    return QuiverPresentation(
        n, m, tuple(tup(v) for v in data["vertices"]), arrows, tuple(relations)
    )
