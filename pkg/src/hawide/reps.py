"""Explicit representations ``M_x`` over ``Q^{n,d-1}`` and complexes of them.

Convention: the matrix stored for an arrow ``v -> w`` is the linear map from
the space at ``w`` to the space at ``v`` (right modules, i.e. representations
of the opposite quiver).  A morphism ``f : M -> N`` has one matrix per vertex,
of shape ``dim N(v) x dim M(v)``, and commutes when
``f_v @ M(a) == N(a) @ f_w`` for every arrow ``a : v -> w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import InvalidParameters, PreconditionError
from .field import DEFAULT_CHARACTERISTIC, matmul
from .quiver import Arrow, QuiverPresentation, build_quiver
from .tuples import IncTuple, e_ext, e_hom


def _quiver_for(x: IncTuple) -> QuiverPresentation:
    if x.m < 1:
        raise InvalidParameters("modules need d >= 1")
    return build_quiver(x.n, x.m - 1)


@dataclass(frozen=True, eq=False)
class Representation:
    """A representation of the quiver ``Q^{n,d-1}`` over ``GF(p)``.

    ``parts`` is non-empty for a direct sum and lists the summands in block
    order; ``name`` is the indexing tuple of an indecomposable ``M_x``.
    """

    n: int
    d: int
    p: int
    dims: Mapping[IncTuple, int]
    maps: Mapping[Arrow, np.ndarray]
    name: Optional[IncTuple] = None
    parts: tuple["Representation", ...] = ()

    @property
    def quiver(self) -> QuiverPresentation:
        return build_quiver(self.n, self.d - 1)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def summands(self) -> tuple[IncTuple, ...]:
        if self.parts:
            return tuple(s for part in self.parts for s in part.summands)
        return (self.name,) if self.name is not None else ()

    def offsets(self, v: IncTuple) -> list[int]:
        """Start row of each part's block at vertex ``v``."""
        out, acc = [], 0
        for part in self.parts:
            out.append(acc)
            acc += part.dims[v]
        return out

    def satisfies_relations(self) -> bool:
        q = self.quiver
        for rel in q.relations:
            x, y = rel.base, rel.end
            total = np.zeros((self.dims[x], self.dims[y]), dtype=np.int64)
            for coef, (first, second) in rel.paths:
                a = q.arrow(x, first)
                b = q.arrow(a.target, second)
                total = (total + coef * matmul(self.maps[a], self.maps[b], self.p)) % self.p
            if total.any():
                return False
        return True

    def basis(self) -> list[tuple[IncTuple, int]]:
        """Global basis order: quiver vertex order, then block order."""
        return [(v, i) for v in self.quiver.vertices for i in range(self.dims[v])]


@dataclass(frozen=True, eq=False)
class RepMorphism:
    source: Representation
    target: Representation
    maps: Mapping[IncTuple, np.ndarray]

    @property
    def p(self) -> int:
        return self.source.p

    def then(self, other: "RepMorphism") -> "RepMorphism":
        """The composite ``other o self``."""
        return RepMorphism(
            self.source,
            other.target,
            {v: matmul(other.maps[v], self.maps[v], self.p) for v in self.maps},
        )

    def scaled(self, c: int) -> "RepMorphism":
        return RepMorphism(self.source, self.target, {v: (c * m) % self.p for v, m in self.maps.items()})

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.maps.values())

    def commutes(self) -> bool:
        src, tgt, p = self.source, self.target, self.p
        for a in src.quiver.arrows:
            v, w = a.source, a.target
            lhs = matmul(self.maps[v], src.maps[a], p)
            rhs = matmul(tgt.maps[a], self.maps[w], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def vector(self) -> np.ndarray:
        """Row-major concatenation of the vertex matrices in vertex order."""
        vs = self.source.quiver.vertices
        if not vs:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([self.maps[v].reshape(-1) for v in vs])

    def dense(self) -> np.ndarray:
        """The whole map in the global bases of source and target."""
        out = np.zeros((self.target.total_dim, self.source.total_dim), dtype=np.int64)
        r = c = 0
        for v in self.source.quiver.vertices:
            m = self.maps[v]
            out[r : r + m.shape[0], c : c + m.shape[1]] = m
            r += m.shape[0]
            c += m.shape[1]
        return out


@dataclass(frozen=True, eq=False)
class RepComplex:
    """Terms left to right with ``maps[i] : terms[i] -> terms[i+1]``.

    ``labels`` holds the position of each term: ``d+1, ..., 0`` for an
    extension sequence, or the resolution degree with ``-1`` for the module
    being resolved.
    """

    terms: tuple[Representation, ...]
    maps: tuple[RepMorphism, ...]
    labels: tuple[int, ...]
    kind: str = "complex"
    minimal_projective: bool = False
    meta: dict = field(default_factory=dict)

    def composites_vanish(self) -> bool:
        return all(f.then(g).is_zero() for f, g in zip(self.maps, self.maps[1:]))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "labels": list(self.labels),
            "minimal_projective": self.minimal_projective,
            "p": self.terms[0].p if self.terms else DEFAULT_CHARACTERISTIC,
            "terms": [[list(z.entries) for z in t.summands] for t in self.terms],
            "maps": [f.dense().tolist() for f in self.maps],
            **self.meta,
        }


def support(x: IncTuple) -> list[IncTuple]:
    """Vertices ``y`` of ``Q^{n,d-1}`` with ``x_i <= y_i < x_{i+1}``, lexicographic."""
    if x.m < 1:
        raise InvalidParameters("modules need d >= 1")
    ranges = [range(x[i], x[i + 1]) for i in range(x.m)]
    return [IncTuple(x.n, x.m - 1, e) for e in product(*ranges)]


@lru_cache(maxsize=4096)
def build_module(x: IncTuple, p: int = DEFAULT_CHARACTERISTIC) -> Representation:
    q = _quiver_for(x)
    supp = set(support(x))
    dims = {v: int(v in supp) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        if a.source in supp and a.target in supp:
            maps[a] = np.ones((1, 1), dtype=np.int64)
        else:
            maps[a] = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
    return Representation(x.n, x.m, p, dims, maps, name=x)


def zero_rep(n: int, d: int, p: int = DEFAULT_CHARACTERISTIC) -> Representation:
    q = build_quiver(n, d - 1)
    return Representation(
        n, d, p,
        {v: 0 for v in q.vertices},
        {a: np.zeros((0, 0), dtype=np.int64) for a in q.arrows},
    )


def direct_sum(parts: Sequence[Representation]) -> Representation:
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    first = parts[0]
    q = first.quiver
    dims = {v: sum(r.dims[v] for r in parts) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        block = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
        r = c = 0
        for part in parts:
            m = part.maps[a]
            block[r : r + m.shape[0], c : c + m.shape[1]] = m
            r += m.shape[0]
            c += m.shape[1]
        maps[a] = block
    return Representation(first.n, first.d, first.p, dims, maps, parts=tuple(parts))


def block_morphism(
    source: Representation,
    target: Representation,
    components: Mapping[tuple[int, int], RepMorphism],
) -> RepMorphism:
    """Assemble a map between direct sums from ``(i, j) -> (part_i -> part_j)`` components."""
    src_parts = source.parts or (source,)
    tgt_parts = target.parts or (target,)
    maps = {}
    for v in source.quiver.vertices:
        mat = np.zeros((target.dims[v], source.dims[v]), dtype=np.int64)
        so = source.offsets(v) if source.parts else [0]
        to = target.offsets(v) if target.parts else [0]
        for (i, j), f in components.items():
            blk = f.maps[v]
            mat[to[j] : to[j] + tgt_parts[j].dims[v], so[i] : so[i] + src_parts[i].dims[v]] = blk
        maps[v] = mat % source.p
    return RepMorphism(source, target, maps)


def canonical_hom(x: IncTuple, y: IncTuple, p: int = DEFAULT_CHARACTERISTIC) -> Optional[RepMorphism]:
    """Identity on ``support(x) & support(y)`` when ``x E_Hom y``; ``None`` otherwise."""
    if not e_hom(x, y):
        return None
    mx, my = build_module(x, p), build_module(y, p)
    maps = {}
    for v in mx.quiver.vertices:
        if mx.dims[v] and my.dims[v]:
            maps[v] = np.ones((1, 1), dtype=np.int64)
        else:
            maps[v] = np.zeros((my.dims[v], mx.dims[v]), dtype=np.int64)
    return RepMorphism(mx, my, maps)


def identity(rep: Representation) -> RepMorphism:
    return RepMorphism(rep, rep, {v: np.eye(k, dtype=np.int64) for v, k in rep.dims.items()})


def ext_middle_terms(x: IncTuple, y: IncTuple) -> list[list[IncTuple]]:
    """Summand lists for positions ``d+1, d, ..., 0``.

    Position ``k`` collects every valid ``z`` with ``z_i in {x_i, y_i}`` and
    exactly ``k`` coordinates taken from ``x``.
    """
    d = x.m
    by_count: dict[int, list[IncTuple]] = {k: [] for k in range(d + 2)}
    for choice in product((0, 1), repeat=d + 1):
        entries = tuple(x[i] if c == 0 else y[i] for i, c in enumerate(choice))
        z = _maybe_tuple(x.n, d, entries)
        if z is not None:
            by_count[choice.count(0)].append(z)
    return [sorted(by_count[k]) for k in range(d + 1, -1, -1)]


def _maybe_tuple(n: int, m: int, entries: tuple[int, ...]) -> Optional[IncTuple]:
    if any(a >= b for a, b in zip(entries, entries[1:])):
        return None
    return IncTuple(n, m, entries)


def ext_sequence(x: IncTuple, y: IncTuple, p: int = DEFAULT_CHARACTERISTIC) -> RepComplex:
    """``0 -> M_x -> E_d -> ... -> E_1 -> M_y -> 0`` for ``x E_Ext y``.

    The component ``M_z -> M_z'`` (``z'`` is ``z`` with ``x_i`` swapped for
    ``y_i``) is the canonical map with sign ``(-1)^#{j < i : z_j = x_j}``.
    """
    if not e_ext(x, y):
        raise PreconditionError(f"{x} and {y} do not satisfy x E_Ext y")
    levels = ext_middle_terms(x, y)
    terms = tuple(
        direct_sum([build_module(z, p) for z in zs]) for zs in levels
    )
    maps = []
    for src_zs, tgt_zs, src, tgt in zip(levels, levels[1:], terms, terms[1:]):
        components = {}
        index = {z: j for j, z in enumerate(tgt_zs)}
        for i, z in enumerate(src_zs):
            for pos in range(x.m + 1):
                if z[pos] != x[pos]:
                    continue
                zp = z.replace(pos, y[pos])
                if zp is None or zp not in index:
                    continue
                sign = (-1) ** sum(1 for j in range(pos) if z[j] == x[j])
                components[(i, index[zp])] = canonical_hom(z, zp, p).scaled(sign)
        maps.append(block_morphism(src, tgt, components))
    d = x.m
    return RepComplex(
        terms,
        tuple(maps),
        tuple(range(d + 1, -1, -1)),
        kind="extension",
        meta={"x": list(x.entries), "y": list(y.entries)},
    )


def resolution_tuples(x: IncTuple, s: int) -> list[IncTuple]:
    """``x^i = (s, x_0, ..., x_{i-1}, x_{i+1}, ..., x_d)`` for ``i = 0..d``."""
    d = x.m
    return [
        IncTuple(x.n, d, (s,) + x.entries[:i] + x.entries[i + 1 :]) for i in range(d + 1)
    ]


def resolution(x: IncTuple, s: int = 1, p: int = DEFAULT_CHARACTERISTIC) -> RepComplex:
    """``0 -> M_{x^d} -> ... -> M_{x^0} -> M_x -> 0``; projective when ``s == 1``."""
    if not 1 <= s < x[0]:
        raise PreconditionError(f"need 1 <= s < x_0, got s={s}, x={x}")
    top = resolution_tuples(x, s)[-1]
    seq = ext_sequence(top, x, p)
    d = x.m
    return RepComplex(
        seq.terms,
        seq.maps,
        tuple(range(d, -1, -1)) + (-1,),
        kind="resolution",
        minimal_projective=(s == 1),
        meta={"x": list(x.entries), "s": s},
    )


def classify_proj_inj(x: IncTuple) -> dict[str, bool]:
    return {"projective": x[0] == 1, "injective": x[-1] == x.n + x.m}

