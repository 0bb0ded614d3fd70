"""Hom and Ext dimensions computed by linear algebra, independently of the
closed-form ``E_Hom`` / ``E_Ext`` rules they are meant to confirm."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field
from .errors import NonZeroComposite
from .field import DEFAULT_CHARACTERISTIC
from .reps import RepComplex, RepMorphism, Representation, build_module, resolution
from .tuples import IncTuple


@dataclass(frozen=True, eq=False)
class HomSystem:
    """Linear equations whose solutions are the morphisms ``source -> target``.

    Unknowns are the vertex matrices ``f_v`` flattened row-major and
    concatenated in quiver vertex order (the layout of
    :meth:`RepMorphism.vector`).
    """

    source: Representation
    target: Representation

    @property
    def p(self) -> int:
        return self.source.p

    def _layout(self) -> dict:
        offs, acc = {}, 0
        for v in self.source.quiver.vertices:
            offs[v] = acc
            acc += self.target.dims[v] * self.source.dims[v]
        return {"offsets": offs, "size": acc}

    def matrix(self) -> np.ndarray:
        src, tgt = self.source, self.target
        lay = self._layout()
        offs, size = lay["offsets"], lay["size"]
        blocks = []
        for a in src.quiver.arrows:
            v, w = a.source, a.target
            tv, sv = tgt.dims[v], src.dims[v]
            tw, sw = tgt.dims[w], src.dims[w]
            if tv * sw == 0:
                continue
            # row-major vec(A X B) = (A kron B^T) vec(X)
            rows = np.zeros((tv * sw, size), dtype=np.int64)
            rows[:, offs[v] : offs[v] + tv * sv] += np.kron(
                np.eye(tv, dtype=np.int64), src.maps[a].T
            )
            rows[:, offs[w] : offs[w] + tw * sw] -= np.kron(
                tgt.maps[a], np.eye(sw, dtype=np.int64)
            )
            blocks.append(rows % self.p)
        if not blocks:
            return np.zeros((0, size), dtype=np.int64)
        return np.vstack(blocks)

    def basis_matrix(self) -> np.ndarray:
        """Solution basis as columns (``unknowns x dim Hom``)."""
        size = self._layout()["size"]
        if size == 0:
            return np.zeros((0, 0), dtype=np.int64)
        mat = self.matrix()
        if mat.shape[0] == 0:
            return np.eye(size, dtype=np.int64)
        return field.nullspace(mat, self.p)

    def dimension(self) -> int:
        size = self._layout()["size"]
        if size == 0:
            return 0
        return size - field.rank(self.matrix(), self.p)

    def to_morphism(self, vec: np.ndarray) -> RepMorphism:
        src, tgt = self.source, self.target
        offs = self._layout()["offsets"]
        maps = {}
        for v in src.quiver.vertices:
            tv, sv = tgt.dims[v], src.dims[v]
            maps[v] = np.asarray(vec[offs[v] : offs[v] + tv * sv]).reshape(tv, sv) % self.p
        return RepMorphism(src, tgt, maps)

    def basis(self) -> list[RepMorphism]:
        b = self.basis_matrix()
        return [self.to_morphism(b[:, j]) for j in range(b.shape[1])]


def rank(m, p: int = DEFAULT_CHARACTERISTIC) -> int:
    return field.rank(m, p)


def hom_dim(source: Representation, target: Representation) -> int:
    return HomSystem(source, target).dimension()


def hom_dim_oracle(x: IncTuple, y: IncTuple, p: int = DEFAULT_CHARACTERISTIC) -> int:
    """``dim Hom(M_x, M_y)`` by solving the commutation equations."""
    return hom_dim(build_module(x, p), build_module(y, p))


def ext_oracle(y: IncTuple, x: IncTuple, i: int, p: int = DEFAULT_CHARACTERISTIC) -> int:
    """``dim Ext^i(M_y, M_x)`` from ``Hom(-, M_x)`` applied to the projective
    resolution of ``M_y`` (``s = 1``)."""
    d = y.m
    if not 1 <= i <= d:
        raise ValueError(f"degree {i} outside 1..{d}")
    if y[0] == 1:
        return 0
    res = resolution(y, 1, p)
    mx = build_module(x, p)
    # res.terms = P_d, ..., P_0, M_y;  maps[t] : terms[t] -> terms[t+1]
    proj = {j: res.terms[d - j] for j in range(d + 1)}
    diff = {j: res.maps[d - j] for j in range(1, d + 1)}  # P_j -> P_{j-1}
    systems = {j: HomSystem(proj[j], mx) for j in range(d + 1)}
    bases = {j: systems[j].basis_matrix() for j in range(d + 1)}

    def coboundary_rank(j: int) -> int:
        """Rank of ``Hom(P_j, M_x) -> Hom(P_{j+1}, M_x)``, ``phi -> phi o d_{j+1}``."""
        if j < 0 or j >= d:
            return 0
        src_b, tgt_b = bases[j], bases[j + 1]
        if src_b.shape[1] == 0 or tgt_b.shape[1] == 0:
            return 0
        cols = []
        for k in range(src_b.shape[1]):
            phi = systems[j].to_morphism(src_b[:, k])
            image = diff[j + 1].then(phi).vector()
            cols.append(field.solve(tgt_b, image, p))
        return field.rank(np.array(cols).T, p)

    return bases[i].shape[1] - coboundary_rank(i) - coboundary_rank(i - 1)


def complex_homology_dims(c: RepComplex) -> list[int]:
    """Homology dimension at every term (zero outside the ends of the complex)."""
    for f, g in zip(c.maps, c.maps[1:]):
        if not f.then(g).is_zero():
            raise NonZeroComposite("consecutive maps do not compose to zero")
    p = c.terms[0].p
    out = []
    for t, term in enumerate(c.terms):
        total = 0
        for v, dim in term.dims.items():
            if dim == 0:
                continue
            out_rank = field.rank(c.maps[t].maps[v], p) if t < len(c.maps) else 0
            in_rank = field.rank(c.maps[t - 1].maps[v], p) if t > 0 else 0
            total += dim - out_rank - in_rank
        out.append(total)
    return out


def is_exact(c: RepComplex) -> bool:
    try:
        return not any(complex_homology_dims(c))
    except NonZeroComposite:
        return False
