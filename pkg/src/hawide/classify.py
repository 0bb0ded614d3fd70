"""Collections of admissible sets and the wide subcategories they describe."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import ContextMismatch, InvalidParameters, PreconditionError
from .tuples import (
    AdmissibleSet,
    IncTuple,
    check_context,
    masks_interlace,
    sets_interlace,
    tuples_of_set,
)


@dataclass(frozen=True)
class Collection:
    n: int
    d: int
    members: frozenset[AdmissibleSet]

    @classmethod
    def of(cls, n: int, d: int, sets: Iterable) -> "Collection":
        members = []
        for s in sets:
            if not isinstance(s, AdmissibleSet):
                s = AdmissibleSet(n, d, tuple(s))
            elif (s.n, s.d) != (n, d):
                raise ContextMismatch(f"{s} does not live over (n, d) = ({n}, {d})")
            members.append(s)
        return cls(n, d, frozenset(members))

    @classmethod
    def from_masks(cls, n: int, d: int, masks: Iterable[int]) -> "Collection":
        return cls.of(n, d, (_mask_members(m) for m in masks))

    def sorted_members(self) -> list[AdmissibleSet]:
        return sorted(self.members, key=lambda s: s.members)

    def to_list(self) -> list[list[int]]:
        """Sorted arrays of sorted members, e.g. ``[[1, 2, 3, 4, 6]]``."""
        return [list(s.members) for s in self.sorted_members()]

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.sorted_members()) + "}"

    def __len__(self) -> int:
        return len(self.members)


def _mask_members(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def admissible_sets(n: int, d: int) -> list[AdmissibleSet]:
    """Every subset of ``1..n+d`` with at least ``d+1`` members, by size then lexicographically."""
    check_context(n, d)
    if d < 1:
        raise InvalidParameters("d must be at least 1")
    ground = range(1, n + d + 1)
    return [
        AdmissibleSet(n, d, c)
        for size in range(d + 1, n + d + 1)
        for c in combinations(ground, size)
    ]


def is_noninterlacing(c: Collection) -> bool:
    return not any(sets_interlace(s, t) for s, t in combinations(c.sorted_members(), 2))


def subcategory_of(c: Collection) -> list[IncTuple]:
    """Indecomposables of ``add{W_S : S in c}``, sorted."""
    if not is_noninterlacing(c):
        raise PreconditionError(f"collection {c} interlaces")
    out: set[IncTuple] = set()
    for s in c.members:
        out.update(tuples_of_set(s))
    return sorted(out)


def _context(xs: list[IncTuple], n: Optional[int], d: Optional[int]) -> tuple[int, int]:
    if xs:
        ctx = {(x.n, x.m) for x in xs}
        if len(ctx) > 1 or (n is not None and (n, d) not in ctx):
            raise ContextMismatch("tuples from different contexts")
        return ctx.pop()
    if n is None or d is None:
        raise InvalidParameters("an empty tuple list needs explicit n and d")
    return n, d


def wide_closure(
    xs: Iterable[IncTuple],
    n: Optional[int] = None,
    d: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Collection:
    """Collection of the smallest wide subcategory containing every ``M_x``.

    Start from the singletons ``S_x`` and merge interlacing members until
    none are left.  With ``rng`` the pair merged at each step is chosen at
    random; otherwise the lexicographically first pair is used.
    """
    xs = list(xs)
    n, d = _context(xs, n, d)
    members = sorted({sum(1 << e for e in x) for x in xs})
    while True:
        pairs = [
            (a, b) for a, b in combinations(members, 2) if masks_interlace(a, b, d)
        ]
        if not pairs:
            break
        a, b = rng.choice(pairs) if rng is not None else pairs[0]
        members = sorted((set(members) - {a, b}) | {a | b})
    return Collection.from_masks(n, d, members)


def recognize_wide(
    xs: Iterable[IncTuple], n: Optional[int] = None, d: Optional[int] = None
) -> Optional[Collection]:
    """The non-interlacing collection describing ``xs``, or ``None`` if ``xs``
    is not the set of indecomposables of a wide subcategory.

    Candidate collection: the maximal admissible ``S`` with ``X_S`` inside ``xs``.
    """
    xs = set(xs)
    n, d = _context(list(xs), n, d)
    if not xs:
        return Collection(n, d, frozenset())
    ground = sorted(set().union(*(x.entries for x in xs)))
    maximal: list[AdmissibleSet] = []
    for size in range(len(ground), d, -1):
        for c in combinations(ground, size):
            s = AdmissibleSet(n, d, c)
            if any(s.issubset(t) for t in maximal):
                continue
            if all(x in xs for x in tuples_of_set(s)):
                maximal.append(s)
    coll = Collection(n, d, frozenset(maximal))
    if not is_noninterlacing(coll):
        return None
    if set(subcategory_of(coll)) != xs:
        return None
    return coll


def relabel(s: AdmissibleSet, x: IncTuple) -> IncTuple:
    """Carry ``x`` in ``V(|S|-d, d)`` into ``X_S`` by the order-preserving map ``1..|S| -> S``."""
    n_small = len(s) - s.d
    if (x.n, x.m) != (n_small, s.d):
        raise ContextMismatch(
            f"{x} should live over (n, d) = ({n_small}, {s.d}) to relabel into {s}"
        )
    return IncTuple(s.n, s.d, tuple(s.members[i - 1] for i in x.entries))
