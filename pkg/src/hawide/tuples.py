"""Increasing tuples, shift maps and the interlacing relations.

Two levels of tuples appear throughout the package: category-level tuples
in ``V(n, d)`` index the indecomposables ``M_x``, and module-level tuples in
``V(n, d - 1)`` index the vertices of the quiver the modules live on.  Every
tuple carries its ``(n, m)`` context (``m + 1`` entries drawn from
``1..n+m``), and mixing contexts raises :class:`ContextMismatch`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import ContextMismatch, InvalidParameters, InvalidTuple, PreconditionError


def check_context(n: int, m: int) -> None:
    if n < 1 or m < 0:
        raise InvalidParameters(f"need n >= 1 and m >= 0, got n={n}, m={m}")


@dataclass(frozen=True, order=True)
class IncTuple:
    """A strictly increasing tuple ``x_0 < ... < x_m`` over ``1..n+m``."""

    n: int
    m: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        check_context(self.n, self.m)
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) != self.m + 1:
            raise InvalidTuple(f"{e} should have {self.m + 1} entries")
        if e[0] < 1 or e[-1] > self.n + self.m:
            raise InvalidTuple(f"{e} leaves the range 1..{self.n + self.m}")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise InvalidTuple(f"{e} is not strictly increasing")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    @property
    def label(self) -> str:
        """Concatenated entries, e.g. ``"136"`` (used for DOT node ids)."""
        return "".join(map(str, self.entries))

    @property
    def entry_set(self) -> frozenset[int]:
        return frozenset(self.entries)

    def replace(self, k: int, value: int) -> Optional["IncTuple"]:
        """Copy with entry ``k`` set to ``value``, or ``None`` if invalid."""
        e = list(self.entries)
        e[k] = value
        try:
            return IncTuple(self.n, self.m, tuple(e))
        except InvalidTuple:
            return None


@dataclass(frozen=True)
class AdmissibleSet:
    """A subset of ``1..n+d`` with at least ``d + 1`` members."""

    n: int
    d: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        check_context(self.n, self.d)
        mem = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", mem)
        if len(mem) < self.d + 1:
            raise InvalidTuple(f"{set(mem)} has fewer than d+1={self.d + 1} members")
        if mem[0] < 1 or mem[-1] > self.n + self.d:
            raise InvalidTuple(f"{set(mem)} leaves the range 1..{self.n + self.d}")

    @classmethod
    def of_tuple(cls, x: IncTuple) -> "AdmissibleSet":
        """The entry set ``S_x`` of a category-level tuple."""
        return cls(x.n, x.m, x.entries)

    @property
    def mask(self) -> int:
        """Bitmask with bit ``i`` set for every member ``i``."""
        out = 0
        for i in self.members:
            out |= 1 << i
        return out

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    def issubset(self, other: "AdmissibleSet") -> bool:
        return self.mask & ~other.mask == 0

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def _same_context(x: IncTuple, y: IncTuple) -> None:
    if (x.n, x.m) != (y.n, y.m):
        raise ContextMismatch(f"{x!r} and {y!r} live in different contexts")


def generate_tuples(n: int, m: int) -> list[IncTuple]:
    """All of ``V(n, m)`` in lexicographic order."""
    check_context(n, m)
    return [IncTuple(n, m, c) for c in combinations(range(1, n + m + 1), m + 1)]


def sigma(x: IncTuple, k: int, direction: int) -> Optional[IncTuple]:
    """Shift coordinate ``k`` by ``direction`` (+1 or -1); ``None`` when undefined."""
    if not 0 <= k <= x.m:
        raise IndexError(f"coordinate {k} out of range 0..{x.m}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    return x.replace(k, x[k] + direction)


def e_hom(x: IncTuple, y: IncTuple) -> bool:
    """``x_0 <= y_0 < x_1 <= y_1 < ... < x_m <= y_m``."""
    _same_context(x, y)
    a, b = x.entries, y.entries
    return all(a[i] <= b[i] for i in range(len(a))) and all(
        b[i] < a[i + 1] for i in range(len(a) - 1)
    )


def e_ext(x: IncTuple, y: IncTuple) -> bool:
    """``x_0 < y_0 <= x_1 < y_1 <= ... <= x_m < y_m``."""
    _same_context(x, y)
    a, b = x.entries, y.entries
    return all(a[i] < b[i] for i in range(len(a))) and all(
        b[i] <= a[i + 1] for i in range(len(a) - 1)
    )


def tuples_interlace(x: IncTuple, y: IncTuple) -> bool:
    return e_hom(x, y) or e_hom(y, x) or e_ext(x, y) or e_ext(y, x)


def tuples_of_set(s: AdmissibleSet) -> list[IncTuple]:
    """All category-level tuples with entries in ``s``, lexicographically."""
    return [IncTuple(s.n, s.d, c) for c in combinations(s.members, s.d + 1)]


def _next_at_least(mask: int, v: int) -> int:
    """Least member of ``mask`` that is >= v, or -1."""
    rest = (mask >> v) << v
    if not rest:
        return -1
    return (rest & -rest).bit_length() - 1


def chain_exists(a: int, b: int, d: int, hom: bool) -> bool:
    """Is there ``x`` over ``a`` and ``y`` over ``b`` with ``x E_Hom y`` (``hom``)
    or ``x E_Ext y`` (not ``hom``)?  ``a`` and ``b`` are member bitmasks.

    Greedy: always place the least admissible next entry.  Choosing each
    entry as small as possible never removes options for the later ones.
    """
    # hom:  x_i <= y_i <  x_{i+1};   ext:  x_i < y_i <= x_{i+1}
    y_gap, x_gap = (0, 1) if hom else (1, 0)
    cur = _next_at_least(a, 0)
    if cur < 0:
        return False
    for i in range(d + 1):
        y = _next_at_least(b, cur + y_gap)
        if y < 0:
            return False
        if i == d:
            return True
        cur = _next_at_least(a, y + x_gap)
        if cur < 0:
            return False
    return True  # pragma: no cover


def masks_interlace(a: int, b: int, d: int) -> bool:
    return (
        chain_exists(a, b, d, True)
        or chain_exists(b, a, d, True)
        or chain_exists(a, b, d, False)
        or chain_exists(b, a, d, False)
    )


def sets_interlace(s: AdmissibleSet, t: AdmissibleSet) -> bool:
    if (s.n, s.d) != (t.n, t.d):
        raise ContextMismatch(f"{s} and {t} live in different contexts")
    return masks_interlace(s.mask, t.mask, s.d)


def sets_interlace_brute(s: AdmissibleSet, t: AdmissibleSet) -> bool:
    """Reference check by scanning every pair of tuples."""
    xs = tuples_of_set(s)
    ys = tuples_of_set(t)
    return any(tuples_interlace(x, y) for x in xs for y in ys)


def kernel_witness(x: IncTuple, y: IncTuple, k: int) -> Optional[IncTuple]:
    """``x`` with ``x_k`` replaced by ``y_{k-1}`` when ``x_{k-1} < y_{k-1} < x_k``."""
    if not e_hom(x, y):
        raise PreconditionError(f"{x} does not map to {y}")
    if not 1 <= k <= x.m:
        raise PreconditionError(f"k={k} outside 1..{x.m}")
    if x[k - 1] < y[k - 1] < x[k]:
        return x.replace(k, y[k - 1])
    return None


def cokernel_witness(x: IncTuple, y: IncTuple, k: int) -> Optional[IncTuple]:
    """``y`` with ``y_k`` replaced by ``x_{k+1}`` when ``y_k < x_{k+1} < y_{k+1}``."""
    if not e_hom(x, y):
        raise PreconditionError(f"{x} does not map to {y}")
    if not 0 <= k <= x.m - 1:
        raise PreconditionError(f"k={k} outside 0..{x.m - 1}")
    if y[k] < x[k + 1] < y[k + 1]:
        return y.replace(k, x[k + 1])
    return None


# -- text syntax -------------------------------------------------------------

_INT_LIST = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_tuple(text: str, n: int, m: int) -> IncTuple:
    """Parse ``"1,3,6"``."""
    if not _INT_LIST.match(text):
        raise InvalidTuple(f"cannot parse tuple {text!r}; expected e.g. 1,3,6")
    return IncTuple(n, m, tuple(int(t) for t in text.split(",")))


def parse_set(text: str, n: int, d: int) -> AdmissibleSet:
    """Parse ``"{1,2,3,4,6}"`` or the range shorthand ``"1-4,6"``."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    members: set[int] = set()
    for part in body.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise InvalidTuple(f"empty range {part!r}")
            members.update(range(lo, hi + 1))
        elif part.isdigit():
            members.add(int(part))
        else:
            raise InvalidTuple(f"cannot parse set {text!r}")
    return AdmissibleSet(n, d, tuple(members))


def format_collection(sets: Iterable[AdmissibleSet]) -> str:
    """``{{1,2},{3,4}}``; the empty collection is ``{}``."""
    return "{" + ",".join(str(s) for s in sorted(sets, key=lambda s: s.members)) + "}"


def as_tuples(n: int, m: int, rows: Iterable[Sequence[int]]) -> list[IncTuple]:
    return [IncTuple(n, m, tuple(r)) for r in rows]
