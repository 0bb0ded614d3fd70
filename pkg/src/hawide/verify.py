"""Exhaustive formula-versus-oracle checks over one ``(n, d)``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .homology import complex_homology_dims, ext_oracle, hom_dim_oracle
from .errors import NonZeroComposite
from .reps import ext_sequence, resolution
from .tuples import IncTuple, e_ext, e_hom, generate_tuples


@dataclass
class VerifyReport:
    n: int
    d: int
    p: int
    pairs: int = 0
    hom_mismatches: list = field(default_factory=list)
    ext_mismatches: list = field(default_factory=list)
    vanishing_violations: list = field(default_factory=list)
    sequences: int = 0
    sequence_failures: list = field(default_factory=list)
    resolutions: int = 0
    resolution_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.hom_mismatches
            or self.ext_mismatches
            or self.vanishing_violations
            or self.sequence_failures
            or self.resolution_failures
        )

    def summary_lines(self) -> list[str]:
        return [
            f"n={self.n} d={self.d} p={self.p}",
            f"pairs\t{self.pairs}",
            f"hom_mismatches\t{len(self.hom_mismatches)}",
            f"ext_top_mismatches\t{len(self.ext_mismatches)}",
            f"ext_intermediate_nonzero\t{len(self.vanishing_violations)}",
            f"ext_sequences_checked\t{self.sequences}",
            f"ext_sequences_not_exact\t{len(self.sequence_failures)}",
            f"resolutions_checked\t{self.resolutions}",
            f"resolutions_not_exact\t{len(self.resolution_failures)}",
            "OK" if self.ok else "MISMATCH",
        ]

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def _exact(build, *args) -> bool:
    try:
        return not any(complex_homology_dims(build(*args)))
    except NonZeroComposite:
        return False


def _check_source(args) -> dict:
    """All checks whose first argument is ``x``."""
    x_entries, n, d, p = args
    x = IncTuple(n, d, x_entries)
    out = {"hom": [], "ext": [], "vanish": [], "seq": 0, "seq_fail": [],
           "res": 0, "res_fail": []}
    for y in generate_tuples(n, d):
        if hom_dim_oracle(x, y, p) != int(e_hom(x, y)):
            out["hom"].append([str(x), str(y)])
        # Ext^i(M_y, M_x) for i = 1..d
        for i in range(1, d + 1):
            got = ext_oracle(y, x, i, p)
            want = int(e_ext(x, y)) if i == d else 0
            if got != want:
                key = "ext" if i == d else "vanish"
                out[key].append([str(y), str(x), i, got])
        if e_ext(x, y):
            out["seq"] += 1
            if not _exact(ext_sequence, x, y, p):
                out["seq_fail"].append([str(x), str(y)])
    if x[0] > 1:
        out["res"] += 1
        if not _exact(resolution, x, 1, p):
            out["res_fail"].append(str(x))
    return out


def verify_grid(n: int, d: int, p: int, jobs: int = 1) -> VerifyReport:
    tuples = generate_tuples(n, d)
    work = [(x.entries, n, d, p) for x in tuples]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_check_source, work))
    else:
        parts = [_check_source(w) for w in work]
    rep = VerifyReport(n, d, p, pairs=len(tuples) ** 2)
    for part in parts:
        rep.hom_mismatches += part["hom"]
        rep.ext_mismatches += part["ext"]
        rep.vanishing_violations += part["vanish"]
        rep.sequences += part["seq"]
        rep.sequence_failures += part["seq_fail"]
        rep.resolutions += part["res"]
        rep.resolution_failures += part["res_fail"]
    return rep
