"""Named count families and the three-engine dispatch (formula, dp, brute).

A SequenceSpec pins down which coloring scheme and region size a family
uses, so the closed form, the interval DP, and exhaustive enumeration can
be cross-checked against each other on identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import counting
from .counting import count_kd_partitions, count_proper_dp
from .enumeration import (
    DEFAULT_MAX_ITEMS,
    count_proper_brute,
    enumerate_kd_partitions,
)
from .model import (
    Blocks,
    ColoredPolygon,
    Cyclic,
    CyclicAdjusted3,
    ParameterError,
    make_coloring,
)

FAMILIES = ("a", "b", "c", "d_blocks", "catalan_k", "catalan_kd", "b_prime")
ENGINES = ("formula", "dp", "brute")


@dataclass(frozen=True, slots=True)
class SequenceSpec:
    """A count family plus whichever of k, d, m it needs.

    a: 2-colored triangulations; b: 3-colored (adjusted) triangulations;
    c: k-colored k-partitions, k >= 4; d_blocks: triangulations of 1^m 2^N;
    catalan_k / catalan_kd: uncolored (rooted) partition counts; b_prime:
    3-colored triangulations with no monochromatic triangle (brute only).
    """

    family: str
    k: int | None = None
    d: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if self.family == "c" and (self.k is None or self.k < 4):
            raise ParameterError('family "c" needs k >= 4')
        if self.family in ("catalan_k", "catalan_kd") and (self.k is None or self.k < 2):
            raise ParameterError(f"family {self.family!r} needs k >= 2")
        if self.family == "catalan_kd" and (self.d is None or self.d < 1):
            raise ParameterError('family "catalan_kd" needs d >= 1')
        if self.family == "d_blocks" and (self.m is None or self.m < 1):
            raise ParameterError('family "d_blocks" needs m >= 1')

    def label(self) -> str:
        if self.family == "c":
            return f"c(k={self.k})"
        if self.family == "catalan_k":
            return f"C(n,{self.k})"
        if self.family == "catalan_kd":
            return f"C(n,{self.k},{self.d})"
        if self.family == "d_blocks":
            return f"d(m={self.m})"
        return self.family

    def region_size(self) -> int:
        if self.family == "c":
            return self.k
        if self.family == "catalan_k":
            return self.k + 1
        if self.family == "catalan_kd":
            return self.k + 1
        return 3

    def polygon(self, N: int) -> ColoredPolygon:
        """The colored polygon whose proper partitions the family counts."""
        if self.family == "a":
            return make_coloring(Cyclic(2), N + 2)
        if self.family in ("b", "b_prime"):
            scheme = CyclicAdjusted3() if self.family == "b" else Cyclic(3)
            return make_coloring(scheme, N + 2)
        if self.family == "c":
            return make_coloring(Cyclic(self.k), N + 2)
        if self.family == "d_blocks":
            if N < 1:
                raise ParameterError("d_blocks needs n >= 1")
            return make_coloring(Blocks(self.m, N), self.m + N)
        raise ParameterError(f"family {self.family!r} has no colored polygon")

    def formula(self, N: int) -> int:
        if self.family == "a":
            return counting.a_formula(N)
        if self.family == "b":
            return counting.b_formula(N)
        if self.family == "c":
            return counting.c_formula(N, self.k)
        if self.family == "d_blocks":
            return counting.d_formula(self.m, N)
        if self.family == "catalan_k":
            return counting.catalan_k(N, self.k)
        if self.family == "catalan_kd":
            return counting.catalan_kd(N, self.k, self.d)
        raise ParameterError(f"family {self.family!r} has no closed form")


def count_family(
    spec: SequenceSpec,
    N: int,
    engine: str = "formula",
    *,
    max_items: int | None = DEFAULT_MAX_ITEMS,
) -> int:
    """Evaluate one family member with an explicitly chosen engine."""
    if engine not in ENGINES:
        raise ParameterError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    fam = spec.family
    if fam == "b_prime":
        if engine != "brute":
            raise ParameterError("b_prime is enumeration-defined; use engine=brute")
        return counting.b_prime_bruteforce(N, max_items=max_items)
    if engine == "formula":
        return spec.formula(N)
    if fam == "catalan_k":
        nv = N * (spec.k - 1) + 2
        if engine == "dp":
            return count_kd_partitions(nv, spec.k + 1, 2)
        return sum(1 for _ in enumerate_kd_partitions(nv, spec.k + 1, 2, max_items=max_items))
    if fam == "catalan_kd":
        nv = N * (spec.k - 1) + spec.d + 1
        if engine == "dp":
            return count_kd_partitions(nv, spec.k + 1, spec.d + 1)
        return sum(
            1
            for _ in enumerate_kd_partitions(
                nv, spec.k + 1, spec.d + 1, max_items=max_items
            )
        )
    poly = spec.polygon(N)
    k = spec.region_size()
    if engine == "dp":
        return count_proper_dp(poly, k)
    return count_proper_brute(poly, k, max_items=max_items)
