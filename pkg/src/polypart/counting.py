"""Exact closed-form counts and the interval dynamic-programming oracle.

Counts are plain Python ints (arbitrary precision); no floating point is
used anywhere.  Closed forms are evaluated binomial-first followed by an
exact division that asserts zero remainder, so a transcription error in a
formula aborts instead of silently truncating.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .model import (
    ColoredPolygon,
    ContractError,
    ParameterError,
    make_coloring,
)

#: Exact nonnegative count; Python ints are arbitrary precision already.
BigCount = int


def exact_div(a: int, b: int) -> int:
    """a // b, insisting that b divides a exactly."""
    q, r = divmod(a, b)
    if r:
        raise ContractError(f"inexact division {a}/{b} (formula transcription error?)")
    return q


def catalan_k(n: int, k: int) -> BigCount:
    """The k-ary Catalan number binom(kn, n) / ((k-1)n + 1)."""
    if n < 0 or k < 2:
        raise ParameterError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    return exact_div(comb(k * n, n), (k - 1) * n + 1)


def catalan_kd(n: int, k: int, d: int) -> BigCount:
    """The two-parameter generalization d * binom(kn + d - 1, n) / ((k-1)n + d).

    Reduces to catalan_k when d = 1.
    """
    if n < 0 or k < 2 or d < 1:
        raise ParameterError(f"need n >= 0, k >= 2, d >= 1, got n={n}, k={k}, d={d}")
    return exact_div(d * comb(k * n + d - 1, n), (k - 1) * n + d)


def a_formula(N: int) -> BigCount:
    """Proper triangulations of an (N+2)-gon cyclically colored with 1, 2.

    2^n/(2n+1) * binom(3n, n) for N = 2n and 2^(n+1)/(2n+2) * binom(3n+1, n)
    for N = 2n+1; a single edge counts as one proper partition, so a_0 = 1.
    """
    if N < 0:
        raise ParameterError(f"need N >= 0, got {N}")
    n, r = divmod(N, 2)
    if r == 0:
        return exact_div(2**n * comb(3 * n, n), 2 * n + 1)
    return exact_div(2 ** (n + 1) * comb(3 * n + 1, n), 2 * n + 2)


def b_formula(N: int) -> BigCount:
    """Proper triangulations of an (N+2)-gon colored cyclically with 1, 2, 3
    (last vertex recolored 2 when N+2 = 1 mod 3), by the residue of N mod 3.
    """
    if N < 0:
        raise ParameterError(f"need N >= 0, got {N}")
    n, r = divmod(N, 3)
    if r == 0:
        return exact_div(comb(4 * n, n), 3 * n + 1)
    if r == 1:
        return exact_div(2 * comb(4 * n + 1, n), 3 * n + 2)
    return exact_div(3 * comb(4 * n + 2, n), 3 * n + 3)


def c_formula(N: int, k: int) -> BigCount:
    """Proper k-partitions of an (N+2)-gon cyclically colored with k colors,
    for k >= 4.

    Nonzero only when N/(k-2) is an integer of the form kn or kn+1; the
    n = 0 instances (N = 0 and N = k-2) are 1 directly, since the closed
    form 1/n * binom(..., n-1) is not defined there.
    """
    if k < 4:
        raise ParameterError(f"this family needs k >= 4, got k={k}")
    if N < 0:
        raise ParameterError(f"need N >= 0, got {N}")
    if N == 0:
        return 1
    M, rem = divmod(N, k - 2)
    if rem:
        return 0
    n, r = divmod(M, k)
    if r == 0:
        return exact_div(comb((k - 1) ** 2 * n, n - 1), n)
    if r == 1:
        if n == 0:
            return 1
        return exact_div((k - 1) * comb((k - 1) ** 2 * n + (k - 2), n - 1), n)
    return 0


def d_formula(m: int, n: int) -> BigCount:
    """Proper triangulations of a polygon colored with m ones then n twos:
    binom(m+n-2, m-1)."""
    if m < 1 or n < 1:
        raise ParameterError(f"need m, n >= 1, got m={m}, n={n}")
    return comb(m + n - 2, m - 1)


def count_proper_dp(poly: ColoredPolygon, k: int) -> BigCount:
    """Count proper k-partitions of poly by interval dynamic programming.

    f(i, j) counts proper partitions of the sub-polygon i..j rooted at the
    segment (i, j); f is 1 on adjacent pairs, and otherwise sums over the
    interior vertex tuples i < t1 < ... < t_{k-2} < j whose k-gon carries
    all c colors, multiplying the sub-interval counts.  The answer is
    f(0, num_vertices - 1).  Returns 0 when no partition exists.
    """
    if k < 3:
        raise ParameterError(f"regions need k >= 3 vertices, got k={k}")
    colors = poly.colors
    need = set(range(1, poly.c + 1))
    memo: dict[tuple[int, int], int] = {}

    def f(i: int, j: int) -> int:
        if j - i == 1:
            return 1
        key = (i, j)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for ts in combinations(range(i + 1, j), k - 2):
            ring = (i, *ts, j)
            if not need <= {colors[v] for v in ring}:
                continue
            prod = 1
            for a, b in zip(ring, ring[1:]):
                sub = f(a, b)
                if sub == 0:
                    prod = 0
                    break
                prod *= sub
            total += prod
        memo[key] = total
        return total

    return f(0, poly.num_vertices - 1)


def count_kd_partitions(num_vertices: int, K: int, D: int) -> BigCount:
    """Count partitions of an uncolored rooted polygon whose root region is a
    D-gon and every other region a K-gon.

    Computed by the size recursion g(2) = 1, g(s) = sum over compositions of
    the boundary into K-1 arcs of the product of arc counts; the root layer
    does the same with D-1 arcs.  D = 2 means the root edge itself is the
    root region, i.e. an ordinary K-partition.
    """
    if K < 3 or D < 2:
        raise ParameterError(f"need K >= 3 and D >= 2, got K={K}, D={D}")
    if num_vertices < 2:
        raise ParameterError(f"polygon needs >= 2 vertices, got {num_vertices}")

    memo: dict[int, int] = {2: 1}

    def g(s: int) -> int:
        cached = memo.get(s)
        if cached is not None:
            return cached
        total = 0
        if (s - 2) % (K - 2) == 0:
            for ts in combinations(range(1, s - 1), K - 2):
                ring = (0, *ts, s - 1)
                prod = 1
                for a, b in zip(ring, ring[1:]):
                    sub = g(b - a + 1)
                    if sub == 0:
                        prod = 0
                        break
                    prod *= sub
                total += prod
        memo[s] = total
        return total

    if D == 2:
        return g(num_vertices)
    total = 0
    for ts in combinations(range(1, num_vertices - 1), D - 2):
        ring = (0, *ts, num_vertices - 1)
        prod = 1
        for a, b in zip(ring, ring[1:]):
            sub = g(b - a + 1)
            if sub == 0:
                prod = 0
                break
            prod *= sub
        total += prod
    return total


def b_prime_bruteforce(N: int, *, max_items: int | None = None) -> BigCount:
    """Count triangulations of the cyclically 3-colored (N+2)-gon with no
    monochromatic triangle, by exhaustive enumeration.

    There is no closed form for this variant; the result is enumeration
    defined.  Small N only; the enumeration guard applies.
    """
    from .enumeration import DEFAULT_MAX_ITEMS, enumerate_k_partitions

    if N < 0:
        raise ParameterError(f"need N >= 0, got {N}")
    if N == 0:
        return 1
    if max_items is None:
        max_items = DEFAULT_MAX_ITEMS
    from .model import Cyclic, has_monochromatic_region

    poly = make_coloring(Cyclic(3), N + 2)
    return sum(
        1
        for p in enumerate_k_partitions(N + 2, 3, max_items=max_items)
        if not has_monochromatic_region(p, poly)
    )
