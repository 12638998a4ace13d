"""Exhaustive generation of partitions, proper partitions, rooted-variant
partitions, and k-ary trees.

Streams are demand driven and deterministic: the recursion decomposes on
the root segment and walks interior vertex tuples in lexicographic order,
so repeated runs emit identical sequences with no duplicates.  Every
enumerator refuses up front when the projected item count exceeds
`max_items` (default 10**7); pass ``max_items=None`` to override.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .counting import catalan_k, catalan_kd
from .model import (
    ColoredPolygon,
    ParameterError,
    Partition,
    ResourceLimitError,
    is_proper,
)
from .trees import LEAF, KAryTree

DEFAULT_MAX_ITEMS = 10_000_000


def _guard(projected: int, max_items: int | None, what: str) -> None:
    if max_items is not None and projected > max_items:
        raise ResourceLimitError(
            f"{what}: projected {projected} items exceeds the guard of {max_items}"
        )


def _projected_k_partitions(num_vertices: int, k: int) -> int:
    n, rem = divmod(num_vertices - 2, k - 2)
    return 0 if rem else catalan_k(n, k - 1)


def _fill(n: int, k: int, segments: tuple[tuple[int, int], ...], chords: list) -> Iterator[Partition]:
    """Backtracking core: partition every segment (a, b) into k-gons."""
    if not segments:
        yield Partition(n, tuple(chords))
        return
    (a, b), rest = segments[0], segments[1:]
    if b - a == 1:
        yield from _fill(n, k, rest, chords)
        return
    for ts in combinations(range(a + 1, b), k - 2):
        ring = (a, *ts, b)
        new = [(x, y) for x, y in zip(ring, ring[1:]) if y - x >= 2]
        chords.extend(new)
        yield from _fill(n, k, tuple(zip(ring, ring[1:])) + rest, chords)
        if new:
            del chords[-len(new):]


def enumerate_k_partitions(
    num_vertices: int, k: int, *, max_items: int | None = DEFAULT_MAX_ITEMS
) -> Iterator[Partition]:
    """Every partition of the polygon into k-gons, exactly once.

    Emits nothing when (num_vertices - 2) is not a multiple of (k - 2).
    """
    if num_vertices < 2:
        raise ParameterError(f"polygon needs >= 2 vertices, got {num_vertices}")
    if k < 3:
        raise ParameterError(f"regions need k >= 3 vertices, got k={k}")
    projected = _projected_k_partitions(num_vertices, k)
    _guard(projected, max_items, f"{k}-partitions of a {num_vertices}-gon")
    if projected == 0:
        return
    yield from _fill(num_vertices, k, ((0, num_vertices - 1),), [])


def enumerate_proper(
    poly: ColoredPolygon, k: int, *, max_items: int | None = DEFAULT_MAX_ITEMS
) -> Iterator[Partition]:
    """The proper k-partitions of poly, filtered out of the full stream."""
    for p in enumerate_k_partitions(poly.num_vertices, k, max_items=max_items):
        if is_proper(p, poly, k):
            yield p


def count_proper_brute(
    poly: ColoredPolygon, k: int, *, max_items: int | None = DEFAULT_MAX_ITEMS
) -> int:
    """Brute-force oracle: the length of the proper stream."""
    return sum(1 for _ in enumerate_proper(poly, k, max_items=max_items))


def enumerate_kd_partitions(
    num_vertices: int, K: int, D: int, *, max_items: int | None = DEFAULT_MAX_ITEMS
) -> Iterator[Partition]:
    """Every partition whose root region is a D-gon and all others K-gons.

    D = 2 is the ordinary K-partition stream.
    """
    if num_vertices < 2:
        raise ParameterError(f"polygon needs >= 2 vertices, got {num_vertices}")
    if K < 3 or D < 2:
        raise ParameterError(f"need K >= 3 and D >= 2, got K={K}, D={D}")
    if D == 2:
        yield from enumerate_k_partitions(num_vertices, K, max_items=max_items)
        return
    n, rem = divmod(num_vertices - D, K - 2)
    projected = 0 if (rem or n < 0) else catalan_kd(n, K - 1, D - 1)
    _guard(projected, max_items, f"rooted ({K},{D})-partitions of a {num_vertices}-gon")
    if projected == 0:
        return
    for ts in combinations(range(1, num_vertices - 1), D - 2):
        ring = (0, *ts, num_vertices - 1)
        new = [(x, y) for x, y in zip(ring, ring[1:]) if y - x >= 2]
        yield from _fill(num_vertices, K, tuple(zip(ring, ring[1:])), list(new))


def enumerate_kary_trees(
    k: int, n_internal: int, *, max_items: int | None = DEFAULT_MAX_ITEMS
) -> Iterator[KAryTree]:
    """Every k-ary tree with the given number of internal vertices."""
    if k < 2:
        raise ParameterError(f"arity must be >= 2, got {k}")
    if n_internal < 0:
        raise ParameterError(f"need n_internal >= 0, got {n_internal}")
    _guard(catalan_k(n_internal, k), max_items, f"{k}-ary trees with {n_internal} internal")

    def gen(n: int) -> Iterator[KAryTree]:
        if n == 0:
            yield LEAF
            return
        for comp in _compositions(n - 1, k):
            yield from _build(comp, ())

    def _build(parts: tuple[int, ...], acc: tuple[KAryTree, ...]) -> Iterator[KAryTree]:
        if not parts:
            yield KAryTree(acc)
            return
        for sub in gen(parts[0]):
            yield from _build(parts[1:], acc + (sub,))

    yield from gen(n_internal)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of `total` into `parts` nonnegative parts, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)
