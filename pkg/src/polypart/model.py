"""Colored convex polygons, noncrossing chord partitions, and properness predicates.

Conventions used throughout the package: a polygon with n vertices has
indices 0..n-1 increasing counterclockwise, vertex 0 is the left endpoint
of the horizontal top edge, so the top (root) edge is always (0, n-1).
Because the vertices sit in convex position, listing a region's vertices in
ascending index order is exactly its counterclockwise boundary order.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


class PolypartError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(PolypartError, ValueError):
    """Inconsistent or out-of-range parameters."""


class InvalidPartitionError(PolypartError, ValueError):
    """A chord set violates the partition invariants."""


class ContractError(PolypartError):
    """An operation was applied outside its stated domain."""


class ResourceLimitError(PolypartError):
    """A projected enumeration size exceeds the configured guard."""


Chord = tuple[int, int]
# A region is the ascending (= counterclockwise) tuple of its vertex indices.
Region = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Cyclic:
    """Colors 1..c repeating counterclockwise from vertex 0."""

    c: int


@dataclass(frozen=True, slots=True)
class CyclicAdjusted3:
    """Cyclic 3-coloring, except the last vertex is recolored 2 whenever the
    vertex count is 1 mod 3 (otherwise the top edge would read 1,1)."""


@dataclass(frozen=True, slots=True)
class Blocks:
    """m vertices colored 1 followed by n vertices colored 2."""

    m: int
    n: int


@dataclass(frozen=True, slots=True)
class Explicit:
    """An explicit color sequence; the color count is its maximum entry."""

    colors: tuple[int, ...]


ColoringScheme = Union[Cyclic, CyclicAdjusted3, Blocks, Explicit]


@dataclass(frozen=True, slots=True)
class ColoredPolygon:
    """A convex polygon with a color in 1..c attached to every vertex."""

    num_vertices: int
    colors: tuple[int, ...]
    c: int

    def __post_init__(self) -> None:
        if self.num_vertices < 2:
            raise ParameterError(f"polygon needs >= 2 vertices, got {self.num_vertices}")
        if self.c < 1:
            raise ParameterError(f"color count must be >= 1, got {self.c}")
        if len(self.colors) != self.num_vertices:
            raise ParameterError(
                f"expected {self.num_vertices} colors, got {len(self.colors)}"
            )
        if any(not (1 <= col <= self.c) for col in self.colors):
            raise ParameterError(f"colors must lie in 1..{self.c}: {self.colors}")


def make_coloring(scheme: ColoringScheme, num_vertices: int) -> ColoredPolygon:
    """Build the colored polygon a scheme prescribes on `num_vertices` vertices."""
    if num_vertices < 2:
        raise ParameterError(f"polygon needs >= 2 vertices, got {num_vertices}")
    if isinstance(scheme, Cyclic):
        if scheme.c < 1:
            raise ParameterError("cyclic scheme needs c >= 1")
        colors = tuple(i % scheme.c + 1 for i in range(num_vertices))
        return ColoredPolygon(num_vertices, colors, scheme.c)
    if isinstance(scheme, CyclicAdjusted3):
        colors = [i % 3 + 1 for i in range(num_vertices)]
        if num_vertices % 3 == 1:
            colors[-1] = 2
        return ColoredPolygon(num_vertices, tuple(colors), 3)
    if isinstance(scheme, Blocks):
        if scheme.m < 1 or scheme.n < 1:
            raise ParameterError("block scheme needs m, n >= 1")
        if scheme.m + scheme.n != num_vertices:
            raise ParameterError(
                f"block sizes {scheme.m}+{scheme.n} != {num_vertices} vertices"
            )
        colors = (1,) * scheme.m + (2,) * scheme.n
        return ColoredPolygon(num_vertices, colors, 2)
    if isinstance(scheme, Explicit):
        colors = tuple(scheme.colors)
        if len(colors) != num_vertices:
            raise ParameterError(
                f"explicit scheme has {len(colors)} colors for {num_vertices} vertices"
            )
        return ColoredPolygon(num_vertices, colors, max(colors))
    raise ParameterError(f"unknown coloring scheme: {scheme!r}")


@dataclass(frozen=True, slots=True)
class Partition:
    """A set of pairwise noncrossing chords of a convex polygon.

    Chords are stored normalized as ascending (i, j) pairs in sorted order,
    so equal partitions compare and hash equal.  Construction checks the
    cheap invariants (bounds, non-adjacency, no duplicate); use
    `validate_partition` for the full noncrossing check.
    """

    num_vertices: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        n = self.num_vertices
        if n < 2:
            raise ParameterError(f"polygon needs >= 2 vertices, got {n}")
        norm = tuple(sorted((a, b) if a < b else (b, a) for a, b in self.chords))
        object.__setattr__(self, "chords", norm)
        prev = None
        for i, j in norm:
            if i < 0 or j > n - 1:
                raise InvalidPartitionError(f"chord ({i},{j}) out of range for n={n}")
            if j - i < 2 or (i, j) == (0, n - 1):
                raise InvalidPartitionError(f"chord ({i},{j}) joins adjacent vertices")
            if (i, j) == prev:
                raise InvalidPartitionError(f"duplicate chord ({i},{j})")
            prev = (i, j)


def validate_partition(p: Partition) -> None:
    """Raise InvalidPartitionError if any two chords cross in the interior."""
    ch = p.chords
    for idx, (a, b) in enumerate(ch):
        for x, y in ch[idx + 1 :]:
            if a < x < b < y or x < a < y < b:
                raise InvalidPartitionError(f"chords ({a},{b}) and ({x},{y}) cross")


def regions(p: Partition) -> list[Region]:
    """All bounded faces of the partition, root face first, then depth first
    left to right.

    For a partition with q chords there are exactly q+1 faces and the face
    sizes satisfy sum(size - 2) = num_vertices - 2; a violation means the
    chord set crosses and raises InvalidPartitionError.
    """
    n = p.num_vertices
    if n == 2:
        if p.chords:
            raise InvalidPartitionError("a 2-gon admits no chords")
        return []
    up: dict[int, list[int]] = {}
    for a, b in p.chords:
        up.setdefault(a, []).append(b)
    for lst in up.values():
        lst.sort()

    faces: list[Region] = []
    stack: list[tuple[int, int]] = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        face = [i]
        cur = i
        while cur != j:
            nxt = cur + 1
            for t in reversed(up.get(cur, ())):
                if t <= j and (cur, t) != (i, j):
                    if t > nxt:
                        nxt = t
                    break
            face.append(nxt)
            cur = nxt
        faces.append(tuple(face))
        subs = [(a, b) for a, b in zip(face, face[1:]) if b - a >= 2]
        stack.extend(reversed(subs))

    if len(faces) != len(p.chords) + 1 or sum(len(f) - 2 for f in faces) != n - 2:
        raise InvalidPartitionError("chord set does not decompose the polygon (crossing chords?)")
    return faces


def root_region(p: Partition) -> Region:
    """The face containing the top edge (0, num_vertices-1)."""
    faces = regions(p)
    if not faces:
        raise ContractError("a 2-gon has no regions")
    return faces[0]


def is_k_partition(p: Partition, k: int) -> bool:
    """True iff every bounded region has exactly k vertices."""
    if k < 3:
        raise ParameterError(f"regions need k >= 3 vertices, got k={k}")
    return all(len(f) == k for f in regions(p))


def is_kd_partition(p: Partition, k: int, d: int) -> bool:
    """True iff the root-edge region is a d-gon and every other region a k-gon.

    d = 2 degenerates to an ordinary k-partition: the root edge then counts
    as its own (empty) root region.
    """
    if k < 3 or d < 2:
        raise ParameterError(f"need k >= 3 and d >= 2, got k={k}, d={d}")
    if d == 2:
        return is_k_partition(p, k)
    faces = regions(p)
    if not faces:
        return False
    return len(faces[0]) == d and all(len(f) == k for f in faces[1:])


def is_proper(p: Partition, poly: ColoredPolygon, k: int) -> bool:
    """True iff p is a k-partition in which every region carries all c colors.

    Raises ContractError if p is not a k-partition of poly.
    """
    if p.num_vertices != poly.num_vertices:
        raise ParameterError(
            f"partition on {p.num_vertices} vertices vs polygon on {poly.num_vertices}"
        )
    faces = regions(p)
    if any(len(f) != k for f in faces):
        raise ContractError(f"not a {k}-partition")
    colors = poly.colors
    need = set(range(1, poly.c + 1))
    return all(need <= {colors[v] for v in f} for f in faces)


def has_monochromatic_region(p: Partition, poly: ColoredPolygon) -> bool:
    """True iff some region's vertices all share one color."""
    if p.num_vertices != poly.num_vertices:
        raise ParameterError(
            f"partition on {p.num_vertices} vertices vs polygon on {poly.num_vertices}"
        )
    colors = poly.colors
    return any(len({colors[v] for v in f}) == 1 for f in regions(p))


def standard_reading(r: Region, poly: ColoredPolygon) -> tuple[int, ...]:
    """The region's color sequence read counterclockwise.

    For the root region this starts at vertex 0 (the left endpoint of the
    top edge); for any other region the anchor is its smallest vertex index.
    Both anchors coincide with ascending-order listing.
    """
    if any(not (0 <= v < poly.num_vertices) for v in r):
        raise ParameterError(f"region {r} not inside polygon of size {poly.num_vertices}")
    return tuple(poly.colors[v] for v in r)


def partition_to_obj(p: Partition, colors: Iterable[int] | None = None) -> dict:
    """JSON-ready dict: {"n": ..., "colors": [...] optional, "chords": [[i,j],...]}."""
    obj: dict = {"n": p.num_vertices}
    if colors is not None:
        obj["colors"] = list(colors)
    obj["chords"] = [list(ch) for ch in p.chords]
    return obj


def partition_from_obj(obj: dict) -> tuple[Partition, tuple[int, ...] | None]:
    """Parse and fully validate the JSON interchange object for a partition."""
    try:
        n = int(obj["n"])
        chords = tuple((int(a), int(b)) for a, b in obj.get("chords", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed partition object: {obj!r}") from exc
    p = Partition(n, chords)
    validate_partition(p)
    colors = obj.get("colors")
    if colors is not None:
        colors = tuple(int(c) for c in colors)
        if len(colors) != n:
            raise ParameterError(f"expected {n} colors, got {len(colors)}")
    return p, colors
