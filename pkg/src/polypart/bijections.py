"""Constructive maps between proper partitions, coarser block partitions,
and k-ary trees, with their inverses and fiber enumerators.

Every map validates its domain up front and re-validates the image shape,
so a structurally impossible input fails loudly instead of producing a
malformed partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .model import (
    ColoredPolygon,
    ContractError,
    ParameterError,
    Partition,
    Region,
    is_k_partition,
    is_kd_partition,
    is_proper,
    regions,
    standard_reading,
)
from .trees import LEAF, KAryTree, edge_count


def _face_map(p: Partition) -> dict[tuple[int, int], Region]:
    """Each face keyed by its bounding segment (min vertex, max vertex)."""
    return {(f[0], f[-1]): f for f in regions(p)}


# ---------------------------------------------------------------------------
# partitions <-> trees

def partition_to_tree(p: Partition, k: int) -> KAryTree:
    """The k-ary tree of a partition into (k+1)-gons, rooted at the top edge.

    Each region becomes an internal vertex whose children follow the
    region's non-root sides left to right; polygon sides become leaves.
    """
    if k < 2:
        raise ParameterError(f"arity must be >= 2, got {k}")
    if p.num_vertices == 2:
        return LEAF
    faces = regions(p)
    if any(len(f) != k + 1 for f in faces):
        raise ContractError(f"regions must be {k + 1}-gons for a {k}-ary tree")
    face_at = {(f[0], f[-1]): f for f in faces}

    def build(a: int, b: int) -> KAryTree:
        if b - a == 1:
            return LEAF
        f = face_at[(a, b)]
        return KAryTree(tuple(build(x, y) for x, y in zip(f, f[1:])))

    return build(0, p.num_vertices - 1)


def tree_to_partition(t: KAryTree, num_vertices: int) -> Partition:
    """Inverse of partition_to_tree.

    A subtree with m internal vertices spans (arity-1)*m + 1 polygon sides,
    which fixes every region once the sides are laid out left to right.
    """
    if t.is_leaf:
        if num_vertices != 2:
            raise ParameterError("a lone leaf corresponds to the 2-gon")
        return Partition(2, ())
    chords: list[tuple[int, int]] = []

    def place(nd: KAryTree, a: int) -> int:
        if nd.is_leaf:
            return a + 1
        cur = a
        ring = [a]
        for child in nd.children:
            cur = place(child, cur)
            ring.append(cur)
        chords.extend((x, y) for x, y in zip(ring, ring[1:]) if y - x >= 2)
        return cur

    b = place(t, 0)
    if b != num_vertices - 1:
        raise ParameterError(
            f"tree spans {b + 1} vertices but num_vertices={num_vertices}"
        )
    return Partition(num_vertices, tuple(chords))


def is_proper_tree(t: KAryTree) -> bool:
    """Properness test for binary trees without going through the polygon:
    at every internal vertex, one of the two subtrees has edge count
    divisible by four."""
    if t.is_leaf:
        return True
    if len(t.children) != 2:
        raise ParameterError("the properness criterion applies to binary trees")
    left, right = t.children
    if edge_count(left) % 4 and edge_count(right) % 4:
        return False
    return is_proper_tree(left) and is_proper_tree(right)


# ---------------------------------------------------------------------------
# two colors: proper triangulations <-> quadrilateral partitions

def proper_tri_to_quad(p: Partition, poly: ColoredPolygon) -> Partition:
    """Delete every monochromatic chord of a proper triangulation on an even
    number of regions, leaving a partition into quadrilaterals.

    Each triangle has exactly one monochromatic edge (two colors on three
    vertices) and that edge is always a chord; the map is 2^n-to-1 onto the
    quadrilateral partitions.
    """
    n = p.num_vertices
    _require_same_size(p, poly)
    if poly.c != 2:
        raise ParameterError("this map needs a 2-colored polygon")
    if (n - 2) % 2:
        raise ParameterError("odd region counts belong to the rooted map")
    if not is_proper(p, poly, 3):
        raise ContractError("input is not a proper triangulation")
    chordset = set(p.chords)
    for f in regions(p):
        edges = ((f[0], f[1]), (f[1], f[2]), (f[0], f[2]))
        mono = [e for e in edges if poly.colors[e[0]] == poly.colors[e[1]]]
        if len(mono) != 1 or mono[0] not in chordset:
            raise ContractError(f"triangle {f} has no unique monochromatic chord")
    q = Partition(
        n, tuple(ch for ch in p.chords if poly.colors[ch[0]] != poly.colors[ch[1]])
    )
    if not is_k_partition(q, 4):
        raise ContractError("deleting monochromatic chords did not yield quadrilaterals")
    return q


def quad_to_proper_tris(p: Partition, poly: ColoredPolygon) -> list[Partition]:
    """The full fiber of proper_tri_to_quad over a quadrilateral partition:
    re-insert either diagonal in every quadrilateral (colors alternate, so
    both choices stay proper)."""
    n = p.num_vertices
    _require_same_size(p, poly)
    if poly.c != 2:
        raise ParameterError("this map needs a 2-colored polygon")
    faces = regions(p)
    if any(len(f) != 4 for f in faces):
        raise ContractError("input is not a partition into quadrilaterals")
    choices = []
    for f in faces:
        cols = tuple(poly.colors[v] for v in f)
        if not (cols[0] == cols[2] and cols[1] == cols[3] and cols[0] != cols[1]):
            raise ContractError(f"quadrilateral {f} is not alternately colored")
        choices.append(((f[0], f[2]), (f[1], f[3])))
    return [Partition(n, p.chords + combo) for combo in product(*choices)]


# ---------------------------------------------------------------------------
# three colors: proper triangulations <-> pentagon partitions

def _triangle_across(
    face_at: dict[tuple[int, int], Region], x: int, y: int
) -> Region:
    if y - x < 2:
        raise ContractError(f"expected ({x},{y}) to be a chord")
    f = face_at.get((x, y))
    if f is None or len(f) != 3:
        raise ContractError(f"no triangle hangs on chord ({x},{y})")
    return f


def _pentagon_glue(
    face_at: dict[tuple[int, int], Region],
    a: int,
    b: int,
    removed: set[tuple[int, int]],
) -> None:
    """Merge the root triangle of segment (a, b) with two neighbors into a
    pentagon, then recurse on the pentagon's chord sides.

    Which two triangles join is forced by the sub-polygon sizes: every
    pentagon side must cut off a sub-polygon with 2 mod 3 vertices, so
    (u - a) mod 3 decides whether the apex u sits at pentagon position
    1, 2, or 3.  Both deleted chords always contain u.
    """
    if b - a == 1:
        return
    f = face_at.get((a, b))
    if f is None or len(f) != 3:
        raise ContractError(f"no triangle hangs on segment ({a},{b})")
    u = f[1]
    r = (u - a) % 3
    if r == 2:
        fl = _triangle_across(face_at, a, u)
        fr = _triangle_across(face_at, u, b)
        removed.add((a, u))
        removed.add((u, b))
        pent = (a, fl[1], u, fr[1], b)
    elif r == 1:
        f2 = _triangle_across(face_at, u, b)
        v = f2[1]
        f3 = _triangle_across(face_at, u, v)
        removed.add((u, b))
        removed.add((u, v))
        pent = (a, u, f3[1], v, b)
    else:
        f2 = _triangle_across(face_at, a, u)
        z = f2[1]
        f3 = _triangle_across(face_at, z, u)
        removed.add((a, u))
        removed.add((z, u))
        pent = (a, z, f3[1], u, b)
    for x, y in zip(pent, pent[1:]):
        if y - x >= 2:
            _pentagon_glue(face_at, x, y, removed)


def tri3_to_blocks(p: Partition, poly: ColoredPolygon) -> Partition:
    """Group the triangles of a proper 3-colored triangulation (region count
    a multiple of three) into pentagons, starting from the top edge."""
    n = p.num_vertices
    _require_same_size(p, poly)
    if poly.c != 3:
        raise ParameterError("this map needs a 3-colored polygon")
    if (n - 2) % 3:
        raise ParameterError("region count must be a multiple of three")
    if not is_proper(p, poly, 3):
        raise ContractError("input is not a proper triangulation")
    removed: set[tuple[int, int]] = set()
    _pentagon_glue(_face_map(p), 0, n - 1, removed)
    q = Partition(n, tuple(ch for ch in p.chords if ch not in removed))
    if not is_k_partition(q, 5):
        raise ContractError("gluing did not yield a pentagon partition")
    return q


def _pentagon_diagonals(f: Region, poly: ColoredPolygon) -> list[tuple[int, int]]:
    """The two re-triangulation chords of an image pentagon: the diagonals at
    its unique singly-occurring color."""
    if len(f) != 5:
        raise ContractError(f"{f} is not a pentagon")
    cols = [poly.colors[v] for v in f]
    cnt = Counter(cols)
    if sorted(cnt.values()) != [1, 2, 2]:
        raise ContractError(f"pentagon {f} colors {cols} lack a unique single color")
    i = next(idx for idx, c in enumerate(cols) if cnt[c] == 1)
    w = f[i]
    d1 = tuple(sorted((w, f[(i + 2) % 5])))
    d2 = tuple(sorted((w, f[(i + 3) % 5])))
    return [d1, d2]


def blocks_to_tri3(p: Partition, poly: ColoredPolygon) -> Partition:
    """Inverse of tri3_to_blocks: triangulate each pentagon through the
    vertex whose color appears only once."""
    n = p.num_vertices
    _require_same_size(p, poly)
    if poly.c != 3:
        raise ParameterError("this map needs a 3-colored polygon")
    faces = regions(p)
    if any(len(f) != 5 for f in faces):
        raise ContractError("input is not a partition into pentagons")
    added: list[tuple[int, int]] = []
    for f in faces:
        added.extend(_pentagon_diagonals(f, poly))
    t = Partition(n, p.chords + tuple(added))
    if not is_proper(t, poly, 3):
        raise ContractError("re-triangulation is not proper")
    return t


# ---------------------------------------------------------------------------
# rooted variants (region count not a multiple of the block size)

def rooted_block_map(p: Partition, poly: ColoredPolygon, family: str) -> Partition:
    """Block up a proper triangulation whose region count leaves a remainder,
    keeping a small root region.

    family "a" (two colors, odd region count): the root triangle stays and
    every other triangle loses its monochromatic chord, giving a rooted
    partition with a triangle root among quadrilaterals.  family "b" (three
    colors): remainder 1 keeps the root triangle among pentagons; remainder
    2 pairs the root triangle across its chord toward the color-3 apex into
    a root quadrilateral reading (1, 2, 3, 2), with pentagons elsewhere.
    """
    n = p.num_vertices
    N = n - 2
    _require_same_size(p, poly)
    if family == "a":
        if poly.c != 2:
            raise ParameterError('family "a" needs a 2-colored polygon')
        if N % 2 != 1:
            raise ParameterError("even region counts belong to proper_tri_to_quad")
        if not is_proper(p, poly, 3):
            raise ContractError("input is not a proper triangulation")
        q = Partition(
            n, tuple(ch for ch in p.chords if poly.colors[ch[0]] != poly.colors[ch[1]])
        )
        if not is_kd_partition(q, 4, 3):
            raise ContractError("mono-chord deletion did not yield a rooted quad partition")
        return q
    if family == "b":
        if poly.c != 3:
            raise ParameterError('family "b" needs a 3-colored polygon')
        r = N % 3
        if r == 0:
            raise ParameterError("multiples of three belong to tri3_to_blocks")
        if not is_proper(p, poly, 3):
            raise ContractError("input is not a proper triangulation")
        face_at = _face_map(p)
        root = face_at[(0, n - 1)]
        u = root[1]
        removed: set[tuple[int, int]] = set()
        if r == 1:
            for x, y in ((0, u), (u, n - 1)):
                if y - x >= 2:
                    _pentagon_glue(face_at, x, y, removed)
            q = Partition(n, tuple(ch for ch in p.chords if ch not in removed))
            if not is_kd_partition(q, 5, 3):
                raise ContractError("gluing did not yield a triangle-rooted pentagon partition")
            return q
        f2 = _triangle_across(face_at, 0, u)
        removed.add((0, u))
        w = f2[1]
        for x, y in ((0, w), (w, u), (u, n - 1)):
            if y - x >= 2:
                _pentagon_glue(face_at, x, y, removed)
        q = Partition(n, tuple(ch for ch in p.chords if ch not in removed))
        if not is_kd_partition(q, 5, 4):
            raise ContractError("gluing did not yield a quad-rooted pentagon partition")
        if standard_reading(regions(q)[0], poly) != (1, 2, 3, 2):
            raise ContractError("root quadrilateral does not read (1, 2, 3, 2)")
        return q
    raise ParameterError(f'unknown family {family!r}, expected "a" or "b"')


def rooted_block_inverse(q: Partition, poly: ColoredPolygon, family: str) -> Partition:
    """The unique proper triangulation refining a family "b" rooted image;
    for family "a" use rooted_block_fiber (the map is 2^n-to-1)."""
    n = q.num_vertices
    N = n - 2
    _require_same_size(q, poly)
    if family != "b":
        raise ParameterError('only family "b" has a single-valued inverse')
    if poly.c != 3:
        raise ParameterError('family "b" needs a 3-colored polygon')
    r = N % 3
    if r == 0:
        raise ParameterError("multiples of three belong to blocks_to_tri3")
    faces = regions(q)
    root = faces[0]
    added: list[tuple[int, int]] = []
    if r == 1:
        if len(root) != 3:
            raise ContractError("root region must be a triangle")
    else:
        if len(root) != 4 or standard_reading(root, poly) != (1, 2, 3, 2):
            raise ContractError("root region must be a quadrilateral reading (1, 2, 3, 2)")
        added.append((root[0], root[2]))
    for f in faces[1:]:
        added.extend(_pentagon_diagonals(f, poly))
    t = Partition(n, q.chords + tuple(added))
    if not is_proper(t, poly, 3):
        raise ContractError("re-triangulation is not proper")
    return t


def rooted_block_fiber(
    q: Partition, poly: ColoredPolygon, family: str
) -> list[Partition]:
    """All proper triangulations mapping to a rooted image.

    family "a": either diagonal per quadrilateral (2^n of them); family "b":
    the singleton inverse.
    """
    n = q.num_vertices
    _require_same_size(q, poly)
    if family == "b":
        return [rooted_block_inverse(q, poly, "b")]
    if family != "a":
        raise ParameterError(f'unknown family {family!r}, expected "a" or "b"')
    if poly.c != 2:
        raise ParameterError('family "a" needs a 2-colored polygon')
    faces = regions(q)
    if not faces or len(faces[0]) != 3 or any(len(f) != 4 for f in faces[1:]):
        raise ContractError("image must have a triangle root among quadrilaterals")
    choices = []
    for f in faces[1:]:
        cols = tuple(poly.colors[v] for v in f)
        if not (cols[0] == cols[2] and cols[1] == cols[3] and cols[0] != cols[1]):
            raise ContractError(f"quadrilateral {f} is not alternately colored")
        choices.append(((f[0], f[2]), (f[1], f[3])))
    return [Partition(n, q.chords + combo) for combo in product(*choices)]


# ---------------------------------------------------------------------------
# c = k >= 4: proper k-partitions <-> superblock partitions

def kpartition_to_superblocks(p: Partition, poly: ColoredPolygon, k: int) -> Partition:
    """Glue each k-gon core with its k-1 neighbor k-gons into a
    ((k-2)k + 2)-gon superblock; with remainder-1 sizes the root k-gon is
    left over as the root region."""
    n = p.num_vertices
    N = n - 2
    _require_same_size(p, poly)
    if k < 4:
        raise ParameterError(f"superblock gluing needs k >= 4, got {k}")
    if poly.c != k:
        raise ParameterError("this map needs c = k colors")
    if N == 0:
        return p
    M, rem = divmod(N, k - 2)
    if rem or M % k not in (0, 1):
        raise ParameterError(f"size N={N} is not in the glued families for k={k}")
    if not is_proper(p, poly, k):
        raise ContractError(f"input is not a proper {k}-partition")
    face_at = _face_map(p)
    removed: set[tuple[int, int]] = set()

    def glue(a: int, b: int) -> None:
        core = face_at.get((a, b))
        if core is None or len(core) != k:
            raise ContractError(f"no {k}-gon core hangs on segment ({a},{b})")
        for x, y in zip(core, core[1:]):
            if y - x < 2:
                raise ContractError(f"core edge ({x},{y}) has no neighbor to glue")
            removed.add((x, y))
            nb = face_at.get((x, y))
            if nb is None or len(nb) != k:
                raise ContractError(f"no {k}-gon neighbor hangs on chord ({x},{y})")
            for s, t in zip(nb, nb[1:]):
                if t - s >= 2:
                    glue(s, t)

    big = (k - 2) * k + 2
    if M % k == 0:
        glue(0, n - 1)
        q = Partition(n, tuple(ch for ch in p.chords if ch not in removed))
        if not is_k_partition(q, big):
            raise ContractError("gluing did not yield superblocks")
        return q
    root = face_at.get((0, n - 1))
    if root is None or len(root) != k:
        raise ContractError("root region must be a k-gon in the rooted family")
    for x, y in zip(root, root[1:]):
        if y - x >= 2:
            glue(x, y)
    q = Partition(n, tuple(ch for ch in p.chords if ch not in removed))
    if not is_kd_partition(q, big, k):
        raise ContractError("gluing did not yield a rooted superblock partition")
    return q


def superblocks_to_kpartition(q: Partition, poly: ColoredPolygon, k: int) -> Partition:
    """Inverse gluing: refine each superblock by its unique proper
    k-partition, whose core k-gon sits at every (k-1)-th boundary vertex."""
    n = q.num_vertices
    N = n - 2
    _require_same_size(q, poly)
    if k < 4:
        raise ParameterError(f"superblock refinement needs k >= 4, got {k}")
    if poly.c != k:
        raise ParameterError("this map needs c = k colors")
    if N == 0:
        return q
    M, rem = divmod(N, k - 2)
    if rem or M % k not in (0, 1):
        raise ParameterError(f"size N={N} is not in the glued families for k={k}")
    big = (k - 2) * k + 2
    faces = regions(q)
    if M % k == 1:
        root, blocks = faces[0], faces[1:]
        if len(root) != k:
            raise ContractError("root region must be a k-gon in the rooted family")
    else:
        blocks = faces
    added: list[tuple[int, int]] = []
    for f in blocks:
        if len(f) != big:
            raise ContractError(f"region {f} is not a {big}-gon superblock")
        ring = [f[i * (k - 1)] for i in range(k)]
        added.extend(zip(ring, ring[1:]))
    t = Partition(n, q.chords + tuple(added))
    if not is_proper(t, poly, k):
        raise ContractError("positional refinement is not proper")
    return t


# ---------------------------------------------------------------------------
# fibered-map bundles

@dataclass(frozen=True)
class FiberedMap:
    """A many-to-one map packaged with its fiber enumerator and the declared
    fiber size of each image."""

    forward: Callable[[Partition], Partition]
    fiber: Callable[[Partition], list[Partition]]
    fiber_size: Callable[[Partition], int]


def quad_fibered(poly: ColoredPolygon) -> FiberedMap:
    """proper triangulations -> quadrilateral partitions, 2^n to 1."""
    return FiberedMap(
        forward=lambda p: proper_tri_to_quad(p, poly),
        fiber=lambda y: quad_to_proper_tris(y, poly),
        fiber_size=lambda y: 2 ** len(regions(y)),
    )


def rooted_fibered(poly: ColoredPolygon, family: str) -> FiberedMap:
    """The rooted maps: 2^n to 1 for family "a", bijective for family "b"."""
    if family == "a":
        size = lambda y: 2 ** max(len(regions(y)) - 1, 0)
    elif family == "b":
        size = lambda y: 1
    else:
        raise ParameterError(f'unknown family {family!r}, expected "a" or "b"')
    return FiberedMap(
        forward=lambda p: rooted_block_map(p, poly, family),
        fiber=lambda y: rooted_block_fiber(y, poly, family),
        fiber_size=size,
    )


def pentagon_fibered(poly: ColoredPolygon) -> FiberedMap:
    """proper 3-colored triangulations -> pentagon partitions, bijective."""
    return FiberedMap(
        forward=lambda p: tri3_to_blocks(p, poly),
        fiber=lambda y: [blocks_to_tri3(y, poly)],
        fiber_size=lambda y: 1,
    )


def _require_same_size(p: Partition, poly: ColoredPolygon) -> None:
    if p.num_vertices != poly.num_vertices:
        raise ParameterError(
            f"partition on {p.num_vertices} vertices vs polygon on {poly.num_vertices}"
        )
