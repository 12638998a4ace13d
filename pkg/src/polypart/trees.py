"""Rooted plane trees in which every vertex has k children or none.

Trees are immutable and hashable; a leaf is the empty-children node.  The
preorder serialization writes 'I' for internal vertices and 'L' for leaves,
so the 2-ary tree with one internal vertex is "ILL".
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ParameterError


@dataclass(frozen=True, slots=True)
class KAryTree:
    children: tuple["KAryTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


LEAF = KAryTree()


def node(*children: KAryTree) -> KAryTree:
    """An internal vertex with the given ordered children."""
    if len(children) < 2:
        raise ParameterError("an internal vertex needs at least 2 children")
    return KAryTree(tuple(children))


def internal_count(t: KAryTree) -> int:
    if t.is_leaf:
        return 0
    return 1 + sum(internal_count(c) for c in t.children)


def leaf_count(t: KAryTree) -> int:
    if t.is_leaf:
        return 1
    return sum(leaf_count(c) for c in t.children)


def edge_count(t: KAryTree) -> int:
    """Number of edges; equals k * internal_count for a k-ary tree."""
    return sum(edge_count(c) + 1 for c in t.children)


def tree_arity(t: KAryTree) -> int | None:
    """The common child count of internal vertices, or None for a lone leaf."""
    if t.is_leaf:
        return None
    return len(t.children)


def validate_arity(t: KAryTree, k: int) -> None:
    """Raise unless every internal vertex has exactly k children."""
    if k < 2:
        raise ParameterError(f"arity must be >= 2, got {k}")
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur.is_leaf:
            continue
        if len(cur.children) != k:
            raise ParameterError(
                f"vertex has {len(cur.children)} children in a {k}-ary tree"
            )
        stack.extend(cur.children)


def preorder(t: KAryTree) -> str:
    """Preorder serialization over {I, L}."""
    out: list[str] = []
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur.is_leaf:
            out.append("L")
        else:
            out.append("I")
            stack.extend(reversed(cur.children))
    return "".join(out)


def parse_preorder(s: str, k: int) -> KAryTree:
    """Inverse of `preorder` for a k-ary tree."""
    if k < 2:
        raise ParameterError(f"arity must be >= 2, got {k}")
    pos = 0

    def build() -> KAryTree:
        nonlocal pos
        if pos >= len(s):
            raise ParameterError(f"truncated preorder string {s!r}")
        ch = s[pos]
        pos += 1
        if ch == "L":
            return LEAF
        if ch == "I":
            return KAryTree(tuple(build() for _ in range(k)))
        raise ParameterError(f"unexpected character {ch!r} in preorder string")

    t = build()
    if pos != len(s):
        raise ParameterError(f"trailing characters in preorder string {s!r}")
    return t


def left_path_length(t: KAryTree) -> int:
    """Length of the path from the root that always takes the leftmost child."""
    length = 0
    cur = t
    while not cur.is_leaf:
        length += 1
        cur = cur.children[0]
    return length


def left_comb(k: int, n: int) -> KAryTree:
    """The unique k-ary tree with n internal vertices and left path length n."""
    if k < 2:
        raise ParameterError(f"arity must be >= 2, got {k}")
    if n < 0:
        raise ParameterError(f"need n >= 0, got {n}")
    t = LEAF
    for _ in range(n):
        t = KAryTree((t,) + (LEAF,) * (k - 1))
    return t


def subtree_at(t: KAryTree, path: tuple[int, ...]) -> KAryTree:
    """The subtree reached by following the given child indices from the root."""
    cur = t
    for i in path:
        if cur.is_leaf or not (0 <= i < len(cur.children)):
            raise ParameterError(f"path {path} does not exist in the tree")
        cur = cur.children[i]
    return cur


def replace_subtree(t: KAryTree, path: tuple[int, ...], new: KAryTree) -> KAryTree:
    """A copy of t with the subtree at `path` replaced by `new`."""
    if not path:
        return new
    i = path[0]
    if t.is_leaf or not (0 <= i < len(t.children)):
        raise ParameterError(f"path {path} does not exist in the tree")
    kids = list(t.children)
    kids[i] = replace_subtree(kids[i], path[1:], new)
    return KAryTree(tuple(kids))
