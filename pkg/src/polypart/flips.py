"""Flip moves on partitions and trees, flip graphs, and flip-sequence
algorithms (comb reduction and properness-preserving connection).

A partition flip replaces the chord shared by two adjacent k-gons (their
union is a (2k-2)-gon) with another long diagonal of that union, where
"long" means the endpoints are k-1 boundary steps apart; that is the only
reading under which both sides of the new chord are again k-gons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .bijections import is_proper_tree
from .model import (
    ColoredPolygon,
    ContractError,
    ParameterError,
    Partition,
    Region,
    is_proper,
    regions,
)
from .trees import (
    KAryTree,
    edge_count,
    internal_count,
    left_path_length,
    preorder,
    subtree_at,
    replace_subtree,
)


@dataclass(frozen=True, slots=True)
class PartitionFlip:
    old_chord: tuple[int, int]
    new_chord: tuple[int, int]
    quad_region: Region  # the (2k-2)-gon merged from the two incident k-gons


@dataclass(frozen=True, slots=True)
class TreeFlip:
    """Flip below vertex `vertex` (a child-index path from the root): detach
    the internal child at `child_index`, then re-attach the 2k-1 displaced
    subtrees in depth-first order around the child slot `target_index`."""

    vertex: tuple[int, ...]
    child_index: int
    target_index: int

    def inverse(self) -> "TreeFlip":
        return TreeFlip(self.vertex, self.target_index, self.child_index)


def partition_flips(p: Partition, k: int) -> list[tuple[PartitionFlip, Partition]]:
    """All flips of a k-partition: one entry per (shared chord, alternative
    long diagonal) pair, k-2 alternatives per chord."""
    faces = regions(p)
    if any(len(f) != k for f in faces):
        raise ContractError(f"not a {k}-partition")
    by_edge: dict[tuple[int, int], list[Region]] = {}
    for f in faces:
        for e in zip(f, f[1:]):
            by_edge.setdefault(e, []).append(f)
        by_edge.setdefault((f[0], f[-1]), []).append(f)
    out: list[tuple[PartitionFlip, Partition]] = []
    for ch in p.chords:
        f1, f2 = by_edge[ch]
        union = tuple(sorted(set(f1) | set(f2)))
        rest = tuple(c for c in p.chords if c != ch)
        half = k - 1  # long diagonals join vertices half the boundary apart
        for r in range(half):
            alt = (union[r], union[r + half])
            if alt == ch:
                continue
            flip = PartitionFlip(old_chord=ch, new_chord=alt, quad_region=union)
            out.append((flip, Partition(p.num_vertices, rest + (alt,))))
    return out


def apply_tree_flip(t: KAryTree, f: TreeFlip) -> KAryTree:
    """Apply one tree flip; the flipped child must be internal."""
    v = subtree_at(t, f.vertex)
    if v.is_leaf:
        raise ParameterError(f"flip vertex {f.vertex} is a leaf")
    k = len(v.children)
    i, j = f.child_index, f.target_index
    if not (0 <= i < k and 0 <= j < k):
        raise ParameterError(f"child indices ({i}, {j}) out of range for arity {k}")
    x = v.children[i]
    if x.is_leaf:
        raise ParameterError("the flipped child must be internal")
    spread = v.children[:i] + x.children + v.children[i + 1 :]
    rebuilt = spread[:j] + (KAryTree(spread[j : j + k]),) + spread[j + k :]
    return replace_subtree(t, f.vertex, KAryTree(rebuilt))


def tree_flips(t: KAryTree, k: int) -> list[tuple[TreeFlip, KAryTree]]:
    """All flips of a k-ary tree, skipping the identity re-attachments."""
    out: list[tuple[TreeFlip, KAryTree]] = []

    def walk(path: tuple[int, ...], nd: KAryTree) -> None:
        if nd.is_leaf:
            return
        for i, child in enumerate(nd.children):
            if not child.is_leaf:
                for j in range(k):
                    if j == i:
                        continue
                    f = TreeFlip(path, i, j)
                    out.append((f, apply_tree_flip(t, f)))
            walk(path + (i,), child)

    walk((), t)
    return out


def comb_sequence(t: KAryTree) -> list[TreeFlip]:
    """Flips that turn t into the left comb, strictly increasing the left
    path length each step.

    Tie-breaking: take the qualifying vertex nearest the root along the left
    path and its leftmost internal non-first child, flipping it into the
    first slot.
    """
    flips: list[TreeFlip] = []
    cur = t
    while True:
        chosen: tuple[tuple[int, ...], int] | None = None
        path: tuple[int, ...] = ()
        nd = cur
        while not nd.is_leaf and chosen is None:
            for i, child in enumerate(nd.children):
                if i > 0 and not child.is_leaf:
                    chosen = (path, i)
                    break
            path += (0,)
            nd = nd.children[0]
        if chosen is None:
            return flips  # every internal vertex lies on the left path
        f = TreeFlip(chosen[0], chosen[1], 0)
        flips.append(f)
        cur = apply_tree_flip(cur, f)


def proper_comb_sequence(t: KAryTree) -> list[TreeFlip]:
    """Flips connecting a proper binary tree to the left comb such that every
    intermediate tree is proper.

    Strategy: recursively comb both subtrees (a flip inside a subtree keeps
    its edge count, so outside properness conditions are untouched); if the
    left path did not grow, rotate at the root, inserting one extra flip at
    the right child when both relevant edge counts are 2 mod 4.
    """
    if not is_proper_tree(t):
        raise ParameterError("input tree is not proper")
    flips: list[TreeFlip] = []
    cur = t

    def emit(f: TreeFlip) -> None:
        nonlocal cur
        flips.append(f)
        cur = apply_tree_flip(cur, f)

    def solve(path: tuple[int, ...]) -> None:
        while True:
            sub = subtree_at(cur, path)
            n_sub = internal_count(sub)
            if left_path_length(sub) == n_sub:
                return
            l0 = left_path_length(sub)
            solve(path + (0,))
            solve(path + (1,))
            sub = subtree_at(cur, path)
            if left_path_length(sub) > l0:
                continue
            left, right = sub.children
            if edge_count(left) % 4 == 0 or edge_count(right.children[0]) % 4 == 0:
                emit(TreeFlip(path, 1, 0))
            else:
                emit(TreeFlip(path + (1,), 0, 1))
                emit(TreeFlip(path, 1, 0))

    solve(())
    return flips


def proper_flip_sequence(t: KAryTree, u: KAryTree) -> list[TreeFlip]:
    """A flip sequence from t to u along which every tree is proper, realized
    through the left comb as the common canonical form."""
    if internal_count(t) != internal_count(u):
        raise ParameterError("trees must have equal internal vertex counts")
    if not is_proper_tree(t) or not is_proper_tree(u):
        raise ParameterError("both trees must be proper")
    if t == u:
        return []
    down = proper_comb_sequence(t)
    up = [f.inverse() for f in reversed(proper_comb_sequence(u))]
    return down + up


def apply_flip_sequence(t: KAryTree, flips: Iterable[TreeFlip]) -> list[KAryTree]:
    """All intermediate trees of a flip sequence, starting after the first flip."""
    out = []
    cur = t
    for f in flips:
        cur = apply_tree_flip(cur, f)
        out.append(cur)
    return out


# ---------------------------------------------------------------------------
# flip graphs

@dataclass
class FlipGraph:
    """An undirected, loop-free graph whose nodes are partitions or trees and
    whose edges are single flips.  Nodes are densely indexed in insertion
    order; payloads stay available for labeling and inspection."""

    payloads: list
    index: dict
    adj: list[set[int]]

    @property
    def num_nodes(self) -> int:
        return len(self.payloads)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (i, j) for i, nbrs in enumerate(self.adj) for j in nbrs if i < j
        )


def _graph_from(payloads: list, neighbors: Callable) -> FlipGraph:
    index = {p: i for i, p in enumerate(payloads)}
    if len(index) != len(payloads):
        raise ParameterError("duplicate nodes in flip graph input")
    adj: list[set[int]] = [set() for _ in payloads]
    for i, p in enumerate(payloads):
        for q in neighbors(p):
            j = index.get(q)
            if j is not None and j != i:
                adj[i].add(j)
                adj[j].add(i)
    return FlipGraph(payloads=payloads, index=index, adj=adj)


def build_flip_graph(
    items: Iterable[Partition],
    k: int,
    restrict_proper: ColoredPolygon | None = None,
) -> FlipGraph:
    """Flip graph over the given k-partitions.

    With `restrict_proper` set, the node set is filtered to proper
    partitions, so edges connect proper partitions only.
    """
    payloads = list(items)
    sizes = {p.num_vertices for p in payloads}
    if len(sizes) > 1:
        raise ParameterError(f"mixed polygon sizes in flip graph input: {sorted(sizes)}")
    if restrict_proper is not None:
        payloads = [p for p in payloads if is_proper(p, restrict_proper, k)]
    return _graph_from(payloads, lambda p: (q for _, q in partition_flips(p, k)))


def tree_flip_graph(items: Iterable[KAryTree], k: int) -> FlipGraph:
    """Flip graph over the given k-ary trees."""
    payloads = list(items)
    return _graph_from(payloads, lambda t: (u for _, u in tree_flips(t, k)))


def components(g: FlipGraph) -> list[list[int]]:
    """Connected components as sorted index lists, ordered by smallest member."""
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in range(g.num_nodes):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            cur = queue.pop()
            for nxt in g.adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.append(nxt)
                    queue.append(nxt)
        out.append(sorted(comp))
    return out


def node_label(payload) -> str:
    """Canonical node label: chord list for partitions, preorder for trees."""
    if isinstance(payload, Partition):
        if not payload.chords:
            return "empty"
        return ";".join(f"{a}-{b}" for a, b in payload.chords)
    if isinstance(payload, KAryTree):
        return preorder(payload)
    return str(payload)


def to_dot(g: FlipGraph, by_index: bool = False, name: str = "flips") -> str:
    """DOT rendering with stable node and edge order."""
    lines = [f"graph {name} {{"]
    for i, p in enumerate(g.payloads):
        label = str(i) if by_index else node_label(p)
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in g.edges():
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
