"""Cross-validation suites: every closed form is checked against the
interval DP and exhaustive enumeration, bijections are round-tripped on
full instance sets, and the flip results are certified by graph search.

Each suite returns (ok, detail); the CLI prints one PASS/FAIL line per
suite and exits nonzero on any failure.
"""

from __future__ import annotations

from typing import Callable

from .bijections import (
    blocks_to_tri3,
    is_proper_tree,
    kpartition_to_superblocks,
    partition_to_tree,
    proper_tri_to_quad,
    quad_to_proper_tris,
    rooted_block_fiber,
    rooted_block_map,
    rooted_block_inverse,
    superblocks_to_kpartition,
    tree_to_partition,
    tri3_to_blocks,
)
from .counting import (
    a_formula,
    b_formula,
    c_formula,
    catalan_k,
    catalan_kd,
    count_kd_partitions,
    count_proper_dp,
    d_formula,
)
from .enumeration import (
    count_proper_brute,
    enumerate_k_partitions,
    enumerate_kary_trees,
    enumerate_kd_partitions,
    enumerate_proper,
)
from .families import SequenceSpec, count_family
from .flips import (
    build_flip_graph,
    comb_sequence,
    components,
    apply_tree_flip,
    proper_flip_sequence,
    tree_flip_graph,
)
from .model import Blocks, Cyclic, CyclicAdjusted3, is_proper, make_coloring
from .trees import internal_count, left_path_length


def _three_engines(spec: SequenceSpec, upto: int) -> tuple[bool, str]:
    for n in range(upto + 1):
        if spec.family == "d_blocks" and n < 1:
            continue
        want = count_family(spec, n, "formula")
        dp = count_family(spec, n, "dp")
        brute = count_family(spec, n, "brute")
        if not (want == dp == brute):
            return False, f"{spec.label()} at {n}: formula={want} dp={dp} brute={brute}"
    return True, f"{spec.label()} formula=dp=brute for indices 0..{upto}"


def suite_counts_a(max_n: int) -> tuple[bool, str]:
    return _three_engines(SequenceSpec("a"), max_n)


def suite_counts_b(max_n: int) -> tuple[bool, str]:
    return _three_engines(SequenceSpec("b"), max_n)


def suite_counts_c(max_n: int) -> tuple[bool, str]:
    return _three_engines(SequenceSpec("c", k=4), min(max_n, 14))


def suite_counts_blocks(max_n: int) -> tuple[bool, str]:
    top = max(max_n, 4)
    for m in range(1, top):
        for n in range(1, top - m + 1):
            want = d_formula(m, n)
            got = count_proper_dp(make_coloring(Blocks(m, n), m + n), 3)
            if want != got:
                return False, f"blocks ({m},{n}): formula={want} dp={got}"
    return True, f"block colorings agree for m+n <= {top}"


def suite_kd_theorem(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 4)
    for K in (3, 4, 5):
        for D in (2, 3, 4):
            for n in range(top + 1):
                nv = n * (K - 2) + D
                if nv < 2:
                    continue
                want = catalan_kd(n, K - 1, D - 1)
                dp = count_kd_partitions(nv, K, D)
                brute = sum(1 for _ in enumerate_kd_partitions(nv, K, D))
                if not (want == dp == brute):
                    return False, f"(K={K},D={D},n={n}): {want}/{dp}/{brute}"
    return True, f"rooted partition counts match the closed form for n <= {top}"


def suite_recursions(max_n: int) -> tuple[bool, str]:
    for n in range(1, 7):
        lhs = a_formula(2 * n + 1)
        rhs = sum(a_formula(2 * i) * a_formula(2 * n - 2 * i) for i in range(n + 1))
        if lhs != rhs:
            return False, f"odd split recursion fails at n={n}"
        lhs = a_formula(2 * n)
        rhs = sum(a_formula(i) * a_formula(2 * n - 1 - i) for i in range(2 * n))
        if lhs != rhs:
            return False, f"even split recursion fails at n={n}"
    for m in range(2, 9):
        for n in range(2, 9):
            if d_formula(m, n) != d_formula(m - 1, n) + d_formula(m, n - 1):
                return False, f"block recursion fails at ({m},{n})"
    return True, "splitting recursions hold on the tested ranges"


def suite_tree_partition_roundtrip(max_n: int) -> tuple[bool, str]:
    limit = min(max_n, 5)
    for k in (2, 3, 4):
        for n in range(limit + 1):
            nv = n * (k - 1) + 2
            for p in enumerate_k_partitions(nv, k + 1):
                t = partition_to_tree(p, k)
                if tree_to_partition(t, nv) != p:
                    return False, f"round trip failed for k={k}, {p}"
    return True, f"tree round trip exact for k in 2..4, up to {limit} regions"


def suite_fibers(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 4)
    for n in range(top + 1):
        nv = 2 * n + 2
        poly = make_coloring(Cyclic(2), nv)
        proper = set(enumerate_proper(poly, 3))
        seen = set()
        for q in enumerate_k_partitions(nv, 4):
            fib = quad_to_proper_tris(q, poly)
            if len(fib) != 2**n or seen & set(fib):
                return False, f"fiber law fails over {q}"
            for t in fib:
                if proper_tri_to_quad(t, poly) != q:
                    return False, f"forward map disagrees over {q}"
            seen.update(fib)
        if seen != proper:
            return False, f"fibers do not cover the proper set at n={n}"
    return True, f"2^n fiber law holds for n <= {top}"


def suite_pentagon_blocks(max_n: int) -> tuple[bool, str]:
    for N in (3, 6, 9):
        if N > max_n:
            break
        poly = make_coloring(CyclicAdjusted3(), N + 2)
        images = set()
        for p in enumerate_proper(poly, 3):
            q = tri3_to_blocks(p, poly)
            if blocks_to_tri3(q, poly) != p:
                return False, f"pentagon round trip fails at N={N}"
            images.add(q)
        if len(images) != b_formula(N):
            return False, f"pentagon map not injective at N={N}"
    return True, "pentagon gluing is a verified bijection on the tested sizes"


def suite_rooted_blocks(max_n: int) -> tuple[bool, str]:
    for N in (3, 5, 7):
        if N > max_n:
            break
        poly = make_coloring(Cyclic(2), N + 2)
        images = {}
        for p in enumerate_proper(poly, 3):
            q = rooted_block_map(p, poly, "a")
            images.setdefault(q, set()).add(p)
        n_quads = (N - 1) // 2
        for q, fib in images.items():
            if set(rooted_block_fiber(q, poly, "a")) != fib or len(fib) != 2**n_quads:
                return False, f'family "a" fiber fails at N={N}'
    for N in (4, 5, 7, 8):
        if N > max_n:
            break
        poly = make_coloring(CyclicAdjusted3(), N + 2)
        for p in enumerate_proper(poly, 3):
            q = rooted_block_map(p, poly, "b")
            if rooted_block_inverse(q, poly, "b") != p:
                return False, f'family "b" round trip fails at N={N}'
    return True, "rooted block maps verified on the tested sizes"


def suite_superblocks(max_n: int) -> tuple[bool, str]:
    cases = [(4, 8), (4, 10)]
    if max_n >= 16:
        cases.append((4, 16))
    for k, N in cases:
        poly = make_coloring(Cyclic(k), N + 2)
        images = set()
        count = 0
        for p in enumerate_proper(poly, k):
            q = kpartition_to_superblocks(p, poly, k)
            if superblocks_to_kpartition(q, poly, k) != p:
                return False, f"superblock round trip fails at k={k}, N={N}"
            images.add(q)
            count += 1
        if len(images) != count or count != c_formula(N, k):
            return False, f"superblock map not bijective at k={k}, N={N}"
    return True, "superblock gluing is a verified bijection on the tested sizes"


def suite_proper_trees(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 8)
    for N in range(top + 1):
        poly = make_coloring(Cyclic(2), N + 2)
        for p in enumerate_k_partitions(N + 2, 3):
            if is_proper_tree(partition_to_tree(p, 2)) != is_proper(p, poly, 3):
                return False, f"edge-count criterion disagrees at N={N}: {p}"
    return True, f"tree properness criterion matches the coloring for N <= {top}"


def suite_tree_connectivity(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 5)
    for k in (2, 3, 4):
        for n in range(1, top + 1):
            trees = list(enumerate_kary_trees(k, n))
            g = tree_flip_graph(trees, k)
            if len(components(g)) != 1:
                return False, f"flip graph disconnected for k={k}, n={n}"
            for t in trees:
                seq = comb_sequence(t)
                if len(seq) > n - left_path_length(t):
                    return False, f"comb sequence too long for k={k}, n={n}"
                cur = t
                lengths = [left_path_length(cur)]
                for f in seq:
                    cur = apply_tree_flip(cur, f)
                    lengths.append(left_path_length(cur))
                if internal_count(cur) != left_path_length(cur):
                    return False, f"comb sequence missed the comb for k={k}, n={n}"
                if any(b <= a for a, b in zip(lengths, lengths[1:])):
                    return False, f"left path not monotone for k={k}, n={n}"
    return True, f"tree flip graphs connected and comb reduction monotone for n <= {top}"


def suite_proper_flips(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 8)
    for N in range(2, top + 1):
        poly = make_coloring(Cyclic(2), N + 2)
        g = build_flip_graph(
            enumerate_k_partitions(N + 2, 3), 3, restrict_proper=poly
        )
        if len(components(g)) != 1:
            return False, f"proper flip graph disconnected at N={N}"
    N = min(top, 6)
    poly = make_coloring(Cyclic(2), N + 2)
    trees = [partition_to_tree(p, 2) for p in enumerate_proper(poly, 3)]
    for t in trees:
        for u in trees:
            seq = proper_flip_sequence(t, u)
            cur = t
            for f in seq:
                cur = apply_tree_flip(cur, f)
                if not is_proper_tree(cur):
                    return False, f"improper intermediate between {t} and {u}"
            if cur != u:
                return False, f"sequence does not reach the target at N={N}"
    return True, f"proper flip connectivity certified for N <= {top}"


def suite_disconnection(max_n: int) -> tuple[bool, str]:
    poly = make_coloring(Cyclic(4), 12)
    g = build_flip_graph(enumerate_k_partitions(12, 4), 4, restrict_proper=poly)
    comps = components(g)
    if g.num_nodes != 3 or g.num_edges != 0 or len(comps) != 3:
        return False, f"expected 3 isolated nodes, got {g.num_nodes} nodes, {g.num_edges} edges"
    return True, "proper 4-partitions of the 12-gon form 3 isolated nodes"


ALL_SUITES: dict[str, Callable[[int], tuple[bool, str]]] = {
    "counts-a": suite_counts_a,
    "counts-b": suite_counts_b,
    "counts-c": suite_counts_c,
    "counts-blocks": suite_counts_blocks,
    "kd-theorem": suite_kd_theorem,
    "recursions": suite_recursions,
    "tree-roundtrip": suite_tree_partition_roundtrip,
    "fibers": suite_fibers,
    "pentagon-blocks": suite_pentagon_blocks,
    "rooted-blocks": suite_rooted_blocks,
    "superblocks": suite_superblocks,
    "proper-trees": suite_proper_trees,
    "tree-connectivity": suite_tree_connectivity,
    "proper-flips": suite_proper_flips,
    "disconnection": suite_disconnection,
}


def run_suites(names: list[str], max_n: int) -> list[tuple[str, bool, str]]:
    out = []
    for name in names:
        fn = ALL_SUITES[name]
        ok, detail = fn(max_n)
        out.append((name, ok, detail))
    return out
