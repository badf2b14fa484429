"""Shared brute-force oracles.

Every oracle here recomputes a quantity from its definition, with no reuse
of the library's search strategies, so library results can be checked
against an independent path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ramseykit.graphs import Graph, as_graph


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERION_LINES
    except ImportError:
        return
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)


def brute_copies(host: Graph, template: Graph, induced: bool = False,
                 ordered: bool = False) -> set[tuple[frozenset, frozenset]]:
    """Distinct copy identities via raw permutation scan."""
    host = as_graph(host)
    template = as_graph(template)
    out = set()
    hedges = host.edges
    for image in itertools.permutations(range(host.vertex_count),
                                        template.vertex_count):
        if ordered and any(image[i] >= image[i + 1]
                           for i in range(len(image) - 1)):
            continue
        mapped = {
            tuple(sorted((image[a], image[b]))) for a, b in template.edges
        }
        if not mapped <= hedges:
            continue
        if induced:
            present = {
                e for e in itertools.combinations(sorted(image), 2)
                if e in hedges
            }
            if present != mapped:
                continue
        out.add((frozenset(image), frozenset(mapped)))
    return out


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest separating vertex set, by trying every subset."""
    g = as_graph(g)
    n = g.vertex_count
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1
    adj = [set() for _ in range(n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    def connected_without(cut: set[int]) -> bool:
        rest = [v for v in range(n) if v not in cut]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in cut and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(rest)

    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            if not connected_without(set(cut)):
                return size
    return n - 1


def brute_max_two_density(g: Graph) -> Fraction:
    """Max of (e-1)/(v-2) over every vertex subset, straight from the ratio."""
    g = as_graph(g)
    best = None
    for size in range(2, g.vertex_count + 1):
        for subset in itertools.combinations(range(g.vertex_count), size):
            inside = set(subset)
            e = sum(1 for u, v in g.edges if u in inside and v in inside)
            if e == 0:
                continue
            value = Fraction(1) if size == 2 else Fraction(e - 1, size - 2)
            if best is None or value > best:
                best = value
    assert best is not None, "oracle needs at least one edge"
    return best


def brute_arrows(host: Graph, template: Graph, r: int) -> bool:
    """Does every r-colouring contain a monochromatic copy?  Exhaustive."""
    host = as_graph(host)
    edges = sorted(host.edges)
    copies = [
        frozenset(edge_set) for _, edge_set in brute_copies(host, template)
    ]
    if not copies:
        return False
    if any(len(c) <= 1 for c in copies):
        return True
    index = {e: i for i, e in enumerate(edges)}
    copy_ix = [sorted(index[e] for e in c) for c in copies]
    # The first edge's colour is pinned: colour names are interchangeable.
    for tail in itertools.product(range(r), repeat=len(edges) - 1):
        colouring = (0,) + tail
        if not any(
            len({colouring[i] for i in c}) == 1 for c in copy_ix
        ):
            return False
    return True


def brute_forest_orderings(copy_sets) -> list[tuple[int, ...]]:
    """All valid orderings of (vertex set, edge set) copies, by definition.

    A placement is valid when the new copy meets the union of its
    predecessors in nothing, one vertex, or exactly the vertex set of one of
    its own edges that the union already covers.
    """
    good = []
    for perm in itertools.permutations(range(len(copy_sets))):
        union_v: frozenset = frozenset()
        union_e: frozenset = frozenset()
        ok = True
        for pos, i in enumerate(perm):
            vs, es = copy_sets[i]
            q = vs & union_v
            if pos and len(q) > 1 and not any(
                frozenset(e) == q for e in es & union_e
            ):
                ok = False
                break
            union_v |= vs
            union_e |= es
        if ok:
            good.append(perm)
    return good
