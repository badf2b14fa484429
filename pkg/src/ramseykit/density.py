"""Exact rational 2-density calculus.

All values are fractions.Fraction; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError
from .graphs import Graph, adjacency_masks, as_graph, induced_subgraph

# Subgraph enumeration is exponential in the number of non-isolated vertices;
# this cap keeps max_two_density honest about what it can certify.
MAX_DENSITY_VERTICES = 16


def two_density(g) -> Fraction:
    """(e-1)/(v-2) on the graph as given; a bare edge has 2-density 1.

    Needs at least one edge.  Vertex count includes isolated vertices, so
    callers interested in subgraph densities pass isolated-free subgraphs.
    """
    g = as_graph(g)
    v, e = g.vertex_count, len(g.edges)
    if e == 0:
        raise ValueError("2-density needs at least one edge")
    if v == 2:
        return Fraction(1)
    return Fraction(e - 1, v - 2)


def _non_isolated(g: Graph) -> list[int]:
    masks = adjacency_masks(g)
    return [v for v in range(g.vertex_count) if masks[v]]


def _connected_subsets(adj: tuple[int, ...], n: int):
    """All connected vertex subsets (as bitmasks) with at least 2 vertices.

    Rooted growth: each subset is generated exactly once, rooted at its
    minimum vertex and extended only through neighbours not yet forbidden.
    """

    def grow(sub: int, ext: int, forbidden: int):
        if bin(sub).count("1") >= 2:
            yield sub
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            new_forbidden = forbidden | low | ext
            new_ext = ext | (adj[v] & ~new_forbidden)
            yield from grow(sub | low, new_ext, new_forbidden)
            forbidden |= low

    for root in range(n):
        base = 1 << root
        forbidden = (base << 1) - 1  # root and everything below it
        ext = adj[root] & ~forbidden
        yield from grow(base, ext, forbidden)


@dataclass(frozen=True)
class DensityReport:
    """d2 of the whole graph, m2 with an attaining subgraph, strict balance."""

    d2: Fraction
    m2: Fraction
    witness: Graph
    witness_vertices: frozenset[int]
    strictly_balanced: bool


def _subset_scan(g: Graph):
    """(best value, best subset bitmask, support labels, reindexed adj + edge masks)."""
    support = _non_isolated(g)
    if len(support) > MAX_DENSITY_VERTICES:
        raise BudgetExceededError(
            f"host has {len(support)} non-isolated vertices; "
            f"exact subgraph scan is capped at {MAX_DENSITY_VERTICES}"
        )
    index = {v: i for i, v in enumerate(support)}
    n = len(support)
    adj = [0] * n
    edge_masks = []
    for u, v in sorted(g.edges):
        iu, iv = index[u], index[v]
        adj[iu] |= 1 << iv
        adj[iv] |= 1 << iu
        edge_masks.append((1 << iu) | (1 << iv))
    adj = tuple(adj)

    best = Fraction(1)  # a single edge is always available
    best_sub = min(edge_masks)
    for sub in _connected_subsets(adj, n):
        vcount = bin(sub).count("1")
        ecount = sum(1 for m in edge_masks if m & sub == m)
        if ecount == 0:
            continue
        val = Fraction(1) if vcount == 2 else Fraction(ecount - 1, vcount - 2)
        if val > best:
            best = val
            best_sub = sub
    return best, best_sub, support, adj, edge_masks


def max_two_density(g) -> Fraction:
    """max over subgraphs H with >= 1 edge of two_density(H), exact.

    The maximum is attained on a connected induced subgraph without isolated
    vertices (a disjoint union never beats its best component, and on a fixed
    vertex set the induced subgraph maximizes the edge count), so only
    connected vertex subsets are scanned.  Hosts with more than
    MAX_DENSITY_VERTICES non-isolated vertices raise BudgetExceededError
    rather than approximating.
    """
    g = as_graph(g)
    if not g.edges:
        raise ValueError("max 2-density needs at least one edge")
    return _subset_scan(g)[0]


def density_report(g) -> DensityReport:
    g = as_graph(g)
    if not g.edges:
        raise ValueError("density report needs at least one edge")
    best, best_sub, support, adj, edge_masks = _subset_scan(g)
    witness_vertices = frozenset(support[i] for i in range(len(support)) if best_sub >> i & 1)
    witness = induced_subgraph(g, witness_vertices)
    # strict balance: the graph as given attains m2 and no proper subgraph
    # with an edge reaches it.  Isolated vertices lower the whole-graph value
    # below the support's, so any isolated vertex breaks balance outright.
    strict = g.vertex_count == len(support) and two_density(g) == best
    if strict and len(edge_masks) > 1:
        full = (1 << len(support)) - 1
        for sub in _connected_subsets(adj, len(support)):
            if sub == full:
                continue
            vcount = bin(sub).count("1")
            ecount = sum(1 for m in edge_masks if m & sub == m)
            if ecount == 0:
                continue
            val = Fraction(1) if vcount == 2 else Fraction(ecount - 1, vcount - 2)
            if val >= best:
                strict = False
                break
        # dropping edges on the full vertex set also yields proper subgraphs,
        # but that only lowers the edge count and hence the density; the
        # induced scan above already covers every candidate maximizer
    return DensityReport(two_density(g), best, witness, witness_vertices, strict)


def is_strictly_two_balanced(g) -> bool:
    """True when d2(g) strictly exceeds d2 of every proper subgraph with an
    edge.  Defined for graphs with at least 2 edges; isolated vertices
    disqualify since they lower d2(g) without touching any proper subgraph.
    """
    g = as_graph(g)
    if len(g.edges) < 2:
        raise ValueError("strict 2-balance needs at least 2 edges")
    return density_report(g).strictly_balanced
