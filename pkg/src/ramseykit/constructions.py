"""Explicit objects: edge amalgams, kernel subgraphs, sum hypergraphs and
their derived graphs, balanced complete multipartite hosts.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceededError, CorrespondenceWarning
from .graphs import (CopyEmbedding, Edge, Graph, Hypergraph, _max_set_packing,
                     _normalise_edge, adjacency_masks, as_graph, degrees,
                     embedding_edges, embedding_vertices, enumerate_copies,
                     graph, hypergraph, linearity_conflict)

EDGE_TRANSITIVITY_VERTEX_CAP = 10


def _automorphism_with(g: Graph, src: tuple[int, int], dst: tuple[int, int]) -> bool:
    """Is there an automorphism of g mapping src[0]->dst[0], src[1]->dst[1]?"""
    n = g.vertex_count
    adj = adjacency_masks(g)
    deg = degrees(g)
    if deg[src[0]] != deg[dst[0]] or deg[src[1]] != deg[dst[1]]:
        return False
    image = [-1] * n
    used = [False] * n
    for s, d in zip(src, dst):
        if image[s] not in (-1, d) or (used[d] and image[s] != d):
            return False
        image[s] = d
        used[d] = True
    # place remaining vertices most-constrained-first relative to the seeds
    rest = [v for v in range(n) if image[v] == -1]
    rest.sort(key=lambda v: (-(bin(adj[v] & ((1 << src[0]) | (1 << src[1]))).count("1")), -deg[v], v))

    def extend(i: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for t in range(n):
                ti = image[t]
                if ti < 0 or t == v:
                    continue
                if (adj[v] >> t & 1) != (adj[w] >> ti & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                image[v] = -1
                used[w] = False
        return False

    return extend(0)


def is_strongly_edge_transitive(g) -> bool:
    """Whether the automorphism group is transitive on ordered adjacent pairs.

    Exhaustive search; hosts beyond EDGE_TRANSITIVITY_VERTEX_CAP vertices are
    rejected with BudgetExceededError rather than guessed at.
    """
    g = as_graph(g)
    if not g.edges:
        raise ValueError("edge transitivity needs at least one edge")
    if g.vertex_count > EDGE_TRANSITIVITY_VERTEX_CAP:
        raise BudgetExceededError(
            f"automorphism search capped at {EDGE_TRANSITIVITY_VERTEX_CAP} vertices"
        )
    base = min(g.edges)
    for u, v in sorted(g.edges):
        for arc in ((u, v), (v, u)):
            if arc == base:
                continue
            if not _automorphism_with(g, base, arc):
                return False
    return True


@dataclass(frozen=True)
class Amalgam:
    """m copies of a template glued along a single shared kernel edge."""

    graph: Graph
    kernel: Edge
    copy_count: int
    template: Graph
    copies: tuple[CopyEmbedding, ...]


def amalgam(template: Graph, m: int) -> Amalgam:
    """Glue m copies of the template along its lexicographically least edge.

    The template is expected to be strongly edge transitive, which makes the
    gluing edge immaterial; templates too large to verify produce a warning,
    not an error, since the gluing itself stays well-defined.
    """
    template = as_graph(template)
    if not template.edges:
        raise ValueError("amalgam needs a template with at least one edge")
    if m < 1:
        raise ValueError("amalgam needs at least one copy")
    try:
        if not is_strongly_edge_transitive(template):
            raise ValueError("template is not strongly edge transitive")
    except BudgetExceededError:
        warnings.warn(
            "template too large to verify strong edge transitivity; "
            "gluing along the lexicographically least edge",
            stacklevel=2,
        )
    a, b = min(template.edges)
    others = [v for v in range(template.vertex_count) if v not in (a, b)]
    block = len(others)
    edges: set[Edge] = set()
    copies = []
    for i in range(m):
        mapping = {a: 0, b: 1}
        for j, v in enumerate(others):
            mapping[v] = 2 + i * block + j
        images = tuple(mapping[v] for v in range(template.vertex_count))
        copies.append(CopyEmbedding(images))
        for u, v in template.edges:
            edges.add(_normalise_edge((mapping[u], mapping[v])))
    result = graph(m * block + 2, edges)
    vf, ef = template.vertex_count, len(template.edges)
    assert result.vertex_count == m * (vf - 2) + 2
    assert len(result.edges) == m * (ef - 1) + 1
    return Amalgam(result, (0, 1), m, template, tuple(copies))


@lru_cache(maxsize=256)
def _copies_by_edge(host: Graph, template: Graph):
    """Host edge -> tuple of (outside-vertex frozenset, representative images).

    One representative per outside-vertex set: copies through a fixed edge
    with equal vertex sets block exactly the same packings, so only one is
    needed for packing search.
    """
    by_edge: dict[Edge, dict[frozenset[int], tuple[int, ...]]] = {e: {} for e in host.edges}
    for emb in enumerate_copies(host, template, mode="subgraph"):
        verts = embedding_vertices(emb)
        for e in embedding_edges(template, emb):
            outside = verts - frozenset(e)
            prev = by_edge[e].get(outside)
            if prev is None or emb.images < prev:
                by_edge[e][outside] = emb.images
    return {
        e: tuple(sorted(d.items(), key=lambda kv: sorted(kv[0])))
        for e, d in by_edge.items()
    }


def amalgam_packing_at(host, template, edge: Edge, stop_at: int | None = None,
                       node_budget: int = 2_000_000) -> list[CopyEmbedding]:
    """A maximum family of template copies through ``edge`` that pairwise meet
    exactly in the edge's endpoints (an amalgam packing with kernel ``edge``).

    stop_at returns early with a family of that size when one exists; without
    it the family size is the certified maximum.  The search raises
    BudgetExceededError when the node budget runs out.
    """
    host = as_graph(host)
    template = as_graph(template)
    edge = _normalise_edge(edge)
    if edge not in host.edges:
        raise ValueError(f"edge {edge} is not in the host")
    entries = _copies_by_edge(host, template).get(edge, ())
    sets = [outside for outside, _ in entries]
    picked = _max_set_packing(sets, stop_at=stop_at, node_budget=node_budget)
    return [CopyEmbedding(entries[i][1]) for i in sorted(picked)]


def find_amalgam(host, template, m: int, node_budget: int = 2_000_000):
    """First host edge (lex order) carrying an (m, template) amalgam, with the
    witnessing copies; None when the host is amalgam-free.
    """
    host = as_graph(host)
    for e in sorted(host.edges):
        packing = amalgam_packing_at(host, template, e, stop_at=m, node_budget=node_budget)
        if len(packing) >= m:
            return e, packing
    return None


def kernel_subgraph(host, template, m: int, node_budget: int = 2_000_000) -> Graph:
    """Spanning subgraph keeping exactly the edges that are kernels of some
    (m, template) amalgam inside the host.
    """
    host = as_graph(host)
    template = as_graph(template)
    try:
        if not is_strongly_edge_transitive(template):
            raise ValueError("template is not strongly edge transitive")
    except BudgetExceededError:
        warnings.warn(
            "template too large to verify strong edge transitivity",
            stacklevel=2,
        )
    kept = [
        e for e in sorted(host.edges)
        if len(amalgam_packing_at(host, template, e, stop_at=m, node_budget=node_budget)) >= m
    ]
    return graph(host.vertex_count, kept)


def sum_hypergraph(n: int) -> Hypergraph:
    """3-uniform hypergraph on values 1..n whose edges are the triples of
    distinct values summing to n or 2n.  Stored 0-based with offset 1.

    Linear for every n (two triples sharing two values and lying in the same
    sum class coincide; across classes the sums differ by n, impossible for
    values below n); the divisibility condition n = 0 (mod 16) is what the
    downstream degree and parity facts rely on,  so other n are rejected.
    """
    if n < 16 or n % 16:
        raise ValueError("sum hypergraph needs n divisible by 16")
    edges = []
    for total in (n, 2 * n):
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                z = total - x - y
                if y < z <= n:
                    edges.append((x - 1, y - 1, z - 1))
    h = hypergraph(n, 3, edges, offset=1)
    conflict = linearity_conflict(h)
    assert conflict is None, f"sum construction produced a non-linear pair {conflict}"
    return h


def derived_graph(h: Hypergraph) -> Graph:
    """Drop each triple's middle vertex: hyperedge x < y < z becomes edge xz.

    For linear inputs this is one-to-one on edges; if two hyperedges collapse
    onto one pair a CorrespondenceWarning is raised and the pair kept once.
    """
    if h.uniformity != 3:
        raise ValueError("derived graph is defined for 3-uniform hypergraphs")
    edges = set()
    collisions = 0
    for e in sorted(h.edges):
        x, _, z = e
        pair = (x, z)
        if pair in edges:
            collisions += 1
        edges.add(pair)
    if collisions:
        warnings.warn(
            f"{collisions} hyperedge(s) collapsed onto an existing pair; "
            "edge correspondence is not one-to-one",
            CorrespondenceWarning,
            stacklevel=2,
        )
    return graph(h.vertex_count, edges)


def balanced_multipartite(parts: int, part_size: int) -> Graph:
    """Complete multipartite graph with ``parts`` classes of equal size."""
    if parts < 2 or part_size < 1:
        raise ValueError("need at least 2 classes of at least 1 vertex")
    edge_count = parts * (parts - 1) // 2 * part_size * part_size
    if edge_count < 2:
        raise ValueError("need at least 2 edges; a single edge is excluded")
    n = parts * part_size
    cls = [v // part_size for v in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if cls[u] != cls[v]]
    return graph(n, edges)


def multipartite_classes(g) -> list[list[int]] | None:
    """The colour classes if g is complete multipartite, else None.

    Complete multipartite means non-adjacency is an equivalence relation and
    all cross pairs are edges; classes come back sorted by least member.
    """
    g = as_graph(g)
    n = g.vertex_count
    adj = adjacency_masks(g)
    full = (1 << n) - 1
    assigned = [-1] * n
    classes: list[list[int]] = []
    for v in range(n):
        if assigned[v] >= 0:
            continue
        members_mask = ~adj[v] & full & ~((1 << v) - 1) | (1 << v)
        members = [w for w in range(v, n) if members_mask >> w & 1 and assigned[w] < 0]
        for w in members:
            assigned[w] = len(classes)
        classes.append(members)
    for cl in classes:
        for u, w in itertools.combinations(cl, 2):
            if adj[u] >> w & 1:
                return None
    for a, b in itertools.combinations(range(len(classes)), 2):
        for u in classes[a]:
            for w in classes[b]:
                if not adj[u] >> w & 1:
                    return None
    return classes


def is_balanced_complete_multipartite(g) -> bool:
    classes = multipartite_classes(g)
    return classes is not None and len({len(c) for c in classes}) == 1
