"""Constructive colourings: free-set partitions, the amalgam-based edge
colourings for multipartite templates and cycles, and the ordered edge split.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import (amalgam_packing_at, find_amalgam,
                            is_balanced_complete_multipartite)
from .graphs import (Edge, Graph, OrderedGraph, adjacency_masks, as_graph,
                     cycle_graph, disjoint_paths_threshold, edge_list,
                     embedding_vertices, neighbours)


@dataclass(frozen=True)
class SetMapping:
    """Per-element image sets over a ground set 0..ground_size-1, never
    containing the element itself."""

    ground_size: int
    images: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.images) != self.ground_size:
            raise ValueError("one image set per ground element required")
        for x, img in enumerate(self.images):
            if x in img:
                raise ValueError(f"element {x} lies in its own image")
            for y in img:
                if not 0 <= y < self.ground_size:
                    raise ValueError(f"image of {x} leaves the ground set")


def set_mapping(images) -> SetMapping:
    images = [frozenset(i) for i in images]
    return SetMapping(len(images), tuple(images))


def free_partition(f: SetMapping, k: int) -> list[tuple[int, ...]]:
    """Split the ground set into at most 2k+1 classes, each free: no member
    lies in the image of another member (nor of itself).

    Requires every image to have at most k elements.  The conflict graph
    (x ~ y iff one lies in the other's image) has at most k·n edges, so it is
    2k-degenerate; greedy colouring along a smallest-last order then needs at
    most 2k+1 colours.
    """
    n = f.ground_size
    if k < 0:
        raise ValueError("k must be non-negative")
    for x, img in enumerate(f.images):
        if len(img) > k:
            raise ValueError(f"image of {x} has {len(img)} > k = {k} elements")
    conflict: list[set[int]] = [set() for _ in range(n)]
    for x, img in enumerate(f.images):
        for y in img:
            conflict[x].add(y)
            conflict[y].add(x)
    # smallest-last: repeatedly remove a minimum-degree element
    degree = [len(c) for c in conflict]
    removed = [False] * n
    order = []
    live = set(range(n))
    for _ in range(n):
        v = min(live, key=lambda x: (degree[x], x))
        order.append(v)
        live.discard(v)
        removed[v] = True
        for w in conflict[v]:
            if not removed[w]:
                degree[w] -= 1
    colour = [-1] * n
    for v in reversed(order):
        taken = {colour[w] for w in conflict[v] if colour[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    class_count = max(colour, default=-1) + 1
    assert class_count <= 2 * k + 1
    classes = [[] for _ in range(class_count)]
    for x, c in enumerate(colour):
        classes[c].append(x)
    out = [tuple(sorted(cl)) for cl in classes]
    for cl in out:
        members = set(cl)
        for x in cl:
            assert not (f.images[x] & members), "class is not free"
    return out


@dataclass(frozen=True)
class EdgeColouring:
    """A total colouring of a host's edges with colours 0..colour_count-1."""

    host: Graph
    colour_of: dict[Edge, int] = field(hash=False)
    colour_count: int = 1
    meta: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        if set(self.colour_of) != self.host.edges:
            raise ValueError("colouring must cover exactly the host's edges")
        for e, c in self.colour_of.items():
            if not 0 <= c < self.colour_count:
                raise ValueError(f"edge {e} has colour {c} outside 0..{self.colour_count - 1}")


def _colouring_from_classes(host: Graph, classes, meta: dict) -> EdgeColouring:
    edges = edge_list(host)
    colour_of = {}
    for c, cl in enumerate(classes):
        for idx in cl:
            colour_of[edges[idx]] = c
    return EdgeColouring(host, colour_of, max(len(classes), 1), meta)


def multipartite_free_colouring(host, template, m: int) -> EdgeColouring:
    """Edge colouring of a host free of (m, template) amalgams such that no
    template copy is monochromatic, with at most 4·m·v(template) colours.

    The template must be balanced complete multipartite with at least two
    edges.  Edges in no template copy map to the empty image; every other
    edge e maps to all host edges joining a vertex of a certified maximum
    amalgam packing through e to an endpoint of e.  Classes of the induced
    free partition then cut every copy, because a monochromatic copy would
    extend the packing at its busiest edge.
    """
    host = as_graph(host)
    template = as_graph(template)
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(template.edges) < 2 or not is_balanced_complete_multipartite(template):
        raise ValueError("template must be balanced complete multipartite with >= 2 edges")
    hit = find_amalgam(host, template, m)
    if hit is not None:
        raise ValueError(f"host contains a ({m}, template) amalgam with kernel {hit[0]}")

    edges = edge_list(host)
    index = {e: i for i, e in enumerate(edges)}
    adj = adjacency_masks(host)
    images = []
    max_packing = 0
    for e in edges:
        packing = amalgam_packing_at(host, template, e)
        if not packing:
            images.append(frozenset())
            continue
        max_packing = max(max_packing, len(packing))
        x, y = e
        zs = set()
        for emb in packing:
            zs |= embedding_vertices(emb)
        zs -= {x, y}
        img = set()
        for z in zs:
            for end in (x, y):
                if adj[z] >> end & 1:
                    img.add(index[tuple(sorted((z, end)))])
        img.discard(index[e])
        images.append(frozenset(img))
    k = max((len(i) for i in images), default=0)
    classes = free_partition(SetMapping(len(edges), tuple(images)), k)
    bound = 4 * m * template.vertex_count
    assert len(classes) <= bound, f"{len(classes)} classes exceed the 4·m·v bound {bound}"
    meta = {"k": k, "max_amalgam_packing": max_packing, "colour_bound": bound}
    return _colouring_from_classes(host, classes, meta)


def cycle_free_colouring(host, length: int, m: int) -> EdgeColouring:
    """Edge colouring of a host free of (m, C_length) amalgams with no
    monochromatic cycle of the given length.

    Around every edge xy a bounded vertex set is grown in stages: the kernel
    amalgam packing's vertices first, then, for every vertex pair inside and
    every path length 2..length-1, the interior vertices of a certified
    maximum family of internally disjoint paths — unless that family would
    exceed 2·length·m paths, in which case the pair contributes nothing.  The
    image of xy is every other host edge spanned inside the grown set; a free
    partition of that mapping colours the edges.
    """
    host = as_graph(host)
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if m < 1:
        raise ValueError("m must be at least 1")
    template = cycle_graph(length)
    hit = find_amalgam(host, template, m)
    if hit is not None:
        raise ValueError(f"host contains a ({m}, C_{length}) amalgam with kernel {hit[0]}")

    edges = edge_list(host)
    index = {e: i for i, e in enumerate(edges)}
    bound = 2 * length * m
    path_cache: dict[tuple[int, int, int], frozenset[int]] = {}

    def interiors(u: int, v: int, k: int) -> frozenset[int]:
        key = (u, v, k)
        got = path_cache.get(key)
        if got is None:
            exceeds, family = disjoint_paths_threshold(host, u, v, k, bound)
            got = frozenset() if exceeds else frozenset(
                w for path in family for w in path[1:-1]
            )
            path_cache[key] = got
        return got

    images = []
    regions: dict[Edge, frozenset[int]] = {}
    max_region = 0
    max_kernel_packing = 0
    for e in edges:
        packing = amalgam_packing_at(host, template, e)
        max_kernel_packing = max(max_kernel_packing, len(packing))
        region: set[int] = set(e)
        for emb in packing:
            region |= embedding_vertices(emb)
        for _ in range(1, length):
            grown = set(region)
            for u, v in itertools.combinations(sorted(region), 2):
                for k in range(2, length):
                    grown |= interiors(u, v, k)
            if grown == region:
                break
            region = grown
        regions[e] = frozenset(region)
        max_region = max(max_region, len(region))
        img = {
            index[d] for d in edges
            if d != e and d[0] in region and d[1] in region
        }
        images.append(frozenset(img))
    k_val = max((len(i) for i in images), default=0)
    classes = free_partition(SetMapping(len(edges), tuple(images)), k_val)
    meta = {
        "k": k_val,
        "max_region_size": max_region,
        "max_kernel_packing": max_kernel_packing,
        "colour_count": len(classes),
        "regions": regions,
    }
    return _colouring_from_classes(host, classes, meta)


@dataclass(frozen=True)
class PartiteSplit:
    """A vertex partition with the cross edges split by order direction."""

    classes: tuple[tuple[int, ...], ...]
    e_fwd: frozenset[Edge]
    e_bwd: frozenset[Edge]


def partite_split(host: OrderedGraph, parts: int, seed: int = 0) -> PartiteSplit:
    """Partition the vertices into ``parts`` classes keeping at least a
    (1 - 1/parts) fraction of the edges across classes, then split the cross
    edges by whether the order-smaller endpoint sits in the lower-indexed
    class (e_fwd) or the higher one (e_bwd).

    Neither side can contain a monotone path on parts+1 vertices: along such
    a path the class indices would have to move strictly in one direction.
    A seeded random start is improved by first-improvement local moves until
    every vertex has at most deg/parts neighbours in its own class, which
    forces the edge bound.
    """
    if not isinstance(host, OrderedGraph):
        raise TypeError("partite_split needs an ordered host")
    g = host.graph
    if parts < 1:
        raise ValueError("parts must be at least 1")
    n = g.vertex_count
    rng = random.Random(seed)
    cls = [rng.randrange(parts) for _ in range(n)]
    if parts > 1:
        nbr = [neighbours(g, v) for v in range(n)]
        improved = True
        while improved:
            improved = False
            for v in range(n):
                counts = [0] * parts
                for w in nbr[v]:
                    counts[cls[w]] += 1
                here = counts[cls[v]]
                best = min(range(parts), key=lambda c: (counts[c], c))
                if counts[best] < here:
                    cls[v] = best
                    improved = True
    classes = tuple(
        tuple(v for v in range(n) if cls[v] == c) for c in range(parts)
    )
    fwd, bwd = set(), set()
    for u, v in sorted(g.edges):  # u < v in host order
        if cls[u] < cls[v]:
            fwd.add((u, v))
        elif cls[u] > cls[v]:
            bwd.add((u, v))
    cross = len(fwd) + len(bwd)
    assert Fraction(cross) >= (1 - Fraction(1, parts)) * len(g.edges)
    return PartiteSplit(classes, frozenset(fwd), frozenset(bwd))
