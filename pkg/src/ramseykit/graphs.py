"""Graphs, uniform hypergraphs, copy enumeration and connectivity primitives.

Vertices are dense integers 0..n-1 throughout; the integer order doubles as
the vertex order wherever an operation is order-aware.  Copies of a template
in a host are identified by their image subgraph: two embeddings with the
same vertex-image set and the same edge-image set count as one copy.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceededError

Edge = tuple[int, int]


def _normalise_edge(e) -> Edge:
    u, v = e
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = frozenset(_normalise_edge(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")


@dataclass(frozen=True)
class OrderedGraph:
    """A graph whose vertex order (the integer order) is meaningful."""

    graph: Graph


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices 0..vertex_count-1.

    ``offset`` records a label shift for constructions whose arithmetic lives
    on shifted labels (vertex i stands for the value i + offset).  Linearity
    (every two edges share at most one vertex) is not enforced here; callers
    that need it check ``is_linear``.
    """

    vertex_count: int
    uniformity: int
    edges: frozenset[tuple[int, ...]]
    offset: int = 0

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if self.uniformity < 2:
            raise ValueError("uniformity must be at least 2")
        normalised = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(set(t)) != self.uniformity:
                raise ValueError(f"edge {e} is not a {self.uniformity}-set")
            if t[0] < 0 or t[-1] >= self.vertex_count:
                raise ValueError(f"edge {e} out of range for {self.vertex_count} vertices")
            normalised.add(t)
        object.__setattr__(self, "edges", frozenset(normalised))


def graph(vertex_count: int, edges) -> Graph:
    return Graph(vertex_count, frozenset(tuple(e) for e in edges))


def hypergraph(vertex_count: int, uniformity: int, edges, offset: int = 0) -> Hypergraph:
    return Hypergraph(vertex_count, uniformity, frozenset(tuple(e) for e in edges), offset)


def as_graph(g) -> Graph:
    """Accept a Graph or an OrderedGraph and return the underlying Graph."""
    return g.graph if isinstance(g, OrderedGraph) else g


def complete_graph(n: int) -> Graph:
    return graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


@lru_cache(maxsize=None)
def edge_list(g: Graph) -> tuple[Edge, ...]:
    return tuple(sorted(g.edges))


@lru_cache(maxsize=None)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


@lru_cache(maxsize=None)
def degrees(g: Graph) -> tuple[int, ...]:
    deg = [0] * g.vertex_count
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg)


def neighbours(g: Graph, v: int) -> list[int]:
    mask = adjacency_masks(g)[v]
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@lru_cache(maxsize=None)
def incidence(h: Hypergraph) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(edges as a sorted tuple, per-vertex tuple of incident edge indices)."""
    edges = tuple(sorted(h.edges))
    inc: list[list[int]] = [[] for _ in range(h.vertex_count)]
    for i, e in enumerate(edges):
        for v in e:
            inc[v].append(i)
    return edges, tuple(tuple(ids) for ids in inc)


def hyperedge_list(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    return incidence(h)[0]


def is_linear(h: Hypergraph) -> bool:
    return linearity_conflict(h) is None


def linearity_conflict(h: Hypergraph):
    """Return a pair of edges sharing >= 2 vertices, or None if linear."""
    seen: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in sorted(h.edges):
        for pair in itertools.combinations(e, 2):
            if pair in seen:
                return seen[pair], e
            seen[pair] = e
    return None


@dataclass(frozen=True)
class CopyEmbedding:
    """An injective embedding of a template; images[i] hosts template vertex i."""

    images: tuple[int, ...]
    mode: str = "subgraph"
    ordered: bool = False


def embedding_vertices(emb: CopyEmbedding) -> frozenset[int]:
    return frozenset(emb.images)


def embedding_edges(template, emb: CopyEmbedding) -> frozenset:
    img = emb.images
    if isinstance(template, Hypergraph):
        return frozenset(tuple(sorted(img[v] for v in e)) for e in template.edges)
    return frozenset(_normalise_edge((img[u], img[v])) for u, v in template.edges)


def validate_embedding(host, template, emb: CopyEmbedding) -> None:
    """Raise ValueError unless emb is a valid copy of template in host."""
    host = as_graph(host) if isinstance(host, (Graph, OrderedGraph)) else host
    img = emb.images
    if len(img) != template.vertex_count:
        raise ValueError("embedding has wrong arity")
    if len(set(img)) != len(img):
        raise ValueError("embedding is not injective")
    if any(not (0 <= v < host.vertex_count) for v in img):
        raise ValueError("embedding image out of range")
    mapped = embedding_edges(template, emb)
    if not mapped <= host.edges:
        raise ValueError("embedding does not map edges to edges")
    if emb.mode == "induced":
        image = set(img)
        if isinstance(host, Hypergraph):
            for e in host.edges:
                if set(e) <= image and e not in mapped:
                    raise ValueError("embedding is not induced")
        else:
            for e in host.edges:
                if e[0] in image and e[1] in image and e not in mapped:
                    raise ValueError("embedding is not induced")
    elif emb.mode != "subgraph":
        raise ValueError(f"unknown embedding mode {emb.mode!r}")
    if emb.ordered:
        for a, b in itertools.combinations(range(len(img)), 2):
            if img[a] > img[b]:
                raise ValueError("embedding does not preserve the vertex order")


def _search_order(template: Graph) -> list[int]:
    # Most-constrained-first: start at a max-degree vertex, then prefer
    # vertices with the most already-placed neighbours.
    n = template.vertex_count
    deg = degrees(template)
    adj = adjacency_masks(template)
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = (bin(adj[v] & placed).count("1"), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _graph_embeddings(host: Graph, template: Graph, mode: str, ordered: bool):
    """Yield every embedding (as an image tuple), without image deduplication."""
    hn, tn = host.vertex_count, template.vertex_count
    if tn > hn:
        return
    if tn == 0:
        yield ()
        return
    hadj = adjacency_masks(host)
    hdeg = degrees(host)
    tdeg = degrees(template)
    tadj = adjacency_masks(template)
    order = list(range(tn)) if ordered else _search_order(template)
    pos = {t: i for i, t in enumerate(order)}
    earlier_adj = []
    earlier_nonadj = []
    for i, t in enumerate(order):
        earlier_adj.append([j for j in range(i) if tadj[t] >> order[j] & 1])
        earlier_nonadj.append([j for j in range(i) if not tadj[t] >> order[j] & 1])
    induced = mode == "induced"
    assignment = [0] * tn
    used = 0

    def rec(i: int):
        nonlocal used
        if i == tn:
            images = [0] * tn
            for j, t in enumerate(order):
                images[t] = assignment[j]
            yield tuple(images)
            return
        t = order[i]
        adj_idx = earlier_adj[i]
        if adj_idx:
            first = hadj[assignment[adj_idx[0]]]
            cands = []
            m = first
            while m:
                low = m & -m
                cands.append(low.bit_length() - 1)
                m ^= low
        else:
            cands = range(hn)
        need = tdeg[t]
        for v in cands:
            if used >> v & 1 or hdeg[v] < need:
                continue
            ok = True
            for j in adj_idx:
                if not hadj[v] >> assignment[j] & 1:
                    ok = False
                    break
            if not ok:
                continue
            if induced:
                for j in earlier_nonadj[i]:
                    if hadj[v] >> assignment[j] & 1:
                        ok = False
                        break
                if not ok:
                    continue
            if ordered:
                for j in range(i):
                    if (order[j] < t) != (assignment[j] < v):
                        ok = False
                        break
                if not ok:
                    continue
            assignment[i] = v
            used |= 1 << v
            yield from rec(i + 1)
            used &= ~(1 << v)

    yield from rec(0)


def _hyper_search_order(template: Hypergraph) -> list[int]:
    edges, inc = incidence(template)
    n = template.vertex_count
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if v in placed:
                continue
            shared = sum(1 for ei in inc[v] if any(w in placed for w in edges[ei]))
            key = (shared, len(inc[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def _hyper_embeddings(host: Hypergraph, template: Hypergraph, mode: str, ordered: bool):
    hn, tn = host.vertex_count, template.vertex_count
    if tn > hn:
        return
    if tn == 0:
        yield ()
        return
    hedges, hinc = incidence(host)
    tedges, tinc = incidence(template)
    host_edge_set = host.edges
    hdeg = [len(ids) for ids in hinc]
    tdeg = [len(ids) for ids in tinc]
    covertex: list[set[int]] = [set() for _ in range(hn)]
    for e in hedges:
        for v in e:
            covertex[v].update(e)
    order = list(range(tn)) if ordered else _hyper_search_order(template)
    pos = {t: i for i, t in enumerate(order)}
    induced = mode == "induced"
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def candidates(t: int):
        forced = None
        loose: set[int] | None = None
        for ei in tinc[t]:
            others = [w for w in tedges[ei] if w != t]
            if all(w in assignment for w in others):
                comp = set()
                base = frozenset(assignment[w] for w in others)
                for hi in hinc[assignment[others[0]]]:
                    he = hedges[hi]
                    rest = set(he) - base
                    if len(rest) == 1 and base <= set(he):
                        comp.add(next(iter(rest)))
                forced = comp if forced is None else forced & comp
            elif any(w in assignment for w in others) and loose is None:
                anchor = next(w for w in others if w in assignment)
                loose = covertex[assignment[anchor]]
        if forced is not None:
            return sorted(forced)
        if loose is not None:
            return sorted(loose)
        return range(hn)

    def rec(i: int):
        if i == tn:
            images = tuple(assignment[t] for t in range(tn))
            if induced:
                image = set(images)
                mapped = {tuple(sorted(images[v] for v in e)) for e in tedges}
                for he in hedges:
                    if set(he) <= image and he not in mapped:
                        return
            yield images
            return
        t = order[i]
        for v in candidates(t):
            if v in used or hdeg[v] < tdeg[t]:
                continue
            ok = True
            if ordered:
                for t2, w in assignment.items():
                    if (t2 < t) != (w < v):
                        ok = False
                        break
                if not ok:
                    continue
            assignment[t] = v
            used.add(v)
            for ei in tinc[t]:
                e = tedges[ei]
                if all(w in assignment for w in e):
                    if tuple(sorted(assignment[w] for w in e)) not in host_edge_set:
                        ok = False
                        break
            if ok:
                yield from rec(i + 1)
            del assignment[t]
            used.discard(v)

    yield from rec(0)


def enumerate_copies(host, template, mode: str = "subgraph", ordered: bool = False) -> list[CopyEmbedding]:
    """All copies of template in host, one representative embedding per image.

    mode "subgraph" admits any edge-preserving injection; "induced"
    additionally requires non-edges to land on non-edges.  ordered=True keeps
    only embeddings that are strictly increasing on vertex labels.  The result
    is sorted canonically and deterministic.
    """
    if mode not in ("subgraph", "induced"):
        raise ValueError(f"unknown mode {mode!r}")
    host = as_graph(host) if isinstance(host, (Graph, OrderedGraph)) else host
    template = as_graph(template) if isinstance(template, (Graph, OrderedGraph)) else template
    if isinstance(host, Hypergraph) != isinstance(template, Hypergraph):
        raise TypeError("host and template must be of the same kind")
    if isinstance(host, Hypergraph):
        if host.uniformity != template.uniformity:
            raise ValueError("host and template must have equal uniformity")
        raw = _hyper_embeddings(host, template, mode, ordered)
        edge_of = lambda images: frozenset(
            tuple(sorted(images[v] for v in e)) for e in template.edges
        )
    else:
        raw = _graph_embeddings(host, template, mode, ordered)
        edge_of = lambda images: frozenset(
            _normalise_edge((images[u], images[v])) for u, v in template.edges
        )
    best: dict[tuple[frozenset[int], frozenset], tuple[int, ...]] = {}
    for images in raw:
        key = (frozenset(images), edge_of(images))
        prev = best.get(key)
        if prev is None or images < prev:
            best[key] = images
    out = [
        (tuple(sorted(key[0])), tuple(sorted(key[1])), images)
        for key, images in best.items()
    ]
    out.sort()
    return [CopyEmbedding(images, mode, ordered) for _, _, images in out]


def is_connected(obj) -> bool:
    """Connectivity; graphs with at most one vertex count as connected."""
    if isinstance(obj, (Graph, OrderedGraph)):
        g = as_graph(obj)
        n = g.vertex_count
        if n <= 1:
            return True
        adj = adjacency_masks(g)
        seen = 1
        queue = [0]
        while queue:
            v = queue.pop()
            m = adj[v] & ~seen
            while m:
                low = m & -m
                seen |= low
                queue.append(low.bit_length() - 1)
                m ^= low
        return seen == (1 << n) - 1
    h: Hypergraph = obj
    n = h.vertex_count
    if n <= 1:
        return True
    return _hyper_component_from(h, 0, frozenset()) == n


def _hyper_component_from(h: Hypergraph, start: int, removed: frozenset[int]) -> int:
    """Size of the connected component of ``start`` in h minus ``removed``.

    Edges meeting ``removed`` are discarded entirely (induced subhypergraph).
    """
    edges, inc = incidence(h)
    dead = set()
    for v in removed:
        dead.update(inc[v])
    seen = {start}
    queue = deque([start])
    edge_done = [False] * len(edges)
    while queue:
        v = queue.popleft()
        for ei in inc[v]:
            if edge_done[ei] or ei in dead:
                continue
            edge_done[ei] = True
            for w in edges[ei]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return len(seen)


def _hyper_connected_without(h: Hypergraph, removed: frozenset[int]) -> bool:
    remaining = h.vertex_count - len(removed)
    if remaining <= 1:
        return True
    start = next(v for v in range(h.vertex_count) if v not in removed)
    return _hyper_component_from(h, start, removed) == remaining


class _Dinic:
    """Unit-capacity max-flow, specialised for internally-disjoint paths."""

    def __init__(self, node_count: int):
        self.n = node_count
        self.head: list[list[int]] = [[] for _ in range(node_count)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for ei in self.head[v]:
                    if self.cap[ei] > 0 and level[self.to[ei]] < 0:
                        level[self.to[ei]] = level[v] + 1
                        queue.append(self.to[ei])
            if level[t] < 0:
                break
            it = [0] * self.n

            def dfs(v: int, pushed: int) -> int:
                if v == t:
                    return pushed
                while it[v] < len(self.head[v]):
                    ei = self.head[v][it[v]]
                    w = self.to[ei]
                    if self.cap[ei] > 0 and level[w] == level[v] + 1:
                        got = dfs(w, min(pushed, self.cap[ei]))
                        if got:
                            self.cap[ei] -= got
                            self.cap[ei ^ 1] += got
                            return got
                    it[v] += 1
                return 0

            while flow < limit:
                pushed = dfs(s, limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow


def _local_vertex_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Max internally-disjoint s-t paths for non-adjacent s, t, up to cap."""
    n = g.vertex_count
    net = _Dinic(2 * n)
    for v in range(n):
        if v == s or v == t:
            net.add(2 * v, 2 * v + 1, cap)
        else:
            net.add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        net.add(2 * u + 1, 2 * v, cap)
        net.add(2 * v + 1, 2 * u, cap)
    return net.max_flow(2 * s + 1, 2 * t, cap)


def vertex_connectivity(g, cap: int | None = None) -> int:
    """Minimum number of vertices whose removal disconnects g (n-1 for K_n).

    Computed through internally-disjoint paths: the minimum over the relevant
    vertex pairs of the maximum number of such paths.  With ``cap`` the flows
    stop early and the result is min(connectivity, cap), which answers
    "at least cap?" cheaply on large hosts.
    """
    g = as_graph(g)
    n = g.vertex_count
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1 if cap is None else min(n - 1, cap)
    deg = degrees(g)
    v0 = min(range(n), key=lambda v: (deg[v], v))
    best = deg[v0] if cap is None else min(deg[v0], cap)
    adj = adjacency_masks(g)
    for w in range(n):
        if w != v0 and not adj[v0] >> w & 1 and best > 0:
            best = min(best, _local_vertex_connectivity(g, v0, w, best))
    nbrs = neighbours(g, v0)
    for x, y in itertools.combinations(nbrs, 2):
        if not adj[x] >> y & 1 and best > 0:
            best = min(best, _local_vertex_connectivity(g, x, y, best))
    return best


@dataclass(frozen=True)
class DisjointPaths:
    """A collection of u-v paths of one fixed length, pairwise internally disjoint.

    ``exact`` records whether the collection is a certified maximum or only a
    greedy lower bound (large instances fall back to greedy search).
    """

    paths: tuple[tuple[int, ...], ...]
    exact: bool


def _paths_by_interior(g: Graph, u: int, v: int, length: int) -> dict[frozenset[int], tuple[int, ...]]:
    """Lexicographically-least u-v path of exactly ``length`` edges per interior set."""
    adj = adjacency_masks(g)
    found: dict[frozenset[int], tuple[int, ...]] = {}
    stack = [u]
    used = {u, v}

    def rec():
        here = stack[-1]
        if len(stack) == length:
            if adj[here] >> v & 1:
                interior = frozenset(stack[1:])
                if interior not in found:
                    found[interior] = tuple(stack) + (v,)
            return
        for w in sorted(neighbours(g, here)):
            if w in used:
                continue
            used.add(w)
            stack.append(w)
            rec()
            stack.pop()
            used.discard(w)

    if length == 1:
        if adj[u] >> v & 1:
            found[frozenset()] = (u, v)
        return found
    rec()
    return found


def _max_set_packing(sets: list[frozenset[int]], stop_at: int | None = None,
                     node_budget: int = 2_000_000) -> list[int]:
    """Indices of a maximum pairwise-disjoint subfamily (early exit at stop_at)."""
    order = sorted(range(len(sets)), key=lambda i: sorted(sets[i]))
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def rec(i: int, blocked: frozenset[int]) -> bool:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError("set-packing search budget exhausted", consumed=nodes)
        if len(chosen) > len(best):
            best = chosen.copy()
            if stop_at is not None and len(best) >= stop_at:
                return True
        if i == len(order) or len(chosen) + len(order) - i <= len(best):
            return False
        idx = order[i]
        if not (sets[idx] & blocked):
            chosen.append(idx)
            if rec(i + 1, blocked | sets[idx]):
                return True
            chosen.pop()
        return rec(i + 1, blocked)

    rec(0, frozenset())
    return best


def max_disjoint_paths(g, u: int, v: int, length: int,
                       exact_length_cap: int = 4, exact_vertex_cap: int = 64) -> DisjointPaths:
    """A maximum family of u-v paths of exactly ``length`` edges, pairwise
    sharing no internal vertex.

    Exact (certified) for length <= exact_length_cap on hosts with at most
    exact_vertex_cap vertices; beyond that a greedy family with local
    improvement is returned and flagged exact=False.
    """
    g = as_graph(g)
    n = g.vertex_count
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise ValueError("endpoints must be distinct vertices of the host")
    if length < 1:
        raise ValueError("length must be at least 1")
    interiors = _paths_by_interior(g, u, v, length)
    keys = sorted(interiors, key=sorted)
    if length <= exact_length_cap and n <= exact_vertex_cap:
        picked = _max_set_packing([keys[i] for i in range(len(keys))])
        paths = tuple(sorted(interiors[keys[i]] for i in picked))
        return DisjointPaths(paths, True)
    chosen: list[frozenset[int]] = []
    blocked: set[int] = set()
    for k in keys:
        if not (k & blocked):
            chosen.append(k)
            blocked.update(k)
    improved = True
    while improved:
        improved = False
        for out in list(chosen):
            rest = set().union(*(c for c in chosen if c is not out)) if len(chosen) > 1 else set()
            gains = [k for k in keys if k not in chosen and not (k & rest)]
            for a, b in itertools.combinations(gains, 2):
                if not (a & b):
                    chosen.remove(out)
                    chosen.extend([a, b])
                    blocked = set().union(*chosen) if chosen else set()
                    improved = True
                    break
            if improved:
                break
    paths = tuple(sorted(interiors[k] for k in chosen))
    return DisjointPaths(paths, False)


def disjoint_paths_threshold(g, u: int, v: int, length: int, bound: int):
    """Decide whether more than ``bound`` internally-disjoint u-v paths of the
    given length exist.

    Returns (exceeds, family): when exceeds is True the family witnesses
    bound+1 disjoint paths; otherwise the family is a certified maximum (hence
    inclusion-maximal) collection of size <= bound.
    """
    g = as_graph(g)
    interiors = _paths_by_interior(g, u, v, length)
    keys = sorted(interiors, key=sorted)
    picked = _max_set_packing(keys, stop_at=bound + 1)
    family = tuple(sorted(interiors[keys[i]] for i in picked))
    return len(picked) > bound, family


@dataclass(frozen=True)
class InseparabilityReport:
    ok: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def is_ev_inseparable(h: Hypergraph) -> InseparabilityReport:
    """Edge-and-vertex inseparability of a linear uniform hypergraph.

    Requires: connected with at least 2 edges; removing any independent vertex
    set of size < uniformity keeps it connected; removing any edge's full
    vertex set keeps it connected.  On failure the report carries the first
    violating vertex set or edge (in lexicographic scan order).
    """
    if not is_linear(h):
        raise ValueError("is_ev_inseparable requires a linear hypergraph")
    if len(h.edges) < 2:
        return InseparabilityReport(False, "too-few-edges", None)
    if not is_connected(h):
        return InseparabilityReport(False, "disconnected", None)
    covered_pairs = set()
    for e in h.edges:
        covered_pairs.update(itertools.combinations(e, 2))
    for size in range(1, h.uniformity):
        for z in itertools.combinations(range(h.vertex_count), size):
            if any(pair in covered_pairs for pair in itertools.combinations(z, 2)):
                continue
            if not _hyper_connected_without(h, frozenset(z)):
                return InseparabilityReport(False, "vertex-set", frozenset(z))
    for e in sorted(h.edges):
        if not _hyper_connected_without(h, frozenset(e)):
            return InseparabilityReport(False, "edge", e)
    return InseparabilityReport(True)


def induced_subhypergraph(h: Hypergraph, vertices) -> Hypergraph:
    """The induced subhypergraph on ``vertices``, reindexed to 0..len-1."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    if any(not 0 <= v < h.vertex_count for v in vs):
        raise ValueError("vertex subset out of range")
    edges = [tuple(index[v] for v in e) for e in h.edges if set(e) <= set(vs)]
    return hypergraph(len(vs), h.uniformity, edges, h.offset)


def induced_subgraph(g: Graph, vertices) -> Graph:
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(index[u], index[v]) for u, v in g.edges if u in keep and v in keep]
    return graph(len(vs), edges)
