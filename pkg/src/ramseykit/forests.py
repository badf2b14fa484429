"""Systems of copies: forest recognition, edgy orderings, cycles of copies,
and the containment locality check for inseparable pieces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ForestLocalityError
from .graphs import (CopyEmbedding, Graph, Hypergraph, as_graph,
                     embedding_edges, embedding_vertices, graph, hypergraph,
                     induced_subhypergraph, is_ev_inseparable,
                     validate_embedding)


@dataclass(frozen=True)
class CopySystem:
    """Copies of one template inside one host, distinct as image subgraphs."""

    host: Graph | Hypergraph
    template: Graph | Hypergraph
    copies: tuple[CopyEmbedding, ...]

    def __post_init__(self):
        seen = set()
        for emb in self.copies:
            validate_embedding(self.host, self.template, emb)
            key = (embedding_vertices(emb), embedding_edges(self.template, emb))
            if key in seen:
                raise ValueError(f"duplicate copy with images {emb.images}")
            seen.add(key)


def copy_system(host, template, images_list) -> CopySystem:
    host = as_graph(host) if isinstance(host, Graph) else host
    return CopySystem(host, template, tuple(CopyEmbedding(tuple(i)) for i in images_list))


def _copy_sets(s: CopySystem) -> list[tuple[frozenset[int], frozenset]]:
    return [
        (embedding_vertices(emb), embedding_edges(s.template, emb))
        for emb in s.copies
    ]


def union_support(s: CopySystem) -> tuple[tuple[int, ...], frozenset]:
    """(covered vertices, covered edges) in the host's labels."""
    verts: set[int] = set()
    edges: set = set()
    for vs, es in _copy_sets(s):
        verts |= vs
        edges |= es
    return tuple(sorted(verts)), frozenset(edges)


def union_graph(s: CopySystem):
    """The union of all copies as a standalone graph or hypergraph.

    Covered vertices are reindexed densely in increasing host-label order;
    uncovered host vertices do not appear (so density calculations see no
    stray isolated vertices).
    """
    verts, edges = union_support(s)
    index = {v: i for i, v in enumerate(verts)}
    if isinstance(s.host, Hypergraph):
        return hypergraph(
            len(verts), s.host.uniformity,
            [tuple(index[v] for v in e) for e in edges],
            s.host.offset,
        )
    return graph(len(verts), [(index[u], index[v]) for u, v in edges])


# A junction is how a copy meets the union of the copies placed before it:
# nothing, one vertex, or one fully shared edge of the copy itself.
JUNCTION_EMPTY = "empty"
JUNCTION_VERTEX = "vertex"
JUNCTION_EDGE = "edge"


@dataclass(frozen=True)
class ForestCertificate:
    """An ordering of the copies plus, per copy after the first, its junction."""

    ordering: tuple[int, ...]
    junctions: tuple[tuple, ...]  # entries ("empty",) | ("vertex", v) | ("edge", e)


def _junction(vs: frozenset[int], es: frozenset, union_v: frozenset[int], union_e: frozenset):
    """Classify the meeting of a copy (vs, es) with an already-placed union.

    Returns a junction tag tuple, or None when the meeting is not allowed.
    """
    q = vs & union_v
    if not q:
        return (JUNCTION_EMPTY,)
    if len(q) == 1:
        return (JUNCTION_VERTEX, next(iter(q)))
    for e in es:
        if frozenset(e) == q and e in union_e:
            return (JUNCTION_EDGE, e)
    return None


@dataclass(frozen=True)
class ForestVerdict:
    """is_forest True/False when certified either way, None when undecided."""

    is_forest: bool | None
    certificate: ForestCertificate | None = None


def verify_certificate(s: CopySystem, cert: ForestCertificate) -> bool:
    """Replay a certificate against the definition; True iff it checks out."""
    if sorted(cert.ordering) != list(range(len(s.copies))):
        return False
    if len(cert.junctions) != max(len(s.copies) - 1, 0):
        return False
    sets = _copy_sets(s)
    union_v: frozenset[int] = frozenset()
    union_e: frozenset = frozenset()
    for pos, idx in enumerate(cert.ordering):
        vs, es = sets[idx]
        if pos > 0:
            expected = _junction(vs, es, union_v, union_e)
            if expected is None or expected != cert.junctions[pos - 1]:
                return False
        union_v |= vs
        union_e |= es
    return True


def _ordering_to_certificate(s: CopySystem, ordering: list[int]) -> ForestCertificate:
    sets = _copy_sets(s)
    union_v: frozenset[int] = frozenset()
    union_e: frozenset = frozenset()
    junctions = []
    for pos, idx in enumerate(ordering):
        vs, es = sets[idx]
        if pos > 0:
            tag = _junction(vs, es, union_v, union_e)
            assert tag is not None
            junctions.append(tag)
        union_v |= vs
        union_e |= es
    return ForestCertificate(tuple(ordering), tuple(junctions))


EXHAUSTIVE_COPY_CAP = 8


def is_forest_of_copies(s: CopySystem, node_budget: int = 2_000_000) -> ForestVerdict:
    """Decide whether some ordering of the copies meets the junction rule.

    Up to EXHAUSTIVE_COPY_CAP copies the search is exhaustive, so both True
    and False are certified.  Above the cap a peel-off heuristic runs first
    (repeatedly removing a copy that could legally come last); if it fails,
    the exhaustive search runs under ``node_budget`` and an unfinished search
    yields the undecided verdict None rather than an uncertified False.
    """
    t = len(s.copies)
    if t <= 1:
        ordering = list(range(t))
        return ForestVerdict(True, _ordering_to_certificate(s, ordering))
    sets = _copy_sets(s)

    if t > EXHAUSTIVE_COPY_CAP:
        remaining = set(range(t))
        peeled: list[int] = []
        while remaining:
            progress = None
            for c in sorted(remaining):
                others_v: frozenset[int] = frozenset()
                others_e: frozenset = frozenset()
                for d in remaining:
                    if d != c:
                        others_v |= sets[d][0]
                        others_e |= sets[d][1]
                if len(remaining) == 1 or _junction(sets[c][0], sets[c][1], others_v, others_e):
                    progress = c
                    break
            if progress is None:
                break
            remaining.discard(progress)
            peeled.append(progress)
        if not remaining:
            ordering = peeled[::-1]
            cert = _ordering_to_certificate(s, ordering)
            if verify_certificate(s, cert):
                return ForestVerdict(True, cert)

    # exhaustive: feasibility of completing each placed-set, memoized
    memo: dict[int, bool] = {}
    nodes = 0
    exhausted = False
    full = (1 << t) - 1
    unions_cache: dict[int, tuple[frozenset, frozenset]] = {0: (frozenset(), frozenset())}

    def unions(mask: int) -> tuple[frozenset, frozenset]:
        got = unions_cache.get(mask)
        if got is None:
            low = mask & -mask
            i = low.bit_length() - 1
            pv, pe = unions(mask ^ low)
            got = (pv | sets[i][0], pe | sets[i][1])
            unions_cache[mask] = got
        return got

    def feasible(mask: int) -> bool:
        nonlocal nodes, exhausted
        if mask == full:
            return True
        got = memo.get(mask)
        if got is not None:
            return got
        nodes += 1
        if nodes > node_budget:
            exhausted = True
            return False
        uv, ue = unions(mask)
        ok = False
        for c in range(t):
            if mask >> c & 1:
                continue
            if mask == 0 or _junction(sets[c][0], sets[c][1], uv, ue):
                if feasible(mask | (1 << c)):
                    ok = True
                    break
                if exhausted:
                    return False
        memo[mask] = ok
        return ok

    if feasible(0):
        # lexicographically least certifying ordering, reconstructed greedily
        ordering = []
        mask = 0
        while mask != full:
            uv, ue = unions(mask)
            for c in range(t):
                if mask >> c & 1:
                    continue
                if (mask == 0 or _junction(sets[c][0], sets[c][1], uv, ue)) and feasible(mask | (1 << c)):
                    ordering.append(c)
                    mask |= 1 << c
                    break
        cert = _ordering_to_certificate(s, ordering)
        assert verify_certificate(s, cert)
        return ForestVerdict(True, cert)
    if exhausted:
        return ForestVerdict(None)
    return ForestVerdict(False)


def is_edgy_forest(s: CopySystem, ordering) -> bool:
    """True iff under this ordering every copy after the first meets the
    earlier union in exactly one shared edge (never nothing, never a vertex).
    """
    ordering = list(ordering)
    if sorted(ordering) != list(range(len(s.copies))):
        raise ValueError("ordering must be a permutation of the copies")
    sets = _copy_sets(s)
    union_v: frozenset[int] = frozenset()
    union_e: frozenset = frozenset()
    for pos, idx in enumerate(ordering):
        vs, es = sets[idx]
        if pos > 0:
            tag = _junction(vs, es, union_v, union_e)
            if tag is None or tag[0] != JUNCTION_EDGE:
                return False
        union_v |= vs
        union_e |= es
    return True


def _glue_orientation(e_in: tuple[int, int], target: tuple[int, int],
                      shared: int | None, prev_image: dict[int, int]) -> dict[int, int]:
    """Pin e_in's endpoints onto the target host edge.

    When the designated template edges share a vertex, that vertex keeps its
    host image across the whole chain (hub gluing); otherwise sorted maps to
    sorted.
    """
    a, b = e_in
    u, v = target
    if shared is not None:
        hub = prev_image[shared]
        other = u if v == hub else v
        return {shared: hub, (b if a == shared else a): other}
    return {a: u, b: v}


def build_cycle_of_copies(template: Graph, length: int) -> CopySystem:
    """Chain ``length`` copies of the template so consecutive copies share
    exactly one edge, the last closes back onto the first, no other pair
    shares an edge, and no edge lies in three copies.

    Gluing edges are the lexicographically first ordered pair of distinct
    template edges whose chain validates; failure of every pair raises with a
    diagnostic (the template is too entangled for this gluing scheme).
    """
    template = as_graph(template)
    vt = template.vertex_count
    if length < 3:
        raise ValueError("a cycle of copies needs length at least 3")
    if len(template.edges) < 2:
        raise ValueError("template needs at least 2 edges")
    dens = Fraction(len(template.edges) - 1, vt - 2) if vt >= 3 else Fraction(1)
    if dens <= 1:
        raise ValueError("template must have 2-density above 1")

    tedges = sorted(template.edges)
    failures = []
    for e1, e2 in itertools.permutations(tedges, 2):
        shared_set = set(e1) & set(e2)
        if len(shared_set) > 1:
            continue
        shared = next(iter(shared_set)) if shared_set else None
        maps: list[dict[int, int]] = []
        fresh = itertools.count(vt)
        maps.append({v: v for v in range(vt)})
        ok = True
        for i in range(1, length):
            prev = maps[-1]
            target = tuple(sorted((prev[e2[0]], prev[e2[1]])))
            pin = _glue_orientation(e1, target, shared, prev)
            if i == length - 1:
                first = maps[0]
                closing = tuple(sorted((first[e1[0]], first[e1[1]])))
                c, d = e2
                if shared is not None:
                    hub = pin.get(shared)
                    other_t = d if c == shared else c
                    if hub not in closing:
                        ok = False
                        break
                    other_h = closing[0] if closing[1] == hub else closing[1]
                    if pin.get(other_t, other_h) != other_h:
                        ok = False
                        break
                    pin[other_t] = other_h
                else:
                    for t_v, h_v in zip((c, d), closing):
                        if pin.get(t_v, h_v) != h_v:
                            ok = False
                            break
                        pin[t_v] = h_v
                    if not ok:
                        break
            if len(set(pin.values())) != len(pin):
                ok = False
                break
            mapping = dict(pin)
            for v in range(vt):
                if v not in mapping:
                    mapping[v] = next(fresh)
            maps.append(mapping)
        if not ok:
            failures.append((e1, e2, "gluing pins collided"))
            continue

        edge_sets = [
            frozenset(tuple(sorted((mp[u], mp[v]))) for u, v in tedges)
            for mp in maps
        ]
        pattern_ok = True
        for i, j in itertools.combinations(range(length), 2):
            inter = len(edge_sets[i] & edge_sets[j])
            consecutive = j - i == 1 or (i == 0 and j == length - 1)
            if inter != (1 if consecutive else 0):
                pattern_ok = False
                break
        if pattern_ok:
            counts: dict[tuple[int, int], int] = {}
            for es in edge_sets:
                for e in es:
                    counts[e] = counts.get(e, 0) + 1
            if max(counts.values()) > 2:
                pattern_ok = False
        if not pattern_ok:
            failures.append((e1, e2, "intersection pattern violated"))
            continue

        used = sorted({h for mp in maps for h in mp.values()})
        index = {h: i for i, h in enumerate(used)}
        all_edges = {e for es in edge_sets for e in es}
        host = graph(len(used), [(index[u], index[v]) for u, v in all_edges])
        copies = tuple(
            CopyEmbedding(tuple(index[mp[v]] for v in range(vt))) for mp in maps
        )
        assert len(host.edges) == length * (len(tedges) - 1)
        assert host.vertex_count <= length * (vt - 2) + 1
        return CopySystem(host, template, copies)

    detail = "; ".join(f"{e1}->{e2}: {why}" for e1, e2, why in failures[:4])
    raise ValueError(
        f"no gluing edge pair of the template closes into a clean cycle ({detail})"
    )


def locate_inseparable_subgraph(forest: CopySystem, vertices,
                                certificate: ForestCertificate | None = None) -> int:
    """Index of a forest member containing the given induced piece.

    ``vertices`` is a host-label vertex set; the piece is the union's induced
    subhypergraph on it and must be inseparable (checked).  When a
    certificate is supplied it is replayed first.  If no member contains the
    piece as an induced subhypergraph, ForestLocalityError is raised; on
    forests of copies of linear uniform hypergraphs that must never happen.
    """
    if not isinstance(forest.host, Hypergraph):
        raise ValueError("locality check applies to hypergraph copy systems")
    if certificate is not None and not verify_certificate(forest, certificate):
        raise ValueError("certificate does not verify against the system")
    j_verts = frozenset(vertices)
    _, union_edges = union_support(forest)
    j_edges = frozenset(e for e in union_edges if set(e) <= j_verts)
    sub = induced_subhypergraph(
        hypergraph(forest.host.vertex_count, forest.host.uniformity, union_edges),
        j_verts,
    )
    report = is_ev_inseparable(sub)
    if not report.ok:
        raise ValueError(f"piece is not inseparable: {report.reason} {report.witness}")
    for i, emb in enumerate(forest.copies):
        vs = embedding_vertices(emb)
        if not j_verts <= vs:
            continue
        es = embedding_edges(forest.template, emb)
        inside = frozenset(e for e in es if set(e) <= j_verts)
        if inside == j_edges:
            return i
    raise ForestLocalityError(
        "no single member contains the inseparable piece as an induced subhypergraph"
    )
