"""Deciding whether every r-colouring of a host's edges leaves some template
copy monochromatic, with verifiable witness colourings.

The search works on the copy hypergraph: ground elements are host edges,
constraints are the edge sets of copies.  A colouring is a witness exactly
when no constraint is monochromatic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UndecidedError
from .colouring import EdgeColouring
from .forests import CopySystem
from .graphs import (CopyEmbedding, Graph, as_graph, edge_list,
                     embedding_edges, enumerate_copies)

MODES = ("nni", "induced", "ordered")


def _mode_params(mode: str) -> tuple[str, bool]:
    if mode == "nni":
        return "subgraph", False
    if mode == "induced":
        return "induced", False
    if mode == "ordered":
        return "induced", True
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


@dataclass(frozen=True)
class ArrowingResult:
    arrows: bool
    witness: EdgeColouring | None
    copies_considered: int
    mode: str


def _minimal_constraints(copy_edge_sets: list[frozenset[int]]) -> list[frozenset[int]]:
    """Drop duplicates and supersets: a colouring splits every copy iff it
    splits every inclusion-minimal copy edge set."""
    unique = sorted(set(copy_edge_sets), key=lambda s: (len(s), sorted(s)))
    minimal: list[frozenset[int]] = []
    for s in unique:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return minimal


def _decide(constraints: list[tuple[int, ...]], edge_count: int, r: int,
            node_budget: int) -> list[int] | None:
    """Find a colouring (list of colours per edge) splitting every constraint,
    or None when none exists.  Constraint-driven branching with unit
    propagation; colour symmetry broken by never opening colour c+2 while c+1
    is unused.
    """
    member: list[list[int]] = [[] for _ in range(edge_count)]
    for ci, edges in enumerate(constraints):
        for e in edges:
            member[e].append(ci)
    colour = [-1] * edge_count
    # per constraint: colours seen (as a set is overkill: track candidate and liveness)
    seen_colour = [-1] * len(constraints)   # common colour of coloured edges, if alive
    alive = [True] * len(constraints)       # becomes False once two colours appear
    uncoloured = [len(c) for c in constraints]
    nodes = 0

    def forbidden(e: int) -> set[int]:
        out = set()
        for ci in member[e]:
            if alive[ci] and uncoloured[ci] == 1 and seen_colour[ci] >= 0:
                out.add(seen_colour[ci])
        return out

    def assign(e: int, c: int, trail: list[tuple[int, int, int, bool]]) -> bool:
        colour[e] = c
        for ci in member[e]:
            trail.append((ci, seen_colour[ci], uncoloured[ci], alive[ci]))
            uncoloured[ci] -= 1
            if alive[ci]:
                if seen_colour[ci] < 0:
                    seen_colour[ci] = c
                elif seen_colour[ci] != c:
                    alive[ci] = False
            if alive[ci] and uncoloured[ci] == 0:
                return False  # monochromatic constraint
        return True

    def undo(e: int, trail: list[tuple[int, int, int, bool]]):
        colour[e] = -1
        for ci, sc, un, al in reversed(trail):
            seen_colour[ci] = sc
            uncoloured[ci] = un
            alive[ci] = al

    def pick_edge() -> int:
        best, best_key = -1, None
        for e in range(edge_count):
            if colour[e] >= 0:
                continue
            critical = sum(
                1 for ci in member[e]
                if alive[ci] and seen_colour[ci] >= 0 and uncoloured[ci] >= 1
            )
            key = (critical, len(member[e]), -e)
            if best_key is None or key > best_key:
                best, best_key = e, key
        return best

    def dfs(assigned: int, max_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise UndecidedError("arrowing search budget exhausted", consumed=nodes)
        if assigned == edge_count:
            return True
        # unit propagation: any uncoloured edge with all-but-one colour
        # forbidden is forced; a fully forbidden edge fails the branch
        for e in range(edge_count):
            if colour[e] >= 0:
                continue
            bad = forbidden(e)
            allowed_cap = min(max_used + 1, r - 1)
            options = [c for c in range(allowed_cap + 1) if c not in bad]
            if not options:
                return False
            if len(options) == 1 and len(bad) >= r - 1:
                trail: list[tuple[int, int, int, bool]] = []
                ok = assign(e, options[0], trail)
                if ok and dfs(assigned + 1, max(max_used, options[0])):
                    return True
                undo(e, trail)
                return False
        e = pick_edge()
        bad = forbidden(e)
        for c in range(min(max_used + 1, r - 1) + 1):
            if c in bad:
                continue
            trail = []
            ok = assign(e, c, trail)
            if ok and dfs(assigned + 1, max(max_used, c)):
                return True
            undo(e, trail)
        return False

    if dfs(0, -1):
        return colour.copy()
    return None


def _canonical_witness(constraints: list[tuple[int, ...]], edge_count: int, r: int,
                       node_budget: int) -> list[int]:
    """Lexicographically least splitting colouring under the edge order, with
    the colour-introduction cap (colour c+1 only after c).  Exists whenever
    _decide found any witness, because the cap only renames colours.
    """
    member: list[list[int]] = [[] for _ in range(edge_count)]
    for ci, edges in enumerate(constraints):
        for e in edges:
            member[e].append(ci)
    colour = [-1] * edge_count
    seen_colour = [-1] * len(constraints)
    alive = [True] * len(constraints)
    uncoloured = [len(c) for c in constraints]
    nodes = 0

    def dfs(e: int, max_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise UndecidedError("witness canonicalization budget exhausted", consumed=nodes)
        if e == edge_count:
            return True
        for c in range(min(max_used + 1, r - 1) + 1):
            trail = []
            dead = False
            colour[e] = c
            for ci in member[e]:
                trail.append((ci, seen_colour[ci], uncoloured[ci], alive[ci]))
                uncoloured[ci] -= 1
                if alive[ci]:
                    if seen_colour[ci] < 0:
                        seen_colour[ci] = c
                    elif seen_colour[ci] != c:
                        alive[ci] = False
                if alive[ci] and uncoloured[ci] == 0:
                    dead = True
                    break
            if not dead and dfs(e + 1, max(max_used, c)):
                return True
            colour[e] = -1
            for ci, sc, un, al in reversed(trail):
                seen_colour[ci] = sc
                uncoloured[ci] = un
                alive[ci] = al
        return False

    found = dfs(0, -1)
    assert found, "canonicalization must succeed when a witness exists"
    return colour


def _result_from_search(host: Graph, copy_edge_sets: list[frozenset], copies_considered: int,
                        r: int, mode: str, node_budget: int) -> ArrowingResult:
    edges = edge_list(host)
    index = {e: i for i, e in enumerate(edges)}
    as_indices = [frozenset(index[e] for e in s) for s in copy_edge_sets]
    if any(len(s) <= 1 for s in as_indices):
        # a copy with at most one edge is monochromatic under every colouring
        return ArrowingResult(True, None, copies_considered, mode)
    constraints = [tuple(sorted(s)) for s in _minimal_constraints(as_indices)]
    if not constraints:
        witness = {e: 0 for e in edges}
        return ArrowingResult(
            False, EdgeColouring(host, witness, max(r, 1)), copies_considered, mode
        )
    solution = _decide(constraints, len(edges), r, node_budget)
    if solution is None:
        return ArrowingResult(True, None, copies_considered, mode)
    canonical = _canonical_witness(constraints, len(edges), r, node_budget)
    witness = {e: canonical[i] for i, e in enumerate(edges)}
    return ArrowingResult(
        False, EdgeColouring(host, witness, max(r, 1)), copies_considered, mode
    )


def arrows(host, template, r: int, mode: str = "nni",
           node_budget: int = 5_000_000) -> ArrowingResult:
    """Decide whether every r-colouring of the host's edges yields a
    monochromatic copy of the template in the given mode.

    mode "nni" counts all subgraph copies, "induced" only induced copies, and
    "ordered" induced copies embedded order-preservingly.  False verdicts
    carry the lexicographically least witness colouring; budget exhaustion
    raises UndecidedError instead of guessing.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    host = as_graph(host)
    template = as_graph(template)
    if not isinstance(host, Graph) or not isinstance(template, Graph):
        raise TypeError("arrowing decisions are implemented for graphs only")
    copy_mode, ordered = _mode_params(mode)
    copies = enumerate_copies(host, template, mode=copy_mode, ordered=ordered)
    edge_sets = [embedding_edges(template, emb) for emb in copies]
    return _result_from_search(host, edge_sets, len(copies), r, mode, node_budget)


def arrows_system(host, system: CopySystem, r: int,
                  node_budget: int = 5_000_000) -> ArrowingResult:
    """Like arrows, but only the system's own copies count as monochromatic
    hits.  The host must be the system's host."""
    if r < 1:
        raise ValueError("r must be at least 1")
    host = as_graph(host)
    if not isinstance(host, Graph):
        raise TypeError("arrowing decisions are implemented for graphs only")
    if host != as_graph(system.host):
        raise ValueError("host differs from the system's host")
    edge_sets = [embedding_edges(system.template, emb) for emb in system.copies]
    return _result_from_search(host, edge_sets, len(system.copies), r, "nni", node_budget)


def verify_colouring(host, template, colouring: EdgeColouring,
                     mode: str = "nni") -> list[CopyEmbedding]:
    """All template copies left monochromatic by the colouring; an empty list
    certifies the colouring as a non-arrowing witness."""
    host = as_graph(host)
    if colouring.host != host:
        raise ValueError("colouring belongs to a different host")
    copy_mode, ordered = _mode_params(mode)
    out = []
    for emb in enumerate_copies(host, template, mode=copy_mode, ordered=ordered):
        es = embedding_edges(template, emb)
        colours = {colouring.colour_of[e] for e in es}
        if len(colours) <= 1:
            out.append(emb)
    return out
