"""Graph, orientation, and subgraph value types for small labelled graphs.

Vertices are dense integer labels.  When a graph has a sink it is always the
vertex 0 and the remaining vertices are 1..n.  Geometric convention for cycles
and wheels: the rim vertices 1..n are drawn clockwise, so the "clockwise"
direction of the rim edge {i, i+1} is i -> i+1 (indices mod n).

All values are immutable and hashable, so they can be used as dict keys and
memoised.  Exhaustive enumerators are guarded by an explicit edge-count cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import CapExceededError

Edge = tuple[int, int]

#: Default cap on |E| for the 2^|E|-scale enumerators.
DEFAULT_EDGE_CAP = 24


def edge(u: int, v: int) -> Edge:
    """Canonical form of the undirected edge {u, v}: endpoints sorted."""
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A labelled, simple, undirected, connected graph.

    ``n_nonsink`` is the number of non-sink vertices (labelled 1..n); when
    ``has_sink`` is true the vertex 0 is also present.  ``kind`` is a display
    label ("wheel", "fan", ...) and does not take part in equality.
    """

    n_nonsink: int
    has_sink: bool
    edges: frozenset[Edge]
    kind: str = field(default="custom", compare=False)

    def __post_init__(self) -> None:
        if self.n_nonsink < 1:
            raise ValueError("graph needs at least one non-sink vertex")
        verts = set(self.vertices)
        for e in self.edges:
            if not (isinstance(e, tuple) and len(e) == 2):
                raise ValueError(f"malformed edge {e!r}")
            u, v = e
            if u >= v:
                raise ValueError(f"edge {e} is not in canonical (min, max) form")
            if u not in verts or v not in verts:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
        if not self._is_connected():
            raise ValueError("graph is not connected")

    def _is_connected(self) -> bool:
        verts = self.vertices
        if len(verts) == 1:
            return True
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    @property
    def vertices(self) -> tuple[int, ...]:
        first = 0 if self.has_sink else 1
        return tuple(range(first, self.n_nonsink + 1))

    @property
    def nonsink_vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n_nonsink + 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _adjacency(self)[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


@lru_cache(maxsize=None)
def _adjacency(g: Graph) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return {v: tuple(sorted(ns)) for v, ns in adj.items()}


def make_cycle(n: int) -> Graph:
    """The cycle graph C_n on vertices 1..n (no sink); requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    es = {edge(i, i + 1) for i in range(1, n)} | {edge(n, 1)}
    return Graph(n, False, frozenset(es), kind="cycle")


def make_path(n: int) -> Graph:
    """The path graph P_n on vertices 1..n (no sink); requires n >= 1."""
    if n < 1:
        raise ValueError(f"path graph needs n >= 1, got {n}")
    es = {edge(i, i + 1) for i in range(1, n)}
    return Graph(n, False, frozenset(es), kind="path")


def make_wheel(n: int) -> Graph:
    """The wheel graph W_n: cycle C_n joined to the sink 0; requires n >= 3."""
    if n < 3:
        raise ValueError(f"wheel graph needs n >= 3, got {n}")
    es = {edge(i, i + 1) for i in range(1, n)} | {edge(n, 1)}
    es |= {edge(0, i) for i in range(1, n + 1)}
    return Graph(n, True, frozenset(es), kind="wheel")


def make_fan(n: int) -> Graph:
    """The fan graph F_n: the wheel W_n with the rim edge {n, 1} removed; n >= 2."""
    if n < 2:
        raise ValueError(f"fan graph needs n >= 2, got {n}")
    es = {edge(i, i + 1) for i in range(1, n)}
    es |= {edge(0, i) for i in range(1, n + 1)}
    return Graph(n, True, frozenset(es), kind="fan")


@dataclass(frozen=True)
class Orientation:
    """An assignment of a direction (tail, head) to every edge of a graph."""

    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        covered = set()
        for tail, head in self.arcs:
            e = edge(tail, head)
            if e not in self.graph.edges:
                raise ValueError(f"arc {tail}->{head} is not an edge of the graph")
            if e in covered:
                raise ValueError(f"edge {e} directed twice")
            covered.add(e)
        if len(covered) != self.graph.m:
            raise ValueError("every edge must receive exactly one direction")

    def head_of(self, e: Edge) -> int:
        return _arc_map(self)[e][1]

    def tail_of(self, e: Edge) -> int:
        return _arc_map(self)[e][0]

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return _in_degrees(self).get(v, 0)

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.graph.degree(v) - self.in_degree(v)

    def _check_vertex(self, v: int) -> None:
        lowest = 0 if self.graph.has_sink else 1
        if not lowest <= v <= self.graph.n_nonsink:
            raise ValueError(f"unknown vertex {v}")

    def targets(self) -> frozenset[int]:
        """Vertices whose incident edges are all incoming."""
        return frozenset(v for v in self.graph.vertices if self.in_degree(v) == self.graph.degree(v))

    def sources(self) -> frozenset[int]:
        """Vertices whose incident edges are all outgoing."""
        return frozenset(v for v in self.graph.vertices if self.in_degree(v) == 0)

    def is_zero_rooted(self) -> bool:
        """True iff the sink 0 is the orientation's unique target."""
        return self.graph.has_sink and self.targets() == frozenset({0})

    def is_acyclic(self) -> bool:
        """True iff the orientation contains no directed cycle."""
        out: dict[int, list[int]] = {v: [] for v in self.graph.vertices}
        for tail, head in self.arcs:
            out[tail].append(head)
        state: dict[int, int] = {}  # 0 = on stack, 1 = done

        for start in self.graph.vertices:
            if start in state:
                continue
            stack: list[tuple[int, Iterator[int]]] = [(start, iter(out[start]))]
            state[start] = 0
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if w not in state:
                        state[w] = 0
                        stack.append((w, iter(out[w])))
                        advanced = True
                        break
                    if state[w] == 0:
                        return False
                if not advanced:
                    state[v] = 1
                    stack.pop()
        return True


@lru_cache(maxsize=None)
def _arc_map(o: Orientation) -> dict[Edge, tuple[int, int]]:
    return {edge(t, h): (t, h) for t, h in o.arcs}


@lru_cache(maxsize=None)
def _in_degrees(o: Orientation) -> dict[int, int]:
    degs: dict[int, int] = {}
    for _, head in o.arcs:
        degs[head] = degs.get(head, 0) + 1
    return degs


def enumerate_orientations(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> Iterator[Orientation]:
    """All 2^|E| orientations of g, in a fixed order over the sorted edge list."""
    if g.m > cap:
        raise CapExceededError(f"{g.m} edges exceeds the orientation cap {cap}")
    es = g.sorted_edges()
    for mask in range(1 << g.m):
        arcs = []
        for i, (u, v) in enumerate(es):
            arcs.append((u, v) if mask >> i & 1 else (v, u))
        yield Orientation(g, frozenset(arcs))


@dataclass(frozen=True)
class Subgraph:
    """A pair (A, E_A): a non-empty vertex subset plus some induced edges.

    Isolated vertices are allowed (and count as their own connected
    component); membership of the edges in a parent graph is the caller's
    responsibility, or use :func:`subgraph_of`.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("subgraph vertex set must be non-empty")
        for e in self.edges:
            u, v = e
            if u >= v:
                raise ValueError(f"edge {e} is not in canonical (min, max) form")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {e} has an endpoint outside the subgraph")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components, isolated vertices included, sorted by least vertex."""
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        comps = []
        seen: set[int] = set()
        for v in sorted(self.vertices):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    @property
    def n_components(self) -> int:
        return len(self.components())


def subgraph_of(g: Graph, vertices, edges) -> Subgraph:
    """Build a Subgraph and validate it against the parent graph g."""
    s = Subgraph(frozenset(vertices), frozenset(edge(u, v) for u, v in edges))
    if not s.vertices <= set(g.vertices):
        raise ValueError("subgraph vertices are not vertices of the parent graph")
    if not s.edges <= g.edges:
        raise ValueError("subgraph edges are not edges of the parent graph")
    return s


def enumerate_subgraphs(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> Iterator[Subgraph]:
    """All subgraphs (A, E_A) of g with A non-empty, in a fixed order."""
    if g.m > cap:
        raise CapExceededError(f"{g.m} edges exceeds the subgraph cap {cap}")
    verts = sorted(g.vertices)
    es = g.sorted_edges()
    for vmask in range(1, 1 << len(verts)):
        chosen = frozenset(v for i, v in enumerate(verts) if vmask >> i & 1)
        induced = [e for e in es if e[0] in chosen and e[1] in chosen]
        for emask in range(1 << len(induced)):
            picked = frozenset(e for i, e in enumerate(induced) if emask >> i & 1)
            yield Subgraph(chosen, picked)
