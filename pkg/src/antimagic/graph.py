"""Simple undirected graphs and the path/cycle matching structure.

Graphs are immutable. Vertices are arbitrary integers; edges are canonical
``(min, max)`` pairs. Every tie-break in this module is by ascending vertex
id so that all downstream constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

from .errors import ContractError, GraphParseError, ValidationError

Edge = tuple  # canonical (u, v) with u < v


def edge_between(u, v):
    """Canonical form of the edge joining two distinct vertices."""
    if u == v:
        raise ValidationError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``vertices`` is a sorted tuple of ints, ``edges`` a sorted tuple of
    canonical pairs whose endpoints all appear in ``vertices``.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValidationError("vertices must be sorted and distinct")
        vset = set(self.vertices)
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if (u, v) != edge_between(u, v):
                raise ValidationError(f"edge {e} is not in canonical (min, max) form")
            if u not in vset or v not in vset:
                raise ValidationError(f"edge {e} has an undeclared endpoint")
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise ValidationError("edges must be sorted")

    @classmethod
    def from_edges(cls, edges, vertices=()):
        """Build a graph from endpoint pairs plus optional extra vertices."""
        canon = sorted({edge_between(u, v) for u, v in edges})
        verts = set(vertices)
        for u, v in canon:
            verts.add(u)
            verts.add(v)
        return cls(tuple(sorted(verts)), tuple(canon))

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def max_degree(self):
        return max((len(nbrs) for nbrs in self.adjacency.values()), default=0)

    def has_edge(self, u, v):
        return edge_between(u, v) in self._edge_set

    @cached_property
    def _edge_set(self):
        return frozenset(self.edges)

    def non_isolated(self):
        return tuple(v for v in self.vertices if self.degree(v) > 0)

    @cached_property
    def components(self):
        """Connected components, each a sorted vertex tuple, ordered by minimum id."""
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            stack = [start]
            comp = []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))

    def component_edges(self, component):
        cset = set(component)
        return tuple(e for e in self.edges if e[0] in cset)

    def without_edges(self, drop):
        """Same vertex set with the given edges removed."""
        dropset = {edge_between(u, v) for u, v in drop}
        missing = dropset - self._edge_set
        if missing:
            raise ContractError(f"cannot remove absent edges: {sorted(missing)}")
        return Graph(self.vertices, tuple(e for e in self.edges if e not in dropset))


def parse_graph(text):
    """Parse an edge-list document.

    Each line is either ``"u v"`` (an edge), ``"vertex u"`` (declares an
    isolated vertex), blank, or a ``#`` comment. Vertex ids are integers and
    need not be contiguous.
    """
    edges = []
    vertices = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphParseError("expected 'vertex <id>'", line=lineno)
            try:
                vertices.add(int(parts[1]))
            except ValueError:
                raise GraphParseError(f"bad vertex id {parts[1]!r}", line=lineno) from None
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"bad endpoint in {line!r}", line=lineno) from None
        if u == v:
            raise ValidationError(f"line {lineno}: loop at vertex {u}")
        e = edge_between(u, v)
        if e in edges:
            raise ValidationError(f"line {lineno}: duplicate edge {e}")
        edges.append(e)
    return Graph.from_edges(edges, vertices)


def format_graph(graph):
    """Canonical edge-list form: sorted edges, then isolated vertices."""
    lines = [f"{u} {v}" for u, v in graph.edges]
    lines += [f"vertex {v}" for v in graph.vertices if graph.degree(v) == 0]
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class ComponentDecomposition:
    """Components of a graph classified by size and parity.

    ``isolated_edges`` are the two-vertex components, ``even_components``
    have an even number (at least four) of vertices, ``odd_components`` the
    rest. ``uncovered_vertices`` is empty until a maximum matching has been
    chosen; see :func:`matched_decomposition`.
    """

    isolated_vertices: tuple
    isolated_edges: tuple
    even_components: tuple
    odd_components: tuple
    uncovered_vertices: tuple = ()

    @property
    def q(self):
        return len(self.isolated_edges)

    @property
    def r(self):
        return len(self.even_components)

    @property
    def s(self):
        return len(self.odd_components)


@dataclass(frozen=True)
class Matching:
    """A matching ``edges`` and its complement within the host edge set."""

    edges: tuple
    complement: tuple


@dataclass(frozen=True)
class PathCyclePlan:
    """Matching plan for one path or cycle component of a max-degree-2 graph.

    ``walk`` lists the component's vertices in traversal order: paths start
    at their lowest-id endpoint, cycles at their lowest-id vertex stepping
    toward its smaller neighbor. ``matched``/``unmatched`` hold the walk's
    edges in walk order. ``uncovered`` is the one vertex missed by the
    matching in an odd component, else None.
    """

    walk: tuple
    is_cycle: bool
    matched: tuple
    unmatched: tuple
    uncovered: int


def decompose(graph):
    """Classify every component by size and parity."""
    isolated = []
    k2 = []
    even = []
    odd = []
    for comp in graph.components:
        if len(comp) == 1:
            isolated.append(comp[0])
        elif len(comp) == 2:
            k2.append(edge_between(*comp))
        elif len(comp) % 2 == 0:
            even.append(comp)
        else:
            odd.append(comp)
    return ComponentDecomposition(tuple(isolated), tuple(k2), tuple(even), tuple(odd))


def _walk_component(graph, comp):
    """Traversal order of a path or cycle component; returns (walk, is_cycle)."""
    ends = [v for v in comp if graph.degree(v) == 1]
    if ends:
        start = min(ends)
        is_cycle = False
    else:
        start = min(comp)
        is_cycle = True
    walk = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in graph.neighbors(cur) if w != prev]
        if not nxt:
            break
        step = min(nxt)
        if is_cycle and step == start:
            break
        walk.append(step)
        prev, cur = cur, step
    if len(walk) != len(comp):
        raise ContractError(f"component {comp} is not a path or cycle")
    return tuple(walk), is_cycle


def path_cycle_plans(graph):
    """Per-component matching plans for a graph with maximum degree 2.

    Isolated vertices are skipped. In odd paths the uncovered vertex is the
    final (highest-id) endpoint of the walk; in odd cycles it is the walk's
    starting (lowest-id) vertex.
    """
    if graph.max_degree() > 2:
        raise ContractError("path_cycle_plans requires maximum degree 2")
    plans = []
    for comp in graph.components:
        if len(comp) == 1:
            continue
        walk, is_cycle = _walk_component(graph, comp)
        size = len(walk)
        walk_edges = [edge_between(walk[i], walk[i + 1]) for i in range(size - 1)]
        if is_cycle:
            walk_edges.append(edge_between(walk[-1], walk[0]))
        matched = []
        uncovered = None
        if is_cycle and size % 2 == 1:
            # skip the first edge so the starting vertex stays uncovered
            matched = [walk_edges[i] for i in range(1, size - 1, 2)]
            uncovered = walk[0]
        elif is_cycle:
            matched = [walk_edges[i] for i in range(0, size, 2)]
        else:
            matched = [walk_edges[i] for i in range(0, size - 1, 2)]
            if size % 2 == 1:
                uncovered = walk[-1]
        matched_set = set(matched)
        unmatched = tuple(e for e in walk_edges if e not in matched_set)
        plans.append(PathCyclePlan(walk, is_cycle, tuple(matched), unmatched, uncovered))
    return tuple(plans)


def max_matching_deg2(graph):
    """A maximum matching of a graph with maximum degree 2.

    Built per component by alternating along the walk; its size is exactly
    ``(n - s) / 2`` where n counts non-isolated vertices and s the odd
    components.
    """
    plans = path_cycle_plans(graph)
    matched = sorted(e for p in plans for e in p.matched)
    unmatched = sorted(e for p in plans for e in p.unmatched)
    return Matching(tuple(matched), tuple(unmatched))


def matched_decomposition(graph):
    """Decomposition plus matching, with uncovered vertices filled in.

    ``uncovered_vertices[i]`` lives in ``odd_components[i]``.
    """
    cd = decompose(graph)
    plans = path_cycle_plans(graph)
    uncovered = {p.uncovered for p in plans if p.uncovered is not None}
    per_odd = []
    for comp in cd.odd_components:
        hits = [v for v in comp if v in uncovered]
        if len(hits) != 1:
            raise ContractError(f"odd component {comp} has {len(hits)} uncovered vertices")
        per_odd.append(hits[0])
    matched = sorted(e for p in plans for e in p.matched)
    unmatched = sorted(e for p in plans for e in p.unmatched)
    return (
        replace(cd, uncovered_vertices=tuple(per_odd)),
        Matching(tuple(matched), tuple(unmatched)),
    )


def find_3plus_vertex(graph):
    """A vertex of degree at least 3 with its three smallest incident edges.

    Returns ``(vertex, (e1, e2, e3))`` or None when the maximum degree is at
    most 2. The vertex is the lowest-id one among those of maximum degree;
    the edges go to its three lowest-id neighbors.
    """
    dmax = graph.max_degree()
    if dmax < 3:
        return None
    v = min(u for u in graph.vertices if graph.degree(u) == dmax)
    nbrs = graph.neighbors(v)[:3]
    return v, tuple(edge_between(v, u) for u in nbrs)
