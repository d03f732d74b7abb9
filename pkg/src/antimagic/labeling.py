"""Weightings, list assignments, orientations, labelings, and their verifiers.

Everything is exact: weights and labels are rationals, and every distinctness
requirement is decided by exact equality. The verifier is deliberately
independent of the solving pipeline so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, ValidationError
from .graph import decompose, edge_between
from .rational import as_fraction, format_rational


class Weighting:
    """Vertex weights; vertices not mentioned weigh 0."""

    __slots__ = ("_values",)

    def __init__(self, values=None):
        vals = {}
        for v, w in dict(values or {}).items():
            f = as_fraction(w)
            if f != 0:
                vals[int(v)] = f
        self._values = vals

    @classmethod
    def zero(cls):
        return cls()

    def __call__(self, vertex):
        return self._values.get(vertex, Fraction(0))

    def items(self):
        return tuple(sorted(self._values.items()))

    def is_zero(self):
        return not self._values

    def __eq__(self, other):
        return isinstance(other, Weighting) and self._values == other._values

    def __repr__(self):
        return f"Weighting({dict(self.items())!r})"


class ListAssignment:
    """Per-edge finite sets of allowed rational labels, stored sorted."""

    __slots__ = ("_lists",)

    def __init__(self, lists):
        store = {}
        for e, values in dict(lists).items():
            edge = edge_between(*e)
            vals = tuple(sorted(as_fraction(x) for x in values))
            for a, b in zip(vals, vals[1:]):
                if a == b:
                    raise ValidationError(f"duplicate value {format_rational(a)} in list for edge {edge}")
            store[edge] = vals
        self._lists = store

    @classmethod
    def uniform_range(cls, edges, upper):
        """The default assignment: every edge may use 1..upper."""
        values = tuple(Fraction(i) for i in range(1, upper + 1))
        return cls({e: values for e in edges})

    def for_edge(self, edge):
        e = edge_between(*edge)
        if e not in self._lists:
            raise ContractError(f"no list assigned to edge {e}")
        return self._lists[e]

    def edges(self):
        return tuple(sorted(self._lists))

    def min_size(self):
        return min((len(v) for v in self._lists.values()), default=0)

    def items(self):
        return tuple(sorted(self._lists.items()))

    def __eq__(self, other):
        return isinstance(other, ListAssignment) and self._lists == other._lists

    def __repr__(self):
        return f"ListAssignment({len(self._lists)} edges, min size {self.min_size()})"


class Orientation:
    """A direction for each edge, stored as the head (pointed-to) endpoint."""

    __slots__ = ("_heads",)

    def __init__(self, heads):
        store = {}
        for e, head in dict(heads).items():
            edge = edge_between(*e)
            if head not in edge:
                raise ValidationError(f"head {head} is not an endpoint of {edge}")
            store[edge] = head
        self._heads = store

    @classmethod
    def from_pairs(cls, pairs):
        """Build from (tail, head) pairs."""
        return cls({edge_between(t, h): h for t, h in pairs})

    @classmethod
    def ascending(cls, edges):
        """Every edge points from its smaller to its larger endpoint."""
        return cls({e: max(e) for e in edges})

    def head(self, edge):
        e = edge_between(*edge)
        if e not in self._heads:
            raise ContractError(f"edge {e} is not oriented")
        return self._heads[e]

    def tail(self, edge):
        e = edge_between(*edge)
        h = self.head(e)
        return e[0] if h == e[1] else e[1]

    def edges(self):
        return tuple(sorted(self._heads))

    def covers(self, edges):
        return all(edge_between(*e) in self._heads for e in edges)

    def flipped(self, edges):
        """New orientation with the given edges reversed."""
        heads = dict(self._heads)
        for e in edges:
            edge = edge_between(*e)
            h = self.head(edge)
            heads[edge] = edge[0] if h == edge[1] else edge[1]
        return Orientation(heads)

    def items(self):
        return tuple((e, (self.tail(e), self.head(e))) for e in self.edges())

    def __eq__(self, other):
        return isinstance(other, Orientation) and self._heads == other._heads

    def __repr__(self):
        return f"Orientation({len(self._heads)} edges)"


class Labeling:
    """An edge labeling, optionally carrying an orientation.

    Injectivity is not enforced at construction; the verifier reports
    duplicate labels instead, so that broken labelings can be inspected.
    """

    __slots__ = ("_labels", "orientation")

    def __init__(self, labels, orientation=None):
        self._labels = {edge_between(*e): as_fraction(x) for e, x in dict(labels).items()}
        self.orientation = orientation

    def label(self, edge):
        e = edge_between(*edge)
        if e not in self._labels:
            raise ContractError(f"edge {e} is unlabeled")
        return self._labels[e]

    def edges(self):
        return tuple(sorted(self._labels))

    def items(self):
        return tuple(sorted(self._labels.items()))

    def values(self):
        return tuple(x for _, x in self.items())

    def __len__(self):
        return len(self._labels)

    def __eq__(self, other):
        return (
            isinstance(other, Labeling)
            and self._labels == other._labels
            and self.orientation == other.orientation
        )

    def __repr__(self):
        return f"Labeling({len(self._labels)} edges{', oriented' if self.orientation else ''})"


def _require_total(graph, labeling):
    have = set(labeling.edges())
    want = set(graph.edges)
    if have != want:
        missing = sorted(want - have)
        extra = sorted(have - want)
        raise ContractError(f"labeling does not match edge set (missing {missing}, extra {extra})")


def vertex_sums(graph, labeling, weighting=None):
    """Weighted vertex sums: weight plus the labels of incident edges."""
    _require_total(graph, labeling)
    w = weighting or Weighting.zero()
    sums = {v: w(v) for v in graph.vertices}
    for e in graph.edges:
        x = labeling.label(e)
        sums[e[0]] += x
        sums[e[1]] += x
    return sums


def oriented_vertex_sums(graph, labeling):
    """Inbound labels minus outbound labels at every vertex."""
    _require_total(graph, labeling)
    o = labeling.orientation
    if o is None or not o.covers(graph.edges):
        raise ContractError("labeling has no orientation covering the edge set")
    sums = {v: Fraction(0) for v in graph.vertices}
    for e in graph.edges:
        x = labeling.label(e)
        sums[o.head(e)] += x
        sums[o.tail(e)] -= x
    return sums


@dataclass(frozen=True)
class Violation:
    kind: str  # duplicate-label | label-out-of-range | label-not-in-list | sum-collision
    subject: tuple

    def to_obj(self):
        return {"kind": self.kind, "subject": [_to_plain(x) for x in self.subject]}


def _to_plain(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, tuple):
        return list(x)
    return x


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple

    def to_obj(self):
        return {"ok": self.ok, "violations": [v.to_obj() for v in self.violations]}


MODE_UNDIRECTED = "undirected"
MODE_ORIENTED = "oriented"


def verify_quasi_antimagic(
    graph,
    labeling,
    weighting=None,
    *,
    mode=MODE_UNDIRECTED,
    label_bound=None,
    lists=None,
    relax_k2=False,
):
    """Check a labeling against the quasi-antimagic conditions.

    Collects violations instead of raising: duplicate labels, labels outside
    ``{1..label_bound}`` (when a bound is given), labels missing from their
    edge's list (when ``lists`` is given), and vertex-sum collisions.

    Sum distinctness is required between all pairs of non-isolated vertices,
    except that in undirected mode the two endpoints of a two-vertex
    component are exempt from each other (no labeling could separate them
    when their weights agree). ``relax_k2=True`` widens that exemption so
    such endpoints are not compared with anything.
    """
    if mode not in (MODE_UNDIRECTED, MODE_ORIENTED):
        raise ContractError(f"unknown mode {mode!r}")
    if mode == MODE_ORIENTED and weighting is not None and not weighting.is_zero():
        raise ContractError("oriented sums take no vertex weights")
    _require_total(graph, labeling)

    violations = []

    by_label = {}
    for e, x in labeling.items():
        by_label.setdefault(x, []).append(e)
    for x, es in sorted(by_label.items()):
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                violations.append(Violation("duplicate-label", (es[i], es[j])))

    if label_bound is not None:
        for e, x in labeling.items():
            if x.denominator != 1 or not 1 <= x <= label_bound:
                violations.append(Violation("label-out-of-range", (e, x)))
    if lists is not None:
        for e, x in labeling.items():
            if x not in lists.for_edge(e):
                violations.append(Violation("label-not-in-list", (e, x)))

    if mode == MODE_UNDIRECTED:
        sums = vertex_sums(graph, labeling, weighting)
    else:
        sums = oriented_vertex_sums(graph, labeling)

    k2_pairs = {frozenset(e) for e in decompose(graph).isolated_edges}
    k2_vertices = {v for e in k2_pairs for v in e} if relax_k2 else set()
    checked = [
        v for v in graph.vertices if graph.degree(v) > 0 and v not in k2_vertices
    ]
    for i in range(len(checked)):
        for j in range(i + 1, len(checked)):
            u, v = checked[i], checked[j]
            if mode == MODE_UNDIRECTED and frozenset((u, v)) in k2_pairs:
                continue
            if sums[u] == sums[v]:
                violations.append(Violation("sum-collision", (u, v, sums[u])))

    return VerifyReport(ok=not violations, violations=tuple(violations))
