"""Exhaustive ground truth for small instances.

The oracle exists to be obviously correct: it enumerates injective label
assignments (and, for oriented variants, orientations) directly from the
definitions, with the only cleverness being that a vertex's sum is checked
as soon as its last incident edge is assigned. It is used to validate the
constructive pipeline and to derive expected values for examples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial

from .errors import BudgetExceededError, ContractError
from .graph import decompose
from .labeling import Labeling, ListAssignment, Orientation, Weighting

ANTIMAGIC = "antimagic"
QUASI_ANTIMAGIC = "quasi-antimagic"
ORIENTED_ANTIMAGIC = "oriented-antimagic"
QUASI_ORIENTED_ANTIMAGIC = "quasi-oriented-antimagic"
VARIANTS = (ANTIMAGIC, QUASI_ANTIMAGIC, ORIENTED_ANTIMAGIC, QUASI_ORIENTED_ANTIMAGIC)

DEFAULT_CAP = 10**8

MODE_EXISTS = "exists"
MODE_FIND_ONE = "find-one"
MODE_COUNT = "count"


@dataclass(frozen=True)
class OracleQuery:
    graph: object
    variant: str
    k: int = 0
    weighting: Weighting = None
    lists: ListAssignment = None
    mode: str = MODE_EXISTS
    orientation: Orientation = None  # fixed orientation; None searches all
    cap: int = DEFAULT_CAP


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    labeling: Labeling
    count: int
    nodes: int


def _is_oriented(variant):
    return variant in (ORIENTED_ANTIMAGIC, QUASI_ORIENTED_ANTIMAGIC)


def estimate_space(query):
    """Upper bound on the number of complete assignments to consider."""
    g = query.graph
    m = g.m
    if query.lists is not None:
        size = 1
        for e in g.edges:
            size *= len(query.lists.for_edge(e))
    else:
        pool = m + query.k
        size = factorial(pool) // factorial(pool - m) if pool >= m else 0
    if _is_oriented(query.variant) and query.orientation is None:
        size *= 2**m
    return size


def _exempt_pairs(graph, variant):
    """Vertex pairs whose sums may collide, plus fully exempt vertices."""
    if variant == ANTIMAGIC or variant == ORIENTED_ANTIMAGIC:
        return set(), set()
    skip_vertices = {v for v in graph.vertices if graph.degree(v) == 0}
    skip_pairs = set()
    if variant == QUASI_ANTIMAGIC:
        skip_pairs = {frozenset(e) for e in decompose(graph).isolated_edges}
    return skip_pairs, skip_vertices


def brute_force(query):
    """Exhaustively answer an existence / find-one / count query.

    Raises :class:`BudgetExceededError` up front when the full assignment
    space is larger than ``query.cap``, and again if the traversal itself
    ever exceeds the cap in explored nodes.
    """
    if query.variant not in VARIANTS:
        raise ContractError(f"unknown variant {query.variant!r}")
    if query.mode not in (MODE_EXISTS, MODE_FIND_ONE, MODE_COUNT):
        raise ContractError(f"unknown mode {query.mode!r}")
    oriented = _is_oriented(query.variant)
    if not oriented and query.orientation is not None:
        raise ContractError("an orientation only makes sense for oriented variants")
    if oriented and query.weighting is not None and not query.weighting.is_zero():
        raise ContractError("oriented variants take no vertex weights")
    if oriented and query.lists is not None:
        raise ContractError("oriented variants label from 1..m+k, not from lists")

    space = estimate_space(query)
    if space > query.cap:
        raise BudgetExceededError("assignment space exceeds the cap", estimate=space)

    g = query.graph
    edges = list(g.edges)
    m = len(edges)
    weighting = query.weighting or Weighting.zero()
    skip_pairs, skip_vertices = _exempt_pairs(g, query.variant)

    if query.lists is not None:
        pools = [list(query.lists.for_edge(e)) for e in edges]
    else:
        rng = [Fraction(i) for i in range(1, m + query.k + 1)]
        pools = [rng for _ in edges]

    # completion schedule: a vertex is checked once its last edge is labeled
    last_edge = {}
    for idx, e in enumerate(edges):
        last_edge[e[0]] = idx
        last_edge[e[1]] = idx
    complete_at = [[] for _ in range(m)]
    for v, idx in last_edge.items():
        if v not in skip_vertices:
            complete_at[idx].append(v)

    nodes = 0
    count = 0
    found = None

    def run(orientation):
        nonlocal nodes, count, found
        if oriented:
            sign = {}
            for e in edges:
                h = orientation.head(e)
                sign[e] = (-1 if e[0] != h else 1, -1 if e[1] != h else 1)
        sums = {v: weighting(v) for v in g.vertices}
        done_sums = []  # (vertex, sum) in completion order
        used = set()

        def place(idx):
            nonlocal nodes, count, found
            if idx == m:
                if query.mode == MODE_COUNT:
                    count += 1
                    return False
                found = Labeling(
                    dict(zip(edges, assignment)),
                    orientation if oriented else None,
                )
                return True
            e = edges[idx]
            for x in pools[idx]:
                if x in used:
                    continue
                nodes += 1
                if nodes > query.cap:
                    raise BudgetExceededError("node cap exceeded mid-search", estimate=space)
                if oriented:
                    du, dv = sign[e]
                    inc_u, inc_v = du * x, dv * x
                else:
                    inc_u, inc_v = x, x
                sums[e[0]] += inc_u
                sums[e[1]] += inc_v
                ok = True
                fresh = []
                for v in complete_at[idx]:
                    sv = sums[v]
                    for w, sw in done_sums:
                        if sv == sw and frozenset((v, w)) not in skip_pairs:
                            ok = False
                            break
                    if ok:
                        for w, sw in fresh:
                            if sv == sw and frozenset((v, w)) not in skip_pairs:
                                ok = False
                                break
                    if not ok:
                        break
                    fresh.append((v, sv))
                if ok:
                    marker = len(done_sums)
                    done_sums.extend(fresh)
                    used.add(x)
                    assignment.append(x)
                    if place(idx + 1):
                        return True
                    assignment.pop()
                    used.discard(x)
                    del done_sums[marker:]
                sums[e[0]] -= inc_u
                sums[e[1]] -= inc_v
            return False

        assignment = []
        # vertices with no edges are complete from the start
        for v in g.vertices:
            if v not in last_edge and v not in skip_vertices:
                done_sums.append((v, sums[v]))
                for w, sw in done_sums[:-1]:
                    if sw == sums[v] and frozenset((v, w)) not in skip_pairs:
                        return False  # colliding isolated sums: nothing to search
        if m == 0:
            if query.mode == MODE_COUNT:
                count += 1
                return False
            found = Labeling({}, orientation if oriented else None)
            return True
        return place(0)

    if oriented:
        if query.orientation is not None:
            orientations = [query.orientation]
        else:
            orientations = _all_orientations(edges)
        for o in orientations:
            if run(o):
                break
    else:
        run(None)

    if query.mode == MODE_COUNT:
        return OracleResult(exists=count > 0, labeling=None, count=count, nodes=nodes)
    return OracleResult(exists=found is not None, labeling=found, count=None, nodes=nodes)


def _all_orientations(edges):
    for bits in iproduct((False, True), repeat=len(edges)):
        yield Orientation(
            {e: (max(e) if not flip else min(e)) for e, flip in zip(edges, bits)}
        )


# --------------------------------------------------------------- samplers

def sample_weighting(graph, rng):
    """Adversarial rational weights: small denominators, deliberate ties.

    With probability 1/2 all vertices of equal degree get equal weights,
    which is the hard case for sum distinctness.
    """
    if rng.random() < 0.5:
        by_degree = {}
        for v in graph.vertices:
            by_degree.setdefault(graph.degree(v), []).append(v)
        values = {}
        for d, vs in by_degree.items():
            w = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))
            for v in vs:
                values[v] = w
        return Weighting(values)
    return Weighting(
        {
            v: Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3, 4)))
            for v in graph.vertices
        }
    )


def sample_lists(graph, size, rng):
    """Adversarial lists of exactly ``size`` values from one shared pool."""
    pool = set()
    while len(pool) < size:
        pool.add(Fraction(rng.randint(-2 * size, 2 * size), rng.choice((1, 1, 1, 2, 3))))
    shared = sorted(pool)
    lists = {}
    for e in graph.edges:
        values = list(shared)
        if rng.random() < 0.3:
            # nudge one entry so the lists are not all identical
            out = rng.randrange(len(values))
            candidate = values[out] + Fraction(1, 7)
            if candidate not in pool:
                values[out] = candidate
        lists[e] = values
    return ListAssignment(lists)


@dataclass(frozen=True)
class SweepReport:
    variant: str
    k_max: int
    samples: int
    min_k: int  # None when nothing up to k_max worked
    per_k: tuple  # (k, successes, samples) rows
    capped: bool

    def to_obj(self):
        return {
            "variant": self.variant,
            "k_max": self.k_max,
            "samples": self.samples,
            "min_k": self.min_k,
            "per_k": [list(row) for row in self.per_k],
            "capped": self.capped,
        }


def sweep_min_k(graph, variant, *, trials=10, seed=0, k_max=None, cap=DEFAULT_CAP):
    """Smallest k whose labeling survives sampled adversarial weightings.

    Purely empirical: a reported minimum is only an upper envelope over the
    sampled weightings, never a proof. Oriented and unweighted variants have
    nothing to sample, so a single query per k decides it.
    """
    if k_max is None:
        n = graph.n
        k_max = (2 * n) // 3 if _is_oriented(variant) else (4 * n) // 3
    weighted = not _is_oriented(variant)
    rows = []
    capped = False
    min_k = None
    for k in range(k_max + 1):
        rng = random.Random(seed)
        successes = 0
        total = trials if weighted else 1
        ok = True
        for _ in range(total):
            w = sample_weighting(graph, rng) if weighted else None
            query = OracleQuery(graph, variant, k=k, weighting=w, cap=cap)
            try:
                result = brute_force(query)
            except BudgetExceededError:
                capped = True
                ok = False
                break
            if result.exists:
                successes += 1
            else:
                ok = False
                break
        rows.append((k, successes, total))
        if ok and successes == total:
            min_k = k
            break
    return SweepReport(variant, k_max, trials, min_k, tuple(rows), capped)
