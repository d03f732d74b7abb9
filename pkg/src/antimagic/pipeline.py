"""The constructive labeling pipeline.

Both variants follow the same plan. While the graph has a vertex of degree
at least 3, remove three of its edges and recurse; the remaining graph has
maximum degree 2, where a direct two-stage construction applies (greedy
labels on the non-matching edges, then a certified search over the matching
edges). Each removed triple is then restored by a three-variable certified
search that separates the four touched vertices from everything else.

The undirected variant labels from per-edge lists of size at least
m + floor(4n/3) and tolerates arbitrary vertex weights; the oriented variant
labels from {1..m + floor(2n/3)}, treating a signed value as a direction
plus a positive label (negative solutions flip the edge).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .cnsearch import (
    DEFAULT_NODE_BUDGET,
    KIND_DISTINCT_LABEL,
    KIND_FORBIDDEN,
    KIND_SIGNED,
    KIND_SUM,
    Constraint,
    ConstraintSystem,
    pick_candidate_sets,
    solve_constraints,
)
from .errors import (
    BudgetExceededError,
    CertificateError,
    ContractError,
    InfeasibleInstanceError,
)
from .graph import find_3plus_vertex, matched_decomposition, path_cycle_plans
from .jsonio import edge_key, labeling_to_obj
from .labeling import (
    MODE_ORIENTED,
    MODE_UNDIRECTED,
    Labeling,
    ListAssignment,
    Orientation,
    Weighting,
    oriented_vertex_sums,
    verify_quasi_antimagic,
    vertex_sums,
)
from .poly import (
    certify_reduction_monomial,
    nonzero_top_monomial,
    reduction_polynomial,
    vandermonde_coefficient_formula,
)

log = logging.getLogger("antimagic.pipeline")

VARIANT_UNDIRECTED = "weighted-list-quasi-antimagic"
VARIANT_ORIENTED = "quasi-oriented-antimagic"
VARIANTS = (VARIANT_UNDIRECTED, VARIANT_ORIENTED)


def default_extra_labels(n, variant):
    """Label budget beyond m that the construction is guaranteed under."""
    if variant == VARIANT_UNDIRECTED:
        return (4 * n) // 3
    if variant == VARIANT_ORIENTED:
        return (2 * n) // 3
    raise ContractError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class SolveRequest:
    graph: object
    variant: str
    weighting: Weighting = None
    lists: ListAssignment = None
    k: int = None
    node_budget: int = DEFAULT_NODE_BUDGET

    def resolved_k(self):
        if self.k is not None:
            if self.k < 0:
                raise ContractError("k must be nonnegative")
            return self.k
        return default_extra_labels(self.graph.n, self.variant)


@dataclass(frozen=True)
class SolveResult:
    labeling: Labeling
    report: object
    trace: tuple
    k: int
    variant: str

    def to_obj(self, include_trace=False):
        obj = labeling_to_obj(self.labeling, k=self.k, variant=self.variant)
        obj["verify"] = self.report.to_obj()
        if include_trace:
            obj["trace"] = list(self.trace)
        return obj


def solve(request):
    """Run the full pipeline and verify the result before returning it."""
    graph = request.graph
    if request.variant not in VARIANTS:
        raise ContractError(f"unknown variant {request.variant!r}")
    k = request.resolved_k()
    m = graph.m
    trace = []

    if request.variant == VARIANT_UNDIRECTED:
        weighting = request.weighting or Weighting.zero()
        lists = request.lists or ListAssignment.uniform_range(graph.edges, m + k)
        for e in graph.edges:
            if len(lists.for_edge(e)) < m + k:
                raise InfeasibleInstanceError(
                    f"list for edge {e} has {len(lists.for_edge(e))} values, need {m + k}"
                )
        labeling = _solve_undirected(graph, weighting, lists, request.node_budget, trace)
        report = verify_quasi_antimagic(
            graph, labeling, weighting, mode=MODE_UNDIRECTED, lists=lists
        )
    else:
        if request.weighting is not None and not request.weighting.is_zero():
            raise ContractError("the oriented variant takes no vertex weights")
        if request.lists is not None:
            raise ContractError("the oriented variant labels from 1..m+k, not from lists")
        labeling = _solve_oriented(graph, k, request.node_budget, trace)
        report = verify_quasi_antimagic(
            graph, labeling, mode=MODE_ORIENTED, label_bound=m + k
        )

    if not report.ok:
        raise CertificateError(
            f"solver output failed verification: {[v.to_obj() for v in report.violations[:3]]}"
        )
    return SolveResult(labeling, report, tuple(trace), k, request.variant)


def _solve_undirected(graph, weighting, lists, node_budget, trace):
    steps = []
    current = graph
    while True:
        found = find_3plus_vertex(current)
        if found is None:
            break
        vertex, edges3 = found
        steps.append((current, vertex, edges3))
        current = current.without_edges(edges3)
        log.debug("reduce at %s, %d edges remain", vertex, current.m)
        trace.append(
            {
                "action": "reduce",
                "vertex": vertex,
                "removed": [edge_key(e) for e in edges3],
                "remaining_edges": current.m,
            }
        )
    labeling = base_case_undirected(
        current, weighting, lists, node_budget=node_budget, trace=trace
    )
    while steps:
        host, vertex, edges3 = steps.pop()
        labeling = extend_reduction(
            host,
            vertex,
            edges3,
            labeling,
            variant=VARIANT_UNDIRECTED,
            weighting=weighting,
            lists=lists,
            node_budget=node_budget,
            trace=trace,
        )
    return labeling


def _solve_oriented(graph, extra, node_budget, trace):
    steps = []
    current = graph
    while True:
        found = find_3plus_vertex(current)
        if found is None:
            break
        vertex, edges3 = found
        steps.append((current, vertex, edges3))
        current = current.without_edges(edges3)
        trace.append(
            {
                "action": "reduce",
                "vertex": vertex,
                "removed": [edge_key(e) for e in edges3],
                "remaining_edges": current.m,
            }
        )
    labeling = base_case_oriented(current, extra=extra, node_budget=node_budget, trace=trace)
    while steps:
        host, vertex, edges3 = steps.pop()
        labeling = extend_reduction(
            host,
            vertex,
            edges3,
            labeling,
            variant=VARIANT_ORIENTED,
            extra=extra,
            node_budget=node_budget,
            trace=trace,
        )
    return labeling


def _finish_search(system, node_budget, strict, where):
    outcome = solve_constraints(system, budget=node_budget)
    if outcome.assignment is not None:
        return outcome
    if outcome.budget_exceeded:
        raise BudgetExceededError(f"search budget exhausted at {where}")
    if strict:
        raise CertificateError(
            f"certified search at {where} exhausted its candidate sets; "
            "this contradicts the coefficient certificate"
        )
    raise InfeasibleInstanceError(f"no labeling found at {where} with the given label budget")


# ------------------------------------------------------------- base cases

def base_case_undirected(graph, weighting, lists, *, node_budget=DEFAULT_NODE_BUDGET, trace=None):
    """Label a maximum-degree-2 graph from lists under arbitrary weights.

    Stage 1 walks the non-matching edges component by component, greedily
    taking the smallest list value that keeps used labels distinct, avoids
    the two possible collisions with already-summed neighbors, and keeps the
    uncovered vertices' sums pairwise distinct. Stage 2 hands the matching
    edges to the certified search.
    """
    if graph.max_degree() > 2:
        raise ContractError("base case requires maximum degree 2")
    weighting = weighting or Weighting.zero()
    if trace is None:
        trace = []
    if graph.m == 0:
        return Labeling({})

    cd, matching = matched_decomposition(graph)
    plans = path_cycle_plans(graph)
    s = cd.s
    core = graph.non_isolated()
    m = graph.m
    kvars = len(matching.edges)
    if 2 * kvars + s != len(core):
        raise CertificateError("matching size does not satisfy (n - s) / 2")
    strict = lists.min_size() >= m + (4 * len(core)) // 3

    complement = [e for p in plans for e in p.unmatched]
    uncovered = list(cd.uncovered_vertices)
    uncovered_set = set(uncovered)
    total_c = len(complement)

    sums = {v: weighting(v) for v in core}
    used = []
    used_set = set()
    greedy = []
    for e in complement:
        y, z = e
        forbidden = set(used_set)
        n_used = len(forbidden)
        n_adj = 0
        for a, b in ((y, z), (z, y)):
            for u in graph.neighbors(a):
                if u != b:
                    n_adj += 1
                    forbidden.add(sums[u] - sums[a])
        n_unc = 0
        vi = y if y in uncovered_set else (z if z in uncovered_set else None)
        if vi is not None:
            for vj in uncovered:
                if vj != vi:
                    n_unc += 1
                    forbidden.add(sums[vj] - sums[vi])
        if n_used > total_c - 1 or n_adj > 2 or n_unc > max(s - 1, 0):
            raise CertificateError(
                f"greedy budget violated at {e}: used={n_used}, adjacent={n_adj}, uncovered={n_unc}"
            )
        label = next((x for x in lists.for_edge(e) if x not in forbidden), None)
        if label is None:
            if strict:
                raise CertificateError(
                    f"greedy stage found no label for {e} with {len(forbidden)} forbidden values"
                )
            raise InfeasibleInstanceError(f"list for edge {e} is exhausted in the greedy stage")
        used.append(label)
        used_set.add(label)
        sums[y] += label
        sums[z] += label
        greedy.append([n_used, n_adj, n_unc])

    order = [p.matched[0] for p in plans if len(p.walk) == 2]
    order += [e for p in plans if len(p.walk) > 2 for e in p.matched]

    base_exp = 2 * s + (m - kvars)
    constraints = []
    for i in range(kvars):
        for j in range(i + 1, kvars):
            constraints.append(Constraint(KIND_DISTINCT_LABEL, ((i, 1), (j, -1))))
            for u in order[i]:
                for u2 in order[j]:
                    constraints.append(
                        Constraint(KIND_SUM, ((i, 1), (j, -1)), sums[u] - sums[u2])
                    )
    for i in range(kvars):
        for x in used:
            constraints.append(Constraint(KIND_FORBIDDEN, ((i, 1),), -x))
        for u in order[i]:
            for vj in uncovered:
                constraints.append(Constraint(KIND_SUM, ((i, 1),), sums[u] - sums[vj]))

    domains = []
    for i, e in enumerate(order):
        values = lists.for_edge(e)
        want = 2 * (kvars - 1) + i + base_exp + 1
        if len(values) < want:
            if strict:
                raise CertificateError(f"list for {e} cannot hold {want} candidates")
            want = len(values)
        domains.append(pick_candidate_sets(values, want, edge=e))

    outcome = _finish_search(
        ConstraintSystem(tuple(domains), tuple(constraints)),
        node_budget,
        strict,
        "the matching stage",
    )
    labels = dict(zip(complement, used))
    for e, x in zip(order, outcome.assignment):
        labels[e] = x
    trace.append(
        {
            "action": "base-undirected",
            "matching_size": kvars,
            "odd_components": s,
            "complement_size": total_c,
            "greedy": greedy,
            "certificate": {
                "kind": "alternating-matching",
                "variables": kvars,
                "coefficient": str(vandermonde_coefficient_formula(kvars, 2)) if kvars else "1",
            },
            "search_nodes": outcome.nodes_explored,
        }
    )
    return Labeling(labels)


def base_case_oriented(graph, *, extra=None, node_budget=DEFAULT_NODE_BUDGET, trace=None):
    """Orient and label a maximum-degree-2 graph with labels in 1..m+extra.

    Starts from the ascending orientation. Stage 1 greedily labels the
    non-matching edges, only keeping labels distinct and the uncovered
    vertices' oriented sums pairwise distinct. Stage 2 searches signed
    values for the matching edges; a negative solution flips its edge and
    contributes its absolute value.
    """
    if graph.max_degree() > 2:
        raise ContractError("base case requires maximum degree 2")
    if extra is None:
        extra = default_extra_labels(graph.n, VARIANT_ORIENTED)
    if trace is None:
        trace = []
    orientation = Orientation.ascending(graph.edges)
    if graph.m == 0:
        return Labeling({}, orientation)

    cd, matching = matched_decomposition(graph)
    plans = path_cycle_plans(graph)
    s = cd.s
    core = graph.non_isolated()
    m = graph.m
    bound = m + extra
    kvars = len(matching.edges)
    if 2 * kvars + s != len(core):
        raise CertificateError("matching size does not satisfy (n - s) / 2")
    strict = extra >= (2 * len(core)) // 3

    complement = [e for p in plans for e in p.unmatched]
    uncovered = list(cd.uncovered_vertices)
    uncovered_set = set(uncovered)
    total_c = len(complement)

    sums = {v: Fraction(0) for v in core}
    used = []
    used_set = set()
    greedy = []
    for e in complement:
        y, z = e
        forbidden = set(used_set)
        n_used = len(forbidden)
        n_unc = 0
        vi = y if y in uncovered_set else (z if z in uncovered_set else None)
        if vi is not None:
            coef = 1 if orientation.head(e) == vi else -1
            for vj in uncovered:
                if vj != vi:
                    n_unc += 1
                    forbidden.add(coef * (sums[vj] - sums[vi]))
        if n_used > total_c - 1 or n_unc > max(s - 1, 0):
            raise CertificateError(
                f"greedy budget violated at {e}: used={n_used}, uncovered={n_unc}"
            )
        label = next((x for x in range(1, bound + 1) if x not in forbidden), None)
        if label is None:
            if strict:
                raise CertificateError(f"greedy stage found no label for {e}")
            raise InfeasibleInstanceError(f"label range 1..{bound} exhausted at {e}")
        used.append(label)
        used_set.add(label)
        sums[orientation.head(e)] += label
        sums[orientation.tail(e)] -= label
        greedy.append([n_used, n_unc])
    if sum(sums.values(), Fraction(0)) != 0:
        raise CertificateError("oriented sums do not cancel after the greedy stage")

    order = [p.matched[0] for p in plans if len(p.walk) == 2]
    order += [e for p in plans if len(p.walk) > 2 for e in p.matched]
    heads = [orientation.head(e) for e in order]
    tails = [orientation.tail(e) for e in order]

    base_exp = 1 + 2 * s + 2 * (m - kvars)
    constraints = []
    for i in range(kvars):
        constraints.append(Constraint(KIND_SUM, ((i, 2),), sums[heads[i]] - sums[tails[i]]))
        for x in used:
            constraints.append(
                Constraint(KIND_SIGNED, ((i, 1),), Fraction(-x * x), squared=True)
            )
        for vj in uncovered:
            constraints.append(Constraint(KIND_SUM, ((i, 1),), sums[heads[i]] - sums[vj]))
            constraints.append(Constraint(KIND_SUM, ((i, -1),), sums[tails[i]] - sums[vj]))
    for i in range(kvars):
        for j in range(i + 1, kvars):
            constraints.append(Constraint(KIND_SIGNED, ((i, 1), (j, -1)), squared=True))
            constraints.append(
                Constraint(KIND_SUM, ((i, 1), (j, -1)), sums[heads[i]] - sums[heads[j]])
            )
            constraints.append(
                Constraint(KIND_SUM, ((i, 1), (j, 1)), sums[heads[i]] - sums[tails[j]])
            )
            constraints.append(
                Constraint(KIND_SUM, ((i, -1), (j, 1)), sums[tails[i]] - sums[tails[j]])
            )
            constraints.append(
                Constraint(KIND_SUM, ((i, -1), (j, -1)), sums[tails[i]] - sums[heads[j]])
            )

    signed = [x for v in range(1, bound + 1) for x in (v, -v)]
    domains = []
    for i, e in enumerate(order):
        want = 2 * (kvars - 1 + i) + base_exp + 1
        if len(signed) < want:
            if strict:
                raise CertificateError(f"label range cannot hold {want} candidates for {e}")
            want = len(signed)
        domains.append(pick_candidate_sets(signed, want, edge=e, magnitude_order=True))

    outcome = _finish_search(
        ConstraintSystem(tuple(domains), tuple(constraints)),
        node_budget,
        strict,
        "the matching stage",
    )
    labels = dict(zip(complement, (Fraction(x) for x in used)))
    flips = []
    for e, x in zip(order, outcome.assignment):
        labels[e] = abs(x)
        if x < 0:
            flips.append(e)
    orientation = orientation.flipped(flips)
    trace.append(
        {
            "action": "base-oriented",
            "matching_size": kvars,
            "odd_components": s,
            "complement_size": total_c,
            "greedy": greedy,
            "flipped": [edge_key(e) for e in flips],
            "certificate": {
                "kind": "alternating-matching",
                "variables": kvars,
                "coefficient": str(vandermonde_coefficient_formula(kvars, 1)) if kvars else "1",
            },
            "search_nodes": outcome.nodes_explored,
        }
    )
    labeling = Labeling(labels, orientation)
    if sum(oriented_vertex_sums(graph, labeling).values(), Fraction(0)) != 0:
        raise CertificateError("oriented sums do not cancel after the matching stage")
    return labeling


# -------------------------------------------------------------- extension

def extend_reduction(
    graph,
    vertex,
    removed,
    inner,
    *,
    variant,
    weighting=None,
    lists=None,
    extra=None,
    node_budget=DEFAULT_NODE_BUDGET,
    trace=None,
):
    """Extend a labeling of graph-minus-three-edges back onto the host graph.

    ``removed`` holds three edges at ``vertex`` and ``inner`` a valid
    labeling of ``graph.without_edges(removed)``. The three new labels are
    found by a certified search whose constraints separate the four touched
    vertices from every other vertex and from each other.
    """
    if variant not in VARIANTS:
        raise ContractError(f"unknown variant {variant!r}")
    if len(removed) != 3:
        raise ContractError("exactly three removed edges are required")
    if trace is None:
        trace = []
    n = graph.n
    others = []
    us = []
    for e in removed:
        if vertex not in e:
            raise ContractError(f"removed edge {e} is not incident to {vertex}")
        us.append(e[0] if e[1] == vertex else e[1])
    touched = {vertex, *us}
    if len(touched) != 4:
        raise ContractError("removed edges must reach three distinct neighbors")
    others = [w for w in graph.vertices if w not in touched]
    inner_graph = graph.without_edges(removed)

    mode = MODE_UNDIRECTED if variant == VARIANT_UNDIRECTED else MODE_ORIENTED
    cert = certify_reduction_monomial(n, mode)
    fallback = not cert.nonzero
    if fallback:
        exps = nonzero_top_monomial(reduction_polynomial(n, mode))
    else:
        exps = cert.exponents

    constraints = []
    if variant == VARIANT_UNDIRECTED:
        if lists is None:
            raise ContractError("the undirected extension needs the list assignment")
        weighting = weighting or Weighting.zero()
        strict = lists.min_size() >= graph.m + (4 * n) // 3
        sums = vertex_sums(inner_graph, inner, weighting)
        used = set(inner.values())
        for i in range(3):
            for j in range(i + 1, 3):
                constraints.append(Constraint(KIND_DISTINCT_LABEL, ((i, 1), (j, -1))))
                constraints.append(
                    Constraint(KIND_SUM, ((i, 1), (j, -1)), sums[us[i]] - sums[us[j]])
                )
        for w in others:
            constraints.append(
                Constraint(KIND_SUM, ((0, 1), (1, 1), (2, 1)), sums[vertex] - sums[w])
            )
        for i in range(3):
            for w in others:
                constraints.append(Constraint(KIND_SUM, ((i, 1),), sums[us[i]] - sums[w]))
            terms = tuple((j, 1) for j in range(3) if j != i)
            constraints.append(Constraint(KIND_SUM, terms, sums[vertex] - sums[us[i]]))

        domains = []
        for i, e in enumerate(removed):
            avail = [x for x in lists.for_edge(e) if x not in used]
            want = exps[i] + 1
            if len(avail) < want:
                if strict:
                    raise CertificateError(f"only {len(avail)} fresh labels left for {e}")
                want = len(avail)
            domains.append(pick_candidate_sets(avail, want, edge=e))

        outcome = _finish_search(
            ConstraintSystem(tuple(domains), tuple(constraints)),
            node_budget,
            strict,
            f"the extension at vertex {vertex}",
        )
        labels = dict(inner.items())
        for e, x in zip(removed, outcome.assignment):
            labels[e] = x
        result = Labeling(labels)
    else:
        if extra is None:
            extra = default_extra_labels(n, VARIANT_ORIENTED)
        strict = extra >= (2 * n) // 3
        bound = graph.m + extra
        sums = oriented_vertex_sums(inner_graph, inner)
        used_abs = {abs(x) for x in inner.values()}
        for i in range(3):
            for j in range(i + 1, 3):
                constraints.append(Constraint(KIND_SIGNED, ((i, 1), (j, -1)), squared=True))
                constraints.append(
                    Constraint(KIND_SUM, ((i, -1), (j, 1)), sums[us[i]] - sums[us[j]])
                )
        for w in others:
            constraints.append(
                Constraint(KIND_SUM, ((0, 1), (1, 1), (2, 1)), sums[vertex] - sums[w])
            )
        for i in range(3):
            for w in others:
                constraints.append(Constraint(KIND_SUM, ((i, -1),), sums[us[i]] - sums[w]))
            terms = tuple((j, 2 if j == i else 1) for j in range(3))
            constraints.append(Constraint(KIND_SUM, terms, sums[vertex] - sums[us[i]]))

        signed = [x for v in range(1, bound + 1) if v not in used_abs for x in (v, -v)]
        domains = []
        for i, e in enumerate(removed):
            want = exps[i] + 1
            if len(signed) < want:
                if strict:
                    raise CertificateError(f"only {len(signed)} signed labels left for {e}")
                want = len(signed)
            domains.append(pick_candidate_sets(signed, want, edge=e, magnitude_order=True))

        outcome = _finish_search(
            ConstraintSystem(tuple(domains), tuple(constraints)),
            node_budget,
            strict,
            f"the extension at vertex {vertex}",
        )
        heads = {e: inner.orientation.head(e) for e in inner_graph.edges}
        labels = dict(inner.items())
        for e, x in zip(removed, outcome.assignment):
            labels[e] = abs(x)
            heads[e] = vertex if x > 0 else (e[0] if e[1] == vertex else e[1])
        result = Labeling(labels, Orientation(heads))
        if sum(oriented_vertex_sums(graph, result).values(), Fraction(0)) != 0:
            raise CertificateError("oriented sums do not cancel after the extension")

    trace.append(
        {
            "action": "extend",
            "vertex": vertex,
            "edges": [edge_key(e) for e in removed],
            "exponents": list(exps),
            "certificate": {
                "mode": mode,
                "n": n,
                "coefficient": str(cert.coefficient),
                "fallback": fallback,
            },
            "search_nodes": outcome.nodes_explored,
        }
    )
    return result
