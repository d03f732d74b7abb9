"""Backtracking search over the candidate sets a nonzero coefficient licenses.

The Combinatorial Nullstellensatz guarantees only existence: a polynomial of
degree t with a nonzero monomial ``prod x_i^(t_i)`` (sum t_i = t) is nonzero
somewhere on any product of candidate sets of sizes t_i + 1. The solver
therefore keeps the defining polynomial factored into structured constraints
(one per linear or quadratic factor) and backtracks over the candidate
product, pruning as soon as a factor's variables are all assigned. An
exhausted search over correctly sized sets contradicts the certificate, so
callers treat it as an internal error rather than an answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, InfeasibleInstanceError

KIND_DISTINCT_LABEL = "pairwise-distinct-label"
KIND_SUM = "sum-collision"
KIND_FORBIDDEN = "forbidden-value"
KIND_SIGNED = "signed-collision"

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class Constraint:
    """One factor of the defining polynomial, required to be nonzero.

    The factor is ``sum(coeff * x_i) + constant`` over the listed variables,
    with every ``x_i`` replaced by ``x_i**2`` when ``squared`` is set (the
    form used for distinct-absolute-value requirements).
    """

    kind: str
    terms: tuple  # ((variable index, integer coefficient), ...)
    constant: Fraction = Fraction(0)
    squared: bool = False

    @property
    def last_variable(self):
        return max(i for i, _ in self.terms)

    def value(self, point):
        total = Fraction(self.constant)
        for i, c in self.terms:
            x = point[i]
            total += c * (x * x if self.squared else x)
        return total

    def is_satisfied(self, point):
        return self.value(point) != 0


@dataclass(frozen=True)
class ConstraintSystem:
    """Candidate sets (in search order) plus the constraints over them."""

    domains: tuple
    constraints: tuple

    def __post_init__(self):
        k = len(self.domains)
        for c in self.constraints:
            if not c.terms:
                raise ContractError("constraint references no variables")
            for i, _ in c.terms:
                if not 0 <= i < k:
                    raise ContractError(f"constraint references unknown variable {i}")

    @property
    def variable_count(self):
        return len(self.domains)

    def polynomial_value(self, point):
        """Product of all factor values: nonzero iff every constraint holds."""
        total = Fraction(1)
        for c in self.constraints:
            total *= c.value(point)
        return total

    def check(self, point):
        return all(c.is_satisfied(point) for c in self.constraints)


@dataclass(frozen=True)
class SearchOutcome:
    assignment: tuple
    nodes_explored: int
    exhausted: bool

    @property
    def budget_exceeded(self):
        return self.assignment is None and not self.exhausted


def solve_constraints(system, budget=DEFAULT_NODE_BUDGET):
    """Depth-first search in domain order; first satisfying point wins.

    Each attempted value assignment counts as one node. With ``budget=None``
    the search runs to exhaustion; otherwise hitting the budget returns an
    outcome with no assignment and ``exhausted=False``.
    """
    k = system.variable_count
    by_last = [[] for _ in range(k)]
    for c in system.constraints:
        by_last[c.last_variable].append(c)

    point = [None] * k
    nodes = 0

    def descend(i):
        nonlocal nodes
        if i == k:
            return True
        for value in system.domains[i]:
            if budget is not None and nodes >= budget:
                return None
            nodes += 1
            point[i] = value
            if all(c.is_satisfied(point) for c in by_last[i]):
                found = descend(i + 1)
                if found is None:
                    return None
                if found:
                    return True
        point[i] = None
        return False

    result = descend(0)
    if result is True:
        return SearchOutcome(tuple(point), nodes, exhausted=False)
    return SearchOutcome(None, nodes, exhausted=result is False)


def pick_candidate_sets(values, size, *, edge=None, magnitude_order=False):
    """Deterministic candidate set of exactly ``size`` values.

    Values are ordered ascending, or by (absolute value, positive first)
    when ``magnitude_order`` is set, and the first ``size`` are kept. That
    order is also the search order, so small labels are preferred.
    """
    if magnitude_order:
        ordered = sorted(values, key=lambda x: (abs(x), x < 0))
    else:
        ordered = sorted(values)
    if len(ordered) < size:
        where = f" for edge {edge}" if edge is not None else ""
        raise InfeasibleInstanceError(
            f"need {size} candidate labels{where}, only {len(ordered)} available"
        )
    return tuple(ordered[:size])
