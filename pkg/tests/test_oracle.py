import pytest

from antimagic import (
    BudgetExceededError,
    ContractError,
    Graph,
    OracleQuery,
    Weighting,
    brute_force,
    sweep_min_k,
    verify_quasi_antimagic,
)
from antimagic.generators import complete, cycle, path, star
from antimagic.oracle import (
    ANTIMAGIC,
    MODE_COUNT,
    MODE_FIND_ONE,
    ORIENTED_ANTIMAGIC,
    QUASI_ANTIMAGIC,
    QUASI_ORIENTED_ANTIMAGIC,
    estimate_space,
)

K2 = Graph.from_edges([(1, 2)])


def test_c4_is_antimagic():
    assert brute_force(OracleQuery(cycle(4), ANTIMAGIC, k=0)).exists


def test_k2_is_not_antimagic_but_quasi_is():
    assert not brute_force(OracleQuery(K2, ANTIMAGIC, k=0)).exists
    assert brute_force(OracleQuery(K2, QUASI_ANTIMAGIC, k=0)).exists


def test_counts_frozen_by_naive_enumeration():
    # frozen from an independent itertools.permutations count
    assert brute_force(OracleQuery(path(3), ANTIMAGIC, k=0, mode=MODE_COUNT)).count == 2
    assert brute_force(OracleQuery(cycle(3), ANTIMAGIC, k=0, mode=MODE_COUNT)).count == 6
    assert brute_force(OracleQuery(cycle(4), ANTIMAGIC, k=0, mode=MODE_COUNT)).count == 8
    assert brute_force(OracleQuery(cycle(5), ANTIMAGIC, k=0, mode=MODE_COUNT)).count == 30


def test_oriented_k2_count_with_k1():
    # 2 orientations x 2 label choices, every pair has sums +-x
    res = brute_force(OracleQuery(K2, ORIENTED_ANTIMAGIC, k=1, mode=MODE_COUNT))
    assert res.count == 4


def test_find_one_outputs_pass_the_verifier():
    for g in (path(4), cycle(5), star(4)):
        res = brute_force(OracleQuery(g, QUASI_ANTIMAGIC, k=2, mode=MODE_FIND_ONE))
        assert res.exists
        assert verify_quasi_antimagic(g, res.labeling, label_bound=g.m + 2).ok
        res = brute_force(
            OracleQuery(g, QUASI_ORIENTED_ANTIMAGIC, k=2, mode=MODE_FIND_ONE, cap=10**10)
        )
        assert res.exists
        assert verify_quasi_antimagic(
            g, res.labeling, mode="oriented", label_bound=g.m + 2
        ).ok


def test_fixed_orientation_query():
    from antimagic import Orientation

    g = path(3)
    fixed = Orientation.ascending(g.edges)
    res = brute_force(
        OracleQuery(g, QUASI_ORIENTED_ANTIMAGIC, k=1, mode=MODE_FIND_ONE, orientation=fixed)
    )
    assert res.exists
    assert res.labeling.orientation == fixed


def test_cap_refusal_carries_estimate():
    g = complete(5)
    with pytest.raises(BudgetExceededError) as err:
        brute_force(OracleQuery(g, ANTIMAGIC, k=0, cap=100))
    assert err.value.estimate == estimate_space(OracleQuery(g, ANTIMAGIC, k=0))


def test_contract_checks():
    with pytest.raises(ContractError):
        brute_force(OracleQuery(K2, "made-up-variant"))
    with pytest.raises(ContractError):
        brute_force(OracleQuery(K2, ORIENTED_ANTIMAGIC, weighting=Weighting({1: 1})))


def test_isolated_vertices_matter_only_for_strict_variants():
    g = Graph.from_edges([(1, 2), (2, 3)], vertices=[9, 10])
    # two isolated vertices share sum 0: plain antimagic is impossible
    assert not brute_force(OracleQuery(g, ANTIMAGIC, k=0)).exists
    assert brute_force(OracleQuery(g, QUASI_ANTIMAGIC, k=0)).exists


def test_sweep_p3_min_k_zero():
    report = sweep_min_k(path(3), QUASI_ANTIMAGIC, trials=5, seed=1)
    assert report.min_k == 0


def test_sweep_k2_antimagic_never_succeeds():
    report = sweep_min_k(K2, ANTIMAGIC, trials=3, seed=1, k_max=3)
    assert report.min_k is None
    report = sweep_min_k(K2, QUASI_ANTIMAGIC, trials=3, seed=1, k_max=3)
    assert report.min_k == 0


def test_sweep_c3_within_default_bound():
    report = sweep_min_k(cycle(3), QUASI_ANTIMAGIC, trials=8, seed=3)
    assert report.min_k is not None
    assert report.min_k <= 4  # the default budget floor(4 * 3 / 3)


def test_lists_mode():
    from antimagic import ListAssignment

    g = path(3)
    lists = ListAssignment({e: [1, 5, 9] for e in g.edges})
    res = brute_force(OracleQuery(g, QUASI_ANTIMAGIC, lists=lists, mode=MODE_FIND_ONE))
    assert res.exists
    assert all(x in (1, 5, 9) for x in res.labeling.values())
