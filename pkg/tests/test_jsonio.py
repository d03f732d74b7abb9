from fractions import Fraction

import pytest

from antimagic import Labeling, ListAssignment, Orientation, SchemaError, Weighting
from antimagic.jsonio import (
    edge_key,
    parse_edge_key,
    read_labeling,
    read_lists,
    read_weighting,
    write_labeling,
    write_lists,
    write_weighting,
)


def test_read_weighting_example():
    w = read_weighting('{"weights": {"1": "3/2"}}')
    assert w(1) == Fraction(3, 2)
    assert w(2) == 0


def test_weighting_round_trip():
    w = Weighting({1: Fraction(3, 2), -4: -2, 7: 0})
    assert read_weighting(write_weighting(w)) == w


def test_lists_round_trip():
    lists = ListAssignment({(1, 2): [1, Fraction(-1, 3), 4], (2, 3): [Fraction(5, 2)]})
    assert read_lists(write_lists(lists)) == lists


def test_duplicate_list_value_rejected():
    with pytest.raises(SchemaError) as err:
        read_lists('{"lists": {"1-2": ["1", "2/2"]}}')
    assert "1-2" in str(err.value)


def test_labeling_round_trip_with_orientation():
    f = Labeling(
        {(1, 2): 1, (2, 3): Fraction(7, 3)},
        Orientation.from_pairs([(2, 1), (2, 3)]),
    )
    doc = read_labeling(write_labeling(f, k=4, variant="quasi-oriented-antimagic"))
    assert doc.labeling == f
    assert doc.k == 4
    assert doc.variant == "quasi-oriented-antimagic"


def test_orientation_serialization_spells_direction():
    f = Labeling({(1, 2): 1}, Orientation.from_pairs([(2, 1)]))
    text = write_labeling(f)
    assert '"1-2": "2>1"' in text


def test_edge_keys_handle_negative_ids():
    assert edge_key((3, -2)) == "-2-3"
    assert parse_edge_key("-2-3") == (-2, 3)
    assert parse_edge_key("-5--2") == (-5, -2)


def test_schema_errors_carry_paths():
    with pytest.raises(SchemaError) as err:
        read_weighting('{"weights": {"x": "1"}}')
    assert err.value.path == "$.weights.x"
    with pytest.raises(SchemaError) as err:
        read_labeling('{"labels": {"1-2": "1"}, "orientation": {"1-2": "3>4"}}')
    assert err.value.path == "$.orientation.1-2"
    with pytest.raises(SchemaError):
        read_lists("not json")


def test_rational_strings_are_canonical():
    f = Labeling({(1, 2): Fraction(4, 2)})
    assert '"2"' in write_labeling(f)


def test_canonical_output_is_stable():
    w = Weighting({2: 1, 10: Fraction(1, 2), -1: 3})
    assert write_weighting(w) == write_weighting(Weighting(dict(reversed(w.items()))))
