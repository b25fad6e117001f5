import json
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pathtoggle.core import IndependentSet, ToggleWord, phi, random_coxeter, reverse
from pathtoggle.enumeration import count_independent_sets
from pathtoggle.orbits import (
    Statistic,
    all_orbits,
    board_from_csv,
    board_to_csv,
    check_homomesy,
    count_symmetrical_in,
    is_reversible,
    orbit_average,
    orbit_from_json,
    orbit_of,
    orbit_to_json,
)

BOARD_7 = [
    "1010100", "0000010", "1010001", "0001000", "1000101",
    "0100000", "0010101", "1000000", "0101010", "0000001",
]

BOARD_10 = [
    "1010100101", "0000010000", "1010001010", "0001000001", "1000101000",
    "0100000101", "0010100000", "1000010101", "0101000000", "0000101010",
    "1010000001", "0001010100", "1000000010", "0101010001", "0000001000",
]


def test_seven_vertex_board():
    s = IndependentSet.from_string("1010100")
    o = orbit_of(s, phi(7))
    assert [str(x) for x in o.starting_at(s)] == BOARD_7
    assert o.column_sums == (4, 2, 3, 2, 3, 2, 4)


def test_ten_vertex_board():
    s = IndependentSet.from_string("1010100101")
    o = orbit_of(s, phi(10))
    assert [str(x) for x in o.starting_at(s)] == BOARD_10
    assert o.column_sums == (6, 3, 4, 4, 4, 4, 4, 4, 3, 6)


def test_board_cell_access_wraps_rows():
    o = orbit_of(IndependentSet.from_string("1010100"), phi(7))
    assert o.S(0, 1) == o.board[0, 0]
    assert o.S(len(o), 1) == o.S(0, 1)
    assert o.S(-1, 7) == o.S(len(o) - 1, 7)
    assert o.S(3, 0) == 0 and o.S(3, 8) == 0


def test_orbit_is_canonical_rotation():
    a = orbit_of(IndependentSet.from_string("1010100"), phi(7))
    b = orbit_of(IndependentSet.from_string("0101010"), phi(7))
    assert a == b
    assert a.masks[0] == min(a.masks)


@pytest.mark.parametrize("n", range(1, 13))
def test_orbits_partition_states(n):
    orbits = all_orbits(n, phi(n))
    seen = [m for o in orbits for m in o.masks]
    assert len(seen) == len(set(seen)) == count_independent_sets(n)
    for o in orbits:
        # each row maps to the next under phi
        for a, b in zip(o.states, o.states[1:] + o.states[:1]):
            assert phi(n)(a) == b


@pytest.mark.parametrize("n", [2, 3, 7, 10])
def test_phi_orbit_sizes(n):
    expected = {2: [3], 3: [2, 3], 7: [2, 3, 5, 10, 14],
                10: [3, 5, 11, 15, 15, 15, 19, 19, 19, 23]}
    assert sorted(len(o) for o in all_orbits(n, phi(n))) == expected[n]


def test_statistic_parse_and_eval():
    f = Statistic.parse("2x1+x2-1/2x3", 4)
    assert f.coefficients == (Fraction(2), Fraction(1), Fraction(-1, 2), Fraction(0))
    s = IndependentSet.from_string("1010")
    assert f(s) == Fraction(3, 2)
    assert str(Statistic.parse(str(f), 4)) == str(f)
    with pytest.raises(ValueError):
        Statistic.parse("x5", 4)
    with pytest.raises(ValueError):
        Statistic.parse("2y1", 4)


def test_average_is_exact():
    o = orbit_of(IndependentSet.from_string("1010100"), phi(7))
    assert orbit_average(o, Statistic.indicator(7, 1)) == Fraction(2, 5)


@pytest.mark.parametrize("n", range(2, 11))
def test_phi_homomesies(n):
    for j in range(1, n + 1):
        f = Statistic.indicator(n, j) - Statistic.indicator(n, n + 1 - j)
        rep = check_homomesy(n, phi(n), f)
        assert rep.homomesic and rep.constant == 0
    left = 2 * Statistic.indicator(n, 1) + Statistic.indicator(n, 2)
    right = Statistic.indicator(n, n - 1) + 2 * Statistic.indicator(n, n)
    for f in (left, right):
        rep = check_homomesy(n, phi(n), f)
        assert rep.homomesic and rep.constant == 1


def test_non_homomesy_reports_witnesses():
    rep = check_homomesy(7, phi(7), Statistic.indicator(7, 1))
    assert not rep
    assert rep.constant is None
    (a, fa), (b, fb) = rep.witnesses
    assert fa != fb
    assert "not homomesic" in rep.describe()


def test_single_toggle_word_not_homomesic():
    # a word that is not a Coxeter element, orbits are fixed points and 2-cycles
    rep = check_homomesy(4, ToggleWord(4, (1,)), Statistic.indicator(4, 1) - Statistic.indicator(4, 4))
    assert not rep


@given(st.integers(2, 11), st.integers(0, 10_000))
def test_random_coxeter_homomesy(n, seed):
    w = random_coxeter(n, random.Random(seed))
    f = Statistic.indicator(n, 1) - Statistic.indicator(n, n)
    assert check_homomesy(n, w, f).constant == 0


def test_reversibility_and_symmetric_count():
    n = 7
    orbits = all_orbits(n, phi(n))
    for o in orbits:
        rev = {reverse(s).mask for s in o.states}
        assert is_reversible(o) == (rev == o.mask_set)
        if not is_reversible(o):
            assert count_symmetrical_in(o) == 0


def test_json_round_trip():
    o = orbit_of(IndependentSet.from_string("1010100"), phi(7))
    data = json.loads(json.dumps(orbit_to_json(o)))
    assert data["schema_version"] == 1
    back = orbit_from_json(data)
    assert back == o and back.word == o.word
    bad = dict(data, states=data["states"][:-1])
    with pytest.raises(ValueError):
        orbit_from_json(bad)


def test_csv_round_trip():
    o = orbit_of(IndependentSet.from_string("1010100101"), phi(10))
    text = board_to_csv(o)
    assert text.splitlines()[0] == ",".join(str(j) for j in range(1, 11))
    assert np.array_equal(board_from_csv(text), o.board)

