import pytest
from hypothesis import given, strategies as st

from pathtoggle.core import CoxeterWord, IndependentSet, phi
from pathtoggle.orbits import all_orbits, is_reversible, orbit_of
from pathtoggle.snakes import (
    SnakeComposition,
    class_is_reversible,
    composition_class,
    composition_classes,
    composition_seed,
    format_sizes_table,
    least_rotation,
    next_composition,
    next_start_offset,
    orbit_composition_class,
    orbit_from_composition,
    orbit_size,
    orbit_sizes_for_n,
    orbits_of_size,
    phi_orbits_by_class,
    size_moduli,
    sizes_table,
    smallest_period,
    snake_decompose,
)

# orbit size -> (parts as 2s and 3s, snake pattern, modulus), one entry per row
SIZE_TABLE = {
    1: [], 2: [((2,), "2", 2)], 3: [((3,), "1", 1)], 4: [],
    5: [((3, 2), "12", 3)], 6: [],
    7: [((3, 2, 2), "122", 5)],
    8: [((3, 3, 2), "112", 4)],
    9: [((3, 2, 2, 2), "1222", 7)],
    10: [((3, 3, 2, 2), "1122", 6)],
    11: [((3, 3, 3, 2), "1112", 5), ((3, 2, 2, 2, 2), "12222", 9)],
    12: [((3, 3, 2, 2, 2), "11222", 8), ((3, 2, 3, 2, 2), "12122", 8)],
}


@given(st.lists(st.integers(0, 3), max_size=20))
def test_booth_matches_brute_force(seq):
    rots = [tuple(seq[k:] + seq[:k]) for k in range(len(seq))] or [()]
    assert least_rotation(seq) == min(rots)


@given(st.lists(st.integers(1, 2), min_size=1, max_size=16))
def test_smallest_period_divides(seq):
    d = smallest_period(seq)
    assert len(seq) % d == 0
    assert tuple(seq) == tuple(seq[:d]) * (len(seq) // d)


def test_composition_basics():
    c = SnakeComposition.parse("221121")
    assert (c.total, c.n, c.N1, c.N2, c.psi) == (9, 10, 3, 3, 1)
    assert str(next_composition(c)) == "211212"
    assert next_start_offset(c) == 2
    assert next_start_offset(next_composition(next_composition(c))) == 3
    with pytest.raises(ValueError):
        SnakeComposition.parse("2131")
    with pytest.raises(ValueError):
        SnakeComposition(())


def test_canonical_class_representative():
    cls = {"21121", "11212", "12121", "21211", "12112"}
    reps = {str(composition_class(SnakeComposition.parse(c))) for c in cls}
    assert reps == {"11212"}
    assert str(composition_class(SnakeComposition.parse("121"))) == "112"
    assert class_is_reversible(SnakeComposition.parse("2211"))
    assert not class_is_reversible(SnakeComposition.parse("221121"))


def test_periodic_composition():
    c = SnakeComposition.parse("2121")
    assert c.psi == 2 and not c.is_aperiodic
    assert orbit_size(c) == 5
    o = orbit_from_composition(c)
    assert len(o) == 5
    assert [str(s) for s in o.starting_at(composition_seed(c))] == [
        "1010000", "0001010", "1000001", "0101000", "0000101"]


def test_seven_vertex_snakes():
    s = IndependentSet.from_string("1010100")
    o = orbit_of(s, phi(7))
    comps = sorted(str(sn.composition) for sn in snake_decompose(o))
    assert comps == sorted(["2211", "2112", "1122", "1221"])


def test_ten_vertex_reconstruction():
    c = SnakeComposition.parse("221121")
    o = orbit_from_composition(c)
    assert len(o) == orbit_size(c) == 15
    assert IndependentSet.from_string("1010100101") in o
    assert o == orbit_of(IndependentSet.from_string("1010100101"), phi(10))
    seed = composition_seed(c)
    assert str(seed) == "1010100101"
    size = len(o)
    offset = o.masks.index(seed.mask)
    starts = sorted(((sn.start_row - offset) % size, str(sn.composition)) for sn in snake_decompose(o))
    assert starts == [(0, "221121"), (2, "211212"), (4, "112122"),
                      (7, "121221"), (10, "212211"), (12, "122112")]


@pytest.mark.parametrize("n", range(2, 13))
def test_round_trip_every_class(n):
    for c in composition_classes(n - 1):
        o = orbit_from_composition(c)
        assert len(o) == orbit_size(c)
        assert orbit_composition_class(o) == c
        for sn in snake_decompose(o):
            assert composition_class(sn.composition) == c


@pytest.mark.parametrize("n", range(2, 13))
def test_classes_biject_with_orbits(n):
    by_class = phi_orbits_by_class(n)
    assert sorted(by_class) == composition_classes(n - 1)
    assert orbit_sizes_for_n(n) == sorted(len(o) for o in all_orbits(n, phi(n)))


@pytest.mark.parametrize("n", range(2, 13))
def test_reversible_classes(n):
    for c, o in phi_orbits_by_class(n).items():
        assert class_is_reversible(c) == is_reversible(o)


def test_decompose_rejects_other_words():
    w = CoxeterWord.parse("3,4,2,6,7,5,1", 7)
    bad = 0
    for o in all_orbits(7, w):
        try:
            snake_decompose(o)
        except ValueError:
            bad += 1
    assert bad > 0


@pytest.mark.parametrize("m", range(1, 13))
def test_sizes_table_rows(m):
    got = [(r.parts23, str(r.snake_pattern), r.modulus) for r in sizes_table(m)]
    assert sorted(got) == sorted(SIZE_TABLE[m])


def test_size_moduli_and_counts():
    assert size_moduli(11) == [(5, 1), (9, 1)]
    assert size_moduli(12) == [(8, 2)]
    assert orbits_of_size(11, 46) == 2
    assert orbits_of_size(7, 11) == 1
    assert orbits_of_size(7, 12) == 0


@pytest.mark.parametrize("n", range(2, 17))
def test_table_predicts_size_counts(n):
    sizes = [len(o) for o in all_orbits(n, phi(n))]
    for m in range(1, 13):
        assert sizes.count(m) == orbits_of_size(m, n)


def test_format_sizes_table():
    text = format_sizes_table(5)
    assert "none" in text.splitlines()[4]
    assert "1212" in text
