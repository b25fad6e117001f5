import random

import pytest
from hypothesis import given, settings, strategies as st

from pathtoggle.core import (
    CoxeterWord,
    IndependentSet,
    ToggleWord,
    coxeter_to_orientation,
    is_symmetrical,
    phi,
    random_coxeter,
    same_action,
)
from pathtoggle.coxeter import (
    StepKind,
    admissible_conjugate,
    alternating_word,
    conjugated,
    conjugation_step,
    final_toggles,
    initial_toggles,
    orbit_size_multiset,
    path_to_phi,
    verify_orbit_correspondence,
)
from pathtoggle.orbits import Statistic, all_orbits, check_homomesy, orbit_of

W = CoxeterWord.parse("3,4,2,6,7,5,1", 7)


@st.composite
def coxeter_words(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    return CoxeterWord(n, tuple(draw(st.permutations(range(1, n + 1)))))


def test_initial_and_final():
    assert initial_toggles(W) == {3, 6}
    assert final_toggles(W) == {1, 5, 7}
    assert initial_toggles(phi(5)) == {5}
    assert final_toggles(phi(5)) == {1}


def test_conjugate_by_final_toggle():
    w2 = admissible_conjugate(W, 7)
    assert same_action(w2, ToggleWord(7, (7,) + W.word + (7,)))
    assert 7 in initial_toggles(w2)


def test_conjugate_rejects_middle_toggle():
    with pytest.raises(ValueError):
        admissible_conjugate(W, 4)


def test_example_conjugator():
    path = path_to_phi(W)
    assert path.conjugator.word == (7, 5, 6, 7, 4, 5, 6, 7)
    assert all(st_.kind is StepKind.BY_FINAL for st_ in path.steps)
    assert same_action(conjugated(W, path.conjugator), phi(7))
    assert path.steps[-1].after == phi(7)
    assert "u = t7t5t6t7t4t5t6t7" in path.format_trace()


def test_phi_needs_no_steps():
    assert path_to_phi(phi(6)).steps == ()


@settings(max_examples=60, deadline=None)
@given(coxeter_words())
def test_path_to_phi_always_conjugates(w):
    path = path_to_phi(w)
    assert same_action(conjugated(w, path.conjugator), phi(w.n))
    assert len(path.steps) <= w.n * w.n


@settings(max_examples=40, deadline=None)
@given(coxeter_words(max_n=8), st.data())
def test_conjugation_step_matches_definition(w, data):
    k = data.draw(st.sampled_from(sorted(initial_toggles(w) | final_toggles(w))))
    step = conjugation_step(w, k)
    assert same_action(step.after, ToggleWord(w.n, (k,) + w.word + (k,)))
    assert step.after.is_coxeter()


@settings(max_examples=40, deadline=None)
@given(coxeter_words(max_n=8))
def test_conjugates_share_orbit_sizes(w):
    assert orbit_size_multiset(w) == orbit_size_multiset(phi(w.n))


@pytest.mark.parametrize("n", range(2, 9))
def test_correspondence_on_every_admissible_step(n):
    rng = random.Random(n)
    for _ in range(4):
        w = random_coxeter(n, rng)
        for k in sorted(initial_toggles(w) | final_toggles(w)):
            rep = verify_orbit_correspondence(w, k)
            assert rep.ok, rep.failures


def test_alternating_word_orientation():
    w = alternating_word(6)
    o = coxeter_to_orientation(w)
    assert o.sinks() == {1, 3, 5}
    assert o.sources() == {2, 4, 6}


def test_tau5_conjugation_example():
    w = CoxeterWord.parse("3,2,6,4,5,7,1", 7)
    assert 5 in final_toggles(w)
    w2 = admissible_conjugate(w, 5)
    assert same_action(w2, CoxeterWord.parse("5,3,2,6,4,7,1", 7))
    with pytest.raises(ValueError):
        admissible_conjugate(w, 4)


def test_conjugating_phi_by_initial_toggle():
    for n in range(2, 8):
        w2 = admissible_conjugate(phi(n), n)
        assert same_action(w2, CoxeterWord(n, tuple(range(n - 1, 0, -1)) + (n,)))


def test_shifted_orbit_matches_phi_orbit():
    o = orbit_of(IndependentSet.from_string("1010010"), W)
    p = orbit_of(IndependentSet.from_string("1010100"), phi(7))
    assert len(o) == len(p) == 10
    assert o.column_sums == p.column_sums == (4, 2, 3, 2, 3, 2, 4)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_alternating_word_symmetry_all_or_none(n):
    for o in all_orbits(n, alternating_word(n)):
        flags = {is_symmetrical(s) for s in o.states}
        assert len(flags) == 1


@settings(max_examples=30, deadline=None)
@given(coxeter_words(max_n=8), st.data())
def test_homomesy_transfers_across_conjugation(w, data):
    n = w.n
    k = data.draw(st.sampled_from(sorted(initial_toggles(w) | final_toggles(w))))
    w2 = admissible_conjugate(w, k)
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    stats = [Statistic.from_terms(n, dict(enumerate(coeffs, 1))),
             2 * Statistic.indicator(n, 1) + Statistic.indicator(n, 2)]
    for f in stats:
        a, b = check_homomesy(n, w, f), check_homomesy(n, w2, f)
        assert (a.homomesic, a.constant) == (b.homomesic, b.constant)
