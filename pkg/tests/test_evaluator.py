"""Known Jones polynomials below are standard knot-table values in t."""
import cmath
import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from morsejones import diagram as dg
from morsejones.diagram import Event
from morsejones.evaluator import (DELTA, ExceptionalRootWarning, TooManyCrossings,
                                  bracket_bruteforce, bracket_sweep, catalan, format_t,
                                  is_exceptional, jones_at_root, jones_symbolic,
                                  jones_t_terms, matching_to_parens, parens_to_matching,
                                  planar_matchings, sweep_cost_model, sweep_stats,
                                  sweep_trace, writhe_factor)
from morsejones.exactnum import LaurentInt, complex_approx

H = Fraction(1, 2)


def closure(strands, word):
    """Closure of a braid given as signed generators 1..strands-1."""
    evs = [Event.cup(k) for k in range(strands)]
    evs += [Event.cross(strands + abs(g) - 1, 1 if g > 0 else -1) for g in word]
    evs += [Event.cap(k) for k in reversed(range(strands))]
    return dg.MorseDiagram(tuple(evs))


def t_poly(J):
    return jones_t_terms(J)


def test_unknot(unknot):
    assert bracket_sweep(unknot) == DELTA
    assert jones_symbolic(unknot) == LaurentInt.const(1)


def test_empty_diagram():
    D = dg.MorseDiagram(())
    assert bracket_sweep(D) == LaurentInt.const(1)
    assert bracket_bruteforce(D) == LaurentInt.const(1)


@pytest.mark.parametrize("m", range(1, 6))
def test_unlink(m):
    D = dg.unlink(m)
    assert bracket_sweep(D) == DELTA ** m
    assert jones_symbolic(D) == DELTA ** (m - 1)
    assert t_poly(jones_symbolic(dg.unlink(2))) == {-H: -1, H: -1}


def test_trefoil(trefoil):
    assert t_poly(jones_symbolic(trefoil)) == {-4: -1, -3: 1, -1: 1}
    assert format_t(jones_symbolic(trefoil)) == "-t^-4 + t^-3 + t^-1"


def test_positive_trefoil():
    assert t_poly(jones_symbolic(dg.trefoil(+1))) == {1: 1, 3: 1, 4: -1}
    assert jones_symbolic(dg.torus_closure(2, 3)) == jones_symbolic(dg.trefoil(+1))


def test_trefoil_bracket_small_state_sum(trefoil):
    # three crossings, eight smoothings
    assert bracket_bruteforce(trefoil) == bracket_sweep(trefoil)


def test_figure_eight():
    D = closure(3, [1, -2, 1, -2])
    assert t_poly(jones_symbolic(D)) == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}


def test_hopf():
    assert t_poly(jones_symbolic(dg.torus_closure(2, 2))) == {H: -1, 5 * H: -1}


def test_torus_2_5():
    assert t_poly(jones_symbolic(dg.torus_closure(2, 5))) == \
        {2: 1, 4: 1, 5: -1, 6: 1, 7: -1}


def test_torus_3_4():
    # 8_19
    assert t_poly(jones_symbolic(dg.torus_closure(3, 4))) == {3: 1, 5: 1, 8: -1}


def test_format_t():
    assert format_t(LaurentInt()) == "0"
    assert format_t(LaurentInt.const(1)) == "1"
    assert format_t(LaurentInt({-8: 3, 4: -2})) == "-2*t^-1 + 3*t^2"


def test_writhe_factor():
    assert writhe_factor(0) == LaurentInt.const(1)
    assert writhe_factor(1) == LaurentInt.monomial(-3, -1)
    assert writhe_factor(-2) == LaurentInt.monomial(6)


def test_sweep_equals_bruteforce_random():
    for seed in range(200):
        D = dg.random_diagram(seed, 8, 24)
        assert bracket_sweep(D) == bracket_bruteforce(D)


def test_bruteforce_limit():
    with pytest.raises(TooManyCrossings):
        bracket_bruteforce(dg.torus_closure(2, 26))


def test_mirror_inverts_variable():
    for seed in range(100):
        D = dg.random_diagram(seed, 6, 20)
        assert bracket_sweep(dg.mirror(D)) == bracket_sweep(D).invert_variable()
        assert jones_symbolic(dg.mirror(D)) == jones_symbolic(D).invert_variable()


def test_split_union_is_multiplicative():
    rng = random.Random(11)
    for _ in range(50):
        D = dg.random_diagram(rng.random(), 6, 14)
        E = dg.random_diagram(rng.random(), 6, 14)
        both = dg.concat(D, E)
        assert bracket_sweep(both) == bracket_sweep(D) * bracket_sweep(E)
        assert jones_symbolic(both) == jones_symbolic(D) * jones_symbolic(E) * DELTA


def test_orientation_changes_jones_by_linking_power():
    hopf = dg.torus_closure(2, 2)
    a = jones_symbolic(hopf, dg.Orientation((False, False)))
    b = jones_symbolic(hopf, dg.Orientation((False, True)))
    # reversing one component shifts the writhe by -4 lk = -4
    assert b == a * LaurentInt.monomial(12)


@pytest.mark.parametrize("k", range(0, 8))
def test_planar_matching_counts(k):
    ms = planar_matchings(2 * k)
    assert len(ms) == catalan(k) == len(set(ms))
    assert planar_matchings(2 * k + 1) == []
    for p in ms:
        assert parens_to_matching(matching_to_parens(p)) == p
        assert all(p[p[j]] == j for j in range(2 * k))


@pytest.mark.parametrize("bad", ["(", ")(", "(()", "(x)"])
def test_parens_rejects(bad):
    with pytest.raises(ValueError):
        parens_to_matching(bad)


def test_sweep_trace_ends_in_bracket(trefoil):
    states = list(sweep_trace(trefoil))
    assert len(states) == len(trefoil.events) + 1
    final = states[-1].terms
    assert set(final) == {()}
    assert final[()] == bracket_sweep(trefoil)
    for state, count in zip(states, trefoil.levels):
        assert len(state) <= catalan(count // 2)
        assert all(len(p) == count for p in state.terms)


def test_dump(unknot):
    states = list(sweep_trace(unknot))
    assert states[1].dump() == "()\t1"
    assert states[2].dump() == f".\t{DELTA}"


@given(st.integers(0, 10**6), st.sampled_from([2, 4, 6, 8, 10]))
@settings(max_examples=60)
def test_peak_bounded_by_catalan(seed, g):
    D = dg.random_diagram(seed, g, 30)
    res = sweep_stats(D)
    bound, events = sweep_cost_model(D)
    assert res.peak <= bound == catalan(dg.girth(D) // 2)
    assert events == len(D.events)


def test_jones_at_root_matches_complex_evaluation(trefoil):
    J = jones_symbolic(trefoil)
    for r in (5, 7, 8, 9, 10, 12):
        A = cmath.exp(-2j * cmath.pi / (4 * r))
        val = complex_approx(jones_at_root(trefoil, None, r))
        assert abs(val - J(A)) < 1e-9
        # q = A^-4 = exp(2 pi i / r)
        q = cmath.exp(2j * cmath.pi / r)
        assert abs(val - (-q ** -4 + q ** -3 + q ** -1)) < 1e-9


def test_exceptional_roots(trefoil):
    assert [r for r in range(3, 13) if is_exceptional(r)] == [3, 4, 6]
    with pytest.warns(ExceptionalRootWarning):
        jones_at_root(trefoil, None, 6)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        jones_at_root(trefoil, None, 5)
    with pytest.raises(ValueError):
        jones_at_root(trefoil, None, 2)
