import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from godelchi.characteristics import chi
from godelchi.counting import P
from godelchi.formula import And, Or
from godelchi.patterns import OrderPattern, ResourceGuardError, enumerate_patterns, satisfies
from godelchi.valuations import (
    Valuation,
    chi_as_valuation,
    determinant,
    in_span_of_chis,
    independence_matrix,
    indicator,
    invariant_dimension,
    is_invariant,
    maximal_chain,
    orbits,
    solve_exact,
    value_at_formula,
    value_at_pattern,
    weight_indicator,
)

from helpers import corpus, formulas

B = OrderPattern.from_blocks


def test_chi_weights_small():
    assert chi_as_valuation(1, 1).weight_vector() == [1, 1, 0]
    assert chi_as_valuation(1, 2).weight_vector() == [1, 1, 1]
    assert chi_as_valuation(2, 3).weight_vector() == [1] * 11


def test_chi_as_valuation_range():
    with pytest.raises(ValueError):
        chi_as_valuation(2, 4)
    with pytest.raises(ValueError):
        chi_as_valuation(2, 0)


def test_value_at_formula_examples():
    assert value_at_formula(chi_as_valuation(1, 2), "~~X1") == 2
    assert value_at_formula(Valuation.zero(3), "X1 | X3") == 0


@pytest.mark.parametrize("f, n", corpus(40, max_n=3, seed=9))
def test_unit_weight_counts_satisfaction(f, n):
    for p in enumerate_patterns(n, n + 1):
        assert value_at_formula(weight_indicator(p), f) == int(satisfies(p, f))


@pytest.mark.parametrize("f, n", corpus(40, max_n=3, seed=19))
def test_chi_valuation_agrees_with_chi(f, n):
    for k in range(1, n + 2):
        dense = Valuation(n, chi_as_valuation(n, k).weights())
        assert value_at_formula(chi_as_valuation(n, k), f) == chi(f, n, k)
        assert value_at_formula(dense, f) == chi(f, n, k)


@pytest.mark.parametrize("n", range(1, 4))
def test_basis_indicator_is_one_at_its_pattern_only(n):
    ps = list(enumerate_patterns(n, n + 1))
    for p in ps:
        e = indicator(p)
        assert [value_at_pattern(e, q) for q in ps] == [int(q == p) for q in ps]


@pytest.mark.parametrize("n", range(1, 6))
def test_chi_at_patterns_is_min_height_k(n):
    for k in range(1, n + 2):
        nu = chi_as_valuation(n, k)
        for p in enumerate_patterns(n, n + 1):
            assert value_at_pattern(nu, p) == min(p.height, k)


def test_value_at_pattern_examples():
    p = B([1], [[2]], [])
    assert value_at_pattern(weight_indicator(p), p) == 1
    assert value_at_pattern(indicator(p), p) == 1
    assert value_at_pattern(chi_as_valuation(2, 1), B([1], [], [2])) == 1


def test_maximal_chain():
    assert maximal_chain(1) == [B([], [], [1]), B([], [[1]], [])]
    assert [c.height for c in maximal_chain(2)] == [1, 2, 3]
    for n in range(1, 6):
        chain = maximal_chain(n)
        for i, c in enumerate(chain, 1):
            for k in range(1, n + 2):
                assert value_at_pattern(chi_as_valuation(n, k), c) == min(i, k)


def test_independence_matrix():
    assert independence_matrix(1).matrix == ((1, 1), (1, 2))
    assert independence_matrix(2).matrix == ((1, 1, 1), (1, 2, 2), (1, 2, 3))
    m = independence_matrix(7).matrix
    assert [m[i][i] for i in range(8)] == list(range(1, 9))


def test_determinant_examples():
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize("n", range(1, 11))
def test_independence_determinant_is_one(n):
    system = independence_matrix(n)
    assert determinant(system) == 1
    assert sympy.Matrix(system.matrix).det() == 1


@settings(max_examples=50)
@given(st.integers(1, 6).flatmap(lambda s: st.lists(st.lists(st.integers(-9, 9), min_size=s, max_size=s), min_size=s, max_size=s)))
def test_determinant_matches_sympy(rows):
    assert determinant(rows) == sympy.Matrix(rows).det()


def test_determinant_with_fractions():
    rows = [[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(5, 7)]]
    assert determinant(rows) == sympy.Matrix([[sympy.Rational(1, 2), 1], [sympy.Rational(1, 3), sympy.Rational(5, 7)]]).det()


def test_solve_exact():
    assert solve_exact([[1, 1], [1, 2]], [3, 5]) == [1, 2]
    assert solve_exact([[1, 1], [2, 2]], [1, 3]) is None
    x = solve_exact([[1, 1]], [4])
    assert x[0] + x[1] == 4


def _orbits_by_all_permutations(n):
    # independent of apply_perm: permute level tuples directly
    seen = set()
    count = 0
    for p in enumerate_patterns(n, n + 1):
        if (p.levels, p.top) in seen:
            continue
        count += 1
        for perm in itertools.permutations(range(n)):
            seen.add((tuple(p.levels[perm[i]] for i in range(n)), p.top))
    return count


@pytest.mark.parametrize("n, expected", [(1, 3), (2, 7)])
def test_invariant_dimension(n, expected):
    assert invariant_dimension(n) == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_orbit_count_matches_brute_force(n):
    assert invariant_dimension(n) == _orbits_by_all_permutations(n)
    assert sum(len(o) for o in orbits(n)) == P(n, n + 1)


@pytest.mark.parametrize("n", [2, 3])
def test_strict_inclusions(n):
    assert n + 1 < invariant_dimension(n) < P(n, n + 1)


@pytest.mark.parametrize("n", range(1, 4))
def test_chis_are_invariant(n):
    for k in range(1, n + 2):
        assert is_invariant(chi_as_valuation(n, k))


def test_atom_indicator_is_not_invariant():
    # the atom X1 & ~X2 is moved to ~X1 & X2 by swapping the variables
    assert not is_invariant(indicator(B([2], [], [1])))
    assert is_invariant(indicator(B([1, 2], [], [])))
    assert is_invariant(Valuation.zero(1)) and is_invariant(indicator(B([], [[1]], [])))


def test_span_membership():
    n = 2
    c1, c2 = chi_as_valuation(n, 1), chi_as_valuation(n, 2)
    assert in_span_of_chis(c2) == [0, 1, 0]
    assert in_span_of_chis(2 * c1 - c2) == [2, -1, 0]
    assert in_span_of_chis(indicator(B([1, 2], [], []))) is None
    dense = Valuation(n, (3 * c1 + Fraction(1, 2) * chi_as_valuation(n, 3)).weights())
    assert in_span_of_chis(dense) == [3, 0, Fraction(1, 2)]


def test_chi_weights_constant_per_height():
    for n in range(1, 5):
        for k in range(1, n + 2):
            nu = chi_as_valuation(n, k)
            by_h = {}
            for p, w in zip(enumerate_patterns(n, n + 1), nu.weight_vector()):
                by_h.setdefault(p.height, set()).add(w)
            assert all(len(ws) == 1 for ws in by_h.values())


def _random_valuation(rng, n):
    ps = list(enumerate_patterns(n, n + 1))
    return Valuation(n, {p: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for p in rng.sample(ps, min(6, len(ps)))})


@settings(max_examples=40, deadline=None)
@given(formulas(3), formulas(3), st.integers(0, 10**6))
def test_valuation_law_for_arbitrary_weights(f, g, seed):
    nu = _random_valuation(random.Random(seed), 3)
    assert value_at_formula(nu, Or(f, g)) + value_at_formula(nu, And(f, g)) == value_at_formula(nu, f) + value_at_formula(nu, g)


def test_arithmetic_mixes_storage_forms():
    n = 2
    c = chi_as_valuation(n, 2)
    dense = Valuation(n, c.weights())
    assert dense == c
    assert (c - dense).weights() == {}
    assert -c == (-1) * c


def test_dense_guard():
    with pytest.raises(ResourceGuardError):
        chi_as_valuation(7, 1).weight_vector()
    with pytest.raises(ResourceGuardError):
        invariant_dimension(7)
    assert len(chi_as_valuation(3, 1).weight_vector(limit=51)) == 51


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("CHI_MAX_PATTERNS", "10")
    with pytest.raises(ResourceGuardError):
        invariant_dimension(2)
