from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import _oracle
from witt_postlie import classify_graded, classify_shifting, match_catalog
from witt_postlie.classify import FREE, ShiftingRay, ZPoly, _ZPolyRing, fraction_free_echelon, nullspace
from witt_postlie.errors import AmbiguousMatchError, NuZeroError, WindowTooLargeError, WindowTooSmallError


def _as_oracle_set(rep):
    out = set()
    for s in rep.solutions:
        f0 = s.f0_constraint if s.f0_constraint == FREE else Fraction(s.f0_constraint)
        out.add((s.f_values, f0))
    return out


def _oracle_set(lo, hi):
    return {(vals, f0 if f0 == "free" else Fraction(int(f0.p), int(f0.q)))
            for vals, f0 in _oracle.brute_force_graded(lo, hi)}


@pytest.mark.parametrize("lo,hi", [(-2, 2), (-1, 3)])
def test_graded_matches_brute_force(lo, hi):
    assert _as_oracle_set(classify_graded((lo, hi))) == _oracle_set(lo, hi)


def test_graded_is_deterministic():
    one, two = classify_graded("-2..2"), classify_graded("-2..2")
    assert one.oracle_digest == two.oracle_digest
    assert one.to_json() == two.to_json()


def test_graded_budget():
    with pytest.raises(WindowTooLargeError):
        classify_graded("-12..12", budget=1000)
    with pytest.raises(ValueError):
        classify_graded("1..3")


def test_shifting_nullspace_of_dimension_two():
    rep = classify_shifting("P5", -2, "-6..6")
    assert rep.matched_catalog == ["NP3", "NP5"]
    assert [r.as_dict() for r in rep.solutions] == [{2: 1}, {2: 1, 3: 2}]
    assert all(r.nullspace_dim == 2 for r in rep.solutions)


def test_shifting_a_family_reports_f0():
    rep = classify_shifting("P3a", 1, "-6..6")
    assert rep.matched_catalog == ["NP1"]
    assert rep.solutions[0].f0 == -1
    rep = classify_shifting("P4a", 1, "-6..6")
    assert rep.matched_catalog == ["MP2"]
    assert rep.solutions[0].f0 == 0


@pytest.mark.parametrize("family", ["P1", "P2"])
def test_shifting_constant_families_are_empty(family):
    for nu in (-2, -1, 1, 2):
        assert classify_shifting(family, nu, "-6..6").solutions == []


def test_shifting_contract():
    with pytest.raises(NuZeroError):
        classify_shifting("P5", 0, "-3..3")
    with pytest.raises(WindowTooSmallError):
        classify_shifting("P5", -4, "0..1")


def test_match_contract():
    ray = ShiftingRay("P5", -1, ((2, Fraction(1)),), 1)
    assert match_catalog(ray, "-6..6") == "NP4"
    ray = ShiftingRay("P5", -1, ((1, Fraction(1)),), 1)
    assert match_catalog(ray, "-6..6") == "unmatched"
    assert issubclass(AmbiguousMatchError, Exception)


matrices = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5)


@settings(max_examples=60)
@given(matrices)
def test_nullspace_vectors_are_exact_and_independent(rows):
    basis = nullspace(rows, 4)
    for v in basis:
        assert all(isinstance(x, Fraction) for x in v)
        for r in rows:
            assert sum(Fraction(a) * x for a, x in zip(r, v)) == 0
    import sympy
    rank = sympy.Matrix(rows).rank()
    assert len(basis) == 4 - rank


def test_zpoly_elimination_over_z_t():
    t = ZPoly((0, 1))
    rows = [[t, ZPoly((1,))], [ZPoly((1,)), t]]
    ech, piv, last = fraction_free_echelon(rows, 2, _ZPolyRing)
    assert len(piv) == 2
    # t^2 - 1 up to sign vanishes exactly at t = 1 and t = -1.
    assert last.degree() == 2 and set(last.c) == {1, 0, -1}
