import json
from fractions import Fraction

import pytest

from witt_postlie import (
    IndexFunction,
    Window,
    catalog_lookup,
    check_equivalence,
    check_graded_equation,
    check_jacobi,
    check_module,
    check_postlie,
    check_postlie_sum,
    check_shifting_equations,
    example_46_phi,
    example_47_phi,
)
from witt_postlie.catalog import GradedSpec, ShiftingSpec
from witt_postlie.errors import UnknownNameError, WindowError
from witt_postlie.verify import MAX_WITNESSES, covering_window, verify_catalog_entry


def test_window_parsing():
    assert Window.parse("-2..3") == Window(-2, 3)
    assert list(Window(-1, 1)) == [-1, 0, 1] and len(Window(0, 4)) == 5
    assert str(Window(-8, 8)) == "-8..8"
    with pytest.raises(WindowError, match="exceeds hi"):
        Window.parse("3..1")
    with pytest.raises(WindowError, match="guard"):
        Window.parse("-100..100")
    with pytest.raises(WindowError, match="lo..hi"):
        Window.parse("a..b")


def test_covering_window():
    assert covering_window("-4..4") == (-8, 8)
    assert covering_window("-2..3", nu=-2) == (-6, 6)


def test_counts_and_summary():
    rep = check_postlie(catalog_lookup("P5").spec, "-2..2")
    assert rep.passed
    assert rep.total_checked == 2 * 5 ** 3
    assert rep.summary() == "PASS postlie on -2..2: 250 checked, 0 nonzero"


def test_mutation_is_caught_with_witnesses():
    spec = catalog_lookup("P5").spec
    bad = GradedSpec(spec.f.with_value(2, 0))
    rep = check_postlie(bad, "-4..4")
    assert not rep.passed
    ids = [r.identity_id for r in rep.residuals]
    assert ids and all(ids.count(i) <= MAX_WITNESSES for i in ids)
    assert rep.residual_count >= len(rep.residuals)
    assert not check_postlie_sum(bad, "-4..4").passed
    assert not check_graded_equation(bad.f, "-4..4").passed


def test_report_json_is_deterministic():
    spec = catalog_lookup("NP5").spec
    bad = ShiftingSpec(spec.f, spec.g.with_value(3, 1), spec.nu)
    one = json.dumps(check_postlie(bad, "-3..3").to_json(), sort_keys=True)
    two = json.dumps(check_postlie(bad, "-3..3").to_json(), sort_keys=True)
    assert one == two


def test_graded_equation_components():
    f = IndexFunction([(">=", 1, -1), ("otherwise", None, Fraction(1, 2))])
    rep = check_graded_equation(f, "-3..3")
    ids = {r.identity_id for r in rep.residuals}
    assert "values_in_0_or_minus_1" in ids


@pytest.mark.parametrize("name,nu", [("NP1", 2), ("NP5", -2), ("MP6", 3), ("MP8", 2)])
def test_shifting_equations_on_catalog(name, nu):
    spec = catalog_lookup(name, nu).spec
    assert check_shifting_equations(spec.f, spec.g, spec.nu, "-6..6").passed


def test_shifting_equations_catch_a_bad_g():
    spec = catalog_lookup("NP3", -3).spec
    g = spec.g.with_value(4, 1)
    assert not check_shifting_equations(spec.f, g, spec.nu, "-6..6").passed


@pytest.mark.parametrize("name,nu", [("P3a", None), ("P8", None), ("NP2", -1), ("MP4", 1)])
def test_equivalence_and_jacobi(name, nu):
    spec = catalog_lookup(name, nu).spec
    rep = check_equivalence(spec, "-4..4")
    assert rep.passed
    assert set(rep.components) == {"postlie", "postlie_sum", "jacobi"}
    assert check_jacobi(spec, "-4..4", which="lie").passed


def test_equivalence_on_a_failing_structure_agrees():
    spec = catalog_lookup("P5").spec
    bad = GradedSpec(spec.f.with_value(-1, -1))
    rep = check_equivalence(bad, "-3..3")
    assert not rep.components["postlie"].passed and not rep.components["postlie_sum"].passed
    assert rep.passed


@pytest.mark.parametrize("alpha,eps", [(1, Fraction(2, 5)), (2, Fraction(2, 3)), (Fraction(1, 2), Fraction(-2, 5))])
def test_rational_example_over_the_sum_bracket(alpha, eps):
    spec = example_46_phi(alpha, eps, covering_window("-3..3"))
    assert check_postlie_sum(spec, "-3..3").passed
    assert check_jacobi(spec, "-3..3").passed


def test_affine_example_symbolic():
    from witt_postlie import Poly
    spec = example_47_phi(Poly.var("alpha"), Poly.var("mu"), 2)
    assert check_postlie_sum(spec, "-3..3").passed


def test_module_law():
    assert check_module("LNP3", "-4..4", -3).passed
    with pytest.raises(UnknownNameError):
        check_module("LP9", "-1..1")


def test_verify_catalog_entry_bundle():
    out = verify_catalog_entry("NP7", None, "-3..3")
    assert set(out) == {"postlie", "postlie_sum", "jacobi", "equations"}
    assert all(r.passed for r in out.values())
