"""Bracket evaluators, Jones normalization, and extreme-coefficient data.

Two independent bracket implementations are compared throughout: the
exhaustive state sum is the oracle, the skein recursion is the
production path.  Polynomial values for the small knots are the
published table values.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from statesurf.diagram import LinkDiagram
from statesurf.errors import CrossingCapExceeded, Disconnected, NotAdequate
from statesurf.jones import (
    VAR_JONES,
    JonesReport,
    LaurentPolynomial,
    adequacy_obstruction,
    jones_polynomial,
    jones_report,
    kauffman_bracket,
    skein_bracket,
    stable_identity_check,
)
from statesurf.notation import BraidWord

from conftest import GRANNY_BRAID, HOPF_BRAID, TREFOIL_BRAID

# knot-table polynomials for section-1.3 knots, used as obstruction probes
J_11N95 = LaurentPolynomial(
    {2: 2, 3: -3, 4: 5, 5: -6, 6: 6, 7: -5, 8: 4, 9: -2}, VAR_JONES
)
J_11N118 = LaurentPolynomial(
    {2: 2, 3: -2, 4: 3, 5: -4, 6: 4, 7: -3, 8: 2, 9: -1}, VAR_JONES
)
J_12N0706 = LaurentPolynomial(
    {-4: 2, -3: -4, -2: 6, -1: -8, 0: 9, 1: -8, 2: 6, 3: -4, 4: 2}, VAR_JONES
)


def report_of(poly: LaurentPolynomial) -> JonesReport:
    """Extreme-coefficient report of a polynomial given without a diagram."""
    step = poly.grid_step
    top, bot = max(poly.coeffs), min(poly.coeffs)
    beta = poly.coeff_at_key(top - step)
    beta_p = poly.coeff_at_key(bot + step)
    return JonesReport(
        J=poly,
        m2=poly.max_degree,
        r2=poly.min_degree,
        alpha=poly.coeff_at_key(top),
        beta=beta,
        alpha_prime=poly.coeff_at_key(bot),
        beta_prime=beta_p,
        epsilon=1 if beta == 0 else 0,
        epsilon_prime=1 if beta_p == 0 else 0,
        value_at_one=poly.value_at_one(),
    )


@pytest.fixture
def hopf():
    return LinkDiagram.braid_closure(HOPF_BRAID)


@pytest.fixture
def left_trefoil():
    return LinkDiagram.braid_closure(TREFOIL_BRAID)


class TestBracket:
    def test_unknot(self):
        assert kauffman_bracket(LinkDiagram.unknot()).coeffs == {0: 1}

    def test_kink(self):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        assert kauffman_bracket(kink).coeffs == {-3: -1}

    def test_hopf(self, hopf):
        assert kauffman_bracket(hopf).coeffs == {4: -1, -4: -1}

    def test_evaluators_agree(self, trefoil, fig8, granny, hopf, left_trefoil):
        unlink2 = LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1))))
        cases = [
            LinkDiagram.unknot(),
            LinkDiagram.from_pd("X(1,2,2,1)"),
            hopf,
            left_trefoil,
            trefoil,
            fig8,
            fig8.mirror(),
            granny,
            unlink2,
            trefoil.cable(2),
        ]
        for d in cases:
            assert kauffman_bracket(d).coeffs == skein_bracket(d).coeffs

    def test_default_cap_is_enforced(self, trefoil):
        with pytest.raises(CrossingCapExceeded):
            kauffman_bracket(trefoil.cable(3))
        # the skein evaluator handles it when told to
        assert skein_bracket(trefoil.cable(3))


class TestJonesValues:
    def test_unknot_and_kink(self):
        assert jones_polynomial(LinkDiagram.unknot()).coeffs == {0: 1}
        assert jones_polynomial(LinkDiagram.from_pd("X(1,2,2,1)")).coeffs == {0: 1}

    def test_left_trefoil(self, trefoil, left_trefoil):
        want = {-4: -1, -3: 1, -1: 1}
        assert jones_polynomial(trefoil).coeffs == want
        assert jones_polynomial(left_trefoil).coeffs == want
        assert not jones_polynomial(trefoil).half_grid

    def test_right_trefoil(self, trefoil):
        assert jones_polynomial(trefoil.mirror()).coeffs == {4: -1, 3: 1, 1: 1}

    def test_fig8(self, fig8):
        j = jones_polynomial(fig8)
        assert j.coeffs == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}
        assert j.to_text() == "t^-2 - t^-1 + 1 - t + t^2"

    def test_hopf_half_grid(self, hopf):
        j = jones_polynomial(hopf)
        assert j.half_grid
        assert j.coeffs == {-5: -1, -1: -1}
        assert j.min_degree == Fraction(-5, 2)
        assert j.to_text() == "-t^(-5/2) - t^(-1/2)"

    def test_connected_sum_multiplies(self, trefoil, granny):
        j3 = jones_polynomial(trefoil)
        assert jones_polynomial(granny).coeffs == (j3 * j3).coeffs

    def test_mirror_inverts_degrees(self, fig8, trefoil):
        for d in (fig8, trefoil):
            j = jones_polynomial(d)
            jm = jones_polynomial(d.mirror())
            assert jm.coeffs == {-deg: c for deg, c in j.coeffs.items()}

    def test_value_at_one(self, trefoil, hopf, granny):
        unlink2 = LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1))))
        for d in (trefoil, hopf, granny, unlink2, trefoil.cable(2)):
            assert jones_polynomial(d).value_at_one() == (-2) ** (
                d.component_count - 1
            )

    def test_json_map(self, fig8):
        assert jones_polynomial(fig8).to_json_map() == {
            "-2": 1,
            "-1": -1,
            "0": 1,
            "1": -1,
            "2": 1,
        }


class TestLaurentPolynomial:
    def test_arithmetic(self):
        p = LaurentPolynomial({0: 1, 2: 3})
        q = LaurentPolynomial({2: -3, -1: 4})
        assert (p + q).coeffs == {0: 1, -1: 4}
        assert (p - p).coeffs == {}
        assert (p * q).coeffs == {2: -3, -1: 4, 4: -9, 1: 12}

    def test_scale(self):
        p = LaurentPolynomial({1: 2, -1: 5})
        assert p.scale(-1, 3).coeffs == {4: -2, 2: -5}

    def test_var_mismatch_rejected(self):
        with pytest.raises(AssertionError):
            LaurentPolynomial({0: 1}) + LaurentPolynomial({0: 1}, VAR_JONES)

    def test_pinned_text_form(self):
        assert (
            J_11N95.to_text()
            == "2t^2 - 3t^3 + 5t^4 - 6t^5 + 6t^6 - 5t^7 + 4t^8 - 2t^9"
        )


class TestReports:
    def test_left_trefoil_report(self, left_trefoil):
        rep = jones_report(left_trefoil)
        assert (rep.m2, rep.r2) == (-1, -4)
        assert (rep.alpha, rep.beta) == (1, 0)
        assert (rep.alpha_prime, rep.beta_prime) == (-1, 1)
        assert (rep.epsilon, rep.epsilon_prime) == (1, 0)
        assert rep.value_at_one == 1

    def test_hopf_report(self, hopf):
        rep = jones_report(hopf)
        assert rep.m2 == Fraction(-1, 2)
        assert (rep.alpha, rep.beta) == (-1, 0)
        assert (rep.alpha_prime, rep.beta_prime) == (-1, 0)

    def test_stable_identity_small(self, fig8, left_trefoil):
        for d in (left_trefoil, fig8):
            assert stable_identity_check(d) == {
                "holds": True,
                "lhs": [1, 1],
                "rhs": [1, 1],
            }

    def test_stable_identity_granny(self, granny):
        # chi(G'_A) = -1, so the next-to-extreme coefficient doubles
        assert stable_identity_check(granny) == {
            "holds": True,
            "lhs": [1, 2],
            "rhs": [1, 2],
        }

    def test_stable_identity_needs_adequacy(self):
        unlink2 = LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1))))
        with pytest.raises(NotAdequate):
            stable_identity_check(unlink2)

    def test_fiber_end_vanishes(self, left_trefoil):
        # the all-B tree side shows up as beta' = 0 after mirroring
        rep = jones_report(left_trefoil.mirror())
        assert rep.beta_prime == 0


class TestObstruction:
    def test_adequate_knot_passes_both(self, left_trefoil):
        assert adequacy_obstruction(jones_report(left_trefoil)) == {
            "a_side_possible": True,
            "b_side_possible": True,
        }

    def test_pinned_tables(self):
        assert adequacy_obstruction(report_of(J_11N95)) == {
            "a_side_possible": False,
            "b_side_possible": False,
        }
        assert adequacy_obstruction(report_of(J_12N0706)) == {
            "a_side_possible": False,
            "b_side_possible": False,
        }
        # the -1 end survives, the +2 end cannot be adequate
        assert adequacy_obstruction(report_of(J_11N118)) == {
            "a_side_possible": False,
            "b_side_possible": True,
        }


@st.composite
def braid_diagrams(draw):
    n = draw(st.integers(min_value=2, max_value=3))
    letters = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n - 1),
                st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0),
            ),
            min_size=1,
            max_size=4,
        )
    )
    text = f"B{n}: " + " ".join(f"s{g}^{e}" for g, e in letters)
    try:
        return LinkDiagram.braid_closure(text)
    except Disconnected:
        return LinkDiagram.unknot()


@settings(deadline=None, max_examples=40)
@given(d=braid_diagrams())
def test_bracket_properties(d):
    assert kauffman_bracket(d).coeffs == skein_bracket(d).coeffs
    j = jones_polynomial(d)
    assert j.value_at_one() == (-2) ** (d.component_count - 1)
    jm = jones_polynomial(d.mirror())
    assert jm.coeffs == {-deg: c for deg, c in j.coeffs.items()}
    # knots sit on the integer grid, even-component links between it
    assert j.half_grid == (d.component_count % 2 == 0)
