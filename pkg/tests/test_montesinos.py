"""Slope-vector normalization, diagram building, and the guts reports.

Hand-checked numbers: the edge counts for P(1/2,1/2,-1/2) and the
bridge example M(1/3,1/3,1/3,-2/3) were worked out on paper before the
builder existed; they pin the tangle gluing conventions.
"""

import random
from fractions import Fraction as F

import pytest

from statesurf.errors import IntegerSlope, LengthTooSmall
from statesurf.montesinos import (
    build_diagram,
    equivalent,
    montesinos_report,
    negative_loop_taxonomy,
    normalize,
    q_half_count,
)
from statesurf.polyhedra import spanning_counts, two_edge_loops
from statesurf.states import State, euler_data, resolve, state_graph

from conftest import PRETZEL_SLOPES


def a_state_counts(d):
    _, h = resolve(d, State.all_A(d))
    g, reduced = state_graph(h)
    twist, _, _ = d.twist_regions()
    return euler_data(g, reduced), spanning_counts(g, reduced, twist), g, twist


class TestNormalize:
    def test_integer_parts_transfer(self):
        form = normalize("M(4/3, 1/2, 4/7, -1/3)")
        assert form.slopes == (F(1, 3), F(1, 2), F(4, 7), F(2, 3))
        assert form.total == F(29, 14)
        assert (form.positive_count, form.negative_count) == (4, 0)
        assert form.alternating

    def test_pretzel_is_fixed_point(self):
        form = normalize(PRETZEL_SLOPES)
        assert form.slopes == (F(1, 3), F(-1, 3)) * 3
        assert not form.alternating

    def test_all_negative_fixed_point(self):
        form = normalize("M(-1/2, -1/3, -1/5)")
        assert form.slopes == (F(-1, 2), F(-1, 3), F(-1, 5))
        assert form.alternating

    def test_mixed_sign_folding(self):
        assert normalize([F(1, 3), F(1, 3), F(-2, 3)]).slopes == (
            F(-2, 3),
            F(1, 3),
            F(1, 3),
        )
        assert normalize([F(5, 2), F(1, 2), F(-1, 3)]).slopes == (
            F(3, 2),
            F(1, 2),
            F(2, 3),
        )
        assert normalize([F(-5, 2), F(-1, 2), F(1, 3)]).slopes == (
            F(-5, 3),
            F(-1, 2),
            F(-1, 2),
        )

    def test_total_is_preserved(self):
        for slopes in ([F(5, 2), F(1, 2), F(1, 3)], [F(-5, 2), F(-1, 2), F(-1, 3)]):
            assert normalize(slopes).total == sum(slopes)

    def test_rejects_bad_vectors(self):
        with pytest.raises(LengthTooSmall):
            normalize([F(1, 2), F(1, 3)])
        with pytest.raises(IntegerSlope):
            normalize([F(1, 2), F(1, 3), F(2)])


class TestEquivalence:
    def test_transfer_moves(self):
        assert equivalent("M(4/3,1/2,4/7,-1/3)", "M(1/2,4/7,2/3,1/3)")

    def test_reversal(self):
        assert equivalent("M(1/2,1/3,1/7)", "M(1/7,1/3,1/2)")

    def test_total_obstruction(self):
        assert not equivalent([F(1, 3)] * 3, [F(1, 3), F(1, 3), F(-2, 3)])


class TestQHalf:
    def test_counts(self):
        assert q_half_count(normalize(PRETZEL_SLOPES)) == 0
        assert q_half_count("M(1/2,1/2,-1/2,-1/2,1/3,-1/3)") == 4
        assert q_half_count(normalize("M(-1/2,-1/3,-1/5)")) == 1


class TestBuildDiagram:
    def test_pretzel(self):
        d = build_diagram(normalize(PRETZEL_SLOPES))
        assert d.n == 18
        regions, t, reduced = d.twist_regions()
        assert t == 6
        assert reduced
        assert sorted(r.length for r in regions) == [3] * 6
        assert not d.is_alternating
        assert d.component_count == 2

    def test_alternating_pretzel(self):
        d = build_diagram(normalize("M(-1/2, -1/3, -1/5)"))
        assert d.n == 10
        assert d.is_alternating
        assert d.twist_number == 3
        assert d.component_count == 1

    def test_continued_fraction_tangle(self):
        d = build_diagram(normalize("M(3/5, 1/2, 1/3)"))
        assert d.n == 9
        assert d.twist_number == 5
        assert d.is_alternating

    def test_hand_checked_edge_counts(self):
        d = build_diagram(normalize("M(1/2, 1/2, -1/2)"))
        data, counts, _, _ = a_state_counts(d)
        assert data["e"] == 6
        assert data["e_reduced"] == 2
        assert counts["b_A"] == 3
        assert counts["m_A"] == 1

    def test_vertical_tangles_leave_no_stray_edges(self):
        d = build_diagram(normalize("M(1/3, 1/3, 1/3, -1/2)"))
        _, counts, _, _ = a_state_counts(d)
        assert counts["m_A"] == 0


class TestTaxonomy:
    def test_pretzel_all_twist_loops(self):
        tax = negative_loop_taxonomy(normalize(PRETZEL_SLOPES))
        assert len(tax) == 3
        assert {entry["kind"] for entry in tax} == {1}

    def test_two_positive_tangles_flagged(self):
        tax = negative_loop_taxonomy(normalize([F(1, 3), F(1, 3), F(-1, 3)]))
        assert any(entry["kind"] == 3 for entry in tax)

    def test_bridge_loop(self):
        form = normalize([F(1, 3), F(1, 3), F(1, 3), F(-2, 3)])
        kind2 = [e for e in negative_loop_taxonomy(form) if e["kind"] == 2]
        assert [(e["tangle"], e["bridge"]) for e in kind2] == [(0, True)]
        # the bridge shows up as a cross-region loop and one stray edge
        d = build_diagram(form)
        _, counts, g, twist = a_state_counts(d)
        assert counts["m_A"] == 1
        assert any(not lp.same_twist_region for lp in two_edge_loops(g, twist))

    def test_half_slope_loop_is_tame(self):
        form = normalize([F(1, 3), F(1, 3), F(1, 3), F(-1, 2)])
        kind2 = [e for e in negative_loop_taxonomy(form) if e["kind"] == 2]
        assert [(e["tangle"], e["bridge"]) for e in kind2] == [(3, False)]
        d = build_diagram(form)
        _, counts, g, twist = a_state_counts(d)
        assert counts["m_A"] == 0
        assert all(lp.same_twist_region for lp in two_edge_loops(g, twist))

    def test_taxonomy_explains_bigon_collapse(self):
        form = normalize([F(1, 3), F(1, 3), F(1, 3), F(-2, 3)])
        kind1 = [e for e in negative_loop_taxonomy(form) if e["kind"] == 1]
        d = build_diagram(form)
        _, counts, _, _ = a_state_counts(d)
        assert counts["b_A"] == sum(e["length"] - 1 for e in kind1)


class TestReport:
    def test_pretzel(self):
        rep = montesinos_report(normalize(PRETZEL_SLOPES))
        assert (rep["r"], rep["s"]) == (3, 3)
        assert rep["A_adequate"] and rep["B_adequate"]
        assert (rep["guts_A"], rep["guts_B"]) == (3, 3)
        assert rep["Q_half"] == 0
        assert rep["hyperbolic_sufficient"]
        assert rep["identity_holds"]
        assert rep["t"] == 6
        assert rep["components"] == 2

    def test_alternating(self):
        rep = montesinos_report(normalize("M(-1/2, -1/3, -1/5)"))
        assert (rep["r"], rep["s"]) == (0, 3)
        assert rep["A_adequate"] and rep["B_adequate"]
        assert (rep["guts_A"], rep["guts_B"]) == (1, 0)
        assert rep["components"] == 1
        assert not rep["hyperbolic_sufficient"]
        # the two-sided identity needs tangles of both signs
        assert "identity_holds" not in rep
        assert "identity_holds" in rep["reasons"]

    def test_one_sided_report(self):
        rep = montesinos_report(normalize([F(1, 3)] * 3 + [F(-2, 3)]))
        assert (rep["r"], rep["s"]) == (3, 1)
        assert rep["A_adequate"] and not rep["B_adequate"]
        assert rep["guts_A"] == 0
        assert "guts_B" not in rep
        assert rep["reasons"]["guts_B"] == "diagram is not adequate on this side"

    def test_small_positive_count_withholds_guts(self):
        rep = montesinos_report(normalize([F(1, 3), F(1, 3), F(-1, 3)]))
        assert (rep["r"], rep["s"]) == (2, 1)
        assert "guts_A" not in rep
        assert "guts_A" in rep["reasons"]


def test_identity_battery():
    # -chi(G'_A) - chi(G'_B) = t - Q_half whenever r >= 3 and s >= 3
    rng = random.Random("montesinos-tests")
    seen = 0
    while seen < 12:
        m = rng.randrange(3, 5)
        picks = [
            F(sign * rng.randrange(1, den), den)
            for sign in (1, -1)
            for _ in range(m)
            for den in (rng.randrange(2, 8),)
        ]
        rng.shuffle(picks)
        form = normalize(picks)
        if form.positive_count < 3 or form.negative_count < 3:
            continue
        seen += 1
        rep = montesinos_report(form)
        assert rep["identity_holds"], form.slopes
        d = build_diagram(form)
        a, _, _, _ = a_state_counts(d)
        _, hb = resolve(d, State.all_B(d))
        gb, rb = state_graph(hb)
        b = euler_data(gb, rb)
        lhs = -a["chi_reduced"] - b["chi_reduced"]
        assert lhs == d.twist_number - q_half_count(form)
