"""State circles, state graphs, and the surfaces they describe.

Pinned counts were computed by hand on the small diagrams (the trefoil
and figure-eight graphs are drawable) and cross-checked against the
exhaustive bracket elsewhere.
"""

from itertools import product

import pytest

from statesurf.diagram import LinkDiagram
from statesurf.errors import NotAdequateOrHomogeneous, NotHomogeneous
from statesurf.montesinos import build_diagram, normalize
from statesurf.notation import parse_montesinos
from statesurf.states import (
    State,
    adequacy,
    essentiality,
    euler_data,
    fiber_report,
    homogeneity,
    orientability,
    resolve,
    state_graph,
    turaev_genus,
)

from conftest import GRANNY_BRAID, PRETZEL_SLOPES, SQUARE_BRAID


def analyze(d, state):
    circles, h = resolve(d, state)
    g, reduced = state_graph(h)
    return circles, g, reduced


def euler(d, state):
    _, g, reduced = analyze(d, state)
    return euler_data(g, reduced)


@pytest.fixture
def square():
    return LinkDiagram.braid_closure(SQUARE_BRAID)


@pytest.fixture
def pretzel():
    return build_diagram(normalize(parse_montesinos(PRETZEL_SLOPES)))


class TestCircleCounts:
    def test_extreme_states(self, trefoil, fig8, granny, square, pretzel):
        table = [
            (trefoil, 3, 2),
            (fig8, 3, 3),
            (granny, 5, 3),
            (square, 4, 4),
            (pretzel, 9, 9),
        ]
        for d, sa, sb in table:
            assert resolve(d, State.all_A(d))[0].count == sa
            assert resolve(d, State.all_B(d))[0].count == sb

    def test_state_validates_labels(self):
        with pytest.raises(AssertionError):
            State(("A", "C", "B"))


class TestAdequacy:
    def test_extreme_states_of_alternating(self, trefoil, fig8):
        for d in (trefoil, fig8):
            for state in (State.all_A(d), State.all_B(d)):
                _, g, _ = analyze(d, state)
                assert adequacy(g)

    def test_kink_fails_on_one_side(self):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        _, g_a, _ = analyze(kink, State.all_A(kink))
        _, g_b, _ = analyze(kink, State.all_B(kink))
        assert not adequacy(g_a)
        assert adequacy(g_b)


class TestEulerData:
    def test_trefoil(self, trefoil):
        a = euler(trefoil, State.all_A(trefoil))
        # all-A graph is a 3-cycle: nothing to reduce
        assert a == {
            "v": 3,
            "e": 3,
            "e_reduced": 3,
            "chi": 0,
            "chi_reduced": 0,
            "chi_minus_reduced": 0,
            "chi_plus_reduced": 0,
            "n_sep": 0,
        }
        b = euler(trefoil, State.all_B(trefoil))
        # all-B graph is a triple edge, reducing to a single bridge
        assert (b["v"], b["e"], b["e_reduced"]) == (2, 3, 1)
        assert (b["chi"], b["chi_reduced"], b["n_sep"]) == (-1, 1, 1)

    def test_fig8_sides_agree(self, fig8):
        a = euler(fig8, State.all_A(fig8))
        b = euler(fig8, State.all_B(fig8))
        assert a == b
        assert (a["v"], a["e"], a["e_reduced"]) == (3, 4, 3)
        assert (a["chi"], a["chi_reduced"], a["chi_minus_reduced"]) == (-1, 0, 0)

    def test_granny(self, granny):
        a = euler(granny, State.all_A(granny))
        assert (a["v"], a["e_reduced"], a["chi_reduced"]) == (5, 6, -1)
        assert a["chi_minus_reduced"] == 1
        b = euler(granny, State.all_B(granny))
        # two triple edges collapse to a path: the fiber tree
        assert (b["v"], b["e"], b["e_reduced"], b["n_sep"]) == (3, 6, 2, 2)
        assert b["chi_reduced"] == 1

    def test_pretzel_symmetric(self, pretzel):
        a = euler(pretzel, State.all_A(pretzel))
        b = euler(pretzel, State.all_B(pretzel))
        assert a == b
        assert (a["v"], a["e"], a["e_reduced"]) == (9, 18, 12)
        assert (a["chi_reduced"], a["chi_minus_reduced"]) == (-3, 3)

    def test_reduced_graph_parallel_classes(self, granny):
        _, _, reduced = analyze(granny, State.all_B(granny))
        classes = reduced.parallel_classes()
        assert sorted(len(cs) for cs in classes.values()) == [3, 3]


class TestHomogeneity:
    def test_extreme_states_always(self, trefoil, fig8, granny, square):
        for d in (trefoil, fig8, granny, square):
            assert homogeneity(d, State.all_A(d))
            assert homogeneity(d, State.all_B(d))

    def test_small_alternating_all_states(self, trefoil, fig8):
        # both graphs are too small to mix labels within a region
        for d in (trefoil, fig8):
            for labels in product("AB", repeat=d.n):
                assert homogeneity(d, State(labels))

    def test_granny_mixed_state(self, granny):
        assert not homogeneity(granny, State(tuple("AAAAAB")))

    def test_seifert_state_of_square_knot(self, square):
        # orienting the braid, s1^3 smooths to B and s2^-3 to A
        assert homogeneity(square, State(tuple("BBBAAA")))


class TestOrientability:
    def test_odd_cycle_not_orientable(self, trefoil):
        _, g, _ = analyze(trefoil, State.all_A(trefoil))
        assert not orientability(g)

    def test_bipartite_sides(self, trefoil, granny):
        for d in (trefoil, granny):
            _, g, _ = analyze(d, State.all_B(d))
            assert orientability(g)


class TestFiber:
    def test_granny_all_B_fibers(self, granny):
        report = fiber_report(granny, State.all_B(granny))
        assert report == {
            "is_fiber": True,
            "chi_surface": -3,
            "orientable": True,
            "genus": 2,
        }

    def test_square_knot_seifert_state_fibers(self, square):
        report = fiber_report(square, State(tuple("BBBAAA")))
        assert report["is_fiber"]
        assert report["genus"] == 2
        assert report["orientable"]

    def test_square_knot_other_diagonal(self, square):
        report = fiber_report(square, State(tuple("AAABBB")))
        assert not report["is_fiber"]
        assert not report["orientable"]
        assert "genus" not in report

    def test_trefoil_all_A_not_fiber(self, trefoil):
        report = fiber_report(trefoil, State.all_A(trefoil))
        assert not report["is_fiber"]

    def test_unknot_kink(self):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        report = fiber_report(kink, State.all_B(kink))
        assert report["is_fiber"]
        assert report["genus"] == 0

    def test_inadequate_state_rejected(self):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        with pytest.raises(NotAdequateOrHomogeneous):
            fiber_report(kink, State.all_A(kink))

    def test_inhomogeneous_state_rejected(self, granny):
        with pytest.raises(NotAdequateOrHomogeneous):
            fiber_report(granny, State(tuple("AAAAAB")))


class TestTuraevGenus:
    def test_alternating_diagrams_have_genus_zero(self, trefoil, fig8, square):
        for d in (trefoil, fig8, square):
            assert turaev_genus(d) == 0

    def test_granny_genus_zero(self, granny):
        # adequate but non-alternating; the A and B states still fill the
        # sphere since each summand is alternating
        assert turaev_genus(granny) == 0

    def test_pretzel_genus_one(self, pretzel):
        assert turaev_genus(pretzel) == 1


class TestEssentiality:
    def test_matches_adequacy_for_extreme_states(self, trefoil, granny):
        for d in (trefoil, granny):
            assert essentiality(d, State.all_A(d))
            assert essentiality(d, State.all_B(d))

    def test_kink_A_side_inessential(self):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        assert not essentiality(kink, State.all_A(kink))

    def test_needs_homogeneous(self, granny):
        with pytest.raises(NotHomogeneous):
            essentiality(granny, State(tuple("AAAAAB")))
