"""Diagram combinatorics: construction, writhe, twist regions, primeness."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from statesurf.diagram import LinkDiagram, crossing_of, dart, slot_of
from statesurf.errors import Disconnected, InputError
from statesurf.notation import parse_braid, serialize_pd

from conftest import (
    FIG8_PD,
    GRANNY_BRAID,
    HOPF_BRAID,
    SQUARE_BRAID,
    TREFOIL_BRAID,
    TREFOIL_PD,
)


def test_dart_arithmetic():
    d = dart(7, 3)
    assert crossing_of(d) == 7
    assert slot_of(d) == 3


class TestConstruction:
    def test_from_pd_counts(self, trefoil, fig8):
        assert trefoil.n == 3
        assert fig8.n == 4
        assert trefoil.component_count == 1
        assert fig8.component_count == 1

    def test_pd_round_trip_exact(self, trefoil, fig8, granny):
        for d in (trefoil, fig8, granny):
            again = LinkDiagram.from_pd(d.to_pd())
            assert again == d
            assert again.to_pd() == d.to_pd()

    def test_to_pd_canonical_text(self, trefoil):
        # arc labels follow the component walk, so export is deterministic
        assert serialize_pd(trefoil.to_pd()) == "X(1,4,3,2) X(5,6,4,1) X(2,3,6,5)"

    def test_braid_closure(self):
        hopf = LinkDiagram.braid_closure(HOPF_BRAID)
        assert hopf.n == 2
        assert hopf.component_count == 2
        granny = LinkDiagram.braid_closure(parse_braid(GRANNY_BRAID))
        assert granny.n == 6

    def test_braid_closure_idle_strand(self):
        # a strand no generator touches closes to a split circle
        with pytest.raises(Disconnected):
            LinkDiagram.braid_closure("B3: s1^2")

    def test_braid_closure_split_word(self):
        with pytest.raises(Disconnected):
            LinkDiagram.braid_closure("B4: s1^3 s3^3")

    def test_unknot(self):
        u = LinkDiagram.unknot()
        assert u.n == 0
        assert u.free_loops == 1
        assert u.component_count == 1

    def test_from_pairs_rejects_bad_matching(self):
        with pytest.raises(InputError):
            LinkDiagram.from_pairs([(0, 1), (1, 2), (2, 3), (3, 0)], 1)

    def test_from_pairs_rejects_split_diagram(self):
        kink = [(0, 1), (2, 3)]
        two_kinks = kink + [(d + 4, e + 4) for d, e in kink]
        with pytest.raises(Disconnected):
            LinkDiagram.from_pairs(two_kinks, 2)


class TestInvariants:
    def test_writhe(self, trefoil, fig8, granny):
        assert trefoil.writhe == -3
        assert fig8.writhe == 0
        assert granny.writhe == -6
        assert LinkDiagram.braid_closure(HOPF_BRAID).writhe == -2
        assert LinkDiagram.braid_closure(SQUARE_BRAID).writhe == 0

    def test_alternating(self, trefoil, fig8, granny):
        assert trefoil.is_alternating
        assert fig8.is_alternating
        assert not granny.is_alternating
        assert LinkDiagram.braid_closure(SQUARE_BRAID).is_alternating

    def test_face_count_euler(self, trefoil, fig8):
        # connected 4-valent planar graph: f = n + 2
        assert trefoil.face_count == 5
        assert fig8.face_count == 6

    def test_mirror(self, trefoil, fig8):
        m = trefoil.mirror()
        assert m.writhe == 3
        assert m.mirror() == trefoil
        assert m.is_alternating
        assert fig8.mirror().writhe == 0


class TestTwistRegions:
    def test_trefoil_single_region(self, trefoil):
        regions, t, reduced = trefoil.twist_regions()
        assert t == 1
        assert reduced
        (r,) = regions
        assert r.crossings == (0, 1, 2)
        assert r.length == 3
        assert r.short_side == "B"

    def test_fig8_two_regions(self, fig8):
        regions, t, reduced = fig8.twist_regions()
        assert t == 2
        assert reduced
        assert sorted(r.length for r in regions) == [2, 2]
        assert {r.short_side for r in regions} == {"A", "B"}

    def test_granny(self, granny):
        regions, t, reduced = granny.twist_regions()
        assert t == 2
        assert reduced
        assert all(r.length == 3 and r.short_side == "B" for r in regions)

    def test_twist_number_property(self, fig8):
        assert fig8.twist_number == 2


class TestPrimeness:
    def test_flags(self, trefoil, fig8, granny):
        assert trefoil.is_prime
        assert fig8.is_prime
        assert not granny.is_prime
        assert trefoil.primeness() == (True, False)
        assert granny.primeness() == (False, False)

    def test_nugatory_kink(self, trefoil):
        kink = LinkDiagram.from_pd("X(1,2,2,1)")
        assert kink.has_nugatory
        assert not trefoil.has_nugatory

    def test_granny_summands(self, granny):
        summands = granny.prime_summands()
        assert len(summands) == 2
        for s in summands:
            assert s.n == 3
            assert s.is_prime
            assert s.is_alternating
            assert s.writhe == -3

    def test_prime_diagram_is_its_own_summand(self, trefoil):
        assert trefoil.prime_summands() == [trefoil]

    def test_triple_sum(self):
        d = LinkDiagram.braid_closure("B4: s1^3 s2^3 s3^3")
        assert not d.is_prime
        assert len(d.prime_summands()) == 3


class TestCable:
    def test_two_cable_of_trefoil(self, trefoil):
        c = trefoil.cable(2)
        assert c.n == 12
        assert c.component_count == 2
        assert c.writhe == 4 * trefoil.writhe
        assert c.free_loops == 0

    def test_three_cable_counts(self, trefoil):
        c = trefoil.cable(3)
        assert c.n == 27
        assert c.component_count == 3
        assert c.writhe == 9 * trefoil.writhe


@given(
    word=st.integers(min_value=2, max_value=4).flatmap(
        lambda n: st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n - 1),
                st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0),
            ),
            min_size=1,
            max_size=6,
        ).map(lambda letters: (n, letters))
    )
)
def test_braid_closure_properties(word):
    n, letters = word
    text = f"B{n}: " + " ".join(f"s{g}^{e}" for g, e in letters)
    braid = parse_braid(text)
    try:
        d = LinkDiagram.braid_closure(braid)
    except Disconnected:
        return
    assert d.n == braid.crossing_count
    assert d.writhe == -sum(e for _, e in braid.letters)
    assert d.mirror().mirror() == d
    assert d.face_count == d.n + 2
    # export and re-import preserves everything
    again = LinkDiagram.from_pd(d.to_pd())
    assert again.writhe == d.writhe
    assert again.component_count == d.component_count
    assert again.is_alternating == d.is_alternating
