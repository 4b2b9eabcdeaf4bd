"""Combinatorial shadow of the polyhedral decomposition of a state
surface complement.

The state circles of sigma cut the projection sphere into regions;
each region holding at least one segment carries an induced alternating
diagram (its segments become crossings, the circle arcs between
consecutive attachments become edges).  Non-prime arcs of the
decomposition correspond to connect-sum cuts of those induced diagrams,
and the lower polyhedra are their prime factors.

From the same all-A data we count the quantities the guts estimates
need: bigons lying in twisted parallel classes (b_A), the excess
m_A = e_A - e'_A - b_A, the long-resolution edge count ||E_l||, and
finally a certified interval for chi_minus of the guts, tagged with the
rule that produced it.

Induced-diagram construction.  Walking a state circle in its canonical
direction, each smoothing arc it crosses is a *stop* whose segment
hangs off to one side; for the A-smoothing the segment lies right of
the walk when the stop is entered at slot 0 or 2 and left otherwise
(the B rule is the mirror).  A region's diagram joins consecutive
same-region stops along each circle, and contracting each segment
merges the rotation at its two stops in the order (arrival, departure)
on the left side, (departure, arrival) on the right.  Slotting the
contracted vertex so that each stop's pair sits at {0,3} / {1,2} makes
the smoothing arcs the A-resolution of the new crossing; planarity of
every piece and alternation are asserted, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import LinkDiagram, TwistRegion, dart, slot_of
from .errors import NotAdequate, NotConnected
from .states import (
    State,
    StateGraph,
    StateGraphH,
    ReducedStateGraph,
    adequacy,
    euler_data,
    resolve,
    smooth_partner,
    state_graph,
)

__all__ = [
    "PolyhedralRegion",
    "TwoEdgeLoop",
    "GutsInterval",
    "regions",
    "nonprime_census",
    "two_edge_loops",
    "spanning_counts",
    "guts_interval",
]


@dataclass(frozen=True)
class PolyhedralRegion:
    """One complementary region of the state circles.

    ``pieces`` holds the connected components of the induced
    alternating diagram (empty for trivial regions); crossing-free
    boundary circles are only counted, they carry no combinatorics.
    """

    id: int
    circles: tuple[int, ...]
    segments: tuple[int, ...]
    pieces: tuple[LinkDiagram, ...]
    bare_circles: int = 0

    @property
    def nontrivial(self) -> bool:
        return bool(self.segments)


@dataclass(frozen=True)
class TwoEdgeLoop:
    """An unordered pair of parallel edges of G_sigma."""

    crossings: tuple[int, int]
    endpoints: tuple[int, int]
    same_twist_region: bool


@dataclass(frozen=True)
class GutsInterval:
    """Certified bounds on chi_minus of the guts of the A-state
    complement, with the rule that justified them."""

    lo: int
    hi: int
    exact: bool
    justification: str

    def __post_init__(self):
        assert 0 <= self.lo <= self.hi
        assert not self.exact or self.lo == self.hi


def _stops(h: StateGraphH) -> list[list[tuple[int, int]]]:
    """Per circle, the walk-ordered list of (entry dart, crossing)."""
    out = []
    for walk in h.circles.walks:
        stops = []
        for t in range(0, len(walk), 2):
            stops.append((walk[t], walk[t] >> 2))
        out.append(stops)
    return out


def _segment_side(entry_dart: int, label: str) -> str:
    s = slot_of(entry_dart)
    if label == "A":
        return "R" if s in (0, 2) else "L"
    return "R" if s in (1, 3) else "L"


def regions(h: StateGraphH) -> list[PolyhedralRegion]:
    """Complement regions of the state circles with their induced
    alternating diagrams."""
    d = h.diagram
    state = h.state
    if d.n == 0:
        return []

    circle_stops = _stops(h)
    stop_of_arc: dict[frozenset, tuple[int, int, int]] = {}
    for ci, stops in enumerate(circle_stops):
        for pos, (entry, c) in enumerate(stops):
            partner = smooth_partner(entry, state[c])
            stop_of_arc[frozenset((entry, partner))] = (ci, pos, entry)

    # Which regions flank each circle: read the faces on both sides of
    # one of its arcs.
    flanks = []
    for walk in h.circles.walks:
        exit_dart = walk[1]
        f1 = h.region_of_face[d.face_of_dart[exit_dart]]
        f2 = h.region_of_face[d.face_of_dart[d.adj(exit_dart)]]
        flanks.append((f1, f2))

    out = []
    for rid in range(h.region_count):
        segs = tuple(
            c for c in range(d.n) if h.region_of_crossing[c] == rid
        )
        bounding = tuple(
            ci for ci, fl in enumerate(flanks) if rid in fl
        )
        if not segs:
            out.append(PolyhedralRegion(rid, bounding, (), (), len(bounding)))
            continue

        seg_index = {c: k for k, c in enumerate(segs)}

        # ends: ("a"/"b", circle, stop position) -> induced dart
        end_slot: dict[tuple[str, int, int], int] = {}
        sides_seen: dict[tuple[int, int], str] = {}
        for c in segs:
            k = seg_index[c]
            d0 = dart(c, 0)
            arc_a = frozenset((d0, smooth_partner(d0, state[c])))
            d1 = dart(c, 1 if state[c] == "A" else 2)
            arc_b = frozenset((d1, smooth_partner(d1, state[c])))
            (ca, pa, ea) = stop_of_arc[arc_a]
            (cb, pb, eb) = stop_of_arc[arc_b]
            side_a = _segment_side(ea, state[c])
            side_b = _segment_side(eb, state[c])
            # a region sits on one fixed side of each bounding circle
            for ci, side in ((ca, side_a), (cb, side_b)):
                prior = sides_seen.setdefault((rid, ci), side)
                assert prior == side, "region must stay on one side of a circle"
            ua, va = ("a", "b") if side_a == "L" else ("b", "a")
            ub, vb = ("a", "b") if side_b == "L" else ("b", "a")
            end_slot[(va, ca, pa)] = dart(k, 0)
            end_slot[(ub, cb, pb)] = dart(k, 1)
            end_slot[(vb, cb, pb)] = dart(k, 2)
            end_slot[(ua, ca, pa)] = dart(k, 3)

        pairs = []
        for ci, stops in enumerate(circle_stops):
            mine = [
                pos
                for pos, (_, c) in enumerate(stops)
                if h.region_of_crossing[c] == rid
            ]
            for t, pos in enumerate(mine):
                nxt = mine[(t + 1) % len(mine)]
                pairs.append(
                    (end_slot[("b", ci, pos)], end_slot[("a", ci, nxt)])
                )

        pieces = _split_pieces(pairs, len(segs))
        bare = sum(
            1
            for ci in bounding
            if all(h.region_of_crossing[c] != rid for _, c in circle_stops[ci])
        )
        out.append(PolyhedralRegion(rid, bounding, segs, pieces, bare))
    return out


def _split_pieces(pairs: list[tuple[int, int]], n: int) -> tuple[LinkDiagram, ...]:
    """Connected components of an induced dart pairing, each rebuilt as
    a diagram of its own."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a >> 2), find(b >> 2)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)

    pieces = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        comp = sorted(groups[root])
        relabel = {c: i for i, c in enumerate(comp)}
        sub = [
            (dart(relabel[a >> 2], slot_of(a)), dart(relabel[b >> 2], slot_of(b)))
            for a, b in pairs
            if find(a >> 2) == root
        ]
        piece = LinkDiagram.from_pairs(sub, len(comp))
        assert piece.is_alternating, "induced region diagram must alternate"
        pieces.append(piece)
    return tuple(pieces)


def nonprime_census(region_list: list[PolyhedralRegion]) -> dict:
    """Size of a maximal non-prime arc collection and the resulting
    lower polyhedra."""
    arc_count = 0
    lower = []
    for region in region_list:
        if not region.nontrivial:
            continue
        summands: list[LinkDiagram] = []
        for piece in region.pieces:
            summands.extend(piece.prime_summands())
        arc_count += len(summands) - 1
        lower.extend(summands)
    return {
        "arc_count": arc_count,
        "none_exist": arc_count == 0,
        "lower_polyhedra": lower,
    }


def two_edge_loops(
    g: StateGraph, twist: list[TwistRegion]
) -> list[TwoEdgeLoop]:
    """All unordered pairs of parallel non-loop edges of G_sigma."""
    region_of = {}
    for tr in twist:
        for c in tr.crossings:
            region_of[c] = tr
    classes: dict[tuple[int, int], list[int]] = {}
    for u, v, c in g.edges:
        if u != v:
            classes.setdefault((u, v), []).append(c)
    out = []
    for (u, v), crossings in sorted(classes.items()):
        for i in range(len(crossings)):
            for j in range(i + 1, len(crossings)):
                a, b = crossings[i], crossings[j]
                out.append(
                    TwoEdgeLoop(
                        (a, b), (u, v), region_of.get(a) is region_of.get(b)
                    )
                )
    return out


def _bigon_count(g: StateGraph, twist: list[TwistRegion]) -> int:
    """b_A: crossings collapsed by twisted parallel classes.

    A twist region whose edges all join one pair of circles loses all
    but one of them in G'_A; each such region of length L contributes
    L - 1.
    """
    ends = {c: (u, v) for u, v, c in g.edges}
    b = 0
    for tr in twist:
        if tr.length < 2:
            continue
        pairs = {frozenset(ends[c]) for c in tr.crossings}
        if len(pairs) == 1:
            (pair,) = pairs
            if len(pair) == 2:
                b += tr.length - 1
    return b


def spanning_counts(
    g: StateGraph, reduced: ReducedStateGraph, twist: list[TwistRegion]
) -> dict:
    """Edge counts feeding the guts estimates.

    m_A is the number of parallel edges not explained by twist regions;
    ||E_l|| counts long-resolution edges kept by the spanning set.
    """
    if g.has_loop:
        raise NotAdequate("spanning counts need an adequate state")
    data = euler_data(g, reduced)
    b = _bigon_count(g, twist)
    m = g.e - reduced.e - b
    assert m >= 0
    return {
        "b_A": b,
        "m_A": m,
        "E_l": g.e - reduced.e + data["n_sep"],
    }


def guts_interval(
    d: LinkDiagram, montesinos_hint: Optional[object] = None
) -> GutsInterval:
    """Bound chi_minus of the guts of the A-state surface complement.

    The first applicable rule wins:

    1. G'_A a tree: the surface is a fiber, guts vanish.
    2. A reduced admissible Montesinos diagram with at least three
       positive tangles: exactly chi_minus(G'_A).
    3. Prime diagram whose 2-edge loops each live in one twist region:
       exactly chi_minus(G'_A).
    4. Prime diagram with no non-prime arcs: within 8*m_A of
       chi_minus(G'_A), exact when m_A = 0.
    5. Otherwise only 0 <= guts <= chi_minus(G'_A) is certified.
    """
    if d.n and d.free_loops:
        raise NotConnected("state data needs a connected diagram")
    circles, h = resolve(d, State.all_A(d))
    g, reduced = state_graph(h)
    if not adequacy(g):
        raise NotAdequate("guts estimates need an A-adequate diagram")
    chi_minus = euler_data(g, reduced)["chi_minus_reduced"]

    if reduced.e == reduced.v - 1:
        return GutsInterval(0, 0, True, "Tree")

    hint = montesinos_hint
    if hint is not None:
        get = (
            hint.get
            if isinstance(hint, dict)
            else lambda k, default=None: getattr(hint, k, default)
        )
        if get("reduced") and (get("positive_tangles") or 0) >= 3:
            return GutsInterval(chi_minus, chi_minus, True, "Montesinos")

    twist, _, _ = d.twist_regions()
    if d.is_prime:
        loops = two_edge_loops(g, twist)
        if all(lp.same_twist_region for lp in loops):
            return GutsInterval(chi_minus, chi_minus, True, "OnlyBigonLoops")
        counts = spanning_counts(g, reduced, twist)
        census = nonprime_census(regions(h))
        if census["none_exist"]:
            lo = max(0, chi_minus - 8 * counts["m_A"])
            return GutsInterval(lo, chi_minus, lo == chi_minus, "NoNonPrimeArcs")
    return GutsInterval(0, chi_minus, chi_minus == 0, "Generic")
