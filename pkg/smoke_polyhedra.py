import sys

from statesurf.diagram import LinkDiagram
from statesurf.errors import NotAdequate
from statesurf.notation import parse_braid, parse_pd
from statesurf.polyhedra import (
    guts_interval,
    nonprime_census,
    regions,
    spanning_counts,
    two_edge_loops,
)
from statesurf.states import State, adequacy, resolve, state_graph

failures = []


def check(name, got, want):
    ok = got == want
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
# over-to-over splice: a non-alternating connected sum diagram
GRANNY_PD = (
    "X(13,4,2,5) X(3,6,4,1) X(5,2,6,3) "
    "X(13,10,8,11) X(9,12,10,1) X(11,8,12,9)"
)
# under-to-over splice: the alternating connected sum diagram
GRANNY_ALT_PD = (
    "X(13,4,2,5) X(3,6,4,1) X(5,2,6,3) "
    "X(1,10,8,11) X(9,12,10,13) X(11,8,12,9)"
)

tref = LinkDiagram.from_pd(parse_pd(TREFOIL_PD))
fig8 = LinkDiagram.from_pd(parse_pd(FIG8_PD))
granny = LinkDiagram.from_pd(parse_pd(GRANNY_PD))
b3 = LinkDiagram.braid_closure(parse_braid("B2:s1^3"))
hopf = LinkDiagram.braid_closure(parse_braid("B2:s1^2"))

# alternating diagrams: one nontrivial region holding everything
for name, d in [("fig8", fig8), ("tref", tref), ("s1^3", b3), ("hopf", hopf)]:
    _, h = resolve(d, State.all_A(d))
    rs = regions(h)
    nontrivial = [r for r in rs if r.nontrivial]
    check(f"{name} nontrivial regions", len(nontrivial), 1)
    check(
        f"{name} region crossings",
        sorted(c for r in rs for c in r.segments),
        list(range(d.n)),
    )
    pieces = nontrivial[0].pieces
    check(f"{name} piece count", len(pieces), 1)
    check(f"{name} piece size", pieces[0].n, d.n)
    check(f"{name} piece alternating", pieces[0].is_alternating, True)
    census = nonprime_census(rs)
    check(f"{name} arc_count", census["arc_count"], 0)
    check(f"{name} none_exist", census["none_exist"], True)
    check(f"{name} lower polyhedra prime", all(p.is_prime for p in census["lower_polyhedra"]), True)

# non-alternating splice: the two summands' regions stay apart, so the
# census needs no cutting arcs
check("granny not alternating", granny.is_alternating, False)
_, hg = resolve(granny, State.all_A(granny))
rg = regions(hg)
check("granny nontrivial regions", sum(1 for r in rg if r.nontrivial), 2)
census_g = nonprime_census(rg)
check("granny arc_count", census_g["arc_count"], 0)
check("granny lower count", len(census_g["lower_polyhedra"]), 2)
check(
    "granny lower sizes",
    sorted(p.n for p in census_g["lower_polyhedra"]),
    [3, 3],
)
check("granny lower prime", all(p.is_prime for p in census_g["lower_polyhedra"]), True)
check("granny lower alternating", all(p.is_alternating for p in census_g["lower_polyhedra"]), True)

# alternating splice: one region whose induced diagram is composite,
# split by one non-prime arc
galt = LinkDiagram.from_pd(parse_pd(GRANNY_ALT_PD))
check("granny_alt alternating", galt.is_alternating, True)
_, hga = resolve(galt, State.all_A(galt))
rga = regions(hga)
check("granny_alt nontrivial regions", sum(1 for r in rga if r.nontrivial), 1)
census_ga = nonprime_census(rga)
check("granny_alt arc_count", census_ga["arc_count"], 1)
check("granny_alt none_exist", census_ga["none_exist"], False)
check(
    "granny_alt lower sizes",
    sorted(p.n for p in census_ga["lower_polyhedra"]),
    [3, 3],
)
check("granny_alt lower prime", all(p.is_prime for p in census_ga["lower_polyhedra"]), True)

# two-edge loops
g3, r3 = state_graph(resolve(b3, State.all_A(b3))[1])
tw3, _, _ = b3.twist_regions()
check("s1^3 all_A loops", two_edge_loops(g3, tw3), [])

gh, rh = state_graph(resolve(hopf, State.all_A(hopf))[1])
twh, _, _ = hopf.twist_regions()
loops_h = two_edge_loops(gh, twh)
check("hopf loop count", len(loops_h), 1)
check("hopf loop same region", loops_h[0].same_twist_region, True)

g8, r8 = state_graph(resolve(fig8, State.all_A(fig8))[1])
tw8, _, _ = fig8.twist_regions()
loops_8 = two_edge_loops(g8, tw8)
check("fig8 loop count", len(loops_8), 1)
check("fig8 loop same region", loops_8[0].same_twist_region, True)

# spanning counts
sc_h = spanning_counts(gh, rh, twh)
check("hopf b_A", sc_h["b_A"], 1)
check("hopf m_A", sc_h["m_A"], 0)
check("hopf E_l", sc_h["E_l"], 2)

sc_3 = spanning_counts(g3, r3, tw3)
check("s1^3 b_A", sc_3["b_A"], 0)
check("s1^3 m_A", sc_3["m_A"], 0)
check("s1^3 E_l", sc_3["E_l"], 0)

sc_8 = spanning_counts(g8, r8, tw8)
check("fig8 m_A", sc_8["m_A"], 0)

# guts intervals
gi = guts_interval(b3)
check("s1^3 guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "OnlyBigonLoops"))
gi = guts_interval(tref)
check("tref(PD) guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "Tree"))
gi = guts_interval(fig8)
check("fig8 guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "OnlyBigonLoops"))
gi = guts_interval(hopf)
check("hopf guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "Tree"))
gi = guts_interval(granny)
check("granny guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "Tree"))
gi = guts_interval(galt)
check("granny_alt guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "Tree"))
gi = guts_interval(LinkDiagram.unknot())
check("unknot guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 0, True, "Tree"))

# inadequate side raises
kink = LinkDiagram.from_pd(parse_pd("X(1,2,2,1)"))
ga, _ = state_graph(resolve(kink, State.all_A(kink))[1])
if adequacy(ga):
    print("kink all_A adequate; guts =", guts_interval(kink))
else:
    try:
        guts_interval(kink)
        check("kink guts raises", "no error", "NotAdequate")
    except NotAdequate:
        check("kink guts raises", "NotAdequate", "NotAdequate")

# montesinos hint plumbing
gi = guts_interval(b3, montesinos_hint={"reduced": True, "positive_tangles": 3})
check("hint bypasses rule 3", gi.justification, "OnlyBigonLoops" if r3.e == r3.v - 1 else "Montesinos")

# composite braid closure: s1^3 s2^3 (left granny); its A-regions are
# the triangle sides of the two summands
b33 = LinkDiagram.braid_closure(parse_braid("B3:s1^3 s2^3"))
print("s1^3 s2^3 alternating:", b33.is_alternating)
gi = guts_interval(b33)
check("s1^3 s2^3 guts", (gi.lo, gi.hi, gi.exact, gi.justification), (0, 1, False, "Generic"))
census_33 = nonprime_census(regions(resolve(b33, State.all_A(b33))[1]))
check("s1^3 s2^3 lower sizes", sorted(p.n for p in census_33["lower_polyhedra"]), [3, 3])
print("s1^3 s2^3 arc_count:", census_33["arc_count"])

# 12-crossing cable sanity: regions partition and pieces alternate
c2 = b3.cable(2)
_, hc = resolve(c2, State.all_A(c2))
rc = regions(hc)
check(
    "cable regions partition",
    sorted(c for r in rc for c in r.segments),
    list(range(c2.n)),
)
check("cable pieces alternating", all(p.is_alternating for r in rc for p in r.pieces), True)
print("cable census:", {k: v for k, v in nonprime_census(rc).items() if k != "lower_polyhedra"})

print()
print("FAILURES:", failures if failures else "none")
sys.exit(1 if failures else 0)
