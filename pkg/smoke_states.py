import sys

from statesurf.diagram import LinkDiagram
from statesurf.notation import BraidWord, parse_braid, parse_pd
from statesurf.states import (
    ReducedStateGraph,
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

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"

failures = []


def check(name, got, want):
    ok = got == want
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


tref = LinkDiagram.from_pd(parse_pd(TREFOIL_PD))
fig8 = LinkDiagram.from_pd(parse_pd(FIG8_PD))
b3 = LinkDiagram.braid_closure(parse_braid("B2:s1^3"))
b5 = LinkDiagram.braid_closure(parse_braid("B2:s1^5"))

# circle counts
ca, ha = resolve(b3, State.all_A(b3))
cb, hb = resolve(b3, State.all_B(b3))
check("s1^3 |s_A|", ca.count, 3)
check("s1^3 |s_B|", cb.count, 2)

# left trefoil (s1^3 closure, w=-3): all_A is the triangle side
circ_a, h_a = resolve(b3, State.all_A(b3))
g_a, r_a = state_graph(h_a)
check("s1^3 all_A v", g_a.v, 3)
check("s1^3 all_A e", g_a.e, 3)
check("s1^3 all_A e'", r_a.e, 3)
check("s1^3 all_A chi(G')", r_a.chi, 0)
check("s1^3 all_A adequate", adequacy(g_a), True)
check("s1^3 all_A orientable", orientability(g_a), False)
rep_a = fiber_report(b3, State.all_A(b3))
check("s1^3 all_A is_fiber", rep_a["is_fiber"], False)

# left trefoil all_B = Seifert state: two vertices, three parallel edges
circ_b, h_b = resolve(b3, State.all_B(b3))
g_b, r_b = state_graph(h_b)
check("s1^3 all_B v", g_b.v, 2)
check("s1^3 all_B e", g_b.e, 3)
check("s1^3 all_B e'", r_b.e, 1)
check("s1^3 all_B chi(G_B)", g_b.chi, -1)
check("s1^3 all_B chi(G'_B)", r_b.chi, 1)
ed_b = euler_data(g_b, r_b)
check("s1^3 all_B n_sep", ed_b["n_sep"], 1)
rep_b = fiber_report(b3, State.all_B(b3))
check("s1^3 all_B is_fiber", rep_b["is_fiber"], True)
check("s1^3 all_B genus", rep_b.get("genus"), 1)
check("s1^3 all_B orientable", rep_b["orientable"], True)

# right trefoil (the PD, w=+3): sides mirror-swapped from s1^3
g_ra, r_ra = state_graph(resolve(tref, State.all_A(tref))[1])
check("tref(PD) writhe", tref.writhe, 3)
check("tref(PD) all_A v", g_ra.v, 2)
check("tref(PD) all_A e'", r_ra.e, 1)
check("tref(PD) all_A fiber genus", fiber_report(tref, State.all_A(tref)).get("genus"), 1)
g_rb, r_rb = state_graph(resolve(tref, State.all_B(tref))[1])
check("tref(PD) all_B triangle", (g_rb.v, g_rb.e, r_rb.e, r_rb.chi), (3, 3, 3, 0))
check("tref(PD) all_B not orientable", orientability(g_rb), False)

# fig8 all_A
circ8, h8 = resolve(fig8, State.all_A(fig8))
g8, r8 = state_graph(h8)
check("fig8 all_A v", g8.v, 3)
check("fig8 all_A e", g8.e, 4)
check("fig8 all_A e'", r8.e, 3)
check("fig8 all_A chi(G'_A)", r8.chi, 0)

# s1^5 all_B fiber genus 2
rep5 = fiber_report(b5, State.all_B(b5))
check("s1^5 all_B fiber", rep5["is_fiber"], True)
check("s1^5 all_B genus", rep5.get("genus"), 2)

# turaev genus
check("fig8 g_T", turaev_genus(fig8), 0)
check("tref g_T", turaev_genus(tref), 0)
check("unknot g_T", turaev_genus(LinkDiagram.unknot()), 0)

# kink: one state has a loop
kink = LinkDiagram.from_pd(parse_pd("X(1,2,2,1)"))
gk_a, _ = state_graph(resolve(kink, State.all_A(kink))[1])
gk_b, _ = state_graph(resolve(kink, State.all_B(kink))[1])
check("kink exactly one inadequate extreme", sorted([adequacy(gk_a), adequacy(gk_b)]), [False, True])

# 2-crossing 2-component unlink: closure of s1 s1^-1
unlink2 = LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1))))
check("s1 s1^-1 components", unlink2.component_count, 2)
gu_a, _ = state_graph(resolve(unlink2, State.all_A(unlink2))[1])
check("s1 s1^-1 all_A inadequate", adequacy(gu_a), False)

# mirror: G_A(mirror) vs G_B as multigraphs (compare sorted degree+mult signatures)
def signature(g, r):
    mults = sorted(len(cs) for _, cs in r.multiplicity)
    degs = sorted(sum((u == x) + (v == x) for u, v, _ in g.edges) for x in range(g.v))
    return (g.v, g.e, mults, degs)


for name, d in [("tref", tref), ("fig8", fig8), ("b5", b5)]:
    m = d.mirror()
    gm, rm = state_graph(resolve(m, State.all_A(m))[1])
    go, ro = state_graph(resolve(d, State.all_B(d))[1])
    check(f"{name} G_A(mirror) sig == G_B sig", signature(gm, rm), signature(go, ro))

# cable: chi(G'_A) invariant
for name, d in [("tref", tref), ("fig8", fig8)]:
    c2 = d.cable(2)
    _, rc = state_graph(resolve(c2, State.all_A(c2))[1])
    _, r1 = state_graph(resolve(d, State.all_A(d))[1])
    check(f"{name} cable2 chi(G'_A)", rc.chi, r1.chi)

# homogeneity: extreme states always homogeneous; all-A of anything
check("tref all_A homogeneous", homogeneity(tref, State.all_A(tref)), True)
check("fig8 all_B homogeneous", homogeneity(fig8, State.all_B(fig8)), True)

# a mixed state on s1^3: labels (A,A,B) - the B crossing sits in the same
# region as the A crossings between the two circles
mixed = State(("A", "A", "B"))
print("s1^3 (A,A,B) homogeneous:", homogeneity(b3, mixed))
print("s1^3 (A,A,B) adequate:", adequacy(state_graph(resolve(b3, mixed)[1])[0]))

# essentiality passthrough
check("tref all_A essential", essentiality(tref, State.all_A(tref)), True)

# positive braid closure all_B = Seifert state: B-graph of s1^3 s2^3
b33 = LinkDiagram.braid_closure(parse_braid("B3:s1^3 s2^3"))
g33, r33 = state_graph(resolve(b33, State.all_B(b33))[1])
check("s1^3 s2^3 all_B v", g33.v, 3)
check("s1^3 s2^3 all_B e", g33.e, 6)
check("s1^3 s2^3 all_B e'", r33.e, 2)
rep33 = fiber_report(b33, State.all_B(b33))
check("s1^3 s2^3 fiber", rep33["is_fiber"], True)
check("s1^3 s2^3 genus", rep33.get("genus"), 2)

print()
print("FAILURES:", failures if failures else "none")
sys.exit(1 if failures else 0)
