import sys
from fractions import Fraction as F

from statesurf.montesinos import (
    MontesinosNormalForm,
    build_diagram,
    equivalent,
    montesinos_report,
    negative_loop_taxonomy,
    normalize,
    q_half_count,
)
from statesurf.polyhedra import spanning_counts, two_edge_loops
from statesurf.states import State, euler_data, resolve, state_graph

failures = []


def check(name, got, want):
    ok = got == want
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


PRETZEL = "M(1/3, -1/3, 1/3, -1/3, 1/3, -1/3)"

# normalize
n1 = normalize("M(4/3, 1/2, 4/7, -1/3)")
check("normalize transfer", n1.slopes, (F(1, 3), F(1, 2), F(4, 7), F(2, 3)))
check("normalize total", n1.total, F(29, 14))
check("normalize r,s", (n1.positive_count, n1.negative_count), (4, 0))

np = normalize(PRETZEL)
check("pretzel fixed point", np.slopes, (F(1, 3), F(-1, 3)) * 3)
na = normalize("M(-1/2, -1/3, -1/5)")
check("alternating fixed point", na.slopes, (F(-1, 2), F(-1, 3), F(-1, 5)))
check("alternating flag", na.alternating, True)

nm = normalize([F(1, 3), F(1, 3), F(-2, 3)])
check("mixed k=1", nm.slopes, (F(-2, 3), F(1, 3), F(1, 3)))
check("mixed k=1 total", nm.total, 0)

npos = normalize([F(5, 2), F(1, 2), F(1, 3)])
check("rotate positive", npos.slopes, (F(1, 3), F(1, 2), F(5, 2)))
check("rotate positive total", npos.total, F(10, 3))

nneg = normalize([F(-5, 2), F(-1, 2), F(-1, 3)])
check("fold negative total", nneg.total, F(-10, 3))
check("fold negative sign", all(q < 0 for q in nneg.slopes), True)

# mixed signs with |q| > 1 force the k-correction branches
nfp = normalize([F(5, 2), F(1, 2), F(-1, 3)])
check("mixed fold positive", nfp.slopes, (F(3, 2), F(1, 2), F(2, 3)))
check("mixed fold positive total", nfp.total, F(8, 3))
nfn = normalize([F(-5, 2), F(-1, 2), F(1, 3)])
check("mixed fold negative", nfn.slopes, (F(-5, 3), F(-1, 2), F(-1, 2)))
check("mixed fold negative total", nfn.total, F(-8, 3))

# equivalence
check("equiv transfer", equivalent("M(4/3,1/2,4/7,-1/3)", "M(1/2,4/7,2/3,1/3)"), True)
check("equiv sum mismatch", equivalent([F(1, 3)] * 3, [F(1, 3), F(1, 3), F(-2, 3)]), False)
check("equiv reversal", equivalent("M(1/2,1/3,1/7)", "M(1/7,1/3,1/2)"), True)
check("equiv self", equivalent(PRETZEL, PRETZEL), True)

# Q_half
check("Q_half pretzel", q_half_count(np), 0)
check("Q_half mixed halves", q_half_count("M(1/2,1/2,-1/2,-1/2,1/3,-1/3)"), 4)

# build: pretzel
dp = build_diagram(np)
check("pretzel c", dp.n, 18)
regions, t, reduced_flag = dp.twist_regions()
check("pretzel t", t, 6)
check("pretzel twist_reduced", reduced_flag, True)
check("pretzel lengths", sorted(r.length for r in regions), [3] * 6)
check("pretzel alternating", dp.is_alternating, False)

_, hA = resolve(dp, State.all_A(dp))
gA, rA = state_graph(hA)
dataA = euler_data(gA, rA)
check("pretzel v_A", dataA["v"], 9)
check("pretzel e'_A", dataA["e_reduced"], 12)
check("pretzel chi'_A", dataA["chi_reduced"], -3)
counts = spanning_counts(gA, rA, regions)
check("pretzel b_A", counts["b_A"], 6)
check("pretzel m_A", counts["m_A"], 0)
loops = two_edge_loops(gA, regions)
check("pretzel loop count", len(loops), 9)
check("pretzel loops all twist", all(l.same_twist_region for l in loops), True)

rep = montesinos_report(np)
check("pretzel report r,s", (rep["r"], rep["s"]), (3, 3))
check("pretzel adequate", (rep["A_adequate"], rep["B_adequate"]), (True, True))
check("pretzel guts", (rep["guts_A"], rep["guts_B"]), (3, 3))
check("pretzel Q", rep["Q_half"], 0)
check("pretzel hyperbolic", rep["hyperbolic_sufficient"], True)
check("pretzel identity", rep["identity_holds"], True)

# build: alternating (2,3,5)-style pretzel
da = build_diagram(na)
check("alt c", da.n, 10)
check("alt alternating", da.is_alternating, True)
_, t_a, _ = da.twist_regions()
check("alt t", t_a, 3)
repa = montesinos_report(na)
check("alt adequate both", (repa["A_adequate"], repa["B_adequate"]), (True, True))
check("alt guts exact", "guts_A" in repa and "guts_B" in repa, True)
print("   alt guts values:", repa.get("guts_A"), repa.get("guts_B"), "#K", repa["components"])
check("alt identity absent", "identity_holds" not in repa, True)
check("alt reason", "identity_holds" in repa["reasons"], True)

# build: [3/5, 1/2, 1/3] twist count
d35 = build_diagram(normalize("M(3/5, 1/2, 1/3)"))
check("3/5 build c", d35.n, 9)
_, t35, _ = d35.twist_regions()
check("3/5 build t", t35, 5)
check("3/5 alternating", d35.is_alternating, True)

# ledger-verified hand computations
d215 = build_diagram(normalize("M(1/2, 1/2, -1/2)"))
_, h215 = resolve(d215, State.all_A(d215))
g215, r215 = state_graph(h215)
data215 = euler_data(g215, r215)
check("P(1/2,1/2,-1/2) e_A", data215["e"], 6)
check("P(1/2,1/2,-1/2) e'_A", data215["e_reduced"], 2)
c215 = spanning_counts(g215, r215, d215.twist_regions()[0])
check("P(1/2,1/2,-1/2) b_A", c215["b_A"], 3)
check("P(1/2,1/2,-1/2) m_A", c215["m_A"], 1)

d3332 = build_diagram(normalize("M(1/3, 1/3, 1/3, -1/2)"))
_, h3332 = resolve(d3332, State.all_A(d3332))
g3332, r3332 = state_graph(h3332)
c3332 = spanning_counts(g3332, r3332, d3332.twist_regions()[0])
check("P(1/3,1/3,1/3,-1/2) m_A", c3332["m_A"], 0)

# taxonomy
tax_p = negative_loop_taxonomy(np)
check("pretzel taxonomy kinds", sorted({e["kind"] for e in tax_p}), [1])
check("pretzel taxonomy count", len(tax_p), 3)

tax_r2 = negative_loop_taxonomy(normalize([F(1, 3), F(1, 3), F(-1, 3)]))
check("r=2 kind 3 flagged", any(e["kind"] == 3 for e in tax_r2), True)

nb = normalize([F(1, 3), F(1, 3), F(1, 3), F(-2, 3)])
tax_b = negative_loop_taxonomy(nb)
k2 = [e for e in tax_b if e["kind"] == 2]
check("bridge tangle flagged", [(e["tangle"], e["bridge"]) for e in k2], [(0, True)])
db = build_diagram(nb)
_, hb = resolve(db, State.all_A(db))
gb, rb = state_graph(hb)
cb = spanning_counts(gb, rb, db.twist_regions()[0])
check("bridge m_A", cb["m_A"], 1)
k1_b = [e for e in tax_b if e["kind"] == 1]
check("bridge b_A", cb["b_A"], sum(e["length"] - 1 for e in k1_b))
loops_b = two_edge_loops(gb, db.twist_regions()[0])
cross = [l for l in loops_b if not l.same_twist_region]
check("bridge cross-region loop exists", len(cross) >= 1, True)

# q = -1/2 exactly: loop exists but inside one twist region
nh = normalize([F(1, 3), F(1, 3), F(1, 3), F(-1, 2)])
tax_h = negative_loop_taxonomy(nh)
k2h = [e for e in tax_h if e["kind"] == 2]
check("half slope flagged non-bridge", [(e["tangle"], e["bridge"]) for e in k2h], [(3, False)])
dh = build_diagram(nh)
_, hh = resolve(dh, State.all_A(dh))
gh, rh = state_graph(hh)
ch = spanning_counts(gh, rh, dh.twist_regions()[0])
check("half slope m_A", ch["m_A"], 0)
loops_h = two_edge_loops(gh, dh.twist_regions()[0])
check("half slope loops all twist", all(l.same_twist_region for l in loops_h), True)

# identity on a fixed battery of r>=3, s>=3 vectors
import random

rng = random.Random("montesinos-smoke")
for trial in range(25):
    m = rng.randrange(3, 5)
    picks = []
    for _ in range(m):
        den = rng.randrange(2, 8)
        num = rng.randrange(1, den)
        picks.append(F(num, den))
    for _ in range(m):
        den = rng.randrange(2, 8)
        num = rng.randrange(1, den)
        picks.append(F(-num, den))
    rng.shuffle(picks)
    form = normalize(picks)
    if form.positive_count < 3 or form.negative_count < 3:
        continue
    r = montesinos_report(form)
    if not r["identity_holds"]:
        check(f"identity trial {trial} {form.slopes}", r["identity_holds"], True)
    # Lemma-style lower bound on the same vectors
    d = build_diagram(form)
    _, ha = resolve(d, State.all_A(d))
    ga, ra = state_graph(ha)
    _, hbb = resolve(d, State.all_B(d))
    gbb, rbb = state_graph(hbb)
    lhs = -euler_data(ga, ra)["chi_reduced"] - euler_data(gbb, rbb)["chi_reduced"]
    _, t_d, _ = d.twist_regions()
    if not lhs >= F(t_d - d.component_count, 2):
        check(f"twist lower bound trial {trial}", lhs, f">= {(t_d - d.component_count)/2}")
print("ok  identity battery done")

print()
print("FAILURES:", failures if failures else "none")
sys.exit(1 if failures else 0)
