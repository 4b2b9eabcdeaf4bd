import sys
from fractions import Fraction

from statesurf.diagram import LinkDiagram
from statesurf.errors import CrossingCapExceeded, NotAdequate
from statesurf.notation import BraidWord, parse_braid, parse_pd
from statesurf.jones import (
    LaurentPolynomial,
    VAR_JONES,
    adequacy_obstruction,
    jones_polynomial,
    jones_report,
    kauffman_bracket,
    skein_bracket,
    stable_identity_check,
)

failures = []


def check(name, got, want):
    ok = got == want
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
GRANNY_PD = (
    "X(13,4,2,5) X(3,6,4,1) X(5,2,6,3) "
    "X(13,10,8,11) X(9,12,10,1) X(11,8,12,9)"
)

unknot = LinkDiagram.unknot()
kink = LinkDiagram.from_pd(parse_pd("X(1,2,2,1)"))
hopf = LinkDiagram.braid_closure(parse_braid("B2:s1^2"))
b3 = LinkDiagram.braid_closure(parse_braid("B2:s1^3"))
b4 = LinkDiagram.braid_closure(parse_braid("B2:s1^4"))
tref = LinkDiagram.from_pd(parse_pd(TREFOIL_PD))
fig8 = LinkDiagram.from_pd(parse_pd(FIG8_PD))
granny = LinkDiagram.from_pd(parse_pd(GRANNY_PD))
b33 = LinkDiagram.braid_closure(parse_braid("B3:s1^3 s2^3"))
unlink2 = LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1))))

# bracket oracle values
check("<unknot>", kauffman_bracket(unknot).coeffs, {0: 1})
check("<kink>", kauffman_bracket(kink).coeffs, {-3: -1})
check("<hopf>", kauffman_bracket(hopf).coeffs, {4: -1, -4: -1})

# oracle == skein everywhere
cases = [
    ("unknot", unknot),
    ("kink", kink),
    ("hopf", hopf),
    ("s1^3", b3),
    ("s1^4", b4),
    ("tref", tref),
    ("fig8", fig8),
    ("granny", granny),
    ("b33", b33),
    ("unlink2", unlink2),
    ("mirror fig8", fig8.mirror()),
    ("cable2 tref", tref.cable(2)),
]
for name, d in cases:
    check(f"oracle==skein {name}", kauffman_bracket(d).coeffs, skein_bracket(d).coeffs)

# jones values
check("J(unknot)", jones_polynomial(unknot).coeffs, {0: 1})
check("J(kink)=1", jones_polynomial(kink).coeffs, {0: 1})
jl = jones_polynomial(b3)
check("J(s1^3)", jl.coeffs, {-4: -1, -3: 1, -1: 1})
check("J(s1^3) grid", jl.half_grid, False)
jr = jones_polynomial(tref)
check("J(3_1 pd, left tref)", jr.coeffs, {-4: -1, -3: 1, -1: 1})
check("J(right tref)", jones_polynomial(tref.mirror()).coeffs, {4: -1, 3: 1, 1: 1})
j8 = jones_polynomial(fig8)
check("J(fig8)", j8.coeffs, {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
jh = jones_polynomial(hopf)
check("J(hopf) half grid", jh.half_grid, True)
check("J(hopf)", jh.coeffs, {-5: -1, -1: -1})
check("J(hopf) min deg", jh.min_degree, Fraction(-5, 2))

# J(1) = (-2)^(#K-1)
for name, d in cases:
    got = jones_polynomial(d).value_at_one()
    want = (-2) ** (d.component_count - 1)
    check(f"J(1) {name}", got, want)

# multiplicativity under split: granny J = product of two trefoil J's
check("J(granny) = J(tref)^2", jones_polynomial(granny).coeffs, (jr * jr).coeffs)
check("J(b33) = J(s1^3)^2", jones_polynomial(b33).coeffs, (jl * jl).coeffs)

# mirror inverts degrees
jm = jones_polynomial(tref.mirror())
check("J(mirror tref)", jm.coeffs, {-d: c for d, c in jr.coeffs.items()})

# reports
rep3 = jones_report(b3)
check("tref m2,r2", (rep3.m2, rep3.r2), (-1, -4))
check("tref alpha,beta", (rep3.alpha, rep3.beta), (1, 0))
check("tref alpha',beta'", (rep3.alpha_prime, rep3.beta_prime), (-1, 1))
check("tref eps,eps'", (rep3.epsilon, rep3.epsilon_prime), (1, 0))
check("tref J(1)", rep3.value_at_one, 1)

rep8 = jones_report(fig8)
check("fig8 |beta|,|beta'|", (abs(rep8.beta), abs(rep8.beta_prime)), (1, 1))

rep4 = jones_report(b4)
check("s1^4 J(1)", rep4.value_at_one, -2)

reph = jones_report(hopf)
check("hopf m2", reph.m2, Fraction(-1, 2))
check("hopf alpha,beta", (reph.alpha, reph.beta), (-1, 0))
check("hopf alpha',beta'", (reph.alpha_prime, reph.beta_prime), (-1, 0))

# stable identity
check("stable s1^3", stable_identity_check(b3), {"holds": True, "lhs": [1, 1], "rhs": [1, 1]})
check("stable fig8", stable_identity_check(fig8), {"holds": True, "lhs": [1, 1], "rhs": [1, 1]})
check("stable tref PD", stable_identity_check(tref)["holds"], True)
check("stable hopf", stable_identity_check(hopf)["holds"], True)
check("stable b4", stable_identity_check(b4)["holds"], True)
try:
    stable_identity_check(LinkDiagram.braid_closure(BraidWord(2, ((1, 1), (1, -1)))))
    check("stable unlink2 raises", "no error", "NotAdequate")
except NotAdequate:
    check("stable unlink2 raises", "NotAdequate", "NotAdequate")

# obstruction
check(
    "obstruction tref",
    adequacy_obstruction(rep3),
    {"a_side_possible": True, "b_side_possible": True},
)

# pinned paper polynomials drive the obstruction the right way
J95 = LaurentPolynomial(
    {2: 2, 3: -3, 4: 5, 5: -6, 6: 6, 7: -5, 8: 4, 9: -2}, VAR_JONES
)
rep95 = jones_report.__wrapped__ if False else None
from statesurf.jones import JonesReport

def report_of(poly):
    step = poly.grid_step
    top, bot = max(poly.coeffs), min(poly.coeffs)
    return JonesReport(
        J=poly, m2=poly.max_degree, r2=poly.min_degree,
        alpha=poly.coeff_at_key(top), beta=poly.coeff_at_key(top - step),
        alpha_prime=poly.coeff_at_key(bot), beta_prime=poly.coeff_at_key(bot + step),
        epsilon=1 if poly.coeff_at_key(top - step) == 0 else 0,
        epsilon_prime=1 if poly.coeff_at_key(bot + step) == 0 else 0,
        value_at_one=poly.value_at_one(),
    )

check(
    "obstruction 11n95",
    adequacy_obstruction(report_of(J95)),
    {"a_side_possible": False, "b_side_possible": False},
)
J118 = LaurentPolynomial(
    {2: 2, 3: -2, 4: 3, 5: -4, 6: 4, 7: -3, 8: 2, 9: -1}, VAR_JONES
)
check(
    "obstruction 11n118",
    adequacy_obstruction(report_of(J118)),
    {"a_side_possible": False, "b_side_possible": True},
)
J0706 = LaurentPolynomial(
    {-4: 2, -3: -4, -2: 6, -1: -8, 0: 9, 1: -8, 2: 6, 3: -4, 4: 2}, VAR_JONES
)
check(
    "obstruction 12n0706",
    adequacy_obstruction(report_of(J0706)),
    {"a_side_possible": False, "b_side_possible": False},
)

# cap enforcement
try:
    jones_polynomial(tref.cable(2), cap=10)
    check("cap raises", "no error", "CrossingCapExceeded")
except CrossingCapExceeded:
    check("cap raises", "CrossingCapExceeded", "CrossingCapExceeded")

# text and json forms
check("fig8 text", j8.to_text(), "t^-2 - t^-1 + 1 - t + t^2")
check("hopf text", jh.to_text(), "-t^(-5/2) - t^(-1/2)")
check("fig8 json", j8.to_json_map(), {"-2": 1, "-1": -1, "0": 1, "1": -1, "2": 1})
check("J95 text", J95.to_text(), "2t^2 - 3t^3 + 5t^4 - 6t^5 + 6t^6 - 5t^7 + 4t^8 - 2t^9")

# fiber <=> beta' = 0 on the B side via mirror: s1^3 all_B is a fiber
# and the mirror's A end sees beta' = 0
repm = jones_report(b3.mirror())
check("mirror tref beta'=0", repm.beta_prime, 0)

print()
print("FAILURES:", failures if failures else "none")
sys.exit(1 if failures else 0)
