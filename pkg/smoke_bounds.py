import math
import sys

from statesurf.bounds import (
    CONSTANTS,
    V3,
    V8,
    general_lower,
    montesinos_bounds,
    positive_braid_bounds,
)
from statesurf.diagram import LinkDiagram
from statesurf.errors import (
    ExponentTooSmall,
    HypothesisNotMet,
    InputError,
    NotPrimeDiagram,
)
from statesurf.montesinos import build_diagram, normalize

failures = []


def check(name, got, want):
    ok = got == want
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


def close(name, got, want, tol=1e-9):
    ok = abs(got - want) < tol
    print(f"{'ok ' if ok else 'FAIL'} {name}: got {got!r} want {want!r}")
    if not ok:
        failures.append(name)


check("constant digits v3", 1.0149 < V3 < 1.0150, True)
check("constant digits v8", 3.6638 < V8 < 3.6639, True)
check("constants object", (CONSTANTS.v3, CONSTANTS.v8), (V3, V8))

# figure-8 from its alternating PD code
FIG8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
d8 = LinkDiagram.from_pd(FIG8)
vb8 = general_lower(d8)
close("fig8 lower", vb8.lower, 0.0)
close("fig8 upper", vb8.upper, 10 * V3)
check("fig8 assumption", vb8.assumptions, ("link is hyperbolic",))

# pretzel via the general route and the Montesinos route
PRETZEL = "M(1/3, -1/3, 1/3, -1/3, 1/3, -1/3)"
dp = build_diagram(normalize(PRETZEL))
vbp = general_lower(dp)
close("pretzel general lower", vbp.lower, 3 * V8)
close("pretzel general upper", vbp.upper, 50 * V3)

vbm = montesinos_bounds(PRETZEL)
close("pretzel monte lower", vbm.lower, 3 * V8)
close("pretzel monte upper", vbm.upper, 12 * V8)
check("pretzel monte lower value", round(vbm.lower, 2), 10.99)
check("pretzel monte upper value", round(vbm.upper, 2), 43.97)
check("pretzel monte unconditional", vbm.assumptions, ())
check("pretzel jones attached", vbm.jones_form is not None, True)
close("pretzel jones lower", vbm.jones_form.lower, 3 * V8)
close("pretzel jones upper", vbm.jones_form.upper, (4 * 6 + 2 * dp.component_count) * V8)
check("bounds order monte", vbm.lower <= vbm.upper, True)
check("bounds order jones", vbm.jones_form.lower <= vbm.jones_form.upper, True)

try:
    montesinos_bounds("M(1/3, 1/3, -1/3)")
    check("r=2 rejected", "no error", "HypothesisNotMet")
except HypothesisNotMet as e:
    check("r=2 rejected", (e.r, e.s), (2, 1))

# positive braids
try:
    positive_braid_bounds("B3: s1^3 s2^3 s1^3")
    check("composite closure rejected", "no error", "NotPrimeDiagram")
except NotPrimeDiagram:
    check("composite closure rejected", True, True)

try:
    positive_braid_bounds("B3: s1^2 s2^3")
    check("small exponent rejected", "no error", "ExponentTooSmall")
except ExponentTooSmall:
    check("small exponent rejected", True, True)

try:
    positive_braid_bounds("B2: s1^-3")
    check("negative word rejected", "no error", "InputError")
except InputError:
    check("negative word rejected", True, True)

vbt = positive_braid_bounds("B2: s1^3")
close("trefoil lower", vbt.lower, 2 * V8 / 3)
close("trefoil upper", vbt.upper, 0.0)
check("trefoil flagged", len(vbt.assumptions) >= 2, True)
check("trefoil jones omitted", vbt.jones_form is None, True)

vb4 = positive_braid_bounds("B3: s1^3 s2^3 s1^3 s2^3")
close("braid4 lower", vb4.lower, 2 * V8 / 3 * 4)
close("braid4 upper", vb4.upper, 30 * V3)
check("braid4 order", vb4.lower <= vb4.upper, True)
check("braid4 jones attached", vb4.jones_form is not None, True)
close("braid4 jones lower", vb4.jones_form.lower, 3 * V8)
close("braid4 jones upper", vb4.jones_form.upper, 15 * V3 * 3 - 10 * V3)
check("braid4 jones >= twist lower", vb4.jones_form.lower >= vb4.lower, True)
gap = vb4.upper / vb4.lower
check("ratio under 4.155 cap", gap < 10 * V3 * 3 / (2 * V8), True)

# json shape
m = vbm.to_json_map()
check("json keys", sorted(m), ["assumptions", "jones_form", "lower", "lower_strict", "methods", "upper", "upper_strict"])

print()
print("FAILURES:", failures if failures else "none")
sys.exit(1 if failures else 0)
