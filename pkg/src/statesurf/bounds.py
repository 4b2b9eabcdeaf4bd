"""Volume bounds for hyperbolic link complements, straight from diagrams.

Every estimate here has the shape (exact rational factor) x (geometric
constant).  The rational factor is kept exact and multiplied by the
constant last, so bounds stay reproducible bit for bit.

Nothing in this module computes a volume.  Hyperbolicity is an input
assumption everywhere except the Montesinos route, where three positive
and three negative tangles suffice; assumptions the code cannot check
are recorded on the result instead of being silently trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .diagram import LinkDiagram
from .errors import (
    ExponentTooSmall,
    HypothesisNotMet,
    InputError,
    NotPrimeDiagram,
)
from .montesinos import build_diagram, normalize, q_half_count
from .notation import BraidWord, parse_braid
from .polyhedra import guts_interval
from .states import State, adequacy, euler_data, resolve, state_graph

__all__ = [
    "V3",
    "V8",
    "GeometricConstants",
    "CONSTANTS",
    "VolumeBounds",
    "general_lower",
    "positive_braid_bounds",
    "montesinos_bounds",
]

# Volumes of the regular ideal tetrahedron and octahedron.  Frozen
# literals; the test suite recomputes both from series.
V3 = 1.014941606409653625
V8 = 3.663862376708876060


@dataclass(frozen=True)
class GeometricConstants:
    v3: float = V3
    v8: float = V8


CONSTANTS = GeometricConstants()


def _scaled(factor: Fraction | int, constant: float) -> float:
    return float(Fraction(factor)) * constant


@dataclass(frozen=True)
class VolumeBounds:
    """A two-sided volume estimate with its provenance.

    ``assumptions`` lists hypotheses the computation could not verify;
    an empty list means the bounds are unconditional.  ``lower <=
    upper`` is only promised when the assumptions actually hold (a
    degenerate input such as a one-twist-region braid produces an
    inconsistent pair together with a nonempty assumptions list).
    """

    lower: float
    upper: float
    lower_strict: bool = False
    upper_strict: bool = True
    methods: tuple[str, ...] = ()
    assumptions: tuple[str, ...] = ()
    jones_form: "VolumeBounds | None" = None

    def __post_init__(self):
        assert self.lower >= 0

    def to_json_map(self) -> dict:
        out = {
            "lower": self.lower,
            "upper": None if math.isinf(self.upper) else self.upper,
            "lower_strict": self.lower_strict,
            "upper_strict": self.upper_strict,
            "methods": list(self.methods),
            "assumptions": list(self.assumptions),
        }
        if self.jones_form is not None:
            out["jones_form"] = self.jones_form.to_json_map()
        return out


_HYPERBOLIC = "link is hyperbolic"


def general_lower(d: LinkDiagram) -> VolumeBounds:
    """Bound the volume of a prime A-adequate diagram's link.

    The lower bound multiplies the certified guts interval by the
    octahedron volume; the upper bound needs only the twist number.
    Both are conditional on hyperbolicity, which the caller asserts.
    """
    if d.free_loops or not d.is_prime:
        raise NotPrimeDiagram("volume bounds need a prime diagram")
    guts = guts_interval(d)
    _, t, _ = d.twist_regions()
    assumptions = [_HYPERBOLIC]
    if t <= 1:
        assumptions.append(
            "a single twist region describes a torus link, which is not hyperbolic"
        )
    return VolumeBounds(
        lower=_scaled(guts.lo, V8),
        upper=_scaled(10 * (t - 1), V3),
        lower_strict=False,
        upper_strict=True,
        methods=(
            f"lower: v8 * guts (rule: {guts.justification})",
            "upper: 10 v3 (t - 1)",
        ),
        assumptions=tuple(assumptions),
    )


def _merged_runs(braid: BraidWord) -> list[tuple[int, int]]:
    """Maximal generator runs of the closed-up word.

    Letters are already run-merged by construction; the closure can
    additionally merge the first and last letters into one twist
    region.
    """
    runs = list(braid.letters)
    if len(runs) >= 2 and runs[0][0] == runs[-1][0]:
        gen, first = runs[0]
        _, last = runs.pop()
        runs[0] = (gen, first + last)
    return runs


def positive_braid_bounds(b: BraidWord | str) -> VolumeBounds:
    """Bound the volume of the closure of a positive braid word.

    Requires every twist region of the closure to carry at least three
    crossings and the closure diagram to be prime.  The result also
    carries the equivalent bounds phrased through the stable Jones
    coefficient, with |beta'| - 1 read off the reduced state graph.
    """
    braid = parse_braid(b) if isinstance(b, str) else b
    if not braid.is_positive:
        raise InputError("volume bounds for braid closures need a positive word")
    for gen, exp in _merged_runs(braid):
        if exp < 3:
            raise ExponentTooSmall(
                f"generator s{gen} appears in a run of {exp} crossings; need 3"
            )

    d = LinkDiagram.braid_closure(braid)
    if d.free_loops or not d.is_prime:
        raise NotPrimeDiagram("the closure diagram splits as a connected sum")

    regions, t, _ = d.twist_regions()
    assert all(r.length >= 3 for r in regions)

    _, h = resolve(d, State.all_A(d))
    g, reduced = state_graph(h)
    assert adequacy(g)
    chi = euler_data(g, reduced)["chi_reduced"]

    assumptions = [_HYPERBOLIC]
    if t >= 2:
        # long A-resolutions leave no short loops, so the reduced graph
        # keeps every edge and its Euler characteristic controls t
        assert g.e == reduced.e
        assert Fraction(chi) <= Fraction(-2 * t, 3)
    else:
        assumptions.append(
            "a single twist region describes a torus link, which is not hyperbolic"
        )

    jones = None
    if t >= 2:
        jones = VolumeBounds(
            lower=_scaled(-chi, V8),
            upper=_scaled(15 * -chi, V3) - 10 * V3,
            lower_strict=False,
            upper_strict=True,
            methods=(
                "lower: v8 (|beta'| - 1)",
                "upper: 15 v3 (|beta'| - 1) - 10 v3",
            ),
            assumptions=tuple(assumptions),
        )

    return VolumeBounds(
        lower=_scaled(Fraction(2 * t, 3), V8),
        upper=_scaled(10 * (t - 1), V3),
        lower_strict=False,
        upper_strict=True,
        methods=("lower: (2 v8 / 3) t", "upper: 10 v3 (t - 1)"),
        assumptions=tuple(assumptions),
        jones_form=jones,
    )


def montesinos_bounds(m) -> VolumeBounds:
    """Unconditional volume bounds for a Montesinos link.

    With at least three tangles of each sign the link is guaranteed
    hyperbolic, so the assumptions list is empty.  The lower bound is
    the better of the component-count and half-slope estimates; the
    upper bound 2 v8 t is sharp (an explicit family attains it in the
    limit).
    """
    form = normalize(m)
    r, s = form.positive_count, form.negative_count
    if r < 3 or s < 3:
        raise HypothesisNotMet(
            f"need at least three tangles of each sign, got {r} positive"
            f" and {s} negative",
            r=r,
            s=s,
        )

    d = build_diagram(form)
    _, t, _ = d.twist_regions()
    k = d.component_count
    q_half = q_half_count(form)

    lower_frac = max(Fraction(t - k, 4), Fraction(t - q_half, 2), Fraction(0))

    neg_chi = {}
    for label in ("A", "B"):
        state = State.all_A(d) if label == "A" else State.all_B(d)
        _, h = resolve(d, state)
        g, reduced = state_graph(h)
        assert adequacy(g)
        neg_chi[label] = -euler_data(g, reduced)["chi_reduced"]

    # |beta'| - 1 = -chi(G'_A) and |beta| - 1 = -chi(G'_B)
    jones = VolumeBounds(
        lower=_scaled(max(neg_chi.values(), default=0), V8),
        upper=_scaled(4 * (neg_chi["A"] + neg_chi["B"]) + 2 * k, V8),
        lower_strict=False,
        upper_strict=True,
        methods=(
            "lower: v8 (max(|beta|, |beta'|) - 1)",
            "upper: 4 v8 (|beta| + |beta'| - 2) + 2 v8 #K",
        ),
        assumptions=(),
    )

    return VolumeBounds(
        lower=_scaled(lower_frac, V8),
        upper=_scaled(2 * t, V8),
        lower_strict=False,
        upper_strict=True,
        methods=(
            "lower: v8 * max((t - #K) / 4, (t - Q_half) / 2)",
            "upper: 2 v8 t (sharp)",
        ),
        assumptions=(),
        jones_form=jones,
    )
