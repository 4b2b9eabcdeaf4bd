"""Montesinos pipeline: slope normalization, diagram building, reports.

A Montesinos link is a cyclic sum of rational tangles, one per slope.
``normalize`` rewrites a slope vector into the reduced shape (all slopes
of one sign, or all of absolute value below one) and picks a canonical
representative of its dihedral class, so vectors describing the same
link compare equal.  ``build_diagram`` draws each tangle from its
constant-sign continued fraction with the fixed placement rules
(vertical bands at the top of the band; horizontal bands on the right
for positive tangles and on the left for negative ones) and closes the
cyclic sum.  Everything downstream (adequacy, twist number, guts,
two-edge-loop taxonomy) is computed from that one diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .diagram import LinkDiagram, dart
from .notation import (
    MontesinosVector,
    continued_fraction,
    parse_montesinos,
)
from .polyhedra import guts_interval
from .states import State, adequacy, euler_data, resolve, state_graph

__all__ = [
    "MontesinosNormalForm",
    "normalize",
    "equivalent",
    "q_half_count",
    "build_diagram",
    "montesinos_report",
    "negative_loop_taxonomy",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class MontesinosNormalForm:
    """A reduced slope vector in its canonical dihedral position."""

    slopes: tuple[Fraction, ...]
    positive_count: int
    negative_count: int
    total: Fraction
    fractional_parts: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.slopes)

    @property
    def alternating(self) -> bool:
        return self.positive_count == 0 or self.negative_count == 0


def _coerce(m) -> tuple[Fraction, ...]:
    if isinstance(m, MontesinosNormalForm):
        return m.slopes
    if isinstance(m, MontesinosVector):
        return m.slopes
    if isinstance(m, str):
        return parse_montesinos(m).slopes
    return MontesinosVector(tuple(Fraction(q) for q in m)).slopes


def _is_reduced(slopes) -> bool:
    return (
        all(q > 0 for q in slopes)
        or all(q < 0 for q in slopes)
        or all(0 < abs(q) < 1 for q in slopes)
    )


def _dihedral_images(vec):
    n = len(vec)
    for base in (vec, vec[::-1]):
        for k in range(n):
            yield base[k:] + base[:k]


def _canonical_transform(fracs, slopes):
    """Rotate/reflect both vectors together, minimizing (fracs, slopes)."""
    best = None
    for f_img, s_img in zip(_dihedral_images(fracs), _dihedral_images(slopes)):
        key = (f_img, s_img)
        if best is None or key < best:
            best = key
    return best


def normalize(m) -> MontesinosNormalForm:
    """Reduced canonical form: same link, one representative.

    Slope transfers (adding 1 to one slope and subtracting 1 from
    another) do not change the link, so only the total and the cyclic
    word of fractional parts matter.  The integer excess between the
    total and the fractional parts is absorbed either by sending the
    leading entries below zero (mixed-sign case) or by folding it into
    the first slope (single-sign cases).
    """
    slopes = _coerce(m)
    fracs = tuple(q - q.__floor__() for q in slopes)
    assert all(0 < f < 1 for f in fracs), "integer slopes are rejected at parse"
    if _is_reduced(slopes):
        fracs, slopes = _canonical_transform(fracs, slopes)
    else:
        excess = sum(fracs) - sum(slopes)
        assert excess.denominator == 1
        k = int(excess)
        fracs, _ = _canonical_transform(fracs, fracs)
        if 0 <= k <= len(fracs):
            slopes = tuple(
                f - 1 if i < k else f for i, f in enumerate(fracs)
            )
        elif k < 0:
            # all-positive branch; the whole surplus rides on slope 0
            slopes = (fracs[0] - k,) + fracs[1:]
        else:
            # all-negative branch
            short = k - len(fracs)
            slopes = (fracs[0] - 1 - short,) + tuple(f - 1 for f in fracs[1:])
    assert _is_reduced(slopes)
    form = MontesinosNormalForm(
        slopes=slopes,
        positive_count=sum(1 for q in slopes if q > 0),
        negative_count=sum(1 for q in slopes if q < 0),
        total=sum(slopes),
        fractional_parts=fracs,
    )
    assert form.total == sum(_coerce(m)), "slope transfers must preserve the total"
    return form


def equivalent(m1, m2) -> bool:
    """Same link class: equal totals and dihedrally equal fractional parts."""
    a, b = normalize(m1), normalize(m2)
    return a.total == b.total and a.fractional_parts == b.fractional_parts


def q_half_count(m) -> int:
    """Number of slopes with 1/2 <= |q| < 1."""
    form = m if isinstance(m, MontesinosNormalForm) else normalize(m)
    return sum(1 for q in form.slopes if _HALF <= abs(q) < 1)


# -- tangle drawing ----------------------------------------------------

# corner -> slot maps; the two signs differ by one counterclockwise
# rotation, which swaps the over-strand diagonal
_POS_CORNERS = {"NW": 3, "SW": 0, "SE": 1, "NE": 2}
_NEG_CORNERS = {"NW": 0, "SW": 1, "SE": 2, "NE": 3}


def _chain(sign: int, length: int, vertical: bool, alloc):
    """A band of equal crossings; returns (pairs, corner darts)."""
    corners = _POS_CORNERS if sign > 0 else _NEG_CORNERS
    ids = [alloc() for _ in range(length)]
    pairs = []
    for a, b in zip(ids, ids[1:]):
        if vertical:
            pairs.append((dart(a, corners["SW"]), dart(b, corners["NW"])))
            pairs.append((dart(a, corners["SE"]), dart(b, corners["NE"])))
        else:
            pairs.append((dart(a, corners["NE"]), dart(b, corners["NW"])))
            pairs.append((dart(a, corners["SE"]), dart(b, corners["SW"])))
    first, last = ids[0], ids[-1]
    if vertical:
        ends = {
            "NW": dart(first, corners["NW"]),
            "NE": dart(first, corners["NE"]),
            "SW": dart(last, corners["SW"]),
            "SE": dart(last, corners["SE"]),
        }
    else:
        ends = {
            "NW": dart(first, corners["NW"]),
            "SW": dart(first, corners["SW"]),
            "NE": dart(last, corners["NE"]),
            "SE": dart(last, corners["SE"]),
        }
    return pairs, ends


def _tangle(q: Fraction, alloc):
    """Draw one tangle from its constant-sign continued fraction.

    Bands are laid innermost first: odd-index bands are vertical and
    stack on top, even-index bands are horizontal and sum on the right
    (positive slopes) or on the left (negative slopes).
    """
    terms = continued_fraction(q).terms
    sign = 1 if q > 0 else -1
    pairs: list[tuple[int, int]] = []
    body = None
    for j in range(len(terms) - 1, -1, -1):
        if terms[j] == 0:
            continue
        vertical = bool(j % 2)
        band_pairs, band = _chain(sign, abs(terms[j]), vertical, alloc)
        pairs += band_pairs
        if body is None:
            body = band
        elif vertical:
            pairs.append((band["SW"], body["NW"]))
            pairs.append((band["SE"], body["NE"]))
            body = {
                "NW": band["NW"],
                "NE": band["NE"],
                "SW": body["SW"],
                "SE": body["SE"],
            }
        elif sign > 0:
            pairs.append((body["NE"], band["NW"]))
            pairs.append((body["SE"], band["SW"]))
            body = {
                "NW": body["NW"],
                "SW": body["SW"],
                "NE": band["NE"],
                "SE": band["SE"],
            }
        else:
            pairs.append((band["NE"], body["NW"]))
            pairs.append((band["SE"], body["SW"]))
            body = {
                "NW": band["NW"],
                "SW": band["SW"],
                "NE": body["NE"],
                "SE": body["SE"],
            }
    return pairs, body


def build_diagram(m) -> LinkDiagram:
    """The reduced admissible diagram of a normalized slope vector."""
    form = m if isinstance(m, MontesinosNormalForm) else normalize(m)
    counter = count()

    def alloc() -> int:
        return next(counter)

    pairs: list[tuple[int, int]] = []
    tangles = []
    for q in form.slopes:
        tangle_pairs, ends = _tangle(q, alloc)
        pairs += tangle_pairs
        tangles.append(ends)
    # cyclic sum east-to-west; the wraparound pair is the numerator closure
    for i, ends in enumerate(tangles):
        after = tangles[(i + 1) % len(tangles)]
        pairs.append((ends["NE"], after["NW"]))
        pairs.append((ends["SE"], after["SW"]))
    n = next(counter)
    expected = sum(
        sum(abs(a) for a in continued_fraction(q).terms) for q in form.slopes
    )
    assert n == expected
    d = LinkDiagram.from_pairs(pairs, n)
    assert d.is_alternating == form.alternating
    return d


# -- reports -----------------------------------------------------------


def _side_data(d: LinkDiagram, label: str):
    state = State.all_A(d) if label == "A" else State.all_B(d)
    _, h = resolve(d, state)
    g, reduced = state_graph(h)
    data = euler_data(g, reduced)
    return adequacy(g), data["chi_reduced"], data["chi_minus_reduced"]


def montesinos_report(m) -> dict:
    """Everything the tangle decomposition pins down for one vector.

    Keys whose hypotheses fail are omitted and explained under
    ``reasons``.  Adequacy is read off the built diagram, so the
    alternating case (all slopes one sign) reports both sides adequate.
    """
    form = m if isinstance(m, MontesinosNormalForm) else normalize(m)
    d = build_diagram(form)
    r, s = form.positive_count, form.negative_count
    _, t, _ = d.twist_regions()
    a_adequate, chi_a, chi_minus_a = _side_data(d, "A")
    b_adequate, chi_b, chi_minus_b = _side_data(d, "B")

    report = {
        "slopes": form.slopes,
        "r": r,
        "s": s,
        "A_adequate": a_adequate,
        "B_adequate": b_adequate,
        "t": t,
        "Q_half": q_half_count(form),
        "components": d.component_count,
        "hyperbolic_sufficient": r >= 3 and s >= 3,
    }
    reasons: dict[str, str] = {}

    for side, rr, adequate, chi_minus, mirror in (
        ("guts_A", r, a_adequate, chi_minus_a, False),
        ("guts_B", s, b_adequate, chi_minus_b, True),
    ):
        if not adequate:
            reasons[side] = "diagram is not adequate on this side"
        elif rr >= 3 or form.alternating:
            # alternating diagrams need no hint: every 2-edge loop sits
            # in a twist region, so the bigon rule already gives exactness
            hint = None if form.alternating else {"reduced": True, "positive_tangles": rr}
            interval = guts_interval(d.mirror() if mirror else d, montesinos_hint=hint)
            assert interval.exact and interval.lo == chi_minus
            report[side] = interval.lo
        else:
            reasons[side] = (
                "exactness is open with fewer than three tangles on this side"
            )

    if r >= 3 and s >= 3:
        report["identity_holds"] = -chi_a - chi_b == t - report["Q_half"]
    else:
        reasons["identity_holds"] = (
            "needs at least three positive and three negative tangles"
        )
    if reasons:
        report["reasons"] = reasons
    return report


def negative_loop_taxonomy(m) -> list[dict]:
    """Predict the two-edge loops of the all-A graph from slopes alone.

    kind 1: a band whose A-resolution is the long one (vertical bands of
    positive tangles, horizontal bands of negative ones) with at least
    two crossings; its edges are parallel, all in one twist region.
    kind 2: a negative tangle of slope in (-1, -1/2]; one loop spans the
    tangle north to south.  It crosses two twist regions (a bridge)
    except at slope exactly -1/2, where the band is the whole tangle.
    kind 3: exactly two positive tangles share their east and west state
    circles, so their spanning edges pair up across tangles.
    """
    form = m if isinstance(m, MontesinosNormalForm) else normalize(m)
    out: list[dict] = []
    for i, q in enumerate(form.slopes):
        terms = continued_fraction(q).terms
        for j, a in enumerate(terms):
            if abs(a) >= 2 and (j % 2 == 1) == (q > 0):
                out.append({"kind": 1, "tangle": i, "band": j, "length": abs(a)})
        if -1 < q <= -_HALF:
            out.append({"kind": 2, "tangle": i, "bridge": q != -_HALF})
    if form.positive_count == 2:
        out.append({"kind": 3, "tangle": None})
    return out
