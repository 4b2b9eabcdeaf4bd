"""Seeded diagram families for tests and the command line.

Every family is generated from ``random.Random(f"{family}:{seed}")``,
so a corpus regenerates identically across runs and machines without
stored fixtures.  Rejected candidates (composite closures, diagrams
over the crossing cap) still consume rng draws in a fixed order, which
keeps the accepted sequence stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .diagram import LinkDiagram
from .errors import InputError
from .montesinos import build_diagram, normalize
from .notation import MontesinosVector, serialize_montesinos

__all__ = ["FAMILIES", "CorpusItem", "generate"]

FAMILIES = (
    "positive-braids",
    "montesinos",
    "pretzels",
    "alternating-montesinos",
    "cables",
)

# cables square or cube the base crossing number, so they get more room
_DEFAULT_CAP = {"cables": 48}


@dataclass(frozen=True)
class CorpusItem:
    family: str
    source: str
    diagram: LinkDiagram


def _braid_text(strands: int, runs: list[tuple[int, int]]) -> str:
    body = " ".join(f"s{g}^{e}" for g, e in runs)
    return f"B{strands}: {body}"


def _positive_braid(rng: random.Random, cap: int) -> CorpusItem | None:
    strands = rng.choice((3, 3, 4))
    k = rng.choice((4, 4, 5, 6))
    gens = []
    for i in range(k):
        options = [g for g in range(1, strands) if not gens or g != gens[-1]]
        if i == k - 1:
            options = [g for g in options if g != gens[0]] or options
        gens.append(rng.choice(options))
    runs = [(g, rng.randint(3, 4)) for g in gens]
    if gens[0] == gens[-1] or sum(e for _, e in runs) > cap:
        return None
    # every generator must appear, or the closure falls apart
    if len(set(gens)) != strands - 1:
        return None
    source = _braid_text(strands, runs)
    d = LinkDiagram.braid_closure(source)
    if d.free_loops or not d.is_prime:
        return None
    return CorpusItem("positive-braids", source, d)


def _slope(rng: random.Random, sign: int, max_den: int) -> Fraction:
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    return Fraction(sign * num, den)


def _montesinos(rng: random.Random, cap: int) -> CorpusItem | None:
    slopes = [_slope(rng, +1, 4) for _ in range(rng.randint(3, 4))]
    slopes += [_slope(rng, -1, 4) for _ in range(rng.randint(3, 4))]
    rng.shuffle(slopes)
    form = normalize(slopes)
    d = build_diagram(form)
    if d.n > cap:
        return None
    return CorpusItem("montesinos", serialize_montesinos(MontesinosVector(form.slopes)), d)


def _pretzel(rng: random.Random, cap: int) -> CorpusItem | None:
    length = rng.randint(3, 6)
    slopes = [
        Fraction(rng.choice((-1, 1)), rng.randint(2, 6)) for _ in range(length)
    ]
    if sum(abs(q.denominator) for q in slopes) > cap:
        return None
    form = normalize(slopes)
    return CorpusItem("pretzels", serialize_montesinos(MontesinosVector(form.slopes)), build_diagram(form))


def _alternating_montesinos(rng: random.Random, cap: int) -> CorpusItem | None:
    sign = rng.choice((-1, 1))
    slopes = [_slope(rng, sign, 5) for _ in range(rng.randint(3, 5))]
    form = normalize(slopes)
    d = build_diagram(form)
    if d.n > cap:
        return None
    assert d.is_alternating
    return CorpusItem("alternating-montesinos", serialize_montesinos(MontesinosVector(form.slopes)), d)


_CABLE_BASES = (
    ("B2: s1^3", "trefoil braid closure"),
    ("B2: s1^4", "(2,4) torus braid closure"),
    ("B3: s1^3 s2^3 s1^3 s2^3", "alternating-run braid closure"),
)


def _cable(rng: random.Random, cap: int) -> CorpusItem | None:
    base_text, base_name = rng.choice(_CABLE_BASES)
    n = rng.randint(2, 3)
    base = LinkDiagram.braid_closure(base_text)
    if base.n * n * n > cap:
        return None
    return CorpusItem("cables", f"cable {n} of {base_name} [{base_text}]", base.cable(n))


_BUILDERS = {
    "positive-braids": _positive_braid,
    "montesinos": _montesinos,
    "pretzels": _pretzel,
    "alternating-montesinos": _alternating_montesinos,
    "cables": _cable,
}


def generate(
    family: str, seed: int, count: int = 10, cap: int | None = None
) -> list[CorpusItem]:
    """Generate ``count`` diagrams of one family, deterministically."""
    if family not in _BUILDERS:
        raise InputError(
            f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}"
        )
    if cap is None:
        cap = _DEFAULT_CAP.get(family, 26)
    rng = random.Random(f"{family}:{seed}")
    build = _BUILDERS[family]
    items = []
    attempts = 0
    while len(items) < count:
        attempts += 1
        if attempts > 200 * count:
            raise InputError(
                f"family {family!r} with cap {cap} rejected too many candidates"
            )
        item = build(rng, cap)
        if item is not None:
            items.append(item)
    return items
