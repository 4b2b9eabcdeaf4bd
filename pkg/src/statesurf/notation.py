"""Textual notations for link diagrams.

Three grammars are supported, with byte-stable serializers:

* PD codes:        ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)``
* braid words:     ``B3: s1^3 s2^-2``
* slope vectors:   ``M(4/3, 1/2, 4/7, -1/3)``

The PD convention is the usual table convention: each 4-tuple lists the
arcs at one crossing starting with the incoming under-strand and
proceeding counterclockwise.  Braid letters are powers of the elementary
generators s1..s(n-1); adjacent letters on the same generator merge, so
each letter corresponds to one twist region of the closed diagram.
Slope vectors hold exact rationals; integers and 1/0 are rejected.

Also here: constant-sign continued fractions, e.g. 3/5 = [0,1,1,2],
meaning 0 + 1/(1 + 1/(1 + 1/2)).  All nonzero terms share the sign of
the input and a_0 = 0 exactly when |q| < 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArcCount,
    EmptyInput,
    IndexOutOfRange,
    IntegerSlope,
    LengthTooSmall,
    MissingStrandCount,
    ParseError,
    ZeroDenominator,
    ZeroExponent,
)

__all__ = [
    "PDCode",
    "BraidWord",
    "MontesinosVector",
    "ContinuedFraction",
    "parse_pd",
    "serialize_pd",
    "parse_braid",
    "serialize_braid",
    "parse_montesinos",
    "serialize_montesinos",
    "continued_fraction",
    "cf_value",
]


@dataclass(frozen=True)
class PDCode:
    """A planar diagram code: one 4-tuple of arc labels per crossing."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        counts: dict[int, int] = {}
        for tup in self.crossings:
            for label in tup:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise ArcCount(f"arc labels must occur exactly twice; offending labels: {bad}")

    def __len__(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class BraidWord:
    """A braid word on ``strand_count`` strands.

    ``letters`` is a sequence of (generator index, exponent) pairs with
    nonzero exponents and no two consecutive letters on the same
    generator.
    """

    strand_count: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strand_count < 2:
            raise IndexOutOfRange(f"need at least 2 strands, got {self.strand_count}")
        for i, (gen, exp) in enumerate(self.letters):
            if not 1 <= gen <= self.strand_count - 1:
                raise IndexOutOfRange(
                    f"generator s{gen} out of range for {self.strand_count} strands"
                )
            if exp == 0:
                raise ZeroExponent(f"letter {i} has exponent 0")

    @property
    def is_positive(self) -> bool:
        return all(exp > 0 for _, exp in self.letters)

    @property
    def crossing_count(self) -> int:
        return sum(abs(exp) for _, exp in self.letters)


@dataclass(frozen=True)
class MontesinosVector:
    """An ordered vector of tangle slopes, each a non-integer rational."""

    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.slopes) < 3:
            raise LengthTooSmall(
                f"need at least 3 slopes, got {len(self.slopes)} (two-bridge range)"
            )
        for q in self.slopes:
            if q.denominator == 1:
                raise IntegerSlope(f"slope {q} is an integer (trivial summand)")

    def __len__(self) -> int:
        return len(self.slopes)


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    @property
    def value(self) -> Fraction:
        return cf_value(self.terms)


_PD_TERM = re.compile(r"X[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


def parse_pd(text: str) -> PDCode:
    """Parse ``X(a,b,c,d) ...`` (also tolerates KnotInfo's ``PD[X[...],...]``)."""
    if not text or not text.strip():
        raise EmptyInput("empty PD code")
    stripped = text.strip()
    if stripped.startswith("PD[") and stripped.endswith("]"):
        stripped = stripped[3:-1]
    crossings = []
    pos = 0
    for match in _PD_TERM.finditer(stripped):
        gap = stripped[pos : match.start()]
        if gap.strip(" ,\t\n"):
            raise ParseError(f"unexpected text {gap.strip()!r}", position=pos)
        crossings.append(tuple(int(g) for g in match.groups()))
        pos = match.end()
    if stripped[pos:].strip(" ,\t\n"):
        raise ParseError(f"unexpected text {stripped[pos:].strip()!r}", position=pos)
    if not crossings:
        raise ParseError("no crossings found", position=0)
    return PDCode(tuple(crossings))


def serialize_pd(pd: PDCode) -> str:
    return " ".join("X({},{},{},{})".format(*tup) for tup in pd.crossings)


_BRAID_PREFIX = re.compile(r"^\s*B(\d+)\s*:\s*")
_BRAID_LETTER = re.compile(r"s(\d+)(?:\^(-?\d+))?\s*")


def parse_braid(text: str) -> BraidWord:
    """Parse ``Bn: s1^3 s2^-2 ...``; omitted exponents default to 1."""
    if not text or not text.strip():
        raise EmptyInput("empty braid word")
    prefix = _BRAID_PREFIX.match(text)
    if not prefix:
        raise MissingStrandCount("braid word must start with 'B<n>:'", position=0)
    n = int(prefix.group(1))
    pos = prefix.end()
    raw: list[tuple[int, int]] = []
    while pos < len(text) and text[pos:].strip():
        match = _BRAID_LETTER.match(text, pos)
        if not match:
            raise ParseError(f"unexpected text {text[pos:].strip()!r}", position=pos)
        gen = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp == 0:
            raise ZeroExponent(f"letter s{gen}^0 at position {pos}")
        raw.append((gen, exp))
        pos = match.end()
    # Merge adjacent letters on the same generator; a merge that cancels
    # to zero drops the letter entirely.
    merged: list[tuple[int, int]] = []
    for gen, exp in raw:
        if merged and merged[-1][0] == gen:
            total = merged[-1][1] + exp
            if total == 0:
                merged.pop()
            else:
                merged[-1] = (gen, total)
        else:
            merged.append((gen, exp))
    return BraidWord(n, tuple(merged))


def serialize_braid(braid: BraidWord) -> str:
    body = " ".join(
        f"s{gen}" if exp == 1 else f"s{gen}^{exp}" for gen, exp in braid.letters
    )
    return f"B{braid.strand_count}: {body}"


_SLOPE = re.compile(r"(-?\d+)\s*(?:/\s*(-?\d+))?")


def parse_montesinos(text: str) -> MontesinosVector:
    """Parse ``M(4/3, 1/2, -1/3)`` (the outer ``M(...)`` is optional)."""
    if not text or not text.strip():
        raise EmptyInput("empty slope vector")
    stripped = text.strip()
    match = re.fullmatch(r"M\s*\((.*)\)", stripped, re.DOTALL)
    body = match.group(1) if match else stripped
    slopes = []
    for part in body.split(","):
        part = part.strip()
        if not part:
            raise ParseError("empty slope entry", position=0)
        m = _SLOPE.fullmatch(part)
        if not m:
            raise ParseError(f"malformed rational {part!r}", position=0)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ZeroDenominator(f"slope {part!r} has denominator zero")
        slopes.append(Fraction(num, den))
    return MontesinosVector(tuple(slopes))


def serialize_montesinos(vector: MontesinosVector) -> str:
    def one(q: Fraction) -> str:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    return "M(" + ", ".join(one(q) for q in vector.slopes) + ")"


def continued_fraction(q: Fraction | int) -> ContinuedFraction:
    """Constant-sign continued fraction [a0, a1, ..., an] of a rational.

    All nonzero terms share the sign of q, a_0 = 0 iff |q| < 1, and the
    nested evaluation a0 + 1/(a1 + 1/(... + 1/an)) returns q exactly.
    Integers give the single-term expansion [q].
    """
    q = Fraction(q)
    if q.denominator == 1:
        return ContinuedFraction((int(q),))
    sign = 1 if q > 0 else -1
    value = abs(q)
    terms: list[int] = []
    while True:
        whole = value.numerator // value.denominator
        terms.append(whole)
        rest = value - whole
        if rest == 0:
            break
        value = 1 / rest
    result = ContinuedFraction(tuple(sign * a for a in terms))
    assert result.value == q, "continued fraction failed to reproduce its input"
    return result


def cf_value(terms) -> Fraction:
    """Evaluate [a0, a1, ..., an] as a0 + 1/(a1 + 1/(...))."""
    terms = tuple(terms)
    if not terms:
        raise EmptyInput("empty continued fraction")
    acc = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if acc == 0:
            raise ZeroDenominator("continued fraction hits a zero convergent")
        acc = a + 1 / acc
    return acc
