"""Shared fixtures: pinned small diagrams and the seeded corpora.

The corpora are session-scoped because generation is rejection-sampled;
every test that iterates them sees the same items, so failures
reproduce from the seed alone.
"""

import os

import pytest

from statesurf.corpus import generate
from statesurf.diagram import LinkDiagram

# table PD for 3_1 (the left-handed trefoil) and 4_1
TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"

TREFOIL_BRAID = "B2: s1^3"
HOPF_BRAID = "B2: s1^2"
GRANNY_BRAID = "B3: s1^3 s2^3"
SQUARE_BRAID = "B3: s1^3 s2^-3"

PRETZEL_SLOPES = "M(1/3, -1/3, 1/3, -1/3, 1/3, -1/3)"

# family -> crossing cap for the shared corpora; braids stay within
# exhaustive-bracket range, cables get quadratic room
CORPUS_SEED = 11
CORPUS_CAPS = {
    "positive-braids": 14,
    "montesinos": 18,
    "pretzels": 18,
    "alternating-montesinos": 18,
    "cables": 27,
}

KNOTINFO_ENV = "STATESURF_KNOTINFO"

needs_knotinfo = pytest.mark.skipif(
    not os.environ.get(KNOTINFO_ENV),
    reason=f"set {KNOTINFO_ENV} to a knot-table CSV to run the "
    "pinned-polynomial tier",
)


@pytest.fixture(scope="session")
def corpus():
    return {
        family: generate(family, seed=CORPUS_SEED, count=10, cap=cap)
        for family, cap in CORPUS_CAPS.items()
    }


@pytest.fixture(scope="session")
def corpus_items(corpus):
    """All 50 corpus diagrams, flattened."""
    return [item for family in CORPUS_CAPS for item in corpus[family]]


@pytest.fixture
def trefoil():
    return LinkDiagram.from_pd(TREFOIL_PD)


@pytest.fixture
def fig8():
    return LinkDiagram.from_pd(FIG8_PD)


@pytest.fixture
def granny():
    return LinkDiagram.braid_closure(GRANNY_BRAID)
