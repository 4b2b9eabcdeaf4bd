"""Exact Kauffman bracket and Jones polynomial, with the coefficient
bookkeeping the guts estimates consume.

Two independent evaluators ship on purpose.  `kauffman_bracket` is the
reference oracle: the literal sum over all 2^c states.  `skein_bracket`
is the production path: recursive smoothing with loop and kink
reduction and memoization on a canonical labeling of the partial
diagrams.  They are tested against each other and never share code
paths.

Conventions, pinned by J(unknot) = 1, J(1) = (-2)^(#K-1), and the
trefoil degree signs: delta = -A^2 - A^(-2), J = (-A)^(-3w) <D> with
t = A^(-4).  Under them the minimal t-degree end of J is the one the
all-A state controls, so the primed coefficients (alpha', beta') live
at r_2 and r_2 + 1.

Links with an even number of components have half-integer t-degrees;
LaurentPolynomial stores them on a doubled integer grid behind the
`half_grid` flag rather than dragging rationals through arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .diagram import LinkDiagram, dart, slot_of
from .errors import CrossingCapExceeded, NotAdequate
from .states import State, adequacy, resolve, state_graph

__all__ = [
    "LaurentPolynomial",
    "JonesReport",
    "VAR_BRACKET",
    "VAR_JONES",
    "kauffman_bracket",
    "skein_bracket",
    "jones_polynomial",
    "jones_report",
    "stable_identity_check",
    "adequacy_obstruction",
    "DEFAULT_CROSSING_CAP",
]

VAR_BRACKET = "bracket-A"
VAR_JONES = "jones-t"
DEFAULT_CROSSING_CAP = 18

Degree = Union[int, Fraction]


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable.

    Keys of ``coeffs`` are degrees; with ``half_grid`` set they are
    doubled degrees (key k means degree k/2), which only jones-t
    polynomials of even-component links use.
    """

    __slots__ = ("coeffs", "var", "half_grid")

    def __init__(self, coeffs=None, var: str = VAR_BRACKET, half_grid: bool = False):
        self.coeffs = {d: c for d, c in (coeffs or {}).items() if c}
        self.var = var
        self.half_grid = half_grid

    @classmethod
    def zero(cls, var: str = VAR_BRACKET) -> "LaurentPolynomial":
        return cls({}, var)

    @classmethod
    def one(cls, var: str = VAR_BRACKET) -> "LaurentPolynomial":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, coeff: int, degree: int, var: str = VAR_BRACKET) -> "LaurentPolynomial":
        return cls({degree: coeff}, var)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPolynomial)
            and self.var == other.var
            and self.half_grid == other.half_grid
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.half_grid, frozenset(self.coeffs.items())))

    def _assert_compatible(self, other: "LaurentPolynomial"):
        assert self.var == other.var and self.half_grid == other.half_grid

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._assert_compatible(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return LaurentPolynomial(out, self.var, self.half_grid)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(
            {d: -c for d, c in self.coeffs.items()}, self.var, self.half_grid
        )

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._assert_compatible(other)
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var, self.half_grid)

    def scale(self, coeff: int, degree: int = 0) -> "LaurentPolynomial":
        """Multiply by coeff * var^degree (degree in grid units)."""
        return LaurentPolynomial(
            {d + degree: coeff * c for d, c in self.coeffs.items()},
            self.var,
            self.half_grid,
        )

    @property
    def grid_step(self) -> int:
        """Stored-key distance of one whole degree."""
        return 2 if self.half_grid else 1

    def _as_degree(self, key: int) -> Degree:
        if not self.half_grid:
            return key
        f = Fraction(key, 2)
        return int(f) if f.denominator == 1 else f

    @property
    def min_degree(self) -> Degree:
        return self._as_degree(min(self.coeffs))

    @property
    def max_degree(self) -> Degree:
        return self._as_degree(max(self.coeffs))

    def coeff_at_key(self, key: int) -> int:
        return self.coeffs.get(key, 0)

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())

    def terms(self) -> list[tuple[Degree, int]]:
        """(degree, coefficient) pairs in ascending degree."""
        return [(self._as_degree(k), self.coeffs[k]) for k in sorted(self.coeffs)]

    def to_text(self) -> str:
        """Canonical text: ascending degree, explicit signs."""
        if not self.coeffs:
            return "0"
        sym = "A" if self.var == VAR_BRACKET else "t"
        parts = []
        for deg, c in self.terms():
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                if isinstance(deg, Fraction):
                    power = f"^({deg.numerator}/{deg.denominator})"
                elif deg == 1:
                    power = ""
                else:
                    power = f"^{deg}"
                body = f"{sym}{power}" if mag == 1 else f"{mag}{sym}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_map(self) -> dict[str, int]:
        return {str(deg): c for deg, c in self.terms()}

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r}, var={self.var!r})"


def _delta() -> LaurentPolynomial:
    return LaurentPolynomial({2: -1, -2: -1})


def _div_delta(p: LaurentPolynomial) -> LaurentPolynomial:
    """Exact division by delta = -A^2 - A^(-2)."""
    if not p:
        return p
    rem = dict(p.coeffs)
    out: dict[int, int] = {}
    while rem:
        d = max(rem)
        c = rem[d]
        q = -c  # leading term of delta is -A^2
        out[d - 2] = q
        # subtract q * A^(d-2) * delta, whose coefficients are -q
        for dd, dc in ((2, q), (-2, q)):
            k = d - 2 + dd
            rem[k] = rem.get(k, 0) + dc
            if rem[k] == 0:
                del rem[k]
    return LaurentPolynomial(out, p.var)


# -- reference oracle: full state sum --------------------------------


def _check_cap(d: LinkDiagram, cap: int):
    if d.n > cap:
        raise CrossingCapExceeded(
            f"{d.n} crossings exceeds the {cap}-crossing evaluation cap"
        )


def kauffman_bracket(
    d: LinkDiagram, cap: int = DEFAULT_CROSSING_CAP
) -> LaurentPolynomial:
    """Bracket by brute force over all 2^c states."""
    _check_cap(d, cap)
    n = d.n
    if n == 0:
        return LaurentPolynomial.one()
    adj = [d.adj(x) for x in range(4 * n)]
    delta_pows = [LaurentPolynomial.one()]
    total: dict[int, int] = {}
    for mask in range(1 << n):
        parent = list(range(4 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for c in range(n):
            a_state = not (mask >> c) & 1
            a_count += a_state
            base = 4 * c
            if a_state:
                pairs = ((base, base + 3), (base + 1, base + 2))
            else:
                pairs = ((base, base + 1), (base + 2, base + 3))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        for x in range(4 * n):
            rx, ry = find(x), find(adj[x])
            if rx != ry:
                parent[rx] = ry
        circles = len({find(x) for x in range(4 * n)})
        exp = 2 * a_count - n
        while len(delta_pows) < circles:
            delta_pows.append(delta_pows[-1] * _delta())
        for deg, c in delta_pows[circles - 1].coeffs.items():
            total[deg + exp] = total.get(deg + exp, 0) + c
    return LaurentPolynomial(total)


# -- production path: skein recursion with memoization ----------------


def _splice(adj: tuple[int, ...], c: int, a_state: bool) -> tuple[tuple[int, ...], int]:
    """Remove crossing c by one smoothing; returns (new adjacency over
    relabeled crossings, closed loops created)."""
    n = len(adj) // 4
    base = 4 * c
    own = {base, base + 1, base + 2, base + 3}
    if a_state:
        partner = {base: base + 3, base + 3: base, base + 1: base + 2, base + 2: base + 1}
    else:
        partner = {base: base + 1, base + 1: base, base + 2: base + 3, base + 3: base + 2}

    def chase(y: int) -> int:
        # follow smoothing arcs through c until leaving its darts
        while y in own:
            y = adj[partner[y]]
        return y

    remap = {}
    k = 0
    for cc in range(n):
        if cc != c:
            remap[cc] = k
            k += 1

    def red(x: int) -> int:
        return dart(remap[x >> 2], slot_of(x))

    new = [0] * (4 * (n - 1))
    seen = set()
    for x in range(4 * n):
        if x in own or x in seen:
            continue
        y = adj[x]
        if y in own:
            y = chase(y)
        if y in own:  # pragma: no cover - chase always exits
            raise AssertionError
        seen.add(x)
        seen.add(y)
        new[red(x)] = red(y)
        new[red(y)] = red(x)
    # cycles alternating smoothing arcs and diagram arcs inside c's
    # darts are closed circles
    loops = 0
    visited = set()
    for x in own:
        if x in visited or adj[x] not in own:
            continue
        y = x
        closed = True
        while y not in visited:
            visited.add(y)
            visited.add(partner[y])
            y = adj[partner[y]]
            if y not in own:
                closed = False
                break
        if closed:
            loops += 1
    return tuple(new), loops


def _components(adj: tuple[int, ...]) -> list[list[int]]:
    n = len(adj) // 4
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(4 * n):
        a, b = find(x >> 2), find(adj[x] >> 2)
        if a != b:
            parent[a] = b
    comps: dict[int, list[int]] = {}
    for c in range(n):
        comps.setdefault(find(c), []).append(c)
    return list(comps.values())


def _canonical(adj: tuple[int, ...]) -> tuple:
    """Least BFS trace over all starting darts; crossings may rotate
    slots by 2 (the under/over preserving symmetry)."""
    n = len(adj) // 4
    if n == 0:
        return ()
    comps = _components(adj)
    if len(comps) > 1:
        traces = []
        for comp in comps:
            remap = {c: i for i, c in enumerate(sorted(comp))}
            sub = [0] * (4 * len(comp))
            for c in comp:
                for s in range(4):
                    x = dart(c, s)
                    sub[dart(remap[c], s)] = dart(remap[adj[x] >> 2], slot_of(adj[x]))
            traces.append(_canonical(tuple(sub)))
        return tuple(sorted(traces))

    best = None
    for start in range(4 * n):
        order = {start >> 2: 0}
        offset = {start >> 2: slot_of(start) & 2}
        queue = [start]
        trace = []
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            c = x >> 2
            for s in range(4):
                y = adj[dart(c, (s + offset[c]) % 4)]
                cy = y >> 2
                if cy not in order:
                    order[cy] = len(order)
                    offset[cy] = slot_of(y) & 2
                    queue.append(dart(cy, 0))
                trace.append((order[cy], (slot_of(y) - offset[cy]) % 4))
        t = tuple(trace)
        if best is None or t < best:
            best = t
    return (best,)


class _SkeinEvaluator:
    """Multiplicative bracket <<T>> = sum A^(#A-#B) delta^|s| with memo;
    the extra delta factor divides out at top level."""

    def __init__(self):
        self.memo: dict[tuple, LaurentPolynomial] = {}
        self.delta = _delta()

    def eval(self, adj: tuple[int, ...]) -> LaurentPolynomial:
        n = len(adj) // 4
        if n == 0:
            return LaurentPolynomial.one()
        key = _canonical(adj)
        hit = self.memo.get(key)
        if hit is not None:
            return hit

        comps = _components(adj)
        if len(comps) > 1:
            result = LaurentPolynomial.one()
            for comp in comps:
                remap = {c: i for i, c in enumerate(sorted(comp))}
                sub = [0] * (4 * len(comp))
                for c in comp:
                    for s in range(4):
                        x = dart(c, s)
                        sub[dart(remap[c], s)] = dart(
                            remap[adj[x] >> 2], slot_of(adj[x])
                        )
                result = result * self.eval(tuple(sub))
            self.memo[key] = result
            return result

        # kink reduction: a crossing one of whose smoothing arcs doubles
        # an existing arc collapses without branching, since both
        # smoothings then leave the same diagram
        for c in range(n):
            base = 4 * c
            if (
                adj[base] == base + 3
                or adj[base + 1] == base + 2
                or adj[base] == base + 1
                or adj[base + 2] == base + 3
            ):
                result = self._reduce_kink(adj, c)
                self.memo[key] = result
                return result

        c = self._pick(adj)
        sub_a, loops_a = _splice(adj, c, True)
        sub_b, loops_b = _splice(adj, c, False)
        term_a = self.eval(sub_a).scale(1, 1)
        term_b = self.eval(sub_b).scale(1, -1)
        for _ in range(loops_a):
            term_a = term_a * self.delta
        for _ in range(loops_b):
            term_b = term_b * self.delta
        result = term_a + term_b
        self.memo[key] = result
        return result

    def _reduce_kink(self, adj: tuple[int, ...], c: int) -> LaurentPolynomial:
        sub_a, loops_a = _splice(adj, c, True)
        sub_b, loops_b = _splice(adj, c, False)
        assert sub_a == sub_b, "kinked crossings smooth to one diagram"
        term = LaurentPolynomial({1: 1})
        for _ in range(loops_a):
            term = term * self.delta
        other = LaurentPolynomial({-1: 1})
        for _ in range(loops_b):
            other = other * self.delta
        return (term + other) * self.eval(sub_a)

    @staticmethod
    def _pick(adj: tuple[int, ...]) -> int:
        """Prefer a crossing sharing two or more arcs with one other
        crossing: its smoothings cascade into kink reductions."""
        n = len(adj) // 4
        counts: dict[tuple[int, int], int] = {}
        for x in range(4 * n):
            a, b = x >> 2, adj[x] >> 2
            if a < b:
                counts[(a, b)] = counts.get((a, b), 0) + 1
        for (a, b), k in sorted(counts.items()):
            if k >= 2:
                return a
        return 0


def skein_bracket(
    d: LinkDiagram, cap: Optional[int] = None
) -> LaurentPolynomial:
    """Bracket by recursive smoothing; the production evaluator."""
    if cap is not None:
        _check_cap(d, cap)
    if d.n == 0:
        return LaurentPolynomial.one()
    adj = tuple(d.adj(x) for x in range(4 * d.n))
    raw = _SkeinEvaluator().eval(adj)
    return _div_delta(raw)


# -- Jones polynomial -------------------------------------------------


def _bracket_to_jones(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """(-A)^(-3w) <D> with t = A^(-4)."""
    sign = -1 if writhe % 2 else 1
    shifted = bracket.scale(sign, -3 * writhe)
    degrees = set(shifted.coeffs)
    if all(deg % 4 == 0 for deg in degrees):
        return LaurentPolynomial(
            {-deg // 4: c for deg, c in shifted.coeffs.items()}, VAR_JONES
        )
    assert all(deg % 4 == 2 for deg in degrees), "mixed A-degree residues"
    return LaurentPolynomial(
        {-deg // 2: c for deg, c in shifted.coeffs.items()},
        VAR_JONES,
        half_grid=True,
    )


def jones_polynomial(
    d: LinkDiagram, cap: int = DEFAULT_CROSSING_CAP
) -> LaurentPolynomial:
    _check_cap(d, cap)
    return _bracket_to_jones(skein_bracket(d), d.writhe)


@dataclass(frozen=True)
class JonesReport:
    """Extreme-coefficient data of one Jones polynomial.

    alpha/beta sit at the maximal degree m2 and m2 - 1; the primed pair
    at the minimal degree r2 and r2 + 1 (the A-controlled end).
    epsilon flags are 1 exactly when the matching beta vanishes.
    """

    J: LaurentPolynomial
    m2: Degree
    r2: Degree
    alpha: int
    beta: int
    alpha_prime: int
    beta_prime: int
    epsilon: int
    epsilon_prime: int
    value_at_one: int


def jones_report(d: LinkDiagram, cap: int = DEFAULT_CROSSING_CAP) -> JonesReport:
    j = jones_polynomial(d, cap)
    assert j, "Jones polynomial of a diagram never vanishes"
    step = j.grid_step
    top = max(j.coeffs)
    bot = min(j.coeffs)
    alpha = j.coeff_at_key(top)
    beta = j.coeff_at_key(top - step)
    alpha_p = j.coeff_at_key(bot)
    beta_p = j.coeff_at_key(bot + step)
    return JonesReport(
        J=j,
        m2=j.max_degree,
        r2=j.min_degree,
        alpha=alpha,
        beta=beta,
        alpha_prime=alpha_p,
        beta_prime=beta_p,
        epsilon=1 if beta == 0 else 0,
        epsilon_prime=1 if beta_p == 0 else 0,
        value_at_one=j.value_at_one(),
    )


def stable_identity_check(d: LinkDiagram, cap: int = DEFAULT_CROSSING_CAP) -> dict:
    """|alpha'| = 1 and |beta'| = 1 - chi(G'_A) for A-adequate diagrams."""
    _, h = resolve(d, State.all_A(d))
    g, reduced = state_graph(h)
    if not adequacy(g):
        raise NotAdequate("the stable coefficient identity needs A-adequacy")
    rep = jones_report(d, cap)
    lhs = [abs(rep.alpha_prime), abs(rep.beta_prime)]
    rhs = [1, 1 - reduced.chi]
    return {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs}


def adequacy_obstruction(report: JonesReport) -> dict:
    """Extreme coefficients of adequate ends must be units."""
    return {
        "a_side_possible": abs(report.alpha_prime) == 1,
        "b_side_possible": abs(report.alpha) == 1,
    }
