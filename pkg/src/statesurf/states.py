"""Kauffman states and everything built from them.

A state assigns each crossing the letter A or B.  Splicing every
crossing accordingly turns the diagram into a disjoint family of
*state circles*; recording, for each crossing, the pair of circles its
smoothing arcs land on gives the trivalent embedded graph H_sigma, the
state multigraph G_sigma (circles = vertices, crossings = edges), and
the reduced graph G'_sigma with parallel classes collapsed.

The smoothing convention on the slot model (see `diagram`): the
A-smoothing joins slots (0,3) and (1,2), the B-smoothing joins (0,1)
and (2,3).  Calibrated so that the all-B state of a positive braid
closure is its Seifert state and the A-end of the Jones polynomial is
the minimal-degree end.

Downstream decisions implemented here:

* adequacy: no loop edges in G_sigma;
* homogeneity: inside each complementary region of the state circles,
  all crossings carry one label (regions are computed literally, by
  merging diagram faces across the smoothed crossings);
* orientability of the state surface: G_sigma bipartite;
* fibering: for adequate homogeneous states, the surface fibers the
  link complement exactly when G'_sigma is a tree (Stallings' fibering
  of homogeneous braids is the classical special case), with knot genus
  (1 - chi(G_sigma))/2;
* Turaev genus of the diagram from the two extreme states.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import LinkDiagram, crossing_of, dart, slot_of
from .errors import NotAdequateOrHomogeneous, NotHomogeneous

__all__ = [
    "State",
    "StateCircles",
    "StateGraphH",
    "StateGraph",
    "ReducedStateGraph",
    "resolve",
    "state_graph",
    "adequacy",
    "homogeneity",
    "euler_data",
    "orientability",
    "fiber_report",
    "turaev_genus",
    "essentiality",
]


@dataclass(frozen=True)
class State:
    """A total assignment of 'A'/'B' to the crossings of one diagram."""

    labels: tuple[str, ...]

    def __post_init__(self):
        assert all(x in ("A", "B") for x in self.labels)

    @classmethod
    def all_A(cls, d: LinkDiagram) -> "State":
        return cls(("A",) * d.n)

    @classmethod
    def all_B(cls, d: LinkDiagram) -> "State":
        return cls(("B",) * d.n)

    def __getitem__(self, crossing: int) -> str:
        return self.labels[crossing]

    def __len__(self) -> int:
        return len(self.labels)


def smooth_partner(d: int, label: str) -> int:
    """The other end of the smoothing arc through dart d."""
    s = slot_of(d)
    p = 3 - s if label == "A" else s ^ 1
    return (d & ~3) | p


@dataclass(frozen=True)
class StateCircles:
    """The family s_sigma of state circles.

    Each circle is the cyclic dart sequence met when walking it;
    crossing-free circles of the diagram contribute to ``count`` but
    carry no darts.
    """

    walks: tuple[tuple[int, ...], ...]
    free: int

    @property
    def count(self) -> int:
        return len(self.walks) + self.free


class StateGraphH:
    """The embedded trivalent graph H_sigma.

    Vertices are the state circles; each crossing contributes one
    *segment* joining the two circles its smoothing arcs lie on.  The
    embedding is retained through the complementary regions of the
    circles (diagram faces merged across the smoothed crossings), which
    is exactly the data homogeneity and the polyhedral decomposition
    need.
    """

    def __init__(self, diagram: LinkDiagram, state: State):
        self.diagram = diagram
        self.state = state
        n = diagram.n

        # state circles: union-find over darts through smoothing arcs
        parent = list(range(4 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d in range(4 * n):
            union(d, smooth_partner(d, state[crossing_of(d)]))
            union(d, diagram.adj(d))

        roots = sorted({find(d) for d in range(4 * n)})
        index = {r: i for i, r in enumerate(roots)}
        self.circle_of = tuple(index[find(d)] for d in range(4 * n))

        walks = []
        for root in roots:
            start = min(d for d in range(4 * n) if find(d) == root)
            walk = []
            d = start
            while True:
                walk.append(d)
                p = smooth_partner(d, state[crossing_of(d)])
                walk.append(p)
                d = diagram.adj(p)
                if d == start:
                    break
            walks.append(tuple(walk))
        self.circles = StateCircles(tuple(walks), diagram.free_loops)

        # segments: crossing c joins the circle of its (0,*) arc to the
        # circle of the complementary arc
        ends = []
        for c in range(n):
            u = self.circle_of[dart(c, 0)]
            other = 2 if state[c] == "A" else 3
            v = self.circle_of[dart(c, other)]
            ends.append((u, v))
        self.segment_ends = tuple(ends)

        # complementary regions: merge diagram faces across each
        # smoothed crossing (the A-arcs cap corners 1 and 3, so the
        # band holding the segment connects corners 0 and 2; dually
        # for B)
        if n:
            fparent = list(range(diagram.face_count))

            def ffind(x):
                while fparent[x] != x:
                    fparent[x] = fparent[fparent[x]]
                    x = fparent[x]
                return x

            for c in range(n):
                k = 0 if state[c] == "A" else 1
                a, b = ffind(diagram.face_at_corner(c, k)), ffind(
                    diagram.face_at_corner(c, k + 2)
                )
                if a != b:
                    fparent[a] = b
            froots = sorted({ffind(f) for f in range(diagram.face_count)})
            findex = {r: i for i, r in enumerate(froots)}
            self.region_of_face = tuple(
                findex[ffind(f)] for f in range(diagram.face_count)
            )
            self.region_of_crossing = tuple(
                self.region_of_face[
                    diagram.face_at_corner(c, 0 if state[c] == "A" else 1)
                ]
                for c in range(n)
            )
            self.region_count = len(froots)
        else:
            self.region_of_face = ()
            self.region_of_crossing = ()
            self.region_count = 2

    def regions(self) -> dict[int, list[int]]:
        """Map region id -> crossings whose segment lies in it."""
        out: dict[int, list[int]] = {}
        for c, r in enumerate(self.region_of_crossing):
            out.setdefault(r, []).append(c)
        return out

    @property
    def is_homogeneous(self) -> bool:
        for crossings in self.regions().values():
            labels = {self.state[c] for c in crossings}
            if len(labels) > 1:
                return False
        return True


@dataclass(frozen=True)
class StateGraph:
    """The state multigraph G_sigma: circles as vertices, one edge per
    crossing (loops allowed)."""

    v: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, crossing id)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    @property
    def chi(self) -> int:
        return self.v - self.e

    def components(self) -> list[set[int]]:
        parent = list(range(self.v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, set[int]] = {}
        for x in range(self.v):
            comps.setdefault(find(x), set()).add(x)
        return list(comps.values())


@dataclass(frozen=True)
class ReducedStateGraph:
    """G'_sigma: one edge per parallel class, multiplicities retained."""

    v: int
    edges: tuple[tuple[int, int], ...]
    multiplicity: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def chi(self) -> int:
        return self.v - self.e

    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map sorted endpoint pair -> crossing ids of the class."""
        return dict(self.multiplicity)

    def bridges(self) -> list[tuple[int, int]]:
        """Separating edges, by iterative lowpoint search."""
        adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in range(self.v)}
        for idx, (u, v) in enumerate(self.edges):
            if u != v:
                adjacency[u].append((v, idx))
                adjacency[v].append((u, idx))
        visited = [False] * self.v
        disc = [0] * self.v
        low = [0] * self.v
        timer = 0
        out = []
        for root in range(self.v):
            if visited[root]:
                continue
            stack = [(root, -1, iter(adjacency[root]))]
            visited[root] = True
            disc[root] = low[root] = timer = timer + 1
            while stack:
                node, in_edge, it = stack[-1]
                advanced = False
                for nxt, idx in it:
                    if idx == in_edge:
                        continue
                    if visited[nxt]:
                        low[node] = min(low[node], disc[nxt])
                    else:
                        visited[nxt] = True
                        timer += 1
                        disc[nxt] = low[nxt] = timer
                        stack.append((nxt, idx, iter(adjacency[nxt])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    if stack:
                        parent_node = stack[-1][0]
                        low[parent_node] = min(low[parent_node], low[node])
                        if low[node] > disc[parent_node]:
                            out.append(self.edges[in_edge])
        return out


def resolve(d: LinkDiagram, state: State) -> tuple[StateCircles, StateGraphH]:
    """Splice every crossing per the state and collect the circles."""
    h = StateGraphH(d, state)
    return h.circles, h


def state_graph(h: StateGraphH) -> tuple[StateGraph, ReducedStateGraph]:
    """Collapse circles of H_sigma to vertices."""
    v = h.circles.count
    edges = tuple(
        (min(ends), max(ends), c) for c, ends in enumerate(h.segment_ends)
    )
    classes: dict[tuple[int, int], list[int]] = {}
    for u, w, c in edges:
        classes.setdefault((u, w), []).append(c)
    reduced = ReducedStateGraph(
        v,
        tuple(sorted(classes)),
        tuple((pair, tuple(cs)) for pair, cs in sorted(classes.items())),
    )
    return StateGraph(v, edges), reduced


def adequacy(g: StateGraph) -> bool:
    """No one-edge loops."""
    return not g.has_loop


def homogeneity(d: LinkDiagram, state: State) -> bool:
    """One label per complementary region of the state circles."""
    return StateGraphH(d, state).is_homogeneous


def euler_data(g: StateGraph, reduced: ReducedStateGraph) -> dict:
    """Euler characteristics and separating-edge count.

    chi_minus/chi_plus split chi(G'_sigma) into negative and positive
    parts per connected component; n_sep counts the bridges of
    G'_sigma.
    """
    comps = g.components()
    edge_count = {id(c): 0 for c in comps}
    lookup = {}
    for comp in comps:
        for x in comp:
            lookup[x] = id(comp)
    for u, v in reduced.edges:
        edge_count[lookup[u]] += 1
    chi_minus = chi_plus = 0
    for comp in comps:
        chi_c = len(comp) - edge_count[id(comp)]
        chi_minus += max(0, -chi_c)
        chi_plus += max(0, chi_c)
    return {
        "v": g.v,
        "e": g.e,
        "e_reduced": reduced.e,
        "chi": g.chi,
        "chi_reduced": reduced.chi,
        "chi_minus_reduced": chi_minus,
        "chi_plus_reduced": chi_plus,
        "n_sep": len(reduced.bridges()),
    }


def orientability(g: StateGraph) -> bool:
    """The state surface is orientable iff G_sigma is bipartite."""
    color = [-1] * g.v
    adjacency: dict[int, list[int]] = {i: [] for i in range(g.v)}
    for u, v, _ in g.edges:
        if u == v:
            return False
        adjacency[u].append(v)
        adjacency[v].append(u)
    for root in range(g.v):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def fiber_report(d: LinkDiagram, state: State) -> dict:
    """Decide whether the state surface fibers the complement.

    Requires the state to be adequate and homogeneous; then the surface
    is a fiber iff G'_sigma is a tree.  For fibered knots the genus is
    (1 - chi(G_sigma))/2.
    """
    circles, h = resolve(d, state)
    g, reduced = state_graph(h)
    ok_adequate = adequacy(g)
    ok_homogeneous = h.is_homogeneous
    if not (ok_adequate and ok_homogeneous):
        failed = []
        if not ok_adequate:
            failed.append("adequate")
        if not ok_homogeneous:
            failed.append("homogeneous")
        raise NotAdequateOrHomogeneous(
            f"state is not {' or '.join(failed)}; fibering undecided"
        )
    is_fiber = reduced.e == reduced.v - 1  # connected, so tree iff count
    report = {
        "is_fiber": is_fiber,
        "chi_surface": g.chi,
        "orientable": orientability(g),
    }
    if is_fiber and d.component_count == 1:
        genus = Fraction(1 - g.chi, 2)
        report["genus"] = int(genus) if genus.denominator == 1 else genus
    return report


def turaev_genus(d: LinkDiagram) -> int:
    """g_T = (2 + c - |s_A| - |s_B|)/2; zero exactly for alternating-
    type diagrams."""
    sa = StateGraphH(d, State.all_A(d)).circles.count
    sb = StateGraphH(d, State.all_B(d)).circles.count
    g2 = 2 + d.n - sa - sb
    assert g2 % 2 == 0 and g2 >= 0, "Turaev genus must be a non-negative integer"
    return g2 // 2


def essentiality(d: LinkDiagram, state: State) -> bool:
    """Ozawa's criterion: for homogeneous states, the state surface is
    essential iff the state is adequate."""
    circles, h = resolve(d, state)
    if not h.is_homogeneous:
        raise NotHomogeneous("essentiality criterion needs a homogeneous state")
    g, _ = state_graph(h)
    return adequacy(g)
