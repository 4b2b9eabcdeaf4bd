"""Planar combinatorial model of a connected link diagram.

A diagram is stored as a rotation system on half-edges.  Every crossing
owns four *slots* numbered counterclockwise; slots 0 and 2 carry the
under-strand and slots 1 and 3 the over-strand, with slot 0 the incoming
under-strand (so a PD tuple X(a,b,c,d) fills slots 0..3 in order).  A
*dart* is one slot of one crossing, encoded as ``4*c + s``; the arcs of
the diagram form a perfect matching on darts.

All global structure is derived from this matching:

* components, by walking entry dart -> opposite slot -> arc partner;
* faces, by the out-dart permutation ``(c,s) -> arc -> turn left``,
  with the Euler count F = c + 2 serving as the planarity witness;
* twist regions, as maximal chains of crossings joined through bigon
  faces, plus the coarser twist equivalence through shared pairs of
  opposite-corner faces;
* primeness, by exhaustive 2-edge-cut search on the 4-valent graph.

Diagrams are immutable after construction; every query is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, InputError, NonPlanar
from .notation import BraidWord, PDCode, parse_braid, parse_pd

__all__ = [
    "LinkDiagram",
    "TwistRegion",
    "dart",
    "crossing_of",
    "slot_of",
]


def dart(crossing: int, slot: int) -> int:
    """Encode (crossing, slot) as an integer dart."""
    return 4 * crossing + slot


def crossing_of(d: int) -> int:
    return d >> 2


def slot_of(d: int) -> int:
    return d & 3


def _turn(d: int, k: int = 1) -> int:
    """The dart at the same crossing, k slots counterclockwise."""
    return (d & ~3) | ((d + k) & 3)


@dataclass(frozen=True)
class TwistRegion:
    """A maximal chain of crossings joined through bigon faces.

    ``short_side`` records which resolution is the short one at the
    bigons of this region: "A", "B", "both" for degenerate 2-crossing
    wraps whose faces include bigons of both parities, or None for a
    single crossing.
    """

    crossings: tuple[int, ...]
    length: int
    short_side: str | None


class LinkDiagram:
    """An immutable connected link diagram on the sphere."""

    __slots__ = ("_adj", "n", "free_loops", "_cache")

    def __init__(self, adjacency, free_loops: int = 0, _validate: bool = True):
        adj = tuple(adjacency)
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "n", len(adj) // 4)
        object.__setattr__(self, "free_loops", free_loops)
        object.__setattr__(self, "_cache", {})
        if _validate:
            self._validate()

    # -- construction ------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs, n: int, free_loops: int = 0) -> "LinkDiagram":
        """Build from an iterable of dart pairs covering all 4n darts."""
        adj = [-1] * (4 * n)
        for a, b in pairs:
            if adj[a] != -1 or adj[b] != -1 or a == b:
                raise InputError("dart pairing is not a perfect matching")
            adj[a], adj[b] = b, a
        if any(x == -1 for x in adj):
            raise InputError("dart pairing is not a perfect matching")
        return cls(adj, free_loops)

    # X(a, b, c, d) lists the arcs counterclockwise from the incoming
    # under-strand, while slots count clockwise on the page, so b and d
    # trade places; getting this backwards builds the mirror image.
    _PD_SLOTS = (0, 3, 2, 1)

    @classmethod
    def from_pd(cls, code: PDCode | str) -> "LinkDiagram":
        if isinstance(code, str):
            code = parse_pd(code)
        ends: dict[int, list[int]] = {}
        for c, tup in enumerate(code.crossings):
            for s, label in zip(cls._PD_SLOTS, tup):
                ends.setdefault(label, []).append(dart(c, s))
        return cls.from_pairs(ends.values(), len(code.crossings))

    @classmethod
    def braid_closure(cls, braid: BraidWord | str) -> "LinkDiagram":
        """The standard closure of a braid word.

        Strands run downward; the letter (i, r) stacks |r| crossings
        between strands i and i+1.  Positive letters put the NE-SW
        strand on top.
        """
        if isinstance(braid, str):
            braid = parse_braid(braid)
        n_strands = braid.strand_count
        pairs: list[tuple[int, int]] = []
        top: list[int | None] = [None] * (n_strands + 1)
        loose: list[int | None] = [None] * (n_strands + 1)
        c = 0
        for gen, exp in braid.letters:
            # corner -> slot maps for the two crossing signs
            if exp > 0:
                nw, sw, se, ne = 0, 1, 2, 3
            else:
                ne, nw, sw, se = 0, 1, 2, 3
            for _ in range(abs(exp)):
                for strand, corner in ((gen, nw), (gen + 1, ne)):
                    d = dart(c, corner)
                    if loose[strand] is None:
                        top[strand] = d
                    else:
                        pairs.append((loose[strand], d))
                loose[gen] = dart(c, sw)
                loose[gen + 1] = dart(c, se)
                c += 1
        free = 0
        for strand in range(1, n_strands + 1):
            if loose[strand] is None:
                free += 1
            else:
                pairs.append((loose[strand], top[strand]))
        return cls.from_pairs(pairs, c, free_loops=free)

    @classmethod
    def unknot(cls) -> "LinkDiagram":
        """The 0-crossing round unknot (Jones normalization base case)."""
        return cls((), free_loops=1)

    def _validate(self):
        adj = self._adj
        for d, e in enumerate(adj):
            if e == d or not 0 <= e < len(adj) or adj[e] != d:
                raise InputError("adjacency is not a fixed-point-free involution")
        if self.n == 0:
            if self.free_loops != 1:
                raise Disconnected("a crossing-free diagram must be a single circle")
            return
        if self.free_loops:
            raise Disconnected("free circles split from the crossings")
        # connectivity over crossings through arcs
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for s in range(4):
                c2 = crossing_of(adj[dart(c, s)])
                if c2 not in seen:
                    seen.add(c2)
                    stack.append(c2)
        if len(seen) != self.n:
            raise Disconnected(f"{self.n - len(seen)} crossings unreachable")
        if self.face_count != self.n + 2:
            raise NonPlanar(
                f"face trace gives F = {self.face_count}, expected {self.n + 2}"
            )

    # -- low-level access --------------------------------------------

    def adj(self, d: int) -> int:
        """The arc partner of a dart."""
        return self._adj[d]

    @property
    def crossing_count(self) -> int:
        return self.n

    def darts(self):
        return range(4 * self.n)

    def __eq__(self, other):
        return (
            isinstance(other, LinkDiagram)
            and self._adj == other._adj
            and self.free_loops == other.free_loops
        )

    def __hash__(self):
        return hash((self._adj, self.free_loops))

    def __repr__(self):
        return f"<LinkDiagram c={self.n} #K={self.component_count}>"

    # -- faces ---------------------------------------------------------

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces as cycles of out-darts.

        The out-dart (c, s) lies on the face occupying the corner of c
        between slots s-1 and s; the trace follows the arc and turns one
        slot counterclockwise.
        """
        if "faces" not in self._cache:
            adj = self._adj
            seen = [False] * (4 * self.n)
            faces = []
            for start in range(4 * self.n):
                if seen[start]:
                    continue
                cycle = []
                d = start
                while not seen[d]:
                    seen[d] = True
                    cycle.append(d)
                    d = _turn(adj[d])
                faces.append(tuple(cycle))
            self._cache["faces"] = tuple(faces)
        return self._cache["faces"]

    @property
    def face_count(self) -> int:
        if self.n == 0:
            return 2
        return len(self.faces)

    @property
    def face_of_dart(self) -> tuple[int, ...]:
        if "face_of_dart" not in self._cache:
            table = [0] * (4 * self.n)
            for i, face in enumerate(self.faces):
                for d in face:
                    table[d] = i
            self._cache["face_of_dart"] = tuple(table)
        return self._cache["face_of_dart"]

    def face_at_corner(self, c: int, corner: int) -> int:
        """Face id of the corner of crossing c between slots corner, corner+1."""
        return self.face_of_dart[dart(c, (corner + 1) % 4)]

    # -- components and orientation ------------------------------------

    def _walk(self):
        """Orient each component and collect its entry darts.

        Slot 0 is the incoming under-dart both in PD tuples and in braid
        letters, so a component is oriented to make its smallest slot-0
        dart an entry; components that never pass under keep the
        direction of the walk from their smallest dart.  Returns
        (component_count, entry dart -> component id map).
        """
        if "walk" in self._cache:
            return self._cache["walk"]
        adj = self._adj
        entered: dict[int, int] = {}
        comp = 0
        for start in range(4 * self.n):
            if start in entered or _turn(start, 2) in entered:
                continue
            cycle = []
            d = start
            while d not in entered:
                entered[d] = comp
                cycle.append(d)
                d = adj[_turn(d, 2)]
            anchor = min(
                (
                    x
                    for e in cycle
                    for x in (e, _turn(e, 2))
                    if slot_of(x) == 0
                ),
                default=None,
            )
            if anchor is not None and anchor not in entered:
                for e in cycle:
                    del entered[e]
                for e in cycle:
                    entered[_turn(e, 2)] = comp
            comp += 1
        self._cache["walk"] = (comp, entered)
        return self._cache["walk"]

    @property
    def component_count(self) -> int:
        return self._walk()[0] + self.free_loops

    @property
    def writhe(self) -> int:
        """Sum of crossing signs under the canonical orientation."""
        if "writhe" not in self._cache:
            entered = self._walk()[1]
            w = 0
            for c in range(self.n):
                under = dart(c, 0) if dart(c, 0) in entered else dart(c, 2)
                over = dart(c, 1) if dart(c, 1) in entered else dart(c, 3)
                w += 1 if (slot_of(over) - slot_of(under)) % 4 == 1 else -1
            self._cache["writhe"] = w
        return self._cache["writhe"]

    @property
    def is_alternating(self) -> bool:
        """Strands alternate under/over.

        Passing through a crossing preserves entry-slot parity, so the
        diagram alternates exactly when every arc changes parity.
        """
        return all((slot_of(d) ^ slot_of(self.adj(d))) & 1 for d in self.darts())

    # -- mirror and cable ----------------------------------------------

    def mirror(self) -> "LinkDiagram":
        """The mirror diagram: reflect the projection sphere.

        Slots relabel by s -> -s, an involution that keeps the
        under-strand at slots 0/2 while exchanging the A- and
        B-smoothing pairings, so G_A(mirror) = G_B(d) and the writhe
        negates.
        """

        def phi(d):
            return (d & ~3) | ((-d) & 3)

        adj = self._adj
        new = [0] * (4 * self.n)
        for d in range(4 * self.n):
            new[phi(d)] = phi(adj[d])
        return LinkDiagram(new, self.free_loops, _validate=False)

    def cable(self, n: int) -> "LinkDiagram":
        """The blackboard-framed n-cable: n parallel copies of the strand.

        Each crossing blows up into an n-by-n grid; lanes are indexed
        counterclockwise within each slot, so arc pairings reverse lane
        order end to end.
        """
        if n < 1:
            raise InputError(f"cable index must be >= 1, got {n}")
        if n == 1:
            return self
        nn = n * n

        def grid(c, i, j):
            return c * nn + i * n + j

        def boundary(d, lane):
            c, s = crossing_of(d), slot_of(d)
            if s == 0:
                return dart(grid(c, lane, 0), 0)
            if s == 1:
                return dart(grid(c, n - 1, lane), 1)
            if s == 2:
                return dart(grid(c, n - 1 - lane, n - 1), 2)
            return dart(grid(c, 0, n - 1 - lane), 3)

        pairs = []
        for c in range(self.n):
            for i in range(n):
                for j in range(n):
                    if j > 0:
                        pairs.append((dart(grid(c, i, j), 0), dart(grid(c, i, j - 1), 2)))
                    if i < n - 1:
                        pairs.append((dart(grid(c, i, j), 1), dart(grid(c, i + 1, j), 3)))
        for d in range(4 * self.n):
            e = self._adj[d]
            if d < e:
                for lane in range(n):
                    pairs.append((boundary(d, lane), boundary(e, n - 1 - lane)))
        return LinkDiagram.from_pairs(pairs, self.n * nn, self.free_loops * n)

    # -- twist structure -------------------------------------------------

    @property
    def _bigon_faces(self):
        """Faces with exactly two darts at two distinct crossings."""
        return [
            f
            for f in self.faces
            if len(f) == 2 and crossing_of(f[0]) != crossing_of(f[1])
        ]

    def twist_regions(self) -> tuple[list[TwistRegion], int, bool]:
        """Maximal bigon chains, t(D), and the twist-reduced flag."""
        if "twist" in self._cache:
            return self._cache["twist"]
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for f in self._bigon_faces:
            union(crossing_of(f[0]), crossing_of(f[1]))
        # collect chains, then bigon corner parities per chain; the dart
        # (c, s) spans the corner between slots s-1 and s, and corners of
        # odd index are the ones capped by the A-smoothing
        chains: dict[int, list[int]] = {}
        for c in range(self.n):
            chains.setdefault(find(c), []).append(c)
        parity_of_chain: dict[int, set[int]] = {root: set() for root in chains}
        for f in self._bigon_faces:
            root = find(crossing_of(f[0]))
            for d in f:
                parity_of_chain[root].add((slot_of(d) - 1) % 2)
        regions = []
        for root, crossings in sorted(chains.items(), key=lambda kv: min(kv[1])):
            pars = parity_of_chain[root]
            if not pars:
                side = None
            elif pars == {0}:
                # bigons capped by the B-smoothing: A is the short side
                side = "A"
            elif pars == {1}:
                side = "B"
            else:
                side = "both"
            regions.append(
                TwistRegion(tuple(sorted(crossings)), len(crossings), side)
            )
        chain_partition = {frozenset(r.crossings) for r in regions}
        equiv_partition = self._twist_equivalence()
        result = (regions, len(regions), equiv_partition == chain_partition)
        self._cache["twist"] = result
        return result

    def _twist_equivalence(self) -> set[frozenset[int]]:
        """Partition by Conway's twist equivalence.

        Two crossings are equivalent when some pair of faces touches
        both of them at opposite corners (a simple closed curve through
        the two crossings, meeting the diagram nowhere else).
        """
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        groups: dict[frozenset[int], int] = {}
        for c in range(self.n):
            for corners in ((0, 2), (1, 3)):
                key = frozenset(self.face_at_corner(c, k) for k in corners)
                if key in groups:
                    a, b = find(groups[key]), find(c)
                    if a != b:
                        parent[a] = b
                else:
                    groups[key] = c
        classes: dict[int, set[int]] = {}
        for c in range(self.n):
            classes.setdefault(find(c), set()).add(c)
        return {frozenset(v) for v in classes.values()}

    @property
    def twist_number(self) -> int:
        return self.twist_regions()[1]

    # -- primeness --------------------------------------------------------

    @property
    def has_nugatory(self) -> bool:
        return any(
            self.face_at_corner(c, 0) == self.face_at_corner(c, 2)
            or self.face_at_corner(c, 1) == self.face_at_corner(c, 3)
            for c in range(self.n)
        )

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (d, self._adj[d]) for d in range(4 * self.n) if d < self._adj[d]
        )

    def _find_two_cut(self):
        """An essential 2-edge cut (pair of arcs), or None.

        4-valent graphs are bridgeless, so any disconnecting pair is a
        minimal cut and the separating circle exists by planar duality.
        """
        if self.n < 2:
            return None
        arcs = self.arcs
        adj = self._adj
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                banned = {arcs[i][0], arcs[i][1], arcs[j][0], arcs[j][1]}
                seen = {0}
                stack = [0]
                while stack:
                    c = stack.pop()
                    for s in range(4):
                        d = dart(c, s)
                        if d in banned:
                            continue
                        c2 = crossing_of(adj[d])
                        if c2 not in seen:
                            seen.add(c2)
                            stack.append(c2)
                if len(seen) != self.n:
                    return arcs[i], arcs[j], seen
        return None

    @property
    def is_prime(self) -> bool:
        if "prime" not in self._cache:
            self._cache["prime"] = self._find_two_cut() is None
        return self._cache["prime"]

    def primeness(self) -> tuple[bool, bool]:
        return self.is_prime, self.has_nugatory

    def prime_summands(self) -> list["LinkDiagram"]:
        """Connect-sum factors, splitting along 2-edge cuts recursively."""
        cut = self._find_two_cut()
        if cut is None:
            return [self]
        cut_a, cut_b, side = cut
        out = []
        for keep in (side, set(range(self.n)) - side):
            relabel = {c: i for i, c in enumerate(sorted(keep))}

            def red(d):
                return dart(relabel[crossing_of(d)], slot_of(d))

            # Both cut arcs straddle the cut (4-valent graphs are
            # bridgeless), leaving one loose end of each on this side;
            # rejoining them closes the summand.
            pairs = [
                (red(d), red(e))
                for d, e in self.arcs
                if crossing_of(d) in keep
                and crossing_of(e) in keep
                and (d, e) != cut_a
                and (d, e) != cut_b
            ]
            loose = [red(d) for d in (*cut_a, *cut_b) if crossing_of(d) in keep]
            pairs.append((loose[0], loose[1]))
            piece = LinkDiagram.from_pairs(pairs, len(keep))
            out.extend(piece.prime_summands())
        return out

    # -- PD export --------------------------------------------------------

    def to_pd(self) -> PDCode:
        label: dict[int, int] = {}
        for k, (d, e) in enumerate(self.arcs, start=1):
            label[d] = label[e] = k
        return PDCode(
            tuple(
                tuple(label[dart(c, s)] for s in self._PD_SLOTS)
                for c in range(self.n)
            )
        )
