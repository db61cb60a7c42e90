"""Planar diagrams (PD codes with an embedding) for pretzels and closed braids.

A crossing is four edge ids listed counterclockwise, starting at one end of
the under strand: slots 0 and 2 are under, 1 and 3 over.  Half-edge
``4*x + s`` is slot ``s`` of crossing ``x``; the same integer also names the
corner between slots ``s`` and ``s+1``.  Faces are orbits of
``h -> rotate_cw(partner(h))``, so ``face(h)`` is the face on the left when
leaving crossing ``x`` along slot ``s``.

Crossingless circles are kept as ``free_loops``.  Loop ``k`` owns faces
``F + 2k`` (left of its reference direction) and ``F + 2k + 1`` (right),
where ``F`` is the number of faces of the crossing pieces.  A diagram with
several pieces records how they sit in the plane through ``glue``: each
pair names two faces that are the same region.

Chirality convention: a crossing whose strand from bottom-left to top-right
passes over is positive.  This holds for braid letters (``sigma_i`` with the
braid running top to bottom) and for crossings in a column of a positive
pretzel entry alike.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .braid import BraidWord
from .pretzel import Pretzel

# geometric slot order used while building: counterclockwise from bottom-left
SW, SE, NE, NW = 0, 1, 2, 3
WEST_CORNER, EAST_CORNER = 3, 1


def _faces_of(crossings: Sequence[tuple[int, int, int, int]]) -> tuple[list[int], int]:
    partner = _partners(crossings)
    face = [-1] * len(partner)
    nf = 0
    for h in range(len(partner)):
        if face[h] >= 0:
            continue
        g = h
        while face[g] < 0:
            face[g] = nf
            p = partner[g]
            g = 4 * (p // 4) + (p - 1) % 4
        nf += 1
    return face, nf


def _partners(crossings: Sequence[tuple[int, int, int, int]]) -> list[int]:
    seen: dict[int, int] = {}
    partner = [-1] * (4 * len(crossings))
    for x, edges in enumerate(crossings):
        for s, e in enumerate(edges):
            h = 4 * x + s
            if e in seen:
                other = seen.pop(e)
                partner[h], partner[other] = other, h
            else:
                seen[e] = h
    if seen:
        raise ValueError(f"edges {sorted(seen)} appear only once")
    return partner


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0
    glue: tuple[tuple[int, int], ...] = ()
    outer_face: int = 0
    orientation: tuple[bool, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(tuple(int(e) for e in x) for x in self.crossings))
        object.__setattr__(self, "glue", tuple((int(a), int(b)) for a, b in self.glue))
        if self.orientation is not None:
            object.__setattr__(self, "orientation", tuple(bool(o) for o in self.orientation))
        self._validate()

    # -- structure ---------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def partner(self) -> list[int]:
        return _partners(self.crossings)

    @cached_property
    def edge_ends(self) -> list[tuple[int, int]]:
        """Half-edge pair of every edge, smaller half-edge first."""
        ends: list[list[int]] = [[] for _ in range(self.n_edges)]
        for x, edges in enumerate(self.crossings):
            for s, e in enumerate(edges):
                ends[e].append(4 * x + s)
        return [(a, b) for a, b in ends]

    @cached_property
    def _face_data(self) -> tuple[list[int], int]:
        return _faces_of(self.crossings)

    @property
    def face_of(self) -> list[int]:
        return self._face_data[0]

    @property
    def n_faces(self) -> int:
        """Faces of all pieces counted separately, free loops included."""
        return self._face_data[1] + 2 * self.free_loops

    @cached_property
    def pieces(self) -> list[tuple[int, ...]]:
        """Connected pieces: tuples of crossing indices, then ``(-k-1,)`` per free loop."""
        parent = list(range(self.n_crossings))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edge_ends:
            parent[find(a // 4)] = find(b // 4)
        groups: dict[int, list[int]] = {}
        for x in range(self.n_crossings):
            groups.setdefault(find(x), []).append(x)
        out = [tuple(g) for g in sorted(groups.values())]
        out.extend((-k - 1,) for k in range(self.free_loops))
        return out

    def face_piece(self, f: int) -> int:
        nf = self._face_data[1]
        if f >= nf:
            return len(self.pieces) - self.free_loops + (f - nf) // 2
        h = self.face_of.index(f)
        x = h // 4
        return next(i for i, p in enumerate(self.pieces) if x in p)

    def euler_characteristics(self) -> list[int]:
        """``V - E + F`` per crossing piece; 2 for every piece of a planar diagram."""
        out = []
        for piece in self.pieces[: len(self.pieces) - self.free_loops]:
            members = set(piece)
            faces = {self.face_of[4 * x + s] for x in members for s in range(4)}
            out.append(len(members) - 2 * len(members) + len(faces))
        return out

    def _validate(self) -> None:
        counts: dict[int, int] = {}
        for edges in self.crossings:
            for e in edges:
                counts[e] = counts.get(e, 0) + 1
        if sorted(counts) != list(range(self.n_edges)):
            raise ValueError(f"edge ids must be 0..{self.n_edges - 1}")
        bad = [e for e, c in counts.items() if c != 2]
        if bad:
            raise ValueError(f"edges {bad} do not appear exactly twice")
        if self.free_loops < 0:
            raise ValueError("negative free loop count")
        if not self.crossings and not self.free_loops:
            raise ValueError("empty diagram")
        if any(chi != 2 for chi in self.euler_characteristics()):
            raise ValueError("rotation system is not planar (V - E + F != 2)")
        if not 0 <= self.outer_face < self.n_faces:
            raise ValueError(f"outer face {self.outer_face} out of range")
        # glue must connect the pieces into a tree
        if len(self.glue) != len(self.pieces) - 1:
            raise ValueError(f"{len(self.pieces)} pieces need {len(self.pieces) - 1} glue pairs")
        parent = list(range(len(self.pieces)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for f, g in self.glue:
            if not (0 <= f < self.n_faces and 0 <= g < self.n_faces):
                raise ValueError(f"glue pair {(f, g)} out of range")
            a, b = find(self.face_piece(f)), find(self.face_piece(g))
            if a == b:
                raise ValueError(f"glue pair {(f, g)} closes a cycle of pieces")
            parent[a] = b
        if self.orientation is not None:
            if len(self.orientation) != self.n_edges + self.free_loops:
                raise ValueError("orientation needs one flag per edge and free loop")
            incoming = self._incoming()
            for x in range(self.n_crossings):
                for s in (0, 1):
                    if incoming[4 * x + s] == incoming[4 * x + s + 2]:
                        raise ValueError(f"orientation is inconsistent at crossing {x}")

    def _incoming(self) -> list[bool]:
        inc = [False] * (4 * self.n_crossings)
        for e, (h0, h1) in enumerate(self.edge_ends):
            inc[h1 if self.orientation[e] else h0] = True
        return inc

    # -- link components ---------------------------------------------------
    def component_edges(self) -> list[tuple[int, ...]]:
        """Edges of each crossing component in traversal order (from its smallest edge)."""
        seen = [False] * self.n_edges
        out = []
        for e0 in range(self.n_edges):
            if seen[e0]:
                continue
            comp = []
            h = self.edge_ends[e0][0]
            while True:
                e = self.crossings[h // 4][h % 4]
                if seen[e]:
                    break
                seen[e] = True
                comp.append(e)
                head = self.partner[h]
                h = 4 * (head // 4) + (head % 4 + 2) % 4
            out.append(tuple(comp))
        return out

    def with_orientation(self, flip: Iterable[int] = ()) -> PlanarDiagram:
        """Orient every component along its traversal from its smallest edge.

        Components listed in ``flip`` (indices into :meth:`component_edges`,
        then free loops) are reversed.
        """
        flip = set(flip)
        orient = [True] * (self.n_edges + self.free_loops)
        for ci, comp in enumerate(self.component_edges()):
            h = self.edge_ends[comp[0]][0]
            for e in comp:
                forward = h == self.edge_ends[e][0]
                orient[e] = forward != (ci in flip)
                head = self.partner[h]
                h = 4 * (head // 4) + (head % 4 + 2) % 4
        ncomp = len(self.component_edges())
        for k in range(self.free_loops):
            orient[self.n_edges + k] = (ncomp + k) not in flip
        return PlanarDiagram(self.crossings, self.free_loops, self.glue, self.outer_face, tuple(orient))

    def crossing_sign(self, x: int) -> int:
        """+1 or -1 for an oriented diagram (right-handed crossings are +1)."""
        if self.orientation is None:
            raise ValueError("crossing signs need an orientation")
        inc = self._incoming()
        u_in = 0 if inc[4 * x] else 2
        o_in = 1 if inc[4 * x + 1] else 3
        return 1 if o_in == (u_in + 3) % 4 else -1

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "crossings": [{"edges": list(x), "under": [0, 2], "over": [1, 3]} for x in self.crossings],
            "free_loops": self.free_loops,
            "glue": [list(g) for g in self.glue],
            "outer_face": self.outer_face,
            "orientation": None if self.orientation is None else [int(o) for o in self.orientation],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> PlanarDiagram:
        crossings = []
        for x in data["crossings"]:
            edges = x["edges"] if isinstance(x, dict) else x
            if isinstance(x, dict) and list(x.get("under", [0, 2])) not in ([0, 2], [2, 0]):
                edges = edges[1:] + edges[:1]
            crossings.append(tuple(edges))
        orient = data.get("orientation")
        return cls(
            tuple(crossings),
            data.get("free_loops", 0),
            tuple(tuple(g) for g in data.get("glue", ())),
            data.get("outer_face", 0),
            None if orient is None else tuple(bool(o) for o in orient),
        )

    @classmethod
    def from_json(cls, text: str) -> PlanarDiagram:
        return cls.from_dict(json.loads(text))


# -- construction --------------------------------------------------------------

class _Builder:
    """Collects crossings in geometric slot order and joins half-edges into edges."""

    def __init__(self) -> None:
        self.geo: list[tuple[int, bool]] = []   # (rotation r, unused) per crossing
        self.joins: list[tuple[int, int]] = []  # geometric half-edges (4x + geo slot), tail first

    def crossing(self, positive: bool) -> int:
        # positive: SW-NE passes over, so the under strand is SE-NW and slot 0 is SE
        self.geo.append((1 if positive else 0, positive))
        return len(self.geo) - 1

    def actual(self, x: int, geo_slot: int) -> int:
        return 4 * x + (geo_slot - self.geo[x][0]) % 4

    def join(self, tail: tuple[int, int], head: tuple[int, int]) -> None:
        self.joins.append((self.actual(*tail), self.actual(*head)))

    def build(self) -> tuple[tuple[tuple[int, int, int, int], ...], list[bool]]:
        """Crossing tuples with edges numbered by first appearance, plus orientation."""
        n = len(self.geo)
        other = [-1] * (4 * n)
        for a, b in self.joins:
            other[a], other[b] = b, a
        if -1 in other:
            raise AssertionError("unjoined half-edge")
        edge_of = [-1] * (4 * n)
        ne = 0
        for h in range(4 * n):
            if edge_of[h] < 0:
                edge_of[h] = edge_of[other[h]] = ne
                ne += 1
        crossings = tuple(tuple(edge_of[4 * x + s] for s in range(4)) for x in range(n))
        orient = [True] * ne
        for a, b in self.joins:
            orient[edge_of[a]] = a < b
        return crossings, orient


def pretzel_pd(p: Pretzel) -> PlanarDiagram:
    """Standard pretzel diagram: ``n`` vertical twist columns joined by top and bottom arcs.

    Column ``i`` holds ``|a_i|`` crossings stacked bottom to top; the long
    arcs pass outside column 1 and column ``n``, so the region left of
    column 1 is the outer face.  Components get the canonical orientation of
    :meth:`PlanarDiagram.with_orientation`.
    """
    b = _Builder()
    tops, bottoms = [], []
    for a in p.entries:
        prev = None
        for _ in range(abs(a)):
            x = b.crossing(a > 0)
            if prev is None:
                bottoms.append(x)
            else:
                b.join((prev, NW), (x, SW))
                b.join((prev, NE), (x, SE))
            prev = x
        tops.append(prev)
    n = p.n
    for i in range(n - 1):
        b.join((tops[i], NE), (tops[i + 1], NW))
        b.join((bottoms[i], SE), (bottoms[i + 1], SW))
    b.join((tops[0], NW), (tops[-1], NE))
    b.join((bottoms[0], SW), (bottoms[-1], SE))
    crossings, _ = b.build()
    face, _ = _faces_of(crossings)
    outer = face[b.actual(bottoms[0], WEST_CORNER)]
    return PlanarDiagram(crossings, 0, (), outer).with_orientation()


def closure_pd(w: BraidWord) -> PlanarDiagram:
    """Closed braid: positions 1..s left to right, letters top to bottom, closing arcs on the right.

    Oriented downward, so every Seifert circle is one braid strand.
    """
    b = _Builder()
    first: dict[int, tuple[int, int]] = {}
    last: dict[int, tuple[int, int]] = {}
    by_gen: dict[int, list[int]] = {}
    for m in w.letters:
        i = abs(m)
        x = b.crossing(m > 0)
        by_gen.setdefault(i, []).append(x)
        for pos, top_slot, bottom_slot in ((i, NW, SW), (i + 1, NE, SE)):
            if pos in last:
                b.join(last[pos], (x, top_slot))
            else:
                first[pos] = (x, top_slot)
            last[pos] = (x, bottom_slot)
    for pos in last:
        b.join(last[pos], first[pos])
    crossings, orient = b.build()
    face, nf = _faces_of(crossings)

    # radial order of pieces: maximal runs of generators, or untouched positions
    pieces: list[tuple[int, int]] = []   # (outer face, inner face)
    loops = 0
    pos = 1
    while pos <= w.strands:
        if pos in by_gen:
            lo = pos
            while pos in by_gen:
                pos += 1
            hi = pos - 1
            pieces.append((face[b.actual(by_gen[lo][0], WEST_CORNER)],
                           face[b.actual(by_gen[hi][0], EAST_CORNER)]))
            pos += 1
        elif pos - 1 in by_gen:
            pos += 1
        else:
            k = loops
            loops += 1
            pieces.append((nf + 2 * k + 1, nf + 2 * k))
            pos += 1
    glue = tuple((pieces[t][0], pieces[t - 1][1]) for t in range(1, len(pieces)))
    return PlanarDiagram(crossings, loops, glue, pieces[0][0], tuple(orient) + (True,) * loops)


def components(pd: PlanarDiagram) -> int:
    """Link components: strands traced straight through crossings, plus free loops."""
    return len(pd.component_edges()) + pd.free_loops


# -- Seifert circles -----------------------------------------------------------

@dataclass(frozen=True)
class Scar:
    crossing: int
    sign: int
    circles: tuple[int, int]


@dataclass(frozen=True)
class SeifertDecomposition:
    circles: tuple[tuple[int, ...], ...]   # edge ids; free loop k is edge n_edges + k
    senses: tuple[str, ...]                # "ccw" or "cw" with the outer face at infinity
    parent: tuple[int | None, ...]         # immediately enclosing circle
    scars: tuple[Scar, ...]

    def __len__(self) -> int:
        return len(self.circles)

    def ancestors(self, i: int) -> list[int]:
        out = []
        p = self.parent[i]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def nested(self, i: int, j: int) -> bool:
        return i in self.ancestors(j) or j in self.ancestors(i)

    def incompatible(self, i: int, j: int) -> bool:
        same = self.senses[i] == self.senses[j]
        return same != self.nested(i, j)


def seifert(pd: PlanarDiagram) -> SeifertDecomposition:
    if pd.orientation is None:
        raise ValueError("Seifert circles need an oriented diagram")
    inc = pd._incoming()
    face, nf = pd._face_data
    E = pd.n_edges

    def out_neighbor(h: int) -> int:
        x, s = divmod(h, 4)
        nxt = 4 * x + (s + 1) % 4
        return 4 * x + (s - 1) % 4 if inc[nxt] else nxt

    # regions of the smoothed diagram: union of faces
    parent = list(range(pd.n_faces))

    def find(f: int) -> int:
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    for x in range(pd.n_crossings):
        cut = set()
        for s in range(4):
            h = 4 * x + s
            if inc[h]:
                o = out_neighbor(h) % 4
                cut.add(s if o == (s + 1) % 4 else o)
        a, b = [4 * x + s for s in range(4) if s not in cut]
        parent[find(face[a])] = find(face[b])
    for f, g in pd.glue:
        parent[find(f)] = find(g)

    circles: list[tuple[int, ...]] = []
    sides: list[tuple[int, int]] = []     # (left region, right region)
    circle_at_head: dict[int, int] = {}
    seen = [False] * E
    for e0 in range(E):
        if seen[e0]:
            continue
        h0, h1 = pd.edge_ends[e0]
        tail = h0 if pd.orientation[e0] else h1
        edges = []
        left = right = None
        while True:
            e = pd.crossings[tail // 4][tail % 4]
            if seen[e]:
                break
            seen[e] = True
            head = pd.partner[tail]
            l, r = find(face[tail]), find(face[head])
            if left is None:
                left, right = l, r
            elif (l, r) != (left, right):
                raise AssertionError("Seifert circle borders more than two regions")
            edges.append(e)
            circle_at_head[head] = len(circles)
            tail = out_neighbor(head)
        circles.append(tuple(edges))
        sides.append((left, right))
    for k in range(pd.free_loops):
        lf, rf = nf + 2 * k, nf + 2 * k + 1
        if not pd.orientation[E + k]:
            lf, rf = rf, lf
        circles.append((E + k,))
        sides.append((find(lf), find(rf)))

    # regions and circles form a tree; root it at the outer region
    adj: dict[int, list[tuple[int, int]]] = {}
    for c, (l, r) in enumerate(sides):
        adj.setdefault(l, []).append((c, r))
        adj.setdefault(r, []).append((c, l))
    root = find(pd.outer_face)
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for _, v in adj.get(u, ()):
            if v not in depth:
                depth[v] = depth[u] + 1
                queue.append(v)
    regions = {find(f) for f in range(pd.n_faces)}
    if len(depth) != len(regions) or len(regions) != len(circles) + 1:
        raise AssertionError("smoothed diagram does not split the plane into a tree of regions")

    inside = []
    senses = []
    for l, r in sides:
        inner = l if depth[l] > depth[r] else r
        inside.append(inner)
        senses.append("ccw" if inner == l else "cw")
    circle_inside = {reg: c for c, reg in enumerate(inside)}
    nest = tuple(circle_inside.get(l if inside[c] == r else r) for c, (l, r) in enumerate(sides))

    scars = []
    for x in range(pd.n_crossings):
        ins = [4 * x + s for s in range(4) if inc[4 * x + s]]
        scars.append(Scar(x, pd.crossing_sign(x), (circle_at_head[ins[0]], circle_at_head[ins[1]])))
    return SeifertDecomposition(tuple(circles), tuple(senses), nest, tuple(scars))


def complexity(pd: PlanarDiagram) -> int:
    """Number of incompatible pairs of oriented Seifert circles (0 iff braid diagram)."""
    sd = seifert(pd)
    n = len(sd)
    return sum(sd.incompatible(i, j) for i in range(n) for j in range(i + 1, n))
