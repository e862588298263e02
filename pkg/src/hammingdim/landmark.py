"""Edge-colored block structure of a landmark set.

The landmark graph of W has the landmarks as vertices and one hyperedge
per nonempty block, colored by coordinate: color 1 (blue) for first-
coordinate blocks, 2 (green) for second, 3 (pink) for third.  Size-1
blocks are loops, size-2 blocks plain edges.  Same-colored hyperedges
never share a vertex, since the blocks of one color partition W.

Two special system shapes drive the theory:

* 2-basic: every block of every color has exactly two landmarks and no
  two landmarks agree in two coordinates.  The landmark graph is then a
  simple cubic graph with a proper 3-edge-coloring.
* triple-looped: a 2-basic system on the (n-1)-diagonal graph together
  with the extra landmark (n, n, n), which carries one loop per color.

For these shapes, whether W resolves is decided purely by scanning the
landmark graph for three forbidden patterns: a 4-cycle carrying all
three colors, a 6-cycle whose opposite edges repeat colors (a b c a b c),
and, for triple-looped systems only, a triangle with all three colors.
``predict_resolving`` applies that characterization without ever
computing a distance or a code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidVertex, IsLandmark, NotApplicable, Unsupported
from .hamming import GhgParams, Vertex, hamming_graph
from .resolving import Certificate, LandmarkSet, Verdict

COLOR_NAMES = {1: "blue", 2: "green", 3: "pink"}


@dataclass(frozen=True)
class Hyperedge:
    color: int
    value: int
    members: frozenset


@dataclass(frozen=True)
class LandmarkGraph:
    """Vertices are the landmarks; one colored hyperedge per nonempty block."""

    vertices: tuple[Vertex, ...]
    hyperedges: tuple[Hyperedge, ...]

    def edges_of_color(self, color: int) -> tuple[Hyperedge, ...]:
        return tuple(e for e in self.hyperedges if e.color == color)

    def plain_edges(self) -> tuple[Hyperedge, ...]:
        return tuple(e for e in self.hyperedges if len(e.members) == 2)

    def loops(self) -> tuple[Hyperedge, ...]:
        return tuple(e for e in self.hyperedges if len(e.members) == 1)

    def all_plain(self) -> bool:
        return all(len(e.members) == 2 for e in self.hyperedges)


def build_landmark_graph(W: LandmarkSet) -> LandmarkGraph:
    edges = []
    for i in (1, 2, 3):
        for a, mems in sorted(W.blocks_of_color(i).items()):
            edges.append(Hyperedge(i, a, frozenset(mems)))
    return LandmarkGraph(tuple(W.members), tuple(edges))


class SystemKind(str, Enum):
    TWO_BASIC = "TWO_BASIC"
    TRIPLE_LOOPED = "TRIPLE_LOOPED"
    OTHER = "OTHER"


@dataclass(frozen=True)
class SystemClass:
    kind: SystemKind
    loop_vertex: Vertex | None = None


def _is_two_basic(W: LandmarkSet) -> bool:
    g = W.graph
    for i in (1, 2, 3):
        for a in range(1, g.dims[i - 1] + 1):
            if len(W.block(i, a)) != 2:
                return False
    mems = W.members
    for p in range(len(mems)):
        for q in range(p + 1, len(mems)):
            agree = sum(1 for x, y in zip(mems[p], mems[q]) if x == y)
            if agree >= 2:
                return False
    return True


def classify(W: LandmarkSet) -> SystemClass:
    """TWO_BASIC, TRIPLE_LOOPED (with its loop vertex), or OTHER."""
    if _is_two_basic(W):
        return SystemClass(SystemKind.TWO_BASIC)
    g = W.graph
    n = g.dims[0]
    if g.dims == (n, n, n) and n >= 4:
        u = (n, n, n)
        if u in W and all(max(m) <= n - 1 for m in W.members if m != u):
            inner = LandmarkSet(
                GhgParams((n - 1, n - 1, n - 1), g.k),
                [m for m in W.members if m != u],
            )
            if _is_two_basic(inner):
                return SystemClass(SystemKind.TRIPLE_LOOPED, loop_vertex=u)
    return SystemClass(SystemKind.OTHER)


def basic_part(W: LandmarkSet) -> LandmarkSet:
    """The 2-basic system left after removing a triple-looped set's loop vertex."""
    cls = classify(W)
    if cls.kind is not SystemKind.TRIPLE_LOOPED:
        raise NotApplicable(f"{W!r} is {cls.kind.value}, not TRIPLE_LOOPED")
    n = W.graph.dims[0]
    return LandmarkSet(
        GhgParams((n - 1, n - 1, n - 1), W.graph.k),
        [m for m in W.members if m != cls.loop_vertex],
    )


def extend_triple_looped(W: LandmarkSet) -> LandmarkSet:
    """Lift a 2-basic system on the n-diagonal to W + {(n+1, n+1, n+1)}
    on the (n+1)-diagonal graph."""
    cls = classify(W)
    if cls.kind is not SystemKind.TWO_BASIC:
        raise NotApplicable(f"{W!r} is {cls.kind.value}, not TWO_BASIC")
    n = W.graph.dims[0]
    g = GhgParams((n + 1, n + 1, n + 1), W.graph.k)
    return LandmarkSet(g, list(W.members) + [(n + 1, n + 1, n + 1)])


@dataclass(frozen=True)
class CycleReport:
    """One forbidden configuration: the cycle's landmarks in walk order and
    the color of each traversed edge (colors[t] joins landmarks[t] to
    landmarks[t+1], wrapping around)."""

    landmarks: tuple[Vertex, ...]
    colors: tuple[int, ...]

    def revalidates(self) -> bool:
        """Consecutive landmarks share the coordinate named by the edge color."""
        k = len(self.landmarks)
        if len(self.colors) != k or len(set(self.landmarks)) != k:
            return False
        for t in range(k):
            x, y = self.landmarks[t], self.landmarks[(t + 1) % k]
            c = self.colors[t]
            if x == y or x[c - 1] != y[c - 1]:
                return False
        return True


@dataclass(frozen=True)
class ForbiddenReport:
    applicable: bool
    c4: tuple[CycleReport, ...] = ()
    c6: tuple[CycleReport, ...] = ()
    rainbow_triangles: tuple[CycleReport, ...] = ()

    def clean(self, include_triangles: bool) -> bool:
        if self.c4 or self.c6:
            return False
        return not (include_triangles and self.rainbow_triangles)


def _plain_neighbor_maps(G: LandmarkGraph) -> dict[int, dict[Vertex, Vertex]]:
    # Blocks of one color are disjoint, so each vertex has at most one
    # plain edge per color.
    nbr: dict[int, dict[Vertex, Vertex]] = {1: {}, 2: {}, 3: {}}
    for e in G.plain_edges():
        x, y = sorted(e.members)
        nbr[e.color][x] = y
        nbr[e.color][y] = x
    return nbr


def _canonical_cycle(cycle: tuple[Vertex, ...], colors: tuple[int, ...]):
    # Rotate the least vertex to the front, then take the lexicographically
    # smaller direction; colors travel with their edges.
    k = len(cycle)
    s = min(range(k), key=lambda t: cycle[t])
    fwd_v = tuple(cycle[(s + t) % k] for t in range(k))
    fwd_c = tuple(colors[(s + t) % k] for t in range(k))
    bwd_v = tuple(cycle[(s - t) % k] for t in range(k))
    bwd_c = tuple(colors[(s - t - 1) % k] for t in range(k))
    return min((fwd_v, fwd_c), (bwd_v, bwd_c))


def _walk_cycles(nbr, pattern: tuple[int, ...], vertices) -> dict[tuple, CycleReport]:
    """All simple closed walks realizing a color pattern, canonicalized."""
    found: dict[tuple, CycleReport] = {}
    k = len(pattern)
    for start in vertices:
        v = start
        walk = [start]
        ok = True
        for color in pattern:
            v = nbr[color].get(v)
            if v is None:
                ok = False
                break
            walk.append(v)
        if not ok or walk[-1] != start:
            continue
        cycle = tuple(walk[:-1])
        if len(set(cycle)) != k:
            continue
        canon_v, canon_c = _canonical_cycle(cycle, pattern)
        found.setdefault((canon_v, canon_c), CycleReport(canon_v, canon_c))
    return found


def forbidden_scan(G: LandmarkGraph) -> ForbiddenReport:
    """Exhaustively list forbidden 4-cycles, 6-cycles, and rainbow triangles.

    Walks color-constrained closed paths from every vertex: 4-cycles whose
    opposite pair repeats a color while the other two edges bring in the
    remaining two colors (pattern a b a c), 6-cycles with pattern
    a b c a b c, and triangles with three distinct colors.  Only plain
    (size-2) hyperedges participate; a graph with loops or larger blocks
    is scanned anyway but flagged as not strictly applicable.
    """
    nbr = _plain_neighbor_maps(G)
    verts = G.vertices
    c4: dict[tuple, CycleReport] = {}
    c6: dict[tuple, CycleReport] = {}
    tri: dict[tuple, CycleReport] = {}
    for a, b, c in ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)):
        c4.update(_walk_cycles(nbr, (a, b, a, c), verts))
        c6.update(_walk_cycles(nbr, (a, b, c, a, b, c), verts))
        tri.update(_walk_cycles(nbr, (a, b, c), verts))
    return ForbiddenReport(
        applicable=G.all_plain(),
        c4=tuple(c4[k] for k in sorted(c4)),
        c6=tuple(c6[k] for k in sorted(c6)),
        rainbow_triangles=tuple(tri[k] for k in sorted(tri)),
    )


def _describe_cycle(kind: str, c: CycleReport) -> str:
    walk = " ".join(
        "(" + ",".join(str(x) for x in v) + ")" for v in c.landmarks
    )
    colors = ",".join(COLOR_NAMES[i] for i in c.colors)
    return f"{kind} on {walk} colored {colors}"


def predict_resolving(W: LandmarkSet) -> Certificate:
    """Decide whether W resolves purely from its landmark graph.

    For a 2-basic system the verdict is: resolving exactly when the scan
    finds no forbidden 4-cycle and no forbidden 6-cycle.  For a
    triple-looped system the scan runs on the 2-basic part and rainbow
    triangles are forbidden as well.  Never computes a distance or code,
    so an UNRESOLVED certificate names the forbidden configuration
    instead of carrying a witness pair.
    """
    g = W.graph
    if g.k != frozenset({3}):
        raise NotApplicable(f"prediction is stated for K={{3}}, got {g.format()}")
    if len(set(g.dims)) != 1:
        raise NotApplicable(f"prediction needs a diagonal graph, got {g.format()}")
    cls = classify(W)
    if cls.kind is SystemKind.TWO_BASIC:
        report = forbidden_scan(build_landmark_graph(W))
        triangles = False
        scanned = "landmark graph of the 2-basic system"
    elif cls.kind is SystemKind.TRIPLE_LOOPED:
        report = forbidden_scan(build_landmark_graph(basic_part(W)))
        triangles = True
        scanned = "landmark graph of the 2-basic part"
    else:
        raise NotApplicable(
            "prediction only covers TWO_BASIC and TRIPLE_LOOPED systems"
        )
    if report.clean(include_triangles=triangles):
        forbidden = "no three-colored 4-cycle, no 6-cycle with repeating colors"
        if triangles:
            forbidden += ", no rainbow triangle"
        return Certificate(
            Verdict.RESOLVING, g, landmarks=W,
            attestation=f"scan of the {scanned}: {forbidden}",
        )
    if report.c4:
        found = _describe_cycle("three-colored 4-cycle", report.c4[0])
    elif report.c6:
        found = _describe_cycle("color-repeating 6-cycle", report.c6[0])
    else:
        found = _describe_cycle("rainbow triangle", report.rainbow_triangles[0])
    return Certificate(
        Verdict.UNRESOLVED, g, landmarks=W,
        attestation=f"scan of the {scanned} found a {found}",
    )


class FootprintShape(str, Enum):
    C3 = "C3"
    P4 = "P4"
    P3_P2 = "P3+P2"
    THREE_P2 = "3P2"
    L2_P2 = "L2+P2"
    P3_L1 = "P3+L1"
    TWO_P2_L1 = "2P2+L1"
    K13 = "K13"
    L3 = "L3"
    NONE = "NONE"
    OTHER = "OTHER"


TWO_BASIC_SHAPES = frozenset(
    {FootprintShape.C3, FootprintShape.P4, FootprintShape.P3_P2, FootprintShape.THREE_P2}
)
TRIPLE_LOOPED_SHAPES = TWO_BASIC_SHAPES | frozenset(
    {FootprintShape.L2_P2, FootprintShape.P3_L1, FootprintShape.TWO_P2_L1}
)
LANDMARK_SHAPES = frozenset({FootprintShape.K13, FootprintShape.L3})


@dataclass(frozen=True)
class Footprint:
    """The part of the landmark graph a vertex sees: its three blocks."""

    covered: frozenset
    shape: FootprintShape
    edges: tuple[Hyperedge, ...] = field(default=(), compare=False)


def _classify_shape(edges: list[Hyperedge]) -> FootprintShape:
    if not edges:
        return FootprintShape.NONE
    if any(len(e.members) > 2 for e in edges):
        return FootprintShape.OTHER
    loops = [e for e in edges if len(e.members) == 1]
    plains = [e for e in edges if len(e.members) == 2]
    plain_sets = [e.members for e in plains]
    if len(set(plain_sets)) != len(plain_sets):
        return FootprintShape.OTHER  # repeated edge in two colors
    covered = frozenset().union(*(e.members for e in edges))
    nl, np_ = len(loops), len(plains)
    if (nl, np_) == (0, 3):
        if len(covered) == 3:
            return FootprintShape.C3
        if len(covered) == 4:
            common = plain_sets[0] & plain_sets[1] & plain_sets[2]
            return FootprintShape.K13 if common else FootprintShape.P4
        if len(covered) == 5:
            return FootprintShape.P3_P2
        return FootprintShape.THREE_P2
    if (nl, np_) == (1, 2):
        (u,) = loops[0].members
        if u in plain_sets[0] or u in plain_sets[1]:
            return FootprintShape.OTHER
        joined = plain_sets[0] & plain_sets[1]
        return FootprintShape.P3_L1 if joined else FootprintShape.TWO_P2_L1
    if (nl, np_) == (2, 1):
        (u1,) = loops[0].members
        (u2,) = loops[1].members
        if u1 != u2 or u1 in plain_sets[0]:
            return FootprintShape.OTHER
        return FootprintShape.L2_P2
    if (nl, np_) == (3, 0):
        heads = {next(iter(e.members)) for e in loops}
        return FootprintShape.L3 if len(heads) == 1 else FootprintShape.OTHER
    return FootprintShape.OTHER  # fewer than three nonempty blocks


def footprint(W: LandmarkSet, v: Vertex) -> Footprint:
    """The subgraph induced by v's three blocks, with its shape.

    For a non-landmark the covered set equals code(W, v).  Landmarks are
    allowed here: their three blocks meet in the landmark itself, giving
    K13 (three plain edges) or L3 (three loops).
    """
    W.graph.validate_vertex(v)
    edges = []
    for i in (1, 2, 3):
        mems = W.block(i, v[i - 1])
        if mems:
            edges.append(Hyperedge(i, v[i - 1], frozenset(mems)))
    covered = frozenset().union(*(e.members for e in edges)) if edges else frozenset()
    return Footprint(covered, _classify_shape(edges), tuple(edges))


__all__ = [
    "COLOR_NAMES",
    "Hyperedge",
    "LandmarkGraph",
    "build_landmark_graph",
    "SystemKind",
    "SystemClass",
    "classify",
    "basic_part",
    "extend_triple_looped",
    "CycleReport",
    "ForbiddenReport",
    "forbidden_scan",
    "predict_resolving",
    "FootprintShape",
    "Footprint",
    "footprint",
    "TWO_BASIC_SHAPES",
    "TRIPLE_LOOPED_SHAPES",
    "LANDMARK_SHAPES",
]
