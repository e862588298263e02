"""Generalized Hamming graphs and their distances.

A generalized Hamming graph has vertex set [n1] x ... x [nr] (1-based
coordinates) and an adjacency rule parameterized by a set K of allowed
discrepancies: two tuples are adjacent exactly when the number of
coordinates in which they differ lies in K.

The workhorse regime in this package is K = {r} with every dimension at
least 3.  There the graph is connected with diameter 2, and distance has a
closed form: two distinct vertices are at distance 1 when they share no
coordinate, otherwise at distance 2.  A breadth-first fallback covers
small graphs with other K, mainly so the closed form can be checked
against an independent route.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass

from .errors import (
    DisconnectedGraph,
    InvalidPair,
    InvalidVertex,
    ParseError,
    Unreachable,
    Unsupported,
)

Vertex = tuple[int, ...]

# Breadth-first search is a desk-scale cross-check, not a production path.
BFS_VERTEX_LIMIT = 10_000

_GRAPH_RE = re.compile(r"^(\d+(?:x\d+)+)(?:;K=(\d+(?:,\d+)*))?$")


@dataclass(frozen=True)
class GhgParams:
    """Parameters (dimensions and discrepancy set) of a generalized Hamming graph."""

    dims: tuple[int, ...]
    k: frozenset[int]

    def __post_init__(self):
        if len(self.dims) < 2:
            raise Unsupported(f"need at least 2 coordinates, got {len(self.dims)}")
        if any(d < 1 for d in self.dims):
            raise Unsupported(f"dimensions must be >= 1, got {self.dims}")
        if not self.k:
            raise Unsupported("discrepancy set K must be nonempty")
        if not all(1 <= j <= len(self.dims) for j in self.k):
            raise Unsupported(f"K={sorted(self.k)} not within 1..{len(self.dims)}")

    @property
    def r(self) -> int:
        return len(self.dims)

    def vertex_count(self) -> int:
        count = 1
        for d in self.dims:
            count *= d
        return count

    def vertices(self):
        """Iterate all vertices in lexicographic order."""
        return itertools.product(*(range(1, d + 1) for d in self.dims))

    def validate_vertex(self, x: Vertex) -> None:
        if not isinstance(x, tuple) or len(x) != self.r:
            raise InvalidVertex(f"{x!r} is not a {self.r}-tuple")
        for i, (c, d) in enumerate(zip(x, self.dims), start=1):
            if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= d:
                raise InvalidVertex(f"coordinate {i} of {x!r} outside 1..{d}")

    def closed_form_available(self) -> bool:
        """True when K = {r} and all dims >= 3, the diameter-2 regime."""
        return self.k == frozenset({self.r}) and min(self.dims) >= 3

    def adjacent(self, x: Vertex, y: Vertex) -> bool:
        self.validate_vertex(x)
        self.validate_vertex(y)
        if x == y:
            raise InvalidPair(f"adjacency undefined for identical vertices {x!r}")
        return hamming_discrepancy(x, y) in self.k

    def distance(self, x: Vertex, y: Vertex) -> int:
        """Graph distance between two vertices.

        Uses the diameter-2 closed form when K = {r} and all dims >= 3;
        otherwise falls back to breadth-first search on graphs of at most
        BFS_VERTEX_LIMIT vertices.
        """
        self.validate_vertex(x)
        self.validate_vertex(y)
        if x == y:
            return 0
        if self.k == frozenset({self.r}):
            if sum(1 for d in self.dims if d == 2) >= 2 or (
                min(self.dims) == 1 and self.vertex_count() > 1
            ):
                raise DisconnectedGraph(
                    f"{self.format()} is disconnected: no pair of vertices can "
                    f"differ in all {self.r} coordinates"
                )
            if min(self.dims) >= 3:
                return 1 if hamming_discrepancy(x, y) == self.r else 2
        return self._bfs_distance(x, y)

    def neighbors(self, x: Vertex):
        """Iterate the neighbors of a vertex (generated, not scanned)."""
        self.validate_vertex(x)
        positions = range(self.r)
        for j in sorted(self.k):
            for subset in itertools.combinations(positions, j):
                choices = [
                    [c for c in range(1, self.dims[i] + 1) if c != x[i]]
                    for i in subset
                ]
                for replacement in itertools.product(*choices):
                    y = list(x)
                    for i, c in zip(subset, replacement):
                        y[i] = c
                    yield tuple(y)

    def _bfs_distance(self, x: Vertex, y: Vertex) -> int:
        if self.vertex_count() > BFS_VERTEX_LIMIT:
            raise Unsupported(
                f"no closed form for K={sorted(self.k)} and "
                f"{self.vertex_count()} vertices exceeds the breadth-first "
                f"fallback limit of {BFS_VERTEX_LIMIT}"
            )
        seen = {x: 0}
        queue = deque([x])
        while queue:
            v = queue.popleft()
            d = seen[v]
            for w in self.neighbors(v):
                if w not in seen:
                    if w == y:
                        return d + 1
                    seen[w] = d + 1
                    queue.append(w)
        raise Unreachable(f"{y!r} is not reachable from {x!r} in {self.format()}")

    def bfs_distances_from(self, source: Vertex) -> dict[Vertex, int]:
        """All distances from one source by breadth-first search (desk scale)."""
        self.validate_vertex(source)
        if self.vertex_count() > BFS_VERTEX_LIMIT:
            raise Unsupported(
                f"{self.vertex_count()} vertices exceeds the breadth-first "
                f"fallback limit of {BFS_VERTEX_LIMIT}"
            )
        seen = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            d = seen[v]
            for w in self.neighbors(v):
                if w not in seen:
                    seen[w] = d + 1
                    queue.append(w)
        return seen

    def format(self) -> str:
        dims = "x".join(str(d) for d in self.dims)
        ks = ",".join(str(j) for j in sorted(self.k))
        return f"{dims};K={ks}"

    @classmethod
    def parse(cls, text: str) -> "GhgParams":
        """Parse a graph description like ``5x7x11`` or ``3x3x3;K=1,2``.

        K defaults to {r}, the all-coordinates-differ rule.
        """
        m = _GRAPH_RE.match(text.strip())
        if m is None:
            raise ParseError(f"cannot parse graph description {text!r}")
        dims = tuple(int(p) for p in m.group(1).split("x"))
        if m.group(2) is None:
            k = frozenset({len(dims)})
        else:
            k = frozenset(int(p) for p in m.group(2).split(","))
        return cls(dims, k)


def hamming_graph(*dims: int, k: frozenset[int] | set[int] | None = None) -> GhgParams:
    """Convenience constructor: ``hamming_graph(3, 3, 3)`` has K = {r}."""
    dims_t = tuple(dims)
    return GhgParams(dims_t, frozenset(k) if k is not None else frozenset({len(dims_t)}))


def hamming_discrepancy(x: Vertex, y: Vertex) -> int:
    """Number of coordinates in which two equal-length tuples differ."""
    if len(x) != len(y):
        raise InvalidPair(f"tuples of different length: {x!r} vs {y!r}")
    return sum(1 for a, b in zip(x, y) if a != b)
