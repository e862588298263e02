"""Text formats for landmark sets.

Two formats are supported:

* ``pls``, a partial-square grid: n1 rows of n2 whitespace-separated
  cells, where a symbol k in row i, column j records the landmark
  (i, j, k) and ``.`` records an empty cell.  Only sets in which no two
  landmarks share their first two coordinates are representable.
* ``triples``, one ``i j k`` line per landmark with a
  ``# graph n1 n2 n3 K`` header line.

Round trip: parsing an emitted document reproduces the landmark set.
"""

from __future__ import annotations

from .errors import ParseError, Unsupported
from .hamming import GhgParams
from .resolving import LandmarkSet

FORMATS = ("pls", "triples")


def emit_pls(W: LandmarkSet) -> str:
    n1, n2, n3 = W.graph.dims
    grid: dict[tuple[int, int], int] = {}
    for (i, j, k) in W.members:
        if (i, j) in grid:
            raise Unsupported(
                f"not pls-representable: two landmarks share row {i}, column {j}"
            )
        grid[(i, j)] = k
    width = len(str(n3))
    lines = []
    for i in range(1, n1 + 1):
        cells = [
            str(grid[(i, j)]) if (i, j) in grid else "."
            for j in range(1, n2 + 1)
        ]
        lines.append(" ".join(c.rjust(width) for c in cells))
    return "\n".join(lines) + "\n"


def pls_representable(W: LandmarkSet) -> bool:
    seen = set()
    for (i, j, _k) in W.members:
        if (i, j) in seen:
            return False
        seen.add((i, j))
    return True


def parse_pls(text: str, g: GhgParams) -> LandmarkSet:
    n1, n2, n3 = g.dims
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if len(rows) != n1:
        raise ParseError(f"expected {n1} rows, found {len(rows)}")
    members = []
    for i, (lineno, cells) in enumerate(rows, start=1):
        if len(cells) != n2:
            raise ParseError(
                f"row {i} has {len(cells)} cells, expected {n2}", line=lineno
            )
        for j, cell in enumerate(cells, start=1):
            if cell == ".":
                continue
            try:
                k = int(cell)
            except ValueError:
                raise ParseError(
                    f"cell {cell!r} is neither an integer nor '.'",
                    line=lineno, column=j,
                ) from None
            if not 1 <= k <= n3:
                raise ParseError(
                    f"symbol {k} outside 1..{n3}", line=lineno, column=j
                )
            members.append((i, j, k))
    return LandmarkSet(g, members)


def _format_k(g: GhgParams) -> str:
    return ",".join(str(j) for j in sorted(g.k))


def emit_triples(W: LandmarkSet) -> str:
    g = W.graph
    lines = [f"# graph {g.dims[0]} {g.dims[1]} {g.dims[2]} {_format_k(g)}"]
    lines.extend(f"{i} {j} {k}" for (i, j, k) in W.members)
    return "\n".join(lines) + "\n"


def parse_triples(text: str, g: GhgParams) -> LandmarkSet:
    members: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["graph"]:
                if len(parts) != 5:
                    raise ParseError("graph header needs n1 n2 n3 K", line=lineno)
                try:
                    dims = tuple(int(p) for p in parts[1:4])
                    k = frozenset(int(p) for p in parts[4].split(","))
                except ValueError:
                    raise ParseError(
                        f"malformed graph header {line!r}", line=lineno
                    ) from None
                if dims != g.dims or k != g.k:
                    raise ParseError(
                        f"header describes {GhgParams(dims, k).format()}, "
                        f"expected {g.format()}",
                        line=lineno,
                    )
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(
                f"expected three integers, found {len(parts)} fields", line=lineno
            )
        try:
            triple = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line=lineno) from None
        for col, (c, d) in enumerate(zip(triple, g.dims), start=1):
            if not 1 <= c <= d:
                raise ParseError(
                    f"coordinate {c} outside 1..{d}", line=lineno, column=col
                )
        if triple in seen:
            raise ParseError(f"duplicate landmark {triple}", line=lineno)
        seen.add(triple)
        members.append(triple)
    return LandmarkSet(g, members)


def detect_format(text: str) -> str:
    """Guess pls vs triples: a grid contains '.' cells or non-triple rows;
    a triples document is all 3-field data lines."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if "." in parts or len(parts) != 3:
            return "pls"
    return "triples"


def parse_landmarks(text: str, fmt: str | None, g: GhgParams) -> LandmarkSet:
    """Parse a landmark document; ``fmt`` is 'pls', 'triples', or None to sniff."""
    if fmt is None:
        fmt = detect_format(text)
    if fmt == "pls":
        return parse_pls(text, g)
    if fmt == "triples":
        return parse_triples(text, g)
    raise Unsupported(f"unknown format {fmt!r}; expected one of {FORMATS}")


def emit_landmarks(W: LandmarkSet, fmt: str | None = None) -> tuple[str, str]:
    """Emit a landmark document; returns (text, format used).

    With ``fmt`` None, prefers pls when representable, else triples.
    """
    if fmt is None:
        fmt = "pls" if pls_representable(W) else "triples"
    if fmt == "pls":
        return emit_pls(W), "pls"
    if fmt == "triples":
        return emit_triples(W), "triples"
    raise Unsupported(f"unknown format {fmt!r}; expected one of {FORMATS}")


__all__ = [
    "FORMATS",
    "emit_pls",
    "parse_pls",
    "emit_triples",
    "parse_triples",
    "parse_landmarks",
    "emit_landmarks",
    "detect_format",
    "pls_representable",
]
