"""Lattice geometry: dimensions, points, rectangles, and bounded point sets.

Coordinates are 1-based and (1, 1) is the bottom-left cell of the grid.
Every container here is immutable and hashable, so values can be shared
freely between threads and processes.

The module also owns the ``.pts`` text format used to exchange point sets:

    dims <m> <n>        # header for an m x n grid
    <x> <y>             # one point per line, '#' starts a comment

    ldims <n> <d>       # header for the [n]^d lattice variant
    <c1> <c2> ... <cd>  # d coordinates per line
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BoundsError, DomainError


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class GridDims:
    """Width (columns, m) and height (rows, n) of a finite grid."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise DomainError(f"grid dims must be positive, got {self.m}x{self.n}")

    @property
    def cells(self) -> int:
        return self.m * self.n

    def __iter__(self) -> Iterator[int]:
        return iter((self.m, self.n))

    def __contains__(self, p: tuple) -> bool:
        x, y = p
        return 1 <= x <= self.m and 1 <= y <= self.n

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


@dataclass(frozen=True)
class LatticeDims:
    """The lattice [side]^dim, i.e. {1..side}^dim with nearest-neighbour edges."""

    side: int
    dim: int

    def __post_init__(self) -> None:
        if self.side < 1 or self.dim < 1:
            raise DomainError(f"lattice dims must be positive, got [{self.side}]^{self.dim}")

    @property
    def cells(self) -> int:
        return self.side ** self.dim

    def __contains__(self, p: tuple) -> bool:
        return len(p) == self.dim and all(1 <= c <= self.side for c in p)

    def __str__(self) -> str:
        return f"[{self.side}]^{self.dim}"


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle [lo, hi], both corners inclusive."""

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Point(*self.lo))
        object.__setattr__(self, "hi", Point(*self.hi))
        if self.lo.x > self.hi.x or self.lo.y > self.hi.y:
            raise DomainError(f"degenerate rectangle [{self.lo}, {self.hi}]")

    @property
    def width(self) -> int:
        return self.hi.x - self.lo.x + 1

    @property
    def height(self) -> int:
        return self.hi.y - self.lo.y + 1

    @property
    def dim(self) -> tuple[int, int]:
        return (self.width, self.height)

    @property
    def size(self) -> int:
        return self.width * self.height

    def __contains__(self, p: tuple) -> bool:
        x, y = p
        return self.lo.x <= x <= self.hi.x and self.lo.y <= y <= self.hi.y

    def cells(self) -> Iterator[Point]:
        for x in range(self.lo.x, self.hi.x + 1):
            for y in range(self.lo.y, self.hi.y + 1):
                yield Point(x, y)

    def distance(self, other: "Rect") -> int:
        """Minimum taxicab distance between cells of the two rectangles."""
        gap_x = max(0, other.lo.x - self.hi.x, self.lo.x - other.hi.x)
        gap_y = max(0, other.lo.y - self.hi.y, self.lo.y - other.hi.y)
        return gap_x + gap_y


@dataclass(frozen=True)
class PointSet:
    """A finite set of points bound to (and validated against) a grid."""

    dims: GridDims
    points: frozenset[Point]

    def __post_init__(self) -> None:
        pts = frozenset(Point(int(x), int(y)) for (x, y) in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if p not in self.dims:
                raise BoundsError(f"point {tuple(p)} outside grid {self.dims}")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __contains__(self, p: tuple) -> bool:
        x, y = p
        return Point(x, y) in self.points

    def without(self, p: tuple) -> "PointSet":
        return PointSet(self.dims, self.points - {Point(*p)})

    def sorted_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.points))


@dataclass(frozen=True)
class LatticeSet:
    """A finite set of d-dimensional lattice points bound to a LatticeDims."""

    dims: LatticeDims
    points: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        pts = frozenset(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if p not in self.dims:
                raise BoundsError(f"point {p} outside lattice {self.dims}")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(sorted(self.points))

    def __contains__(self, p: tuple) -> bool:
        return tuple(p) in self.points

    def without(self, p: tuple) -> "LatticeSet":
        return LatticeSet(self.dims, self.points - {tuple(p)})


def translate(ps: PointSet, k: int, l: int, target: GridDims | None = None) -> PointSet:
    """Shift every point by (k, l); the result lives on ``target`` (default: same dims).

    Raises BoundsError naming the first offending point if the image does not fit.
    """
    dims = target if target is not None else ps.dims
    moved = []
    for p in sorted(ps.points):
        q = Point(p.x + k, p.y + l)
        if q not in dims:
            raise BoundsError(
                f"translate by ({k},{l}) moves {tuple(p)} to {tuple(q)}, outside {dims}"
            )
        moved.append(q)
    return PointSet(dims, frozenset(moved))


def rotate180(ps: PointSet, target: GridDims | None = None) -> PointSet:
    """Map (x, y) to (m+1-x, n+1-y) on the target grid. An involution."""
    dims = target if target is not None else ps.dims
    m, n = dims
    rotated = []
    for p in sorted(ps.points):
        q = Point(m + 1 - p.x, n + 1 - p.y)
        if q not in dims:
            raise BoundsError(f"rotate180 maps {tuple(p)} to {tuple(q)}, outside {dims}")
        rotated.append(q)
    return PointSet(dims, frozenset(rotated))


def transpose(ps: PointSet) -> PointSet:
    """Swap x and y; the result lives on the transposed grid."""
    m, n = ps.dims
    return PointSet(GridDims(n, m), frozenset(Point(p.y, p.x) for p in ps.points))


def set_distance(a: PointSet, b: PointSet) -> int:
    """Minimum taxicab distance between points of the two sets."""
    if not a.points or not b.points:
        raise DomainError("set_distance requires two non-empty sets")
    return min(abs(p.x - q.x) + abs(p.y - q.y) for p in a.points for q in b.points)


# --- .pts text format ------------------------------------------------------


def format_points(ps: PointSet | LatticeSet) -> str:
    if isinstance(ps, LatticeSet):
        lines = [f"ldims {ps.dims.side} {ps.dims.dim}"]
        lines += [" ".join(str(c) for c in p) for p in sorted(ps.points)]
    else:
        lines = [f"dims {ps.dims.m} {ps.dims.n}"]
        lines += [f"{p.x} {p.y}" for p in sorted(ps.points)]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet | LatticeSet:
    header: tuple | None = None
    pts: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if fields[0] == "dims" and len(fields) == 3:
                header = ("dims", int(fields[1]), int(fields[2]))
            elif fields[0] == "ldims" and len(fields) == 3:
                header = ("ldims", int(fields[1]), int(fields[2]))
            else:
                raise DomainError(f"line {lineno}: expected 'dims <m> <n>' or 'ldims <n> <d>'")
            continue
        try:
            coords = tuple(int(f) for f in fields)
        except ValueError as exc:
            raise DomainError(f"line {lineno}: non-integer coordinate in {line!r}") from exc
        want = 2 if header[0] == "dims" else header[2]
        if len(coords) != want:
            raise DomainError(f"line {lineno}: expected {want} coordinates, got {len(coords)}")
        if coords in seen:
            raise DomainError(f"line {lineno}: duplicate point {coords}")
        seen.add(coords)
        pts.append(coords)
    if header is None:
        raise DomainError("missing 'dims' or 'ldims' header line")
    if header[0] == "dims":
        return PointSet(GridDims(header[1], header[2]), frozenset(Point(*p) for p in pts))
    return LatticeSet(LatticeDims(header[1], header[2]), frozenset(pts))


def save_points(path, ps: PointSet | LatticeSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points(ps))


def load_points(path) -> PointSet | LatticeSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh.read())
