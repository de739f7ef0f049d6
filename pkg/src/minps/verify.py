"""Certification of the defining properties, with counterexample witnesses.

A set is a minimal percolating set (MinPS) iff it percolates and no single
deletion still percolates; by monotonicity of the closure, checking single
deletions suffices.  A MinPS is corner-avoiding iff every single deletion
also leaves both 2x2 corner rectangles (top-left and bottom-right)
completely uninfected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .grid import GridDims, Point, PointSet, Rect
from .percolate import _close, _index, _seed_indices

OK = "ok"
NOT_PERCOLATING = "not-percolating"
REDUNDANT_POINT = "redundant-point"
CORNER_REACHED = "corner-reached"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Point | None
    detail: str

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Corners:
    """The two protected corner rectangles of a grid."""

    jl: Rect
    jr: Rect


def corners(dims: GridDims) -> Corners:
    m, n = dims
    if m < 2 or n < 2:
        raise DomainError(f"corners need at least a 2x2 grid, got {dims}")
    return Corners(
        jl=Rect(Point(1, n - 1), Point(2, n)),
        jr=Rect(Point(m - 1, 1), Point(m, 2)),
    )


def corner_cells(dims: GridDims) -> frozenset[Point]:
    c = corners(dims)
    return frozenset(c.jl.cells()) | frozenset(c.jr.cells())


def is_minps(ps: PointSet) -> Verdict:
    """Certify that ``ps`` is a minimal percolating set.

    On failure the verdict carries the first witness in lexicographic point
    order: None for a set that does not percolate at all, or the point whose
    deletion still percolates.
    """
    m, n = ps.dims
    cells = m * n
    seeds = sorted(_seed_indices(ps))
    _, count, _ = _close(m, n, seeds)
    if count != cells:
        return Verdict(False, None, NOT_PERCOLATING)
    for i in range(len(seeds)):
        _, count, _ = _close(m, n, seeds[:i] + seeds[i + 1:])
        if count == cells:
            idx = seeds[i]
            return Verdict(False, Point(idx // n + 1, idx % n + 1), REDUNDANT_POINT)
    return Verdict(True, None, OK)


def is_corner_avoiding_minps(ps: PointSet) -> Verdict:
    """Certify minimality plus corner avoidance in one pass over deletions."""
    m, n = ps.dims
    corner_idx = [_index(p, n) for p in sorted(corner_cells(ps.dims))]
    cells = m * n
    seeds = sorted(_seed_indices(ps))
    _, count, _ = _close(m, n, seeds)
    if count != cells:
        return Verdict(False, None, NOT_PERCOLATING)
    for i in range(len(seeds)):
        flags, count, _ = _close(m, n, seeds[:i] + seeds[i + 1:])
        idx = seeds[i]
        witness = Point(idx // n + 1, idx % n + 1)
        if count == cells:
            return Verdict(False, witness, REDUNDANT_POINT)
        if any(flags[c] for c in corner_idx):
            return Verdict(False, witness, CORNER_REACHED)
    return Verdict(True, None, OK)
