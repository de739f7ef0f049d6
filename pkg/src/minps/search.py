"""Exhaustive extremal oracles on small grids and lattices.

Targets:
  max_minps            largest minimal percolating set (exact on small grids)
  max_corner_avoiding  largest corner-avoiding MinPS (0 when none exists)
  min_percolating      smallest percolating set, 2D grids or [n]^d lattices

Candidates are enumerated in cardinality blocks: descending with a cutoff
for the maximization targets (the first block with a hit settles the value),
ascending for min_percolating.  Within a block, subsets are visited in
lexicographic order of their cell tuples, reduced to one canonical
representative per symmetry orbit, and screened by a cheap local test
before any closure is computed: a set in which some seed has two or more
seed neighbours re-infects that seed after deleting it, so it can never be
minimal (and never beats a smaller percolating set).

Subsets are dense bitmasks; the percolation test is a shift-and-or sweep on
those masks, entirely independent of the BFS engine in ``percolate`` (the
two are cross-checked in the tests).

Every block is split into partitions by first cell, each with a
deterministic share of the node budget, so results and node counts do not
depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, EngineError
from .grid import GridDims, LatticeDims, LatticeSet, Point, PointSet
from .percolate import _lattice_close
from .verify import corner_cells

DEFAULT_MAX_NODES = 200_000_000


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_time: float | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.workers < 1:
            raise DomainError("budget fields must be positive")
        if self.max_time is not None and self.max_time <= 0:
            raise DomainError("budget fields must be positive")


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: PointSet | LatticeSet
    exhaustive: bool
    nodes: int
    elapsed: float


class _Tables:
    """Per-dims bitboard constants and symmetry permutations."""

    def __init__(self, m: int, n: int):
        self.m, self.n = m, n
        cells = m * n
        self.cells = cells
        self.full = (1 << cells) - 1
        self.bit = [1 << i for i in range(cells)]
        # Cell index is (x-1)*n + (y-1); y+1 is bit i+1, x+1 is bit i+n.
        col = (1 << n) - 1
        rep_top = col >> 1          # rows 1..n-1 of one column
        rep_bot = col ^ 1           # rows 2..n of one column
        self.not_top = sum(rep_top << (x * n) for x in range(m))
        self.not_bot = sum(rep_bot << (x * n) for x in range(m))
        self.transforms = _symmetry_perms(m, n)
        if m >= 2 and n >= 2:
            idx = [(p.x - 1) * n + (p.y - 1) for p in corner_cells(GridDims(m, n))]
            self.corner_mask = sum(1 << i for i in idx)
            corner_set = frozenset(idx)
            self.corner_transforms = tuple(
                perm for perm in self.transforms
                if frozenset(perm[i] for i in corner_set) == corner_set
            )
        else:
            self.corner_mask = 0
            self.corner_transforms = ()


def _symmetry_perms(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    maps = [
        lambda x, y: (m + 1 - x, y),
        lambda x, y: (x, n + 1 - y),
        lambda x, y: (m + 1 - x, n + 1 - y),
    ]
    if m == n:
        maps += [
            lambda x, y: (y, x),
            lambda x, y: (n + 1 - y, n + 1 - x),
            lambda x, y: (y, n + 1 - x),
            lambda x, y: (n + 1 - y, x),
        ]
    perms = set()
    identity = tuple(range(m * n))
    for f in maps:
        perm = [0] * (m * n)
        for x in range(1, m + 1):
            for y in range(1, n + 1):
                fx, fy = f(x, y)
                perm[(x - 1) * n + (y - 1)] = (fx - 1) * n + (fy - 1)
        perm = tuple(perm)
        if perm != identity:
            perms.add(perm)
    return tuple(sorted(perms))


@lru_cache(maxsize=32)
def _tables(m: int, n: int) -> _Tables:
    return _Tables(m, n)


def _closure_mask(t: _Tables, mask: int) -> int:
    full, n, not_top, not_bot = t.full, t.n, t.not_top, t.not_bot
    while True:
        up = (mask & not_top) << 1
        down = (mask & not_bot) >> 1
        right = (mask << n) & full
        left = mask >> n
        grown = mask | (up & down) | (left & right) | ((up | down) & (left | right))
        if grown == mask:
            return mask
        mask = grown


def _percolates_mask(t: _Tables, mask: int) -> bool:
    full, n, not_top, not_bot = t.full, t.n, t.not_top, t.not_bot
    while True:
        up = (mask & not_top) << 1
        down = (mask & not_bot) >> 1
        right = (mask << n) & full
        left = mask >> n
        grown = mask | (up & down) | (left & right) | ((up | down) & (left | right))
        if grown == full:
            return True
        if grown == mask:
            return False
        mask = grown


def _has_redundant_seed(t: _Tables, mask: int) -> bool:
    # A seed with >= 2 seed neighbours is re-infected after its own deletion.
    n, full = t.n, t.full
    up = (mask & t.not_top) << 1
    down = (mask & t.not_bot) >> 1
    right = (mask << n) & full
    left = mask >> n
    two = (up & down) | (left & right) | ((up | down) & (left | right))
    return bool(mask & two)


def _is_canonical(cand: tuple[int, ...], transforms) -> bool:
    ref = list(cand)
    for perm in transforms:
        if sorted(perm[i] for i in cand) < ref:
            return False
    return True


def _scan_partition(args) -> tuple[tuple[int, ...] | None, int, bool]:
    """Scan one (block, first-cell) partition; returns (hit, nodes, truncated)."""
    m, n, s, first, mode, node_cap, deadline, symmetry, pruning = args
    t = _tables(m, n)
    bit = t.bit
    transforms = t.corner_transforms if mode == "corner" else t.transforms
    base = bit[first]
    nodes = 0
    for rest in combinations(range(first + 1, t.cells), s - 1):
        if nodes >= node_cap:
            return None, nodes, True
        nodes += 1
        if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
            return None, nodes, True
        mask = base
        for i in rest:
            mask |= bit[i]
        if pruning and _has_redundant_seed(t, mask):
            continue
        if mode == "perc":
            if symmetry and not _is_canonical((first,) + rest, transforms):
                continue
            if _percolates_mask(t, mask):
                return (first,) + rest, nodes, False
            continue
        if not _percolates_mask(t, mask):
            continue
        if symmetry and not _is_canonical((first,) + rest, transforms):
            continue
        cand = (first,) + rest
        if mode == "minps":
            if any(_percolates_mask(t, mask ^ bit[i]) for i in cand):
                continue
            return cand, nodes, False
        # mode == "corner"
        ok = True
        for i in cand:
            cl = _closure_mask(t, mask ^ bit[i])
            if cl == t.full or cl & t.corner_mask:
                ok = False
                break
        if ok:
            return cand, nodes, False
    return None, nodes, False


def _run_block(m, n, s, mode, node_cap, deadline, symmetry, pruning, pool):
    """Scan a whole cardinality block. Partition budgets are fixed up front,
    so the outcome is identical for any worker count."""
    cells = m * n
    parts = list(range(0, cells - s + 1))
    base_cap, extra = divmod(node_cap, len(parts))
    arglist = [
        (m, n, s, first, mode, base_cap + (1 if i < extra else 0),
         deadline, symmetry, pruning)
        for i, first in enumerate(parts)
    ]
    if pool is not None and len(parts) > 1:
        results = list(pool.map(_scan_partition, arglist))
    else:
        results = [_scan_partition(a) for a in arglist]
    hit = None
    nodes = 0
    truncated = False
    for h, used, trunc in results:
        nodes += used
        truncated = truncated or trunc
        if hit is None and h is not None:
            hit = h
    return hit, nodes, truncated


def _witness_2d(dims: GridDims, cand: tuple[int, ...]) -> PointSet:
    n = dims.n
    return PointSet(dims, frozenset(Point(i // n + 1, i % n + 1) for i in cand))


def _drive(dims: GridDims, mode: str, sizes, budget: SearchBudget,
           symmetry: bool, pruning: bool) -> SearchResult:
    start = time.monotonic()
    deadline = None if budget.max_time is None else start + budget.max_time
    pool = None
    total_nodes = 0
    truncated = False
    try:
        if budget.workers > 1:
            pool = ProcessPoolExecutor(max_workers=budget.workers)
        for s in sizes:
            remaining = budget.max_nodes - total_nodes
            if remaining <= 0 or (deadline is not None and time.monotonic() > deadline):
                truncated = True
                break
            hit, nodes, trunc = _run_block(
                dims.m, dims.n, s, mode, remaining, deadline,
                symmetry, pruning, pool,
            )
            total_nodes += nodes
            truncated = truncated or trunc
            if hit is not None:
                return SearchResult(
                    value=s,
                    witness=_witness_2d(dims, hit),
                    exhaustive=not truncated,
                    nodes=total_nodes,
                    elapsed=time.monotonic() - start,
                )
        return SearchResult(
            value=0,
            witness=PointSet(dims, frozenset()),
            exhaustive=not truncated,
            nodes=total_nodes,
            elapsed=time.monotonic() - start,
        )
    finally:
        if pool is not None:
            pool.shutdown()


def max_minps(dims: GridDims, budget: SearchBudget | None = None, *,
              symmetry: bool = True, pruning: bool = True) -> SearchResult:
    """Exact maximum size of a MinPS, with a lexicographically-least canonical
    witness.  With an exhausted budget the value is a lower bound and
    ``exhaustive`` is False."""
    budget = budget or SearchBudget()
    sizes = range(dims.cells, 0, -1)
    return _drive(dims, "minps", sizes, budget, symmetry, pruning)


def max_corner_avoiding(dims: GridDims, budget: SearchBudget | None = None, *,
                        symmetry: bool = True, pruning: bool = True) -> SearchResult:
    """Exact maximum size of a corner-avoiding MinPS; value 0 with an empty
    witness when no such set exists.  Symmetry reduction uses only the
    transforms that preserve the pair of protected corners."""
    if dims.m < 2 or dims.n < 2:
        raise DomainError(f"corner-avoiding search needs at least 2x2, got {dims}")
    budget = budget or SearchBudget()
    sizes = range(dims.cells, 0, -1)
    return _drive(dims, "corner", sizes, budget, symmetry, pruning)


def _scan_lattice_partition(args):
    side, d, r, s, first, node_cap = args
    cells = side ** d
    nodes = 0
    for rest in combinations(range(first + 1, cells), s - 1):
        if nodes >= node_cap:
            return None, nodes, True
        nodes += 1
        cand = (first,) + rest
        _, count = _lattice_close(side, d, r, cand)
        if count == cells:
            return cand, nodes, False
    return None, nodes, False


def min_percolating(dims: GridDims | LatticeDims, budget: SearchBudget | None = None,
                    *, r: int = 2) -> SearchResult:
    """Smallest percolating set: 2D grids with the standard rule, or a
    [side]^d lattice with threshold ``r``.  Lattice searches run serially;
    ``budget.workers`` applies to 2D grids only."""
    budget = budget or SearchBudget()
    if isinstance(dims, GridDims):
        if r != 2:
            raise DomainError("2D grid search supports the 2-neighbour rule only")
        sizes = range(1, dims.cells + 1)
        return _drive(dims, "perc", sizes, budget, symmetry=True, pruning=True)

    side, d = dims.side, dims.dim
    cells = dims.cells
    start = time.monotonic()
    total_nodes = 0
    truncated = False
    for s in range(1, cells + 1):
        remaining = budget.max_nodes - total_nodes
        if remaining <= 0:
            truncated = True
            break
        parts = list(range(0, cells - s + 1))
        base_cap, extra = divmod(remaining, len(parts))
        hit = None
        for i, first in enumerate(parts):
            h, used, trunc = _scan_lattice_partition(
                (side, d, r, s, first, base_cap + (1 if i < extra else 0))
            )
            total_nodes += used
            truncated = truncated or trunc
            if hit is None and h is not None:
                hit = h
        if hit is not None:
            pts = []
            for i in hit:
                coords = []
                j = i
                for _ in range(d):
                    coords.append(j % side + 1)
                    j //= side
                pts.append(tuple(coords))
            return SearchResult(
                value=s,
                witness=LatticeSet(dims, frozenset(pts)),
                exhaustive=not truncated,
                nodes=total_nodes,
                elapsed=time.monotonic() - start,
            )
        if budget.max_time is not None and time.monotonic() - start > budget.max_time:
            truncated = True
            break
    return SearchResult(0, LatticeSet(dims, frozenset()), not truncated,
                        total_nodes, time.monotonic() - start)


def monotonicity_table(max_m: int, max_n: int,
                       budget: SearchBudget | None = None) -> dict[tuple[int, int], int]:
    """Exact max-MinPS sizes for every grid up to max_m x max_n.

    Asserts that the table is monotone in both coordinates and that every
    entry with min(m, n) >= 2 respects the (m+2)(n+2)/6 upper bound; raises
    EngineError on any violation (1-row and 1-column grids are exempt from
    the bound and genuinely exceed it).
    """
    table: dict[tuple[int, int], int] = {}
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            res = max_minps(GridDims(m, n), budget)
            if not res.exhaustive:
                raise EngineError(f"budget exhausted on {m}x{n}; table would be inexact")
            table[(m, n)] = res.value
    for (m, n), v in table.items():
        if m > 1 and table[(m - 1, n)] > v:
            raise EngineError(f"monotonicity violated at {m}x{n}")
        if n > 1 and table[(m, n - 1)] > v:
            raise EngineError(f"monotonicity violated at {m}x{n}")
        if min(m, n) >= 2 and 6 * v > (m + 2) * (n + 2):
            raise EngineError(f"upper bound violated at {m}x{n}: {v}")
    return table
