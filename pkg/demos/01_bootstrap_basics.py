"""A first tour of 2-neighbour bootstrap percolation on a finite grid.

A cell becomes infected once at least two of its four neighbours are
infected, and never recovers.  The closure of a seed set is everything
that is eventually infected.
"""

from minps import (
    GridDims,
    PointSet,
    RenderOptions,
    closure,
    closure_rects,
    percolates,
    render,
)

dims = GridDims(9, 6)

# Two diagonal points fill their bounding box...
pair = PointSet(dims, frozenset({(2, 2), (3, 3)}))
print("diagonal pair, seeds marked '#', closure marked '+':")
print(render(pair, RenderOptions(show_closure=True)))
print()

# ...and far-apart pieces stay separate: a closure is always a disjoint
# union of fully infected rectangles at taxicab distance >= 3.
scattered = PointSet(dims, frozenset({(1, 1), (2, 2), (6, 5), (7, 4), (9, 1)}))
cl = closure(scattered)
print(f"scattered seeds: {len(scattered)} points, closure has {len(cl.infected)} cells,")
print(f"reached in {cl.generations} rounds, decomposing into:")
for rect in closure_rects(scattered).rects:
    print(f"  rectangle {tuple(rect.lo)}..{tuple(rect.hi)} of size {rect.size}")
print()

# A diagonal across a square is the classic smallest percolating set.
square = GridDims(6, 6)
diagonal = PointSet(square, frozenset((i, i) for i in range(1, 7)))
print(f"6x6 diagonal percolates: {percolates(diagonal)}")
print(render(diagonal, RenderOptions(show_closure=True)))
