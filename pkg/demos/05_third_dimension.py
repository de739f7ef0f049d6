"""The 2-neighbour process in a cube.

lattice_closure runs the r-neighbour rule on [n]^d.  The package builds a
certified minimal percolating set of [n]^3 from a corner-avoiding square
in the bottom plane plus a climb with one seed every two planes: a seed
two planes above a fully infected slab first infects the cell directly
below itself and then floods both planes, so the whole cube fills, while
any deletion leaves pieces too far apart to interact.
"""

from minps import (
    LatticeDims,
    LatticeSet,
    lattice_closure,
    lattice_minps,
    lattice_percolates,
)

# Three points percolate the 2x2x2 cube, matching the general minimum
# ceil((n-1)d/2) + 1.
cube2 = LatticeSet(LatticeDims(2, 3), frozenset({(1, 1, 1), (2, 2, 1), (1, 2, 2)}))
print(f"[2]^3 from 3 seeds: closure has {len(lattice_closure(cube2, r=2))} of 8 cells")

# With threshold 1 any single point floods everything.
spark = LatticeSet(LatticeDims(4, 3), frozenset({(2, 2, 2)}))
print(f"[4]^3 with r=1 from one seed: percolates = {lattice_percolates(spark, r=1)}")
print()

built = lattice_minps(8, 3)  # certifies percolation + minimality internally
pts = sorted(built.points.points)
by_plane = {}
for x, y, z in pts:
    by_plane.setdefault(z, []).append((x, y))
print(f"certified minimal percolating set of [8]^3: {len(built)} points "
      f"(density {len(built) / 512:.4f}):")
for z in sorted(by_plane):
    print(f"  plane z={z}: {by_plane[z]}")
