"""Minimal percolating sets and the corner-avoiding strengthening.

A set is a minimal percolating set (MinPS) when it percolates but every
single deletion stops percolating.  Corner-avoiding MinPS are stricter:
after any deletion, the infection must not even reach the 2x2 top-left or
bottom-right corner rectangles.  That headroom is what lets two such sets
be glued into a bigger one later.
"""

from minps import (
    corner_avoiding_strip,
    is_corner_avoiding_minps,
    is_minps,
    render,
    simple_minps,
)

# The easy construction: marks along the bottom row and left column.
easy = simple_minps(6, 6)
print("the simple L-shaped MinPS on 6x6:")
print(render(easy.points))
print("verdict:", is_minps(easy.points))
print("corner-avoiding?", is_corner_avoiding_minps(easy.points))
print()

# It is minimal but not corner-avoiding: deleting (1,2) leaves an infected
# column that still touches the top-left corner area.

# The 8-column strip family is corner-avoiding: two ladders bridged by four
# single points, 4k+4 points on an 8 x (3k+2) grid.
for k in (1, 3):
    strip = corner_avoiding_strip(k)
    print(f"strip with k={k} ladder rungs per column, {len(strip)} points on {strip.dims}:")
    print(render(strip.points))
    verdict = is_corner_avoiding_minps(strip.points)
    print(f"corner-avoiding MinPS: {verdict.holds}")
    print()
