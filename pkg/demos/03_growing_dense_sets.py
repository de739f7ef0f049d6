"""From strips to quadratically dense minimal percolating sets.

Gluing two corner-avoiding sets costs three columns and two connector
points.  Chaining many strips and then repeatedly doubling the result
produces minimal percolating sets whose density on n x n approaches
4/33 = 0.1212..., far above the 2(m+n)/3 of the naive construction.
"""

from minps import (
    chain,
    corner_avoiding_strip,
    dense_minps,
    dense_minps_params,
    double,
    glue,
    size_bounds,
)

s = corner_avoiding_strip(1)
g = glue(s, s)
print(f"one strip: {len(s)} points on {s.dims}")
print(f"glued pair: {len(g)} points on {g.dims} (= 8 + 8 + 2 connectors)")

c = chain(s, 4)
print(f"chain of 4: {len(c)} points on {c.dims}")

d = double(s, 3)
print(f"doubled 3 times: {len(d)} points on {d.dims}")
print()

print("densest certified sets on n x n squares:")
print(f"{'n':>5} {'t':>2} {'copies':>6} {'rungs':>5} {'formula':>8} "
      f"{'built':>6} {'density':>8}")
for n in (33, 66, 132, 264):
    params = dense_minps_params(n, n)
    cs = dense_minps(n, n)
    if params is None:
        print(f"{n:>5}  (degenerate recipe, simple fallback) built={len(cs)}")
        continue
    t, copies, rungs, formula = params
    print(f"{n:>5} {t:>2} {copies:>6} {rungs:>5} {formula:>8} "
          f"{len(cs):>6} {len(cs) / n**2:>8.4f}")
print()
print("target density 4/33 =", 4 / 33)

lower, upper = size_bounds(264, 264)
print(f"\nbounds on the largest MinPS of 264x264: {lower} <= max <= {upper} "
      f"(~{float(upper):.0f})")
