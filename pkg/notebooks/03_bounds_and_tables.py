"""
Ball sizes, growth rates and the bounds table
=============================================

The number of permutations within distance d of a fixed one is the
permanent of a 0-1 band matrix.  A sliding-window dynamic program gets it
exactly for large n.
"""

# %%
from chebypa import ball_size

for n in range(1, 13):
    print(n, [ball_size(n, d) for d in range(1, 4)])

# %%
# For d = 1 the ball sizes are Fibonacci numbers.
print([ball_size(n, 1) for n in range(1, 15)])

# %%
# The ratio V(n, d) / V(n-1, d) settles quickly; its limit is the growth rate
# of the ball and feeds the asymptotic rate bounds.
from chebypa import mu_estimate

for d in range(1, 6):
    est = mu_estimate(d, 40)
    print(f"d={d}: {est.estimate:.6f}  (last change {est.last_change:.2e})")

# %%
# Sphere-covering and sphere-packing give lower and upper bounds on the
# largest code.
from chebypa import gilbert_lower, hamming_upper

n, d = 11, 6
print("covering lower bound:", gilbert_lower(n, d))
print("packing upper bound, plain balls:", hamming_upper(n, d, r=0))
print("packing upper bound, refined:", hamming_upper(n, d, r=1))

# %%
# Known lower bounds propagate across the (n, d) grid: one more position can
# multiply the size, and a length-and-distance step keeps it.  Registered
# search results seed the propagation.
from chebypa import best_known_lower, table_to_csv

seeds = {(7, 2): (582, "greedy"), (7, 4): (28, "greedy")}
table = best_known_lower(10, 7, seeds)
for key in [(7, 2), (8, 2), (7, 4), (8, 5), (10, 7)]:
    rec = table[key]
    print(key, rec.lower, rec.lower_provenance, "<=", rec.upper, rec.upper_provenance)

print(table_to_csv({k: v for k, v in table.items() if k[0] == 8}))
