"""
Greedy and exact searches for small codes
=========================================

The greedy scan walks S_n in lexicographic order and keeps every
permutation that is far enough from all kept ones.  The exact search is a
maximum clique over the distance graph, small n only.
"""

# %%
from chebypa import gilbert_lower, greedy_lex

res = greedy_lex(3, 2)
print(res.size, res.words.words)

# %%
for d in (2, 3, 4):
    sizes = {n: greedy_lex(n, d).size for n in range(d + 1, 9)}
    print(f"d={d}:", sizes)

res = greedy_lex(8, 3)
print(f"(8,3): {res.size} words after scanning {res.permutations_scanned} "
      f"permutations in {res.elapsed:.2f}s; covering bound {gilbert_lower(8, 3)}")

# %%
# The exact search uses vertex transitivity: some maximum code contains the
# identity, so only its far neighbours need to be searched.
from chebypa import exact_max_pa, hamming_upper

for n, d in [(4, 3), (5, 3), (5, 4), (6, 4), (6, 5)]:
    ex = exact_max_pa(n, d)
    print(f"P({n},{d}) = {ex.size}  (greedy {greedy_lex(n, d).size}, "
          f"packing bound {hamming_upper(n, d, None)}, {ex.elapsed:.2f}s)")

# %%
# A maximum (5,3) code.
print(exact_max_pa(5, 3).words.dumps())
