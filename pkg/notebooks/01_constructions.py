"""
Building permutation arrays under the Chebyshev metric
======================================================

Run with ``python notebooks/01_constructions.py``.  Cells are separated by
``# %%`` markers so editors that understand the percent format can step
through them.
"""

# %%
# Two permutations are far apart when some symbol moved a lot.  The distance
# is the largest displacement over all positions.
from chebypa import chebyshev_distance, compose, identity

p, s = (2, 3, 1, 4), (4, 3, 2, 1)
print("d(p, s) =", chebyshev_distance(p, s))
# reading both words in the same shuffled position order leaves the distance alone
r = (3, 1, 4, 2)
print("d(r p, r s) =", chebyshev_distance(compose(r, p), compose(r, s)))
# and the distance from p to p followed by s is the displacement of s itself
print("d(p, p s) =", chebyshev_distance(p, compose(p, s)), "= d(id, s) =",
      chebyshev_distance(identity(4), s))

# %%
# The residue code: each position may only hold values from its own residue
# class modulo d.  Any two such words differ by a multiple of d somewhere.
from chebypa import explicit_code

code = explicit_code(6, 2)
print("size of the (6,2) residue code:", code.cardinality)
words = code.materialize()
print("first few words:", words.words[:4])
print("minimum distance:", words.min_distance())

# Its size is a product of factorials, so it never needs to be listed.
big = explicit_code(30, 2)
print(f"|C(30,2)| = {big.cardinality:.4e}, about 2^{big.cardinality.bit_length() - 1}")
print("the 10^20-th word:", big.unrank(10**20))

# %%
# Decoding a noisy read of a residue codeword: every symbol is pulled back to
# the nearest value of the right class.
from chebypa import explicit_decode

sent = explicit_code(9, 3).unrank(123)
noisy = tuple(v + e for v, e in zip(sent, (1, 0, -1, 0, 1, 1, -1, 0, 0)))
print(sent, "->", noisy, "->", explicit_decode(9, 3, noisy).word)

# %%
# Interleaving r copies of a code multiplies both length and distance by r.
from chebypa import first_recursive

small = explicit_code(3, 2).materialize()
tripled = first_recursive(small, 3)
print(f"{len(small)} words at (3,2) -> {len(tripled)} words at ({tripled.n},{tripled.d})")

# %%
# Prepending a new symbol and shifting the old ones grows a code by one
# position.  Spacing the new symbols d apart keeps the distance; a single
# new symbol placed just above d raises it by one.
from chebypa import extend, validate_pa

longer = extend(small, [1, 3])
print("spaced extension:", longer.n, longer.d, len(longer), validate_pa(longer))
raised = extend(small, [3])
print("distance-raising extension:", raised.n, raised.d, len(raised), validate_pa(raised))

# %%
# Chain codes: one binary (or q-ary) choice per position, which is what the
# rank-modulation codec encodes.
from chebypa import build_chain_binary, build_chain_qary

print("binary chain (8,3):", build_chain_binary(8, 3).size, "words")
print("ternary chain (10,2):", build_chain_qary(10, 2, 3).size, "words")
