"""
Rank-modulation style encoding of digit strings
===============================================

A message of ``n - d`` bits (or base-q digits) becomes a permutation of
length ``n``.  The decoder reads one position at a time and tolerates large
drifts in the early positions.
"""

# %%
from chebypa import decode_binary, encode_binary, message_length

n, d = 12, 3
k = message_length(n, d)
msg = (1, 0, 1, 1, 0, 0, 1, 0, 1)
assert len(msg) == k
word = encode_binary(msg, n, d)
print("message:", msg)
print("codeword:", word)
print("decoded:", decode_binary(word, n, d))

# %%
# Errors strictly below (n - i)/2 at position i are always corrected.
tolerance = [(n - i - 1) // 2 for i in range(1, k + 1)]
print("tolerated drift per position:", tolerance)
noisy = [w + e for w, e in zip(word, tolerance)] + list(word[k:])
print("worst-case upward drift decodes to", decode_binary(noisy, n, d))
noisy = [w - e for w, e in zip(word, tolerance)] + list(word[k:])
print("worst-case downward drift decodes to", decode_binary(noisy, n, d))

# %%
# Every pair of codewords is at distance at least d.
import itertools

from chebypa import min_distance

words = [encode_binary(x, n, d) for x in itertools.product((0, 1), repeat=k)]
print(len(words), "codewords, minimum distance", min_distance(words))

# %%
# Base-q digits: the decoder picks the nearest allowed value at each step.
from chebypa import decode_qary, encode_qary

n, d, q = 10, 2, 3
k = message_length(n, d, q)
msg = tuple(range(k))[::-1]
msg = tuple(m % q for m in msg)
word = encode_qary(msg, n, d, q)
noisy = tuple(w + (1 if i % 2 else -1) * ((d - 1) // 2) for i, w in enumerate(word))
print(msg, "->", word, "->", decode_qary(noisy, n, d, q))
