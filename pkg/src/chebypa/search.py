"""Greedy lexicographic search and an exact maximum-PA oracle.

``greedy_lex`` walks ``S_n`` in lexicographic order and keeps a permutation
iff it is at distance ``>= d`` from everything kept so far.  Rather than
testing each candidate against the whole code, every accepted word marks its
radius-``(d-1)`` ball as unavailable in a bitmap indexed by lexicographic
rank; the next codeword is then the first unmarked rank.  The two procedures
select exactly the same words.

``exact_max_pa`` solves maximum clique on the graph joining permutations at
distance ``>= d``.  The metric is invariant under reordering positions, which
acts transitively on ``S_n``, so some maximum code contains the identity and
the search runs only on the identity's neighbourhood.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numba
import numpy as np

from .core import Permutation, PermutationArray, identity
from .errors import InvalidArgumentError, ResourceLimitError

# n = 10 already means scanning 10! permutations; larger runs must be asked for
GREEDY_MAX_N = 9
EXACT_MAX_N = 6


@dataclass(frozen=True)
class SearchResult:
    n: int
    d: int
    size: int
    words: PermutationArray
    method: str
    elapsed: float
    permutations_scanned: int


def lex_rank(perms: np.ndarray) -> np.ndarray:
    """Lexicographic rank (0-based) of each row of an ``(m, n)`` array of 1-based permutations."""
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    # Lehmer digit at i: number of later entries smaller than perms[:, i]
    smaller = (perms[:, None, :] < perms[:, :, None])
    later = np.triu(np.ones((n, n), dtype=bool), k=1)
    lehmer = (smaller & later[None, :, :]).sum(axis=2)
    weights = np.array([math.factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
    return lehmer @ weights


def lex_unrank(k: int, n: int) -> Permutation:
    pool = list(range(1, n + 1))
    out = []
    for m in range(n, 0, -1):
        idx, k = divmod(k, math.factorial(m - 1))
        out.append(pool.pop(idx))
    return tuple(out)


def ball_members(n: int, radius: int) -> np.ndarray:
    """All permutations ``s`` with ``|s_i - i| <= radius``, as an ``(V, n)`` array."""
    out: list[tuple[int, ...]] = []
    used = [False] * (n + 2)
    cur: list[int] = []

    def rec(i: int):
        if i > n:
            out.append(tuple(cur))
            return
        # value i - radius must be placed by position i at the latest
        low = i - radius
        if low >= 1 and not used[low]:
            cands = [low]
        else:
            cands = range(max(1, low), min(n, i + radius) + 1)
        for v in cands:
            if not used[v]:
                used[v] = True
                cur.append(v)
                rec(i + 1)
                cur.pop()
                used[v] = False

    rec(1)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def greedy_lex(n: int, d: int, max_n: int = GREEDY_MAX_N) -> SearchResult:
    """Lexicographic greedy ``(n, d)`` PA starting from the identity.

    Memory is one byte per element of ``S_n``; ``max_n`` guards against
    accidental huge runs (raise it explicitly for ``n >= 10``).
    """
    if not n > d >= 1:
        raise InvalidArgumentError(f"greedy search needs n > d >= 1, got n={n}, d={d}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the greedy scan guard max_n={max_n}")
    start = time.perf_counter()
    total = math.factorial(n)
    free = np.ones(total, dtype=bool)
    ball = ball_members(n, d - 1) - 1  # 0-based value maps
    chosen: list[Permutation] = []
    pos = 0
    while pos < total:
        offset = int(np.argmax(free[pos:]))
        if not free[pos + offset]:
            break
        pos += offset
        word = lex_unrank(pos, n)
        chosen.append(word)
        # members of the ball around ``word`` are s[word - 1] for s in the identity's ball
        neighbours = ball[:, np.asarray(word) - 1] + 1
        free[lex_rank(neighbours)] = False
        pos += 1
    elapsed = time.perf_counter() - start
    return SearchResult(n, d, len(chosen), PermutationArray(n, d, tuple(chosen)),
                        "greedy", elapsed, total)


@numba.njit(cache=True, inline="always")
def _lowest_bit(x):
    # index of the lowest set bit of a non-zero uint64
    i = 0
    if (x & np.uint64(0xFFFFFFFF)) == 0:
        x >>= np.uint64(32); i += 32
    if (x & np.uint64(0xFFFF)) == 0:
        x >>= np.uint64(16); i += 16
    if (x & np.uint64(0xFF)) == 0:
        x >>= np.uint64(8); i += 8
    if (x & np.uint64(0xF)) == 0:
        x >>= np.uint64(4); i += 4
    if (x & np.uint64(0x3)) == 0:
        x >>= np.uint64(2); i += 2
    if (x & np.uint64(0x1)) == 0:
        i += 1
    return i


@numba.njit(cache=True)
def _colour_sort(cand, adj, verts, cols):
    nw = cand.shape[0]
    unc = cand.copy()
    q = np.empty(nw, dtype=np.uint64)
    count = 0
    colour = 0
    while True:
        empty = True
        for w in range(nw):
            if unc[w] != 0:
                empty = False
                break
        if empty:
            break
        colour += 1
        for w in range(nw):
            q[w] = unc[w]
        for w in range(nw):
            while q[w] != 0:
                b = _lowest_bit(q[w])
                v = w * 64 + b
                bit = np.uint64(1) << np.uint64(b)
                q[w] &= ~bit
                unc[w] &= ~bit
                for u in range(w, nw):
                    q[u] &= ~adj[v, u]
                verts[count] = v
                cols[count] = colour
                count += 1
    return count


@numba.njit(cache=True)
def _max_clique_bitset(adj, m):
    nw = adj.shape[1]
    cand = np.zeros((m + 1, nw), dtype=np.uint64)
    verts = np.zeros((m + 1, m), dtype=np.int64)
    cols = np.zeros((m + 1, m), dtype=np.int64)
    idx = np.zeros(m + 1, dtype=np.int64)
    cur = np.zeros(m + 1, dtype=np.int64)
    best = np.zeros(m + 1, dtype=np.int64)
    best_len = 0
    for v in range(m):
        cand[0, v // 64] |= np.uint64(1) << np.uint64(v % 64)
    idx[0] = _colour_sort(cand[0], adj, verts[0], cols[0]) - 1
    depth = 0
    while depth >= 0:
        i = idx[depth]
        if i < 0 or depth + cols[depth, i] <= best_len:
            depth -= 1
            if depth >= 0:
                v = cur[depth]
                cand[depth, v // 64] &= ~(np.uint64(1) << np.uint64(v % 64))
                idx[depth] -= 1
            continue
        v = verts[depth, i]
        cur[depth] = v
        nonempty = False
        for w in range(nw):
            cand[depth + 1, w] = cand[depth, w] & adj[v, w]
            if cand[depth + 1, w] != 0:
                nonempty = True
        if nonempty:
            depth += 1
            idx[depth] = _colour_sort(cand[depth], adj, verts[depth], cols[depth]) - 1
        else:
            if depth + 1 > best_len:
                best_len = depth + 1
                for k in range(best_len):
                    best[k] = cur[k]
            cand[depth, v // 64] &= ~(np.uint64(1) << np.uint64(v % 64))
            idx[depth] -= 1
    return best[:best_len].copy()


def exact_max_pa(n: int, d: int, max_n: int = EXACT_MAX_N) -> SearchResult:
    """Largest ``(n, d)`` PA by maximum clique search; the witness is not canonical."""
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the exact search guard max_n={max_n}")
    start = time.perf_counter()
    ident = identity(n)
    perms = np.array(list(_lex_perms(n)), dtype=np.int64)
    far = np.abs(perms - np.asarray(ident)).max(axis=1) >= d
    verts = perms[far]
    m = len(verts)
    clique = _max_clique_bitset(_adjacency_bits(verts, d), m) if m else []
    words = (ident,) + tuple(tuple(int(v) for v in verts[i]) for i in sorted(clique))
    elapsed = time.perf_counter() - start
    return SearchResult(n, d, len(words), PermutationArray(n, d, words), "exact",
                        elapsed, math.factorial(n))


def _adjacency_bits(verts: np.ndarray, d: int) -> np.ndarray:
    m = len(verts)
    nw = (m + 63) // 64
    adj = np.zeros((m, nw * 64), dtype=bool)
    for i in range(m):
        adj[i, :m] = np.abs(verts - verts[i]).max(axis=1) >= d
    # little-endian bit packing into uint64 words
    packed = np.packbits(adj, axis=1, bitorder="little")
    return packed.view("<u8").astype(np.uint64).reshape(m, nw)


def _lex_perms(n: int):
    return itertools.permutations(range(1, n + 1))
