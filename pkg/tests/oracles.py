"""Independent reference computations used only by the tests.

Nothing here shares code with the package paths under test.
"""

import itertools
import math


def perms(n):
    return itertools.permutations(range(1, n + 1))


def dist(a, b):
    return max(abs(x - y) for x, y in zip(a, b))


def brute_ball(n, d):
    """Count permutations of [n] within distance d of the identity by enumeration."""
    return sum(1 for p in perms(n) if all(abs(v - i) <= d for i, v in enumerate(p, start=1)))


def ryser_permanent(matrix):
    """Exact permanent via Ryser's inclusion-exclusion formula."""
    n = len(matrix)
    total = 0
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = 1
        for row in matrix:
            s = sum(row[j] for j in cols)
            prod *= s
            if prod == 0:
                break
        total += (-1) ** len(cols) * prod
    return (-1) ** n * total


def band_matrix(n, d):
    return [[1 if abs(i - j) <= d else 0 for j in range(n)] for i in range(n)]


def naive_greedy(n, d):
    chosen = []
    for p in perms(n):
        if all(dist(p, c) >= d for c in chosen):
            chosen.append(p)
    return chosen


def deepening_max_pa(n, d):
    """Largest (n, d) PA by iterative deepening over index-ordered subsets (n <= 4)."""
    words = list(perms(n))
    m = len(words)
    ok = [[dist(words[i], words[j]) >= d for j in range(m)] for i in range(m)]

    def exists(k, chosen, start):
        if len(chosen) == k:
            return True
        for j in range(start, m - (k - len(chosen)) + 1):
            if all(ok[c][j] for c in chosen):
                chosen.append(j)
                if exists(k, chosen, j + 1):
                    return True
                chosen.pop()
        return False

    k = 1
    while exists(k + 1, [], 0):
        k += 1
    return k


def residue_members(n, d):
    return [p for p in perms(n) if all((v - i) % d == 0 for i, v in enumerate(p, start=1))]


def explicit_formula(n, d):
    a, b = divmod(n, d)
    return math.factorial(a + 1) ** b * math.factorial(a) ** (d - b)


def min_pairwise(words):
    return min(dist(u, v) for i, u in enumerate(words) for v in words[i + 1:])
