"""Direct encoding of message vectors into chain-code permutations, and decoding.

The binary routines follow the two-branch scan: at position ``i`` the
codeword holds either ``t + 1`` (digit 0) or ``n - i + t + 1`` (digit 1),
where ``t`` counts the zeros seen so far.

The q-ary routines replay the recursive construction top-down.  A word of
length ``nu + 1`` is ``phi(w, s_j)``, i.e. its first value is ``s_j`` and the
rest is ``w`` relabelled order-preservingly onto the remaining values.
Hence position ``i`` receives the ``s_j``-th smallest value not yet used,
with ``s_j`` taken from :func:`~chebypa.constructions.chain_branches` at
``nu = n - i``.
"""

from __future__ import annotations

from typing import Sequence

from .constructions import chain_branches
from .core import Permutation
from .errors import InvalidArgumentError


def message_length(n: int, d: int, q: int = 2) -> int:
    return n - (q - 1) * d


def _check_params(n: int, d: int, q: int) -> int:
    if q < 2:
        raise InvalidArgumentError("q must be >= 2")
    if d < 1:
        raise InvalidArgumentError("d must be >= 1")
    k = message_length(n, d, q)
    if k < 0:
        raise InvalidArgumentError(f"need n >= (q-1)d, got n={n}, d={d}, q={q}")
    return k


def _check_message(x: Sequence[int], k: int, q: int) -> list[int]:
    digits = [int(v) for v in x]
    if len(digits) != k:
        raise InvalidArgumentError(f"message has length {len(digits)}, expected {k}")
    if any(not 0 <= v < q for v in digits):
        raise InvalidArgumentError(f"message digits must lie in [0, {q - 1}]")
    return digits


def encode_binary(x: Sequence[int], n: int, d: int) -> Permutation:
    """Map a binary vector of length ``n - d`` to a codeword of the binary chain code.

    >>> encode_binary((1, 0), 5, 3)
    (5, 1, 2, 3, 4)
    """
    k = _check_params(n, d, 2)
    digits = _check_message(x, k, 2) + [0] * d
    t = 0
    out = []
    for i, xi in enumerate(digits, start=1):
        if xi == 0:
            out.append(t + 1)
            t += 1
        else:
            out.append(n - i + t + 1)
    return tuple(out)


def decode_binary(y: Sequence[int], n: int, d: int) -> tuple[int, ...]:
    """Threshold decoder for :func:`encode_binary`.

    Position ``i <= n - d`` decodes to 0 iff ``y_i < (n - i)/2 + t + 1``.
    Correct whenever ``|e_i| < (n - i)/2`` for every ``i <= n - d``; positions
    past ``n - d`` are never read.
    """
    k = _check_params(n, d, 2)
    if len(y) != n:
        raise InvalidArgumentError(f"received word has length {len(y)}, expected {n}")
    t = 0
    out = []
    for i in range(1, k + 1):
        # 2*y < (n - i) + 2t + 2, kept in integers
        if 2 * int(y[i - 1]) < n - i + 2 * t + 2:
            out.append(0)
            t += 1
        else:
            out.append(1)
    return tuple(out)


def encode_qary(x: Sequence[int], n: int, d: int, q: int) -> Permutation:
    """Map a q-ary vector of length ``n - (q-1) d`` into the q-ary chain code."""
    k = _check_params(n, d, q)
    digits = _check_message(x, k, q)
    remaining = list(range(1, n + 1))
    out = []
    for i, xi in enumerate(digits, start=1):
        s = chain_branches(n - i, q)[xi]
        out.append(remaining.pop(s - 1))
    out.extend(remaining)
    return tuple(out)


def decode_qary(y: Sequence[int], n: int, d: int, q: int) -> tuple[int, ...]:
    """Sequential nearest-candidate decoder for :func:`encode_qary`.

    At each step the candidates are the values each branch would place at
    this position; the nearest one to ``y_i`` wins, ties going to the smaller
    candidate.  Corrects every error pattern with ``|e_i| <= (d-1)/2``.
    """
    k = _check_params(n, d, q)
    if len(y) != n:
        raise InvalidArgumentError(f"received word has length {len(y)}, expected {n}")
    remaining = list(range(1, n + 1))
    out = []
    for i in range(1, k + 1):
        yi = int(y[i - 1])
        branches = chain_branches(n - i, q)
        cands = [remaining[s - 1] for s in branches]
        j = min(range(q), key=lambda j: (abs(cands[j] - yi), cands[j]))
        out.append(j)
        remaining.pop(branches[j] - 1)
    return tuple(out)
