"""Permutation-array constructions.

* :func:`explicit_code` -- the residue-class code ``pi_i = i (mod d)``.
* :func:`first_recursive` -- interleaving ``r`` codewords into an ``(rn, rd)`` PA.
* :func:`phi` / :func:`extend` -- prefix extension ``C[s_1, ..., s_t]``.
* :func:`build_chain_binary` / :func:`build_chain_qary` -- iterated extension
  of a single identity word.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    Permutation,
    PermutationArray,
    as_permutation,
    identity,
    validate_pa,
)
from .errors import InvalidArgumentError, PreconditionError, RangeError, ResourceLimitError

DEFAULT_MAX_WORDS = 10**6


def _check_limit(size: int, max_words: int | None, what: str) -> None:
    if max_words is not None and size > max_words:
        raise ResourceLimitError(
            f"{what} has {size} words, above the materialization limit {max_words}; "
            "use the lazy handle or the codec module instead")


def _unrank_arrangement(k: int, values: Sequence[int]) -> list[int]:
    # k-th arrangement of sorted ``values`` in lexicographic order (factorial base)
    pool = list(values)
    out = []
    for m in range(len(pool), 0, -1):
        f = math.factorial(m - 1)
        idx, k = divmod(k, f)
        out.append(pool.pop(idx))
    return out


def _rank_arrangement(arr: Sequence[int]) -> int:
    pool = sorted(arr)
    k = 0
    for m, v in zip(range(len(arr), 0, -1), arr):
        idx = pool.index(v)
        pool.pop(idx)
        k += idx * math.factorial(m - 1)
    return k


@dataclass(frozen=True)
class ExplicitCode:
    """Lazy handle for ``{pi in S_n : pi_i = i (mod d) for all i}``.

    Codewords are indexed as follows.  Residue class ``c`` (1..d) owns
    positions and values ``c, c+d, c+2d, ...``; the arrangement of the values
    on those positions is indexed lexicographically in the factorial number
    system, and the per-class indices are combined in mixed radix with class
    1 most significant.  ``unrank(0)`` is the identity.
    """

    n: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise InvalidArgumentError(f"need 1 <= d <= n, got n={self.n}, d={self.d}")

    @property
    def a(self) -> int:
        return self.n // self.d

    @property
    def b(self) -> int:
        return self.n % self.d

    def class_values(self, c: int) -> range:
        return range(c, self.n + 1, self.d)

    @property
    def cardinality(self) -> int:
        a, b = self.a, self.b
        return math.factorial(a + 1) ** b * math.factorial(a) ** (self.d - b)

    def __len__(self) -> int:
        return self.cardinality

    def contains(self, p: Sequence[int]) -> bool:
        if len(p) != self.n:
            return False
        try:
            as_permutation(p)
        except InvalidArgumentError:
            return False
        return all((v - i) % self.d == 0 for i, v in enumerate(p, start=1))

    __contains__ = contains

    def unrank(self, k: int) -> Permutation:
        if not 0 <= k < self.cardinality:
            raise RangeError(f"index {k} outside [0, {self.cardinality})")
        word = [0] * self.n
        digits = []
        for c in range(self.d, 0, -1):  # least significant class first
            radix = math.factorial(len(self.class_values(c)))
            k, digit = divmod(k, radix)
            digits.append((c, digit))
        for c, digit in digits:
            vals = self.class_values(c)
            for pos, v in zip(vals, _unrank_arrangement(digit, vals)):
                word[pos - 1] = v
        return tuple(word)

    def rank(self, p: Sequence[int]) -> int:
        if not self.contains(p):
            raise InvalidArgumentError(f"{tuple(p)} is not a codeword")
        k = 0
        for c in range(1, self.d + 1):
            vals = self.class_values(c)
            k = k * math.factorial(len(vals)) + _rank_arrangement([p[pos - 1] for pos in vals])
        return k

    def enumerate(self, max_words: int | None = DEFAULT_MAX_WORDS) -> Iterator[Permutation]:
        """Iterate all codewords in index order (refused above ``max_words``)."""
        _check_limit(self.cardinality, max_words, "explicit code")
        classes = [self.class_values(c) for c in range(1, self.d + 1)]
        for combo in itertools.product(*(itertools.permutations(v) for v in classes)):
            word = [0] * self.n
            for vals, arrangement in zip(classes, combo):
                for pos, v in zip(vals, arrangement):
                    word[pos - 1] = v
            yield tuple(word)

    def materialize(self, max_words: int | None = DEFAULT_MAX_WORDS) -> PermutationArray:
        return PermutationArray(self.n, self.d, tuple(self.enumerate(max_words)))


def explicit_code(n: int, d: int) -> ExplicitCode:
    return ExplicitCode(n, d)


@dataclass(frozen=True)
class DecodeResult:
    word: tuple[int, ...]
    is_permutation: bool
    radius: int  # guaranteed per-coordinate correction radius


def explicit_decode(n: int, d: int, received: Sequence[int]) -> DecodeResult:
    """Per-coordinate nearest-residue decoding for :class:`ExplicitCode`.

    Each coordinate ``y`` at position ``i`` is moved to the nearest integer
    congruent to ``i`` mod ``d``.  Errors of magnitude up to ``(d-1)//2`` are
    corrected.  For even ``d`` an error of exactly ``d/2`` is ambiguous and is
    resolved by rounding upwards.  The output need not be a permutation when
    the noise exceeds the radius; check ``is_permutation``.
    """
    if not 1 <= d <= n:
        raise InvalidArgumentError(f"need 1 <= d <= n, got n={n}, d={d}")
    if len(received) != n:
        raise InvalidArgumentError(f"received word has length {len(received)}, expected {n}")
    lo = -((d - 1) // 2)
    out = []
    for i, y in enumerate(received, start=1):
        a = (i - int(y) - lo) % d + lo
        out.append(int(y) + a)
    word = tuple(out)
    ok = sorted(word) == list(range(1, n + 1))
    return DecodeResult(word, ok, (d - 1) // 2)


def first_recursive(c: PermutationArray, r: int,
                    max_words: int | None = DEFAULT_MAX_WORDS) -> PermutationArray:
    """Interleave ordered ``r``-tuples of codewords into an ``(rn, rd)`` PA of size ``|c|**r``.

    The tuple ``(p0, ..., p_{r-1})`` maps to the concatenation of
    ``r*p_j - j`` for ``j = 0..r-1``.
    """
    if r < 2:
        raise InvalidArgumentError("r must be >= 2")
    report = validate_pa(c, max_reported=1)
    if not report.valid or len(c) == 0:
        raise InvalidArgumentError(f"input is not a valid PA: {report if len(c) else 'empty'}")
    _check_limit(len(c) ** r, max_words, "first recursive construction")
    words = []
    for combo in itertools.product(c.words, repeat=r):
        words.append(tuple(r * v - j for j, p in enumerate(combo) for v in p))
    return PermutationArray(r * c.n, r * c.d, tuple(words))


def phi(p: Sequence[int], m: int) -> Permutation:
    """Prepend ``m`` and shift every value ``>= m`` up by one.

    >>> phi((1, 3, 2), 2)
    (2, 1, 4, 3)
    """
    n = len(p)
    if not 1 <= m <= n + 1:
        raise InvalidArgumentError(f"m={m} outside [1, {n + 1}]")
    return (m,) + tuple(v if v < m else v + 1 for v in p)


def extend(c: PermutationArray, s: Sequence[int], mode: str | None = None) -> PermutationArray:
    """Return ``C[s_1, ..., s_t] = {phi(p, s_j)}``, ordered by ``j`` then by word.

    ``mode="tc21"`` requires ``s_{j+1} - s_j >= d`` and keeps distance ``d``.
    ``mode="tc22"`` raises the distance to ``d + 1`` for a single extension
    point: ``s == [d + 1]`` with ``n <= 2d``, or ``s == [d]`` with ``n < 2d``.
    (``s == [d]`` fails at ``n == 2d``: a value ``d`` is shifted along with
    the values above it, e.g. ``{(1,2),(2,1)}`` with ``d = 1``.)  With
    ``mode=None`` the stronger applicable statement is used.
    """
    s = [int(v) for v in s]
    n, d = c.n, c.d
    if not s:
        raise InvalidArgumentError("s must be non-empty")
    if any(not 1 <= v <= n + 1 for v in s):
        raise InvalidArgumentError(f"s must lie in [1, {n + 1}]")
    if any(b <= a for a, b in zip(s, s[1:])):
        raise InvalidArgumentError("s must be strictly increasing")
    tc21_ok = all(b - a >= d for a, b in zip(s, s[1:]))
    tc22_ok = (s == [d + 1] and n <= 2 * d) or (s == [d] and n < 2 * d)
    if mode is None:
        mode = "tc22" if tc22_ok else "tc21"
    if mode == "tc22":
        if not tc22_ok:
            raise PreconditionError(
                f"tc22 (single-point extension to an (n+1, d+1) PA) needs s == [d+1] with n <= 2d "
                f"or s == [d] with n < 2d; got s={s}, n={n}, d={d}")
        new_d = d + 1
    elif mode == "tc21":
        if not tc21_ok:
            raise PreconditionError(
                f"tc21 (C[s] is an (n+1, d) PA) needs s_(j+1) - s_j >= d={d}; got s={s}")
        new_d = d
    else:
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    words = tuple(phi(p, m) for m in s for p in c.words)
    return PermutationArray(n + 1, new_d, words)


@dataclass(frozen=True)
class ChainCode:
    n: int
    d: int
    q: int
    words: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    def as_pa(self) -> PermutationArray:
        return PermutationArray(self.n, self.d, self.words)


def chain_branches(nu: int, q: int) -> list[int]:
    """Extension points used when growing the chain code from length ``nu`` to ``nu + 1``."""
    step = nu // (q - 1)
    return [(j - 1) * step + 1 for j in range(1, q)] + [nu + 1]


def build_chain_qary(n: int, d: int, q: int,
                     max_words: int | None = DEFAULT_MAX_WORDS) -> ChainCode:
    """Grow ``{identity((q-1) d)}`` by ``C[s_1, ..., s_q]`` up to length ``n``.

    Size is ``q ** (n - (q-1) d)`` and the minimum distance is at least ``d``.
    """
    if q < 2:
        raise InvalidArgumentError("q must be >= 2")
    if d < 1:
        raise InvalidArgumentError("d must be >= 1")
    start = (q - 1) * d
    if n < start:
        raise InvalidArgumentError(f"need n >= (q-1)d = {start}, got n={n}")
    _check_limit(q ** (n - start), max_words, "chain code")
    pa = PermutationArray(start, d, (identity(start),))
    for nu in range(start, n):
        pa = extend(pa, chain_branches(nu, q), mode="tc21")
    return ChainCode(n, d, q, pa.words)


def build_chain_binary(n: int, d: int, max_words: int | None = DEFAULT_MAX_WORDS) -> ChainCode:
    """Binary chain code: ``C_{nu+1} = C_nu[1, nu+1]`` from ``C_d = {identity(d)}``."""
    return build_chain_qary(n, d, 2, max_words=max_words)
