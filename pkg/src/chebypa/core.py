"""Permutations, the Chebyshev metric and permutation-array validation.

Permutations are plain tuples of 1-based integers.  Composition follows the
left-to-right convention ``compose(p, s)[i] = s[p[i]]`` (apply ``p`` first,
then ``s``); with it the metric satisfies
``chebyshev_distance(identity(n), s) == chebyshev_distance(p, compose(p, s))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgumentError

Permutation = tuple[int, ...]

# pairwise distance blocks are bounded to about this many int elements
_BLOCK_ELEMS = 1 << 22


def is_permutation(values: Sequence[int]) -> bool:
    n = len(values)
    return n >= 1 and sorted(values) == list(range(1, n + 1))


def as_permutation(values: Iterable[int]) -> Permutation:
    """Return ``values`` as a tuple, raising if it is not a permutation of [n]."""
    p = tuple(int(v) for v in values)
    if not is_permutation(p):
        raise InvalidArgumentError(f"not a permutation of [1..{len(p)}]: {p}")
    return p


def identity(n: int) -> Permutation:
    if n < 1:
        raise InvalidArgumentError("n must be >= 1")
    return tuple(range(1, n + 1))


def compose(p: Sequence[int], s: Sequence[int]) -> Permutation:
    """Product ``p s`` with ``p`` applied first: ``result[i] = s[p[i]]``."""
    if len(p) != len(s):
        raise InvalidArgumentError("length mismatch")
    return tuple(s[v - 1] for v in p)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def chebyshev_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Return ``max_j |a_j - b_j|``.

    >>> chebyshev_distance((1, 4, 2, 3), (2, 3, 4, 1))
    2
    """
    if len(a) != len(b):
        raise InvalidArgumentError(f"length mismatch: {len(a)} != {len(b)}")
    return max((abs(x - y) for x, y in zip(a, b)), default=0)


def _as_array(words: Sequence[Sequence[int]]) -> np.ndarray:
    arr = np.asarray(words, dtype=np.int64)
    if arr.ndim != 2:
        raise InvalidArgumentError("words must all have the same length")
    return arr


def distances_to(words: np.ndarray, w: Sequence[int]) -> np.ndarray:
    """Chebyshev distance from every row of ``words`` to ``w``."""
    return np.abs(words - np.asarray(w, dtype=words.dtype)).max(axis=1)


def min_distance(words: Sequence[Sequence[int]]) -> int:
    """Minimum pairwise Chebyshev distance of a list of at least two words."""
    if len(words) < 2:
        raise InvalidArgumentError("min_distance needs at least two words")
    arr = _as_array(words)
    m, n = arr.shape
    best = None
    step = max(1, _BLOCK_ELEMS // max(1, m * n))
    for start in range(0, m - 1, step):
        block = arr[start:start + step]
        # rows i of block against rows j > i overall
        diff = np.abs(block[:, None, :] - arr[None, :, :]).max(axis=2)
        rows = np.arange(start, start + len(block))[:, None]
        cols = np.arange(m)[None, :]
        masked = np.where(cols > rows, diff, np.iinfo(np.int64).max)
        cur = int(masked.min())
        best = cur if best is None else min(best, cur)
    return best


@dataclass(frozen=True)
class PermutationArray:
    """An ordered list of length-``n`` permutations with a claimed minimum distance ``d``.

    Construction does not validate; use :func:`validate_pa`.
    """

    n: int
    d: int
    words: tuple[Permutation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(tuple(int(v) for v in w) for w in self.words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.words)

    def min_distance(self) -> int | None:
        """Actual minimum distance, or ``None`` for fewer than two words."""
        return min_distance(self.words) if len(self.words) >= 2 else None

    def dumps(self) -> str:
        return format_pa(self)


@dataclass
class ValidationReport:
    non_permutations: list[int] = field(default_factory=list)
    duplicates: list[tuple[int, int]] = field(default_factory=list)
    close_pairs: list[tuple[int, int, int]] = field(default_factory=list)
    wrong_length: list[int] = field(default_factory=list)
    max_reported: int = 100

    @property
    def valid(self) -> bool:
        return not (self.non_permutations or self.duplicates or self.close_pairs or self.wrong_length)

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.wrong_length:
            parts.append(f"wrong length: words {self.wrong_length}")
        if self.non_permutations:
            parts.append(f"not a permutation: words {self.non_permutations}")
        if self.duplicates:
            parts.append(f"duplicate words: {self.duplicates}")
        if self.close_pairs:
            parts.append("pairs below distance: " + ", ".join(
                f"({i},{j}) at distance {dist}" for i, j, dist in self.close_pairs))
        return "invalid: " + "; ".join(parts)


def validate_pa(pa: PermutationArray, max_reported: int = 100) -> ValidationReport:
    """Check every PA invariant and report each violation found.

    Word indices in the report are 0-based positions in ``pa.words``.  At most
    ``max_reported`` close pairs are listed.
    """
    report = ValidationReport(max_reported=max_reported)
    good = []
    for idx, w in enumerate(pa.words):
        if len(w) != pa.n:
            report.wrong_length.append(idx)
        elif not is_permutation(w):
            report.non_permutations.append(idx)
        else:
            good.append(idx)
    seen: dict[Permutation, int] = {}
    for idx in good:
        w = pa.words[idx]
        if w in seen:
            report.duplicates.append((seen[w], idx))
        else:
            seen[w] = idx
    if len(good) < 2:
        return report
    arr = _as_array([pa.words[i] for i in good])
    m = len(good)
    step = max(1, _BLOCK_ELEMS // max(1, m * pa.n))
    for start in range(0, m, step):
        block = arr[start:start + step]
        diff = np.abs(block[:, None, :] - arr[None, :, :]).max(axis=2)
        ii, jj = np.nonzero(diff < pa.d)
        for a, b in zip(ii.tolist(), jj.tolist()):
            i, j = start + a, b
            if j <= i or diff[a, b] == 0:
                continue  # duplicates are reported separately
            if len(report.close_pairs) < max_reported:
                report.close_pairs.append((good[i], good[j], int(diff[a, b])))
    return report


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(str(v) for v in p)


def parse_permutation(text: str) -> Permutation:
    try:
        return as_permutation(int(t) for t in text.strip().split(","))
    except ValueError as exc:
        if isinstance(exc, InvalidArgumentError):
            raise
        raise InvalidArgumentError(f"cannot parse permutation {text!r}") from exc


def parse_int_list(text: str) -> list[int]:
    """Parse comma-separated integers (received words may not be permutations)."""
    try:
        return [int(t) for t in text.strip().split(",") if t.strip() != ""]
    except ValueError as exc:
        raise InvalidArgumentError(f"cannot parse integer list {text!r}") from exc


def format_pa(pa: PermutationArray) -> str:
    lines = [f"n={pa.n} d={pa.d} size={len(pa.words)}"]
    lines.extend(format_permutation(w) for w in pa.words)
    return "\n".join(lines) + "\n"


def parse_pa(text: str) -> PermutationArray:
    """Inverse of :func:`format_pa`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidArgumentError("empty PA text")
    header = {}
    for tok in lines[0].split():
        key, sep, val = tok.partition("=")
        if not sep:
            raise InvalidArgumentError(f"bad PA header {lines[0]!r}")
        header[key] = val
    try:
        n, d, size = int(header["n"]), int(header["d"]), int(header["size"])
    except (KeyError, ValueError) as exc:
        raise InvalidArgumentError(f"bad PA header {lines[0]!r}") from exc
    words = tuple(tuple(parse_int_list(ln)) for ln in lines[1:])
    if len(words) != size:
        raise InvalidArgumentError(f"header says size={size} but {len(words)} words follow")
    return PermutationArray(n, d, words)
