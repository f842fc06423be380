"""Ball sizes and bounds on the largest permutation array.

``ball_size(n, d)`` counts permutations within Chebyshev distance ``d`` of
the identity, which is the permanent of the 0-1 band matrix with ones where
``|i - j| <= d``.  It is computed by a profile dynamic program over the
``2d + 1`` columns a row may use.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import threading
import warnings
from dataclasses import asdict, dataclass
from pathlib import Path

from .constructions import ExplicitCode
from .errors import InvalidArgumentError, PreconditionError, ResourceLimitError

DEFAULT_MAX_BAND = 14


class BallCache:
    """Thread-safe map ``(n, d) -> V(n, d)``, optionally backed by an append-only file.

    Each file line is ``n d value``.  Malformed lines are rejected with a
    warning and never used.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self._values: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self):
        with open(self.path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                try:
                    n, d, value = (int(p) for p in parts)
                    if n < 1 or d < 0 or value < 1:
                        raise ValueError
                except ValueError:
                    warnings.warn(f"{self.path}:{lineno}: rejected corrupt cache line {line!r}")
                    continue
                self._values[(n, d)] = value

    def get(self, n: int, d: int) -> int | None:
        return self._values.get((n, d))

    def put(self, n: int, d: int, value: int) -> None:
        with self._lock:
            if (n, d) in self._values:
                return
            self._values[(n, d)] = value
            if self.path is not None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a") as fh:
                    fh.write(f"{n} {d} {value}\n")

    def items(self):
        return sorted(self._values.items())

    def __len__(self):
        return len(self._values)


_default_cache = BallCache()


def _band_permanent(n: int, d: int) -> int:
    # bit k of a state marks column (i - d + k) as used before row i;
    # columns left of the matrix start out marked
    width = 2 * d + 1
    states = {(1 << d) - 1: 1}
    for i in range(n):
        nxt: dict[int, int] = {}
        lo = max(0, d - i)
        hi = min(width, n - i + d)
        for mask, count in states.items():
            for k in range(lo, hi):
                if mask >> k & 1:
                    continue
                new = mask | (1 << k)
                if not new & 1:
                    continue  # column i - d can never be filled later
                key = new >> 1
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    return sum(states.values())


def ball_size(n: int, d: int, cache: BallCache | None = None,
              max_band: int = DEFAULT_MAX_BAND) -> int:
    """Exact ``V(n, d)``, the permanent of the ``n x n`` band matrix of half-width ``d``."""
    if n < 1 or d < 0:
        raise InvalidArgumentError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if d >= n - 1:
        return math.factorial(n)
    cache = _default_cache if cache is None else cache
    hit = cache.get(n, d)
    if hit is not None:
        return hit
    if d > max_band:
        raise ResourceLimitError(f"band half-width d={d} exceeds max_band={max_band}")
    value = _band_permanent(n, d)
    cache.put(n, d, value)
    return value


def gilbert_lower(n: int, d: int, cache: BallCache | None = None) -> int:
    """``ceil(n! / V(n, d-1))``, valid for ``n > d >= 2``."""
    if not n > d >= 2:
        raise InvalidArgumentError(f"Gilbert bound needs n > d >= 2, got n={n}, d={d}")
    return -(-math.factorial(n) // ball_size(n, d - 1, cache))


def _hamming_preconditions(n: int, d: int, r: int) -> str | None:
    if r < 0:
        return "shift r must be >= 0"
    if not n > d >= 1:
        return f"Hamming bound needs n > d >= 1, got n={n}, d={d}"
    if r == 1 and not (d % 2 == 0 and d >= 2 and 2 * d >= n):
        return f"Hbound2 (r=1) needs d even and 2d >= n > d >= 2, got n={n}, d={d}"
    if r >= 2 and not (d >= 2 and 2 * d >= n):
        return f"shifted Hamming bound (r={r}) needs 2d >= n > d >= 2, got n={n}, d={d}"
    return None


def hamming_upper(n: int, d: int, r: int | None = 0, cache: BallCache | None = None) -> int:
    """``floor((n+r)! / V(n+r, floor((d+r-1)/2)))``.

    ``r = 0`` is the sphere-packing bound; ``r >= 1`` first lifts ``(n, d)`` to
    ``(n+r, d+r)``, which needs ``2d >= n``.  ``r = None`` returns the minimum
    over ``r in {0, 1}`` of the cases whose preconditions hold.
    """
    if r is None:
        vals = [hamming_upper(n, d, rr, cache) for rr in (0, 1)
                if _hamming_preconditions(n, d, rr) is None]
        if not vals:
            raise PreconditionError(_hamming_preconditions(n, d, 0))
        return min(vals)
    problem = _hamming_preconditions(n, d, r)
    if problem:
        raise PreconditionError(problem)
    m = n + r
    return math.factorial(m) // ball_size(m, (d + r - 1) // 2, cache)


def best_hamming(n: int, d: int, cache: BallCache | None = None) -> tuple[int, str]:
    """Best of the r=0 and r=1 Hamming bounds with its provenance tag."""
    best = None
    for r in (0, 1):
        if _hamming_preconditions(n, d, r) is None:
            v = hamming_upper(n, d, r, cache)
            if best is None or v < best[0]:
                best = (v, f"hamming-r{r}")
    if best is None:
        raise PreconditionError(_hamming_preconditions(n, d, 0))
    return best


def vupper_bound(n: int, d: int) -> float:
    """``[(2d+1)!]^(n/(2d+1))``, an upper bound on ``V(n, d)``."""
    if n < 1 or d < 0:
        raise InvalidArgumentError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    w = 2 * d + 1
    return math.exp(n / w * math.lgamma(w + 1))


def corollary_lower(n: int, d: int) -> float:
    """``n! / [(2d-1)!]^(n/(2d-1))``."""
    if not n > d >= 1:
        raise InvalidArgumentError(f"need n > d >= 1, got n={n}, d={d}")
    w = 2 * d - 1
    return math.exp(math.lgamma(n + 1) - n / w * math.lgamma(w + 1))


@dataclass
class MuEstimate:
    d: int
    n_max: int
    estimate: float
    ratios: list[float]

    @property
    def last_change(self) -> float:
        """Absolute change between the last two ratios, a convergence diagnostic."""
        return abs(self.ratios[-1] - self.ratios[-2]) if len(self.ratios) > 1 else math.inf


def mu_estimate(d: int, n_max: int, cache: BallCache | None = None,
                max_band: int = DEFAULT_MAX_BAND) -> MuEstimate:
    """Estimate the growth rate ``lim V(n, d)^(1/n)`` by ``V(n_max, d) / V(n_max - 1, d)``."""
    if d < 1:
        raise InvalidArgumentError("d must be >= 1")
    if n_max < 2:
        raise InvalidArgumentError("n_max must be >= 2")
    if d > max_band:
        raise ResourceLimitError(f"band half-width d={d} exceeds max_band={max_band}")
    vals = [ball_size(n, d, cache, max_band) for n in range(1, n_max + 1)]
    ratios = [vals[i] / vals[i - 1] for i in range(1, len(vals))]
    return MuEstimate(d, n_max, ratios[-1], ratios)


@dataclass
class BoundRecord:
    n: int
    d: int
    lower: int
    lower_provenance: str
    upper: int
    upper_provenance: str


CSV_FIELDS = ["n", "d", "lower", "lower_provenance", "upper", "upper_provenance"]


def best_known_lower(n_max: int, d_max: int,
                     registered: dict[tuple[int, int], tuple[int, str]] | None = None,
                     cache: BallCache | None = None) -> dict[tuple[int, int], BoundRecord]:
    """Propagate lower bounds over the grid ``1 <= d <= min(n, d_max)``, ``n <= n_max``.

    Seeds are the explicit construction, ``P(n,1) = n!``, ``P(n,n) = 1`` and
    any ``registered`` results (``(n, d) -> (value, provenance)``; provenance
    ``exact`` also pins the upper bound).  The rules

    * ``P(n+1, d) >= (n//d + 1) P(n, d)`` for ``n > d`` (tag ``c2b1``),
    * ``P(n+1, d+1) >= P(n, d)`` for ``d < n <= 2d`` (tag ``tr1``),
    * ``P(rn, rd) >= P(n, d)^r`` for ``n > d``, ``r >= 2`` (tag ``first-recursive``)

    are applied in ascending ``(n, d)`` order until nothing improves.
    """
    if n_max < 1 or d_max < 1:
        raise InvalidArgumentError("grid limits must be positive")
    registered = registered or {}
    cells = [(n, d) for n in range(1, n_max + 1) for d in range(1, min(n, d_max) + 1)]
    lower: dict[tuple[int, int], tuple[int, str]] = {}
    for n, d in cells:
        if d == 1:
            lower[(n, d)] = (math.factorial(n), "exact")
        elif d == n:
            lower[(n, d)] = (1, "exact")
        else:
            lower[(n, d)] = (ExplicitCode(n, d).cardinality, "explicit")
    for key, (value, tag) in sorted(registered.items()):
        if key in lower and (value > lower[key][0] or tag == "exact"):
            lower[key] = (max(value, lower[key][0]), tag)

    def improve(key, value, tag):
        if key in lower and value > lower[key][0]:
            lower[key] = (value, tag)
            return True
        return False

    changed = True
    while changed:
        changed = False
        for n, d in cells:
            v = lower[(n, d)][0]
            if n > d:
                changed |= improve((n + 1, d), (n // d + 1) * v, "c2b1")
                r = 2
                while r * n <= n_max:
                    changed |= improve((r * n, r * d), v ** r, "first-recursive")
                    r += 1
            if d < n <= 2 * d:
                changed |= improve((n + 1, d + 1), v, "tr1")

    table = {}
    for n, d in cells:
        lo, lo_tag = lower[(n, d)]
        if d == 1:
            up, up_tag = math.factorial(n), "exact"
        elif d == n:
            up, up_tag = 1, "exact"
        else:
            up, up_tag = best_hamming(n, d, cache)
        reg = registered.get((n, d))
        if reg is not None and reg[1] == "exact":
            up, up_tag = reg[0], "exact"
        table[(n, d)] = BoundRecord(n, d, lo, lo_tag, up, up_tag)
    return table


def table_to_csv(table: dict[tuple[int, int], BoundRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for key in sorted(table):
        writer.writerow(asdict(table[key]))
    return buf.getvalue()


def table_from_csv(text: str) -> dict[tuple[int, int], BoundRecord]:
    table = {}
    for row in csv.DictReader(io.StringIO(text)):
        rec = BoundRecord(int(row["n"]), int(row["d"]), int(row["lower"]),
                          row["lower_provenance"], int(row["upper"]), row["upper_provenance"])
        table[(rec.n, rec.d)] = rec
    return table


def table_to_json(table: dict[tuple[int, int], BoundRecord]) -> str:
    # counts are emitted as decimal strings so arbitrary precision survives any reader
    rows = []
    for key in sorted(table):
        row = asdict(table[key])
        row["lower"] = str(row["lower"])
        row["upper"] = str(row["upper"])
        rows.append(row)
    return json.dumps({"schema": "chebypa.bounds/1", "rows": rows}, indent=2)


def table_from_json(text: str) -> dict[tuple[int, int], BoundRecord]:
    doc = json.loads(text)
    table = {}
    for row in doc["rows"]:
        rec = BoundRecord(int(row["n"]), int(row["d"]), int(row["lower"]),
                          row["lower_provenance"], int(row["upper"]), row["upper_provenance"])
        table[(rec.n, rec.d)] = rec
    return table


class Registry:
    """Search results registered as lower bounds, stored as ``n d value provenance`` lines."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.entries: dict[tuple[int, int], tuple[int, str]] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            with open(self.path) as fh:
                for lineno, line in enumerate(fh, start=1):
                    parts = line.split()
                    if not parts or parts[0].startswith("#"):
                        continue
                    try:
                        n, d, value = int(parts[0]), int(parts[1]), int(parts[2])
                        tag = parts[3]
                        if len(parts) != 4:
                            raise ValueError
                    except (ValueError, IndexError):
                        warnings.warn(f"{self.path}:{lineno}: rejected corrupt registry line {line.strip()!r}")
                        continue
                    self._merge(n, d, value, tag)

    def _merge(self, n, d, value, tag):
        old = self.entries.get((n, d))
        if old is None or value > old[0] or (tag == "exact" and old[1] != "exact"):
            self.entries[(n, d)] = (value, tag)

    def register(self, n: int, d: int, value: int, provenance: str) -> None:
        with self._lock:
            self._merge(n, d, value, provenance)
            if self.path is not None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a") as fh:
                    fh.write(f"{n} {d} {value} {provenance}\n")
