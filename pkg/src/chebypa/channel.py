"""Monte-Carlo PAM/AWGN channel driving the decoders end to end.

Each symbol value is sent as an amplitude level, i.i.d. zero-mean Gaussian
noise of standard deviation ``sigma`` (in level units) is added, and the
result is rounded to the nearest integer, halves away from zero.

Randomness comes from NumPy's PCG64 generator.  Trial ``k`` uses its own
stream ``SeedSequence(seed, spawn_key=(k,))``, so the outcome of a trial does
not depend on how many trials are run.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .codec import decode_binary, decode_qary, encode_binary, encode_qary, message_length
from .constructions import ExplicitCode, explicit_decode
from .errors import InvalidArgumentError

CODECS = ("binary", "qary", "explicit")


@dataclass(frozen=True)
class ChannelConfig:
    sigma: float
    trials: int
    seed: int = 0
    clipped: bool = False  # bound quantized errors by (d-1)//2

    def __post_init__(self):
        if not self.sigma >= 0:
            raise InvalidArgumentError("sigma must be >= 0")
        if self.trials < 1:
            raise InvalidArgumentError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgumentError("seed must be a 64-bit unsigned value")


@dataclass
class SimStats:
    codec: str
    n: int
    d: int
    q: int
    sigma: float
    seed: int
    clipped: bool
    trials: int
    message_length: int
    symbol_errors_pre_decode: int = 0
    block_decode_failures: int = 0
    message_digit_errors: int = 0

    @property
    def symbol_error_rate(self) -> float:
        return self.symbol_errors_pre_decode / (self.trials * self.n)

    @property
    def block_failure_rate(self) -> float:
        return self.block_decode_failures / self.trials

    @property
    def digit_error_rate(self) -> float:
        return self.message_digit_errors / (self.trials * self.message_length) if self.message_length else 0.0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["symbol_error_rate"] = self.symbol_error_rate
        out["block_failure_rate"] = self.block_failure_rate
        out["digit_error_rate"] = self.digit_error_rate
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SimStats":
        doc = json.loads(text)
        fields = {k: doc[k] for k in cls.__dataclass_fields__}
        return cls(**fields)


def quantize(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer, halves away from zero."""
    return (np.sign(x) * np.floor(np.abs(x) + 0.5)).astype(np.int64)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def _setup(codec: str, n: int, d: int, q: int):
    if codec not in CODECS:
        raise InvalidArgumentError(f"unknown codec {codec!r}; choose from {CODECS}")
    if codec == "binary":
        q = 2
    if codec == "explicit":
        return ExplicitCode(n, d), n, q
    k = message_length(n, d, q)
    if k < 1 or q < 2 or d < 1:
        raise InvalidArgumentError(f"no messages for n={n}, d={d}, q={q}")
    return None, k, q


def iter_trials(codec: str, n: int, d: int, cfg: ChannelConfig, q: int = 2):
    """Yield ``(symbol_errors, digit_errors)`` for each trial in order."""
    code, k, q = _setup(codec, n, d, q)
    clip = (d - 1) // 2
    for trial in range(cfg.trials):
        rng = _trial_rng(cfg.seed, trial)
        if code is not None:
            # cardinalities can exceed 64 bits; draw extra bytes to keep modulo bias negligible
            idx = int.from_bytes(rng.bytes(code.cardinality.bit_length() // 8 + 9), "little")
            message = code.unrank(idx % code.cardinality)
            sent = message
        else:
            message = tuple(int(v) for v in rng.integers(0, q, size=k))
            sent = encode_binary(message, n, d) if codec == "binary" else encode_qary(message, n, d, q)
        sent_arr = np.asarray(sent, dtype=np.int64)
        received = quantize(sent_arr + rng.standard_normal(n) * cfg.sigma)
        if cfg.clipped:
            received = sent_arr + np.clip(received - sent_arr, -clip, clip)
        received = received.tolist()
        if code is not None:
            decoded = explicit_decode(n, d, received).word
        elif codec == "binary":
            decoded = decode_binary(received, n, d)
        else:
            decoded = decode_qary(received, n, d, q)
        yield (sum(a != b for a, b in zip(sent, received)),
               sum(a != b for a, b in zip(message, decoded)))


def simulate(codec: str, n: int, d: int, cfg: ChannelConfig, q: int = 2) -> SimStats:
    """Run ``cfg.trials`` encode/noise/decode rounds and count errors.

    For ``codec="explicit"`` the message is a uniformly random codeword of
    :class:`~chebypa.constructions.ExplicitCode` and its digits are the
    codeword symbols themselves.
    """
    _, k, q = _setup(codec, n, d, q)
    stats = SimStats(codec, n, d, q, float(cfg.sigma), cfg.seed, cfg.clipped, cfg.trials, k)
    for symbol_errors, digit_errors in iter_trials(codec, n, d, cfg, q):
        stats.symbol_errors_pre_decode += symbol_errors
        stats.message_digit_errors += digit_errors
        stats.block_decode_failures += digit_errors > 0
    return stats
