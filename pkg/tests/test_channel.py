import itertools

import numpy as np
import pytest

from chebypa.channel import ChannelConfig, SimStats, iter_trials, quantize, simulate
from chebypa.errors import InvalidArgumentError


@pytest.mark.parametrize("codec, n, d, q", [("binary", 10, 3, 2), ("qary", 9, 2, 3), ("explicit", 9, 3, 2)])
def test_noiseless(codec, n, d, q):
    stats = simulate(codec, n, d, ChannelConfig(0.0, 200, seed=3), q=q)
    assert stats.symbol_errors_pre_decode == 0
    assert stats.block_decode_failures == 0
    assert stats.message_digit_errors == 0


def test_same_seed_same_json():
    cfg = ChannelConfig(0.8, 500, seed=42)
    assert simulate("binary", 12, 3, cfg).to_json() == simulate("binary", 12, 3, cfg).to_json()
    other = simulate("binary", 12, 3, ChannelConfig(0.8, 500, seed=43))
    assert other.to_json() != simulate("binary", 12, 3, cfg).to_json()


def test_trial_streams_independent_of_count():
    short = list(iter_trials("binary", 12, 3, ChannelConfig(1.0, 20, seed=9)))
    long = list(iter_trials("binary", 12, 3, ChannelConfig(1.0, 50, seed=9)))
    assert long[:20] == short


def test_clipped_explicit_never_fails():
    stats = simulate("explicit", 12, 5, ChannelConfig(2.0, 2000, seed=1, clipped=True))
    assert stats.symbol_errors_pre_decode > 0
    assert stats.block_decode_failures == 0


def test_clipped_qary_never_fails():
    stats = simulate("qary", 10, 3, ChannelConfig(2.0, 1000, seed=2, clipped=True), q=3)
    assert stats.symbol_errors_pre_decode > 0
    assert stats.block_decode_failures == 0


def test_error_rate_grows_with_sigma():
    sigmas = (0.2, 0.5, 1.0, 2.0)
    means = []
    for sigma in sigmas:
        rates = [simulate("binary", 10, 3, ChannelConfig(sigma, 200, seed=s)).digit_error_rate
                 for s in range(20)]
        means.append(float(np.mean(rates)))
    assert means == sorted(means)
    assert means[-1] > means[0]


def test_quantize_half_away_from_zero():
    x = np.array([-2.5, -1.5, -0.5, -0.4, 0.0, 0.4, 0.5, 1.5, 2.5])
    assert quantize(x).tolist() == [-3, -2, -1, 0, 0, 0, 1, 2, 3]


def test_stats_json_round_trip():
    stats = simulate("qary", 8, 2, ChannelConfig(0.7, 100, seed=5), q=3)
    back = SimStats.from_json(stats.to_json())
    assert back == stats
    for rate in (stats.symbol_error_rate, stats.block_failure_rate, stats.digit_error_rate):
        assert 0.0 <= rate <= 1.0
    assert stats.message_digit_errors <= stats.trials * stats.message_length


def test_invalid():
    with pytest.raises(InvalidArgumentError):
        ChannelConfig(-1.0, 10)
    with pytest.raises(InvalidArgumentError):
        ChannelConfig(1.0, 0)
    with pytest.raises(InvalidArgumentError):
        simulate("turbo", 5, 2, ChannelConfig(1.0, 10))
    with pytest.raises(InvalidArgumentError):
        simulate("binary", 3, 3, ChannelConfig(1.0, 10))
