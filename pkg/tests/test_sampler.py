import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from bellwigner import (
    AngleConfig,
    AngleConvention,
    InsufficientMatchesError,
    convergence_study,
    cross_correlation,
    data_bell_margin_3,
    make_rng,
    matched_pairs_estimate,
    sample_dataset,
    sample_pair,
    sample_triple,
    third_correlation,
)

SPIN = AngleConvention.SPIN
CFG = AngleConfig(0.0, math.pi / 3, 2 * math.pi / 3)
ALIGNED = AngleConfig(0.0, 0.0, 0.0)


def test_make_rng_is_reproducible_and_stream_separated():
    a = make_rng(123).random(8)
    b = make_rng(123).random(8)
    c = make_rng(123, stream=1).random(8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    with pytest.raises(ValueError):
        make_rng(-1)
    with pytest.raises(ValueError):
        make_rng(1, stream=-1)


def test_sample_pair_same_setting_always_opposite():
    rng = make_rng(0)
    for _ in range(200):
        x, y = sample_pair(0.0, 0.0, SPIN, rng)
        assert x == -y


def test_sample_pair_opposite_setting_always_equal():
    rng = make_rng(0)
    for _ in range(200):
        x, y = sample_pair(0.0, math.pi, SPIN, rng)
        assert x == y


def test_sample_pair_quarter_cell_frequencies():
    rng = make_rng(7)
    counts = Counter(sample_pair(0.0, math.pi / 2, SPIN, rng) for _ in range(20000))
    for cell in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        assert counts[cell] / 20000 == pytest.approx(0.25, abs=0.02)


def test_sample_triple_aligned_settings_forces_b_equal_bp():
    rng = make_rng(5)
    for _ in range(100):
        t = sample_triple(ALIGNED, rng)
        assert t.b == t.bp == -t.a


def test_sample_dataset_aligned_settings():
    data = sample_dataset(ALIGNED, 1000, make_rng(9))
    assert np.array_equal(data.b, data.bp)
    assert np.array_equal(data.b, -data.a)


def test_sample_dataset_is_deterministic():
    d1 = sample_dataset(CFG, 5000, make_rng(42))
    d2 = sample_dataset(CFG, 5000, make_rng(42))
    assert np.array_equal(d1.a, d2.a)
    assert np.array_equal(d1.b, d2.b)
    assert np.array_equal(d1.bp, d2.bp)


def test_sample_dataset_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        sample_dataset(CFG, 0, make_rng(1))


def test_sample_dataset_marginals_converge():
    n = 200_000
    data = sample_dataset(CFG, n, make_rng(1234))
    assert cross_correlation(data.a, data.b).value == pytest.approx(-0.5, abs=0.012)
    assert cross_correlation(data.a, data.bp).value == pytest.approx(0.5, abs=0.012)
    c3 = cross_correlation(data.b, data.bp).value
    assert c3 == pytest.approx(third_correlation(CFG), abs=0.012)
    ppp_hat = np.mean((data.b == 1) & (data.bp == 1))
    assert ppp_hat == pytest.approx(3 / 16, abs=0.005)


@settings(max_examples=30)
@given(
    seed=st.integers(0, 2**32 - 1),
    n=st.integers(1, 200),
    a=st.floats(0, 2 * math.pi, exclude_max=True, allow_nan=False),
    b=st.floats(0, 2 * math.pi, exclude_max=True, allow_nan=False),
    bp=st.floats(0, 2 * math.pi, exclude_max=True, allow_nan=False),
)
def test_every_sampled_dataset_satisfies_the_data_identity(seed, n, a, b, bp):
    data = sample_dataset(AngleConfig(a, b, bp), n, make_rng(seed))
    report = data_bell_margin_3(data)
    assert report.satisfied
    assert report.margin >= 0.0


def test_matched_pairs_aligned_settings_gives_exactly_one():
    assert matched_pairs_estimate(ALIGNED, 500, make_rng(3)) == 1.0


def test_matched_pairs_single_trial_cannot_pair():
    # one trial per arm leaves the other a-outcome group empty by construction
    with pytest.raises(InsufficientMatchesError):
        matched_pairs_estimate(CFG, 1, make_rng(11))


def test_matched_pairs_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        matched_pairs_estimate(CFG, 0, make_rng(1))


def test_matched_pairs_converges_to_third_correlation():
    est = matched_pairs_estimate(CFG, 40_000, make_rng(77))
    assert est == pytest.approx(third_correlation(CFG), abs=0.025)


def test_matched_pairs_vanishing_first_factor():
    cfg = AngleConfig(0.0, math.pi / 2, 0.0)
    est = matched_pairs_estimate(cfg, 40_000, make_rng(78))
    assert est == pytest.approx(0.0, abs=0.025)


def test_matched_pairs_is_deterministic():
    e1 = matched_pairs_estimate(CFG, 2000, make_rng(4))
    e2 = matched_pairs_estimate(CFG, 2000, make_rng(4))
    assert e1 == e2


def test_convergence_study_records_and_determinism():
    n_list = [100, 1000, 10000]
    r1 = convergence_study(CFG, n_list, seed=42)
    r2 = convergence_study(CFG, n_list, seed=42)
    assert r1 == r2
    assert [r.n_samples for r in r1] == n_list
    target = third_correlation(CFG)
    for rec in r1:
        assert rec.analytic == target
        assert rec.abs_error == abs(rec.estimate - target)
        assert rec.seed == 42


def test_convergence_study_error_shrinks_with_n():
    records = convergence_study(CFG, [100, 10000, 1000000], seed=42)
    errors = [r.abs_error for r in records]
    assert errors[-1] < errors[0]
    assert records[-1].abs_error < 5 * records[-1].std_error


def test_convergence_study_validates_n_list():
    with pytest.raises(ValueError):
        convergence_study(CFG, [], seed=1)
    with pytest.raises(ValueError):
        convergence_study(CFG, [100, 100], seed=1)
    with pytest.raises(ValueError):
        convergence_study(CFG, [1000, 10], seed=1)
