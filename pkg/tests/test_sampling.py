import numpy as np
import pytest
from hypothesis import given

from strategies import seeds
from thetamod.sampling import SplitMix64, siegel_samples


def test_splitmix_reference_stream():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_frozen_first_samples():
    assert siegel_samples(1, 1, 1)[0].entries[0, 0] == 0.4710027535867962 + 0.5011742493427863j
    t = siegel_samples(2, 42, 1)[0].entries
    assert t[0, 1] == -0.08830805092254485 - 0.3564021367868505j
    assert t[1, 1] == -0.007010814205307581 + 0.7514837883618203j


@given(seeds)
def test_uniform_range(seed):
    rng = SplitMix64(seed)
    us = [rng.uniform() for _ in range(50)]
    assert all(0.0 <= u < 1.0 for u in us)


@given(seeds)
def test_samples_deterministic_and_prefix_stable(seed):
    a = siegel_samples(2, seed, 3)
    b = siegel_samples(2, seed, 5)
    assert a == b[:3]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_samples_meet_ridge(g):
    for t in siegel_samples(g, 7, 20):
        assert np.linalg.eigvalsh(t.imag).min() >= 0.5 - 1e-12
        assert np.abs(t.real).max() <= 0.5
