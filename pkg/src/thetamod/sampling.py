"""Seeded random points of H_g, reproducible across implementations.

The generator is SplitMix64 (64-bit state)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

all arithmetic mod 2**64. A uniform double is ``(out >> 11) * 2**-53`` in
[0, 1). A standard normal uses Box-Muller on two consecutive uniforms
``u1, u2`` as ``sqrt(-2 log(1 - u1)) * cos(2 pi u2)``; the sine partner is
discarded.

For a g x g sample the draws are, in order: the g*g normals of ``A``
(row-major), then the g*g uniforms of ``X`` (row-major). The sample is
``tau = (U + U^T)/2 + i (A^T A + 0.5 I)`` with ``U = X - 0.5``. Consecutive
samples continue the same stream.
"""
from __future__ import annotations

import math

import numpy as np

from .siegel import SiegelMatrix, validate_siegel

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def normal(self) -> float:
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(1.0 - u1)) * math.cos(2.0 * math.pi * u2)


def random_siegel(rng: SplitMix64, g: int, ridge: float = 0.5) -> SiegelMatrix:
    a = np.array([[rng.normal() for _ in range(g)] for _ in range(g)])
    u = np.array([[rng.uniform() - 0.5 for _ in range(g)] for _ in range(g)])
    y = a.T @ a + ridge * np.eye(g)
    return validate_siegel((u + u.T) / 2 + 1j * y)


def siegel_samples(g: int, seed: int, count: int) -> list[SiegelMatrix]:
    """The first ``count`` samples of the stream seeded by ``seed``."""
    rng = SplitMix64(seed)
    return [random_siegel(rng, g) for _ in range(count)]
