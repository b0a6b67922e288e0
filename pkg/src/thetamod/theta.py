"""Certified evaluation of theta functions with rational characteristics.

Convention (classical, with the 1/2 in the characteristic)::

    theta[a; b](z, tau) = sum_{l in Z^g} exp 2 pi i { 1/2 (l + a/2)^T tau (l + a/2)
                                                     + (l + a/2)^T (z + b/2) }
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .characteristics import Characteristic, Phase, dot, is_odd_integral
from .siegel import SiegelMatrix, scale

_EPS = np.finfo(float).eps


class EvaluationError(ArithmeticError):
    pass


class RadiusCapExceeded(EvaluationError):
    """No admissible truncation radius reaches the requested tolerance."""


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CertifiedComplex:
    """A complex value with an absolute error bound ``err``."""

    value: complex
    err: float = 0.0

    def __post_init__(self) -> None:
        if not (self.err >= 0 and math.isfinite(self.err)):
            raise ValueError(f"error bound must be finite and nonnegative, got {self.err}")
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "err", float(self.err))

    def __abs__(self) -> float:
        return abs(self.value)

    def _promote(self, other) -> CertifiedComplex:
        if isinstance(other, CertifiedComplex):
            return other
        return CertifiedComplex(complex(other), 0.0)

    def __add__(self, other) -> CertifiedComplex:
        o = self._promote(other)
        v = self.value + o.value
        return CertifiedComplex(v, self.err + o.err + _EPS * abs(v))

    __radd__ = __add__

    def __neg__(self) -> CertifiedComplex:
        return CertifiedComplex(-self.value, self.err)

    def __sub__(self, other) -> CertifiedComplex:
        return self + (-self._promote(other))

    def __rsub__(self, other) -> CertifiedComplex:
        return self._promote(other) - self

    def __mul__(self, other) -> CertifiedComplex:
        o = self._promote(other)
        v = self.value * o.value
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return CertifiedComplex(v, err + 2 * _EPS * abs(v))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CertifiedComplex:
        if k < 0 or int(k) != k:
            raise ValueError("only nonnegative integer powers are supported")
        out = CertifiedComplex(1.0)
        for _ in range(int(k)):
            out = out * self
        return out

    def __truediv__(self, other) -> CertifiedComplex:
        o = self._promote(other)
        if o.err >= abs(o.value):
            raise ZeroDivisionError("denominator is not certified nonzero")
        v = self.value / o.value
        # |a/b - A/B| <= (|a-A| + |A/B| |b-B|) / (|B| - |b-B|)
        err = (self.err + abs(v) * o.err) / (abs(o.value) - o.err)
        return CertifiedComplex(v, err + 2 * _EPS * abs(v))

    def sqrt(self) -> CertifiedComplex:
        """Principal square root."""
        r = cmath.sqrt(self.value)
        if self.err <= abs(self.value) / 4:
            err = self.err / abs(r) if r != 0 else 0.0
        else:
            err = 2 * math.sqrt(abs(self.value) + self.err)
        return CertifiedComplex(r, err + _EPS * abs(r))


def _default_max_radius() -> int:
    env = os.environ.get("THETA_MAX_RADIUS")
    return int(env) if env else 200


@dataclass(frozen=True)
class EvalParams:
    """Evaluation controls.

    ``tol`` is an absolute bound on the truncation plus rounding error of a
    theta constant. For ``z`` with nonzero imaginary part the target is
    ``tol * max(1, envelope)`` where ``envelope = exp(pi c^T Im(tau) c)``,
    ``c = Im(tau)^-1 Im(z)``, bounds the size of the largest term.
    """

    tol: float = 1e-12
    max_radius: int = 200
    compensated: bool = False

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_radius < 1:
            raise ValueError("max_radius must be at least 1")

    @classmethod
    def from_env(cls, **kw) -> EvalParams:
        kw.setdefault("max_radius", _default_max_radius())
        return cls(**kw)


def tail_bound(radius: int, g: int, b: float) -> float:
    """Bound on sum of exp(-pi x^T Y x) over shifted lattice points with ||x||_inf > radius.

    Shells ``s < ||x||_inf <= s + 1`` hold at most ``(2s+3)^g`` points, each
    below ``exp(-pi b s^2)``; the shell series is bounded geometrically.
    """
    s = radius
    first = (2 * s + 3) ** g * math.exp(-math.pi * b * s * s)
    ratio = ((2 * s + 5) / (2 * s + 3)) ** g * math.exp(-math.pi * b * (2 * s + 1))
    if ratio >= 1:
        return math.inf
    return first / (1 - ratio)


def truncation_radius(g: int, b: float, target: float, max_radius: int) -> int:
    for r in range(0, max_radius + 1):
        if tail_bound(r, g, b) <= target:
            return r
    raise RadiusCapExceeded(
        f"truncation radius for tail bound {target:.3g} exceeds max_radius={max_radius} (b={b:.3g})"
    )


def _box(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Integer points of the box [lo, hi] in lexicographic order, shape (N, g)."""
    axes = [np.arange(a, b + 1, dtype=float) for a, b in zip(lo, hi)]
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([gr.ravel() for gr in grids], axis=-1)


def _check_dims(ch: Characteristic, tau: SiegelMatrix, z: np.ndarray) -> None:
    if ch.g != tau.dim or z.shape != (tau.dim,):
        raise DimensionMismatch(f"characteristic g={ch.g}, tau g={tau.dim}, z shape {z.shape}")


def theta(
    ch: Characteristic,
    z: Sequence[complex] | np.ndarray,
    tau: SiegelMatrix,
    params: EvalParams = EvalParams(),
) -> CertifiedComplex:
    """Evaluate theta[ch](z, tau) with a certified absolute error bound."""
    z = np.asarray(z, dtype=complex).reshape(-1)
    _check_dims(ch, tau, z)
    g = tau.dim
    y = tau.imag
    half_top = np.array(ch.top_float()) / 2
    c = np.linalg.solve(y, z.imag)
    envelope = math.exp(math.pi * float(c @ y @ c))
    target = params.tol * max(1.0, envelope)

    # half the budget for truncation, the rest for rounding
    r = truncation_radius(g, tau.im_min_eig_lb, target / 2 / envelope, params.max_radius)
    lo = np.ceil(-r - half_top - c)
    hi = np.floor(r - half_top - c)
    n = _box(lo, hi) + half_top
    shift = z + np.array(ch.bottom_float()) / 2
    quad = np.einsum("ki,ij,kj->k", n, tau.entries, n)
    arg = 2j * np.pi * (0.5 * quad + n @ shift)
    terms = np.exp(arg)
    mags = np.abs(terms)
    if params.compensated:
        value = complex(math.fsum(terms.real), math.fsum(terms.imag))
        acc = 4.0
    else:
        value = complex(terms.sum())
        acc = math.log2(max(len(terms), 1)) + 4.0
    rounding = float(_EPS * np.sum(mags * (np.abs(arg) + acc)))
    err = envelope * tail_bound(r, g, tau.im_min_eig_lb) + rounding
    if err > target:
        raise RadiusCapExceeded(
            f"tolerance {target:.3g} is below the floating-point floor {rounding:.3g} of this sum"
        )
    return CertifiedComplex(value, err)


def theta_constant(ch: Characteristic, tau: SiegelMatrix, params: EvalParams = EvalParams()) -> CertifiedComplex:
    """theta[ch](0, tau); integral odd characteristics return an exact zero."""
    if ch.g != tau.dim:
        raise DimensionMismatch(f"characteristic g={ch.g}, tau g={tau.dim}")
    if is_odd_integral(ch):
        return CertifiedComplex(0.0, 0.0)
    return theta(ch, np.zeros(tau.dim), tau, params)


def quasi_period_factor(
    ch: Characteristic,
    z: Sequence[complex],
    n: Sequence[int],
    m: Sequence[int],
    tau: SiegelMatrix,
) -> complex:
    """Factor relating theta[ch](z + n + tau m) to theta[ch](z).

    Equals exp 2 pi i { (n.a - m.b)/2 - m.z - m^T tau m / 2 } for ch = [a; b].
    """
    z = np.asarray(z, dtype=complex).reshape(-1)
    _check_dims(ch, tau, z)
    mv = np.asarray(m, dtype=float)
    phase = Phase(dot(n, ch.top) - dot(m, ch.bottom))
    return complex(phase) * cmath.exp(2j * math.pi * (-(mv @ z) - 0.5 * (mv @ tau.entries @ mv)))


class ThetaCache:
    """Memoized theta constants at integer multiples of one base point."""

    def __init__(self, tau: SiegelMatrix, params: EvalParams = EvalParams()):
        self.tau = tau
        self.params = params
        self._values: dict[tuple[Characteristic, int], CertifiedComplex] = {}
        self._scaled: dict[int, SiegelMatrix] = {1: tau}

    def at(self, m: int) -> SiegelMatrix:
        if m not in self._scaled:
            self._scaled[m] = scale(self.tau, m)
        return self._scaled[m]

    def __call__(self, ch: Characteristic, tau_scale: int = 1) -> CertifiedComplex:
        key = (ch, tau_scale)
        if key not in self._values:
            self._values[key] = theta_constant(ch, self.at(tau_scale), self.params)
        return self._values[key]
