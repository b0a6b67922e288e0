"""Modular equations of odd prime order p in genus g, and the elliptic lambda invariant.

For ``f(z) = theta^l(z, tau) theta(p z, p tau)`` (order ``k = l + p``) and an odd
integral characteristic ``[mu; mu']``, the signed sum of the normalized
translates of ``f`` over the division points ``a + tau b`` with
``a in (1/p1) Z^g / Z^g`` and ``b in (1/2) Z^g / Z^g`` vanishes. The
normalized translate at ``(a, b)`` is exactly

    theta[2b; 2a]^l(0, tau) * theta[2b; 2pa](0, p tau),

which gives an identity between theta constants at ``tau`` and ``p tau``.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .characteristics import (
    Characteristic,
    Parity,
    Phase,
    binary_vectors,
    dot,
    is_odd_integral,
    parity,
    reduced_characteristics,
    shift_reduce,
)
from .identities import Factor, Identity, ResidualReport, Term, report_from_values
from .siegel import SiegelMatrix, scale, validate_siegel
from .theta import CertifiedComplex, DimensionMismatch, EvalParams, theta, theta_constant

MAX_DEFAULT_PRIME = 31


class NonRealLambda(ValueError):
    pass


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class ModularEqParams:
    p: int
    g: int

    def __init__(self, p: int, g: int, allow_large: bool = False):
        if not (isinstance(p, int) and p > 2 and is_prime(p)):
            raise ValueError(f"p must be an odd prime, got {p!r}")
        if p > MAX_DEFAULT_PRIME and not allow_large:
            raise ValueError(f"p={p} exceeds {MAX_DEFAULT_PRIME}; pass allow_large=True")
        if not (isinstance(g, int) and g >= 1):
            raise ValueError(f"g must be a positive integer, got {g!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "g", g)

    @property
    def p1(self) -> int:
        return 2 ** (self.p.bit_length() - 1)

    @property
    def p2(self) -> int:
        return 2

    @property
    def k(self) -> int:
        return 2 * self.p1

    @property
    def l(self) -> int:
        return self.k - self.p


def enumerate_odd(g: int) -> list[Characteristic]:
    """All reduced odd characteristics of genus g; there are 2^(g-1) (2^g - 1)."""
    return [c for c in reduced_characteristics(g) if parity(c) is Parity.ODD]


def _signed(mu: Characteristic, nu: Sequence[int], nup: Sequence[int]) -> Phase:
    return Phase.sign(int(dot(mu.top, nu) - dot(mu.bottom, nup)))


def _check_mu(params: ModularEqParams, mu: Characteristic) -> None:
    if mu.g != params.g:
        raise DimensionMismatch(f"mu has g={mu.g}, params have g={params.g}")
    if not mu.is_reduced() or parity(mu) is not Parity.ODD:
        raise ValueError(f"{mu} is not a reduced odd characteristic")


def division_indices(params: ModularEqParams):
    """``(nu, nu')`` with nu in {0,1}^g and nu' in {0..p1-1}^g, lexicographic."""
    for nu in binary_vectors(params.g):
        for nup in itertools.product(range(params.p1), repeat=params.g):
            yield nu, nup


def modular_identity(params: ModularEqParams, mu: Characteristic, literal: bool = False) -> Identity:
    """sum (-1)^(mu.nu - mu'.nu') theta[nu; 2nu'/p1]^l(0, tau) theta[nu; 2p nu'/p1](0, p tau) = 0.

    The second factor's bottom is reduced into [0, 2) with its exact phase
    moved into the coefficient. ``literal=True`` uses bottom ``2nu'/p1`` at
    ``p tau`` as well; that variant holds only when p = +-1 mod 2 p1.
    Terms with an integral odd characteristic are pruned and listed in
    ``Identity.pruned``.
    """
    _check_mu(params, mu)
    p, p1, l = params.p, params.p1, params.l
    terms: list[Term] = []
    pruned: list[Characteristic] = []
    for nu, nup in division_indices(params):
        first = Characteristic(nu, [Fraction(2 * x, p1) for x in nup])
        mult = 1 if literal else p
        second_raw = Characteristic(nu, [Fraction(2 * mult * x, p1) for x in nup])
        red1, ph1 = shift_reduce(first)
        red2, ph2 = shift_reduce(second_raw)
        if is_odd_integral(red1) or is_odd_integral(red2):
            pruned.append(red1)
            continue
        coeff = _signed(mu, nu, nup) * ph1**l * ph2
        terms.append(Term(coeff, (Factor(red1, 1, l), Factor(red2, p, 1))))
    tag = " literal" if literal else ""
    return Identity(
        f"modular p={p} g={params.g} mu=[{mu}]{tag}",
        tuple(terms),
        tuple(pruned),
        meta={"p": p, "g": params.g, "mu": str(mu), "k": params.k, "l": l, "p1": p1},
    )


def order_k_division_terms(
    params: ModularEqParams,
    mu: Characteristic,
    tau: SiegelMatrix,
    eval_params: EvalParams = EvalParams(),
) -> list[CertifiedComplex]:
    """Signed, normalized values of f at the division points a + tau b, a = nu'/p1, b = nu/2.

    ``f`` is evaluated through the general-z theta path; the normalization is
    ``exp(2 pi i k (b^T tau b / 2 + b.a))``.
    """
    _check_mu(params, mu)
    if tau.dim != params.g:
        raise DimensionMismatch(f"tau has g={tau.dim}, params have g={params.g}")
    g, p, k, l = params.g, params.p, params.k, params.l
    zero = Characteristic.zero(g)
    ptau = scale(tau, p)
    out = []
    for nu, nup in division_indices(params):
        a = np.array(nup, dtype=float) / params.p1
        b = np.array(nu, dtype=float) / 2
        z = a + tau.entries @ b
        f = theta(zero, z, tau, eval_params) ** l * theta(zero, p * z, ptau, eval_params)
        norm = cmath.exp(2j * math.pi * k * (0.5 * (b @ tau.entries @ b) + b @ a))
        out.append(f * norm * _signed(mu, nu, nup))
    return out


def order_k_division_check(
    params: ModularEqParams,
    mu: Characteristic,
    tau: SiegelMatrix,
    eval_params: EvalParams = EvalParams(),
    rel_tol: float = 1e-8,
) -> ResidualReport:
    values = order_k_division_terms(params, mu, tau, eval_params)
    return report_from_values(
        f"division p={params.p} g={params.g} mu=[{mu}]", values, eval_params.tol, rel_tol
    )


def _as_tau1(tau1: complex | SiegelMatrix) -> SiegelMatrix:
    if isinstance(tau1, SiegelMatrix):
        if tau1.dim != 1:
            raise DimensionMismatch("lambda needs g=1")
        return tau1
    return validate_siegel([[complex(tau1)]])


_T00 = Characteristic([0], [0])
_T10 = Characteristic([1], [0])
_T01 = Characteristic([0], [1])


def lambda_invariant(tau1: complex | SiegelMatrix, params: EvalParams = EvalParams()) -> CertifiedComplex:
    """lambda(tau) = theta[1;0]^4 / theta[0;0]^4."""
    t = _as_tau1(tau1)
    return theta_constant(_T10, t, params) ** 4 / theta_constant(_T00, t, params) ** 4


def lambda_complement(tau1: complex | SiegelMatrix, params: EvalParams = EvalParams()) -> CertifiedComplex:
    """1 - lambda(tau) as theta[0;1]^4 / theta[0;0]^4."""
    t = _as_tau1(tau1)
    return theta_constant(_T01, t, params) ** 4 / theta_constant(_T00, t, params) ** 4


def jacobi_identity() -> Identity:
    f = lambda ch: (Factor(ch, 1, 4),)  # noqa: E731
    return Identity(
        "jacobi",
        (Term(Phase(0), f(_T00)), Term(Phase(1), f(_T10)), Term(Phase(1), f(_T01))),
    )


def _real_lambda(t: SiegelMatrix, params: EvalParams) -> float:
    lam = lambda_invariant(t, params)
    if abs(lam.value.imag) > lam.err or not 0 < lam.value.real < 1:
        raise NonRealLambda(f"lambda(tau) = {lam.value} is not real in (0, 1)")
    return lam.value.real


def lambda_modular_check_p3(
    tau1: complex,
    params: EvalParams = EvalParams(),
    tol: float = 1e-10,
) -> ResidualReport:
    """|1 - (lam(t) lam(3t))^(1/4) - ((1 - lam(t))(1 - lam(3t)))^(1/4)| for t on the imaginary axis."""
    tau1 = complex(tau1)
    if tau1.real != 0 or tau1.imag <= 0:
        raise NonRealLambda(f"tau={tau1} is off the positive imaginary axis")
    t = _as_tau1(tau1)
    lam1 = _real_lambda(t, params)
    lam3 = _real_lambda(scale(t, 3), params)
    a = (lam1 * lam3) ** 0.25
    b = ((1 - lam1) * (1 - lam3)) ** 0.25
    residual = abs(1 - a - b)
    return ResidualReport(
        identity=f"lambda p=3 tau={tau1}",
        residual=residual,
        normalizer=1.0,
        tol=tol,
        passed=residual <= tol,
        rel_tol=tol,
    )
