"""Duplication-type identities, the Z_2^g Fourier pair, and the half-characteristic recursion.

Every identity here is built as an :class:`~thetamod.identities.Identity`
whose terms sum to zero; the ``*_check`` helpers verify one at a point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .characteristics import (
    Characteristic,
    NotIntegral,
    Phase,
    RationalLike,
    binary_vectors,
    dot,
    is_odd_integral,
    shift_reduce,
)
from .identities import Factor, Identity, ResidualReport, Term, verify_identity
from .siegel import SiegelMatrix, scale
from .theta import CertifiedComplex, EvalParams, ThetaCache, theta_constant


class BranchUnresolvable(ArithmeticError):
    """A square-root branch could not be certified by the direct evaluation."""


def _vec(v: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _reduced_factor(ch: Characteristic, tau_scale: int, exponent: int) -> tuple[Phase, Factor]:
    red, ph = shift_reduce(ch)
    return ph**exponent, Factor(red, tau_scale, exponent)


def _term(coeff: Phase, weight: Fraction, *specs: tuple[Characteristic, int, int]) -> Term:
    factors = []
    for ch, s, e in specs:
        ph, f = _reduced_factor(ch, s, e)
        coeff = coeff * ph
        factors.append(f)
    return Term(coeff, tuple(factors), weight)


MINUS = Phase(1)
ONE = Phase(0)


def duplication_identity(eps: Sequence[RationalLike], eps1: Sequence[RationalLike]) -> Identity:
    """theta^2[e; e1](0, tau) = sum_a theta[e + a; 2 e1](0, 2tau) theta[a; 0](0, 2tau)."""
    e, e1 = _vec(eps), _vec(eps1)
    g = len(e)
    zero = [0] * g
    terms = [_term(ONE, Fraction(1), (Characteristic(e, e1), 1, 2))]
    for a in binary_vectors(g):
        terms.append(
            _term(
                MINUS,
                Fraction(1),
                (Characteristic([x + y for x, y in zip(e, a)], [2 * x for x in e1]), 2, 1),
                (Characteristic(a, zero), 2, 1),
            )
        )
    return Identity(f"duplication [{Characteristic(e, e1)}]", tuple(terms))


def quadruple_expansion_identity(delta: Sequence[int]) -> Identity:
    """theta[0; d](0, tau) = sum_b exp(pi i d.b) theta[b; 0](0, 4tau)."""
    d = tuple(int(x) for x in delta)
    g = len(d)
    terms = [_term(ONE, Fraction(1), (Characteristic([0] * g, d), 1, 1))]
    for b in binary_vectors(g):
        terms.append(_term(MINUS * Phase(dot(d, b)), Fraction(1), (Characteristic(b, [0] * g), 4, 1)))
    return Identity(f"quadruple_expansion delta={list(d)}", tuple(terms))


def quadruple_inversion_identity(beta: Sequence[int]) -> Identity:
    """theta[b; 0](0, 4tau) = 2^-g sum_d exp(-pi i d.b) theta[0; d](0, tau)."""
    b = tuple(int(x) for x in beta)
    g = len(b)
    w = Fraction(1, 2**g)
    terms = [_term(ONE, Fraction(1), (Characteristic(b, [0] * g), 4, 1))]
    for d in binary_vectors(g):
        terms.append(_term(MINUS * Phase(-dot(d, b)), w, (Characteristic([0] * g, d), 1, 1)))
    return Identity(f"quadruple_inversion beta={list(b)}", tuple(terms))


def square_doubling_identity(eps: Sequence[int], eps1: Sequence[int]) -> Identity:
    """theta^2[e; e1](0, 2tau) = 2^-g sum_d exp(pi i e.d) theta[0; d](0, tau) theta[0; e1 - d](0, tau).

    Both ``eps`` and ``eps1`` must be integral.
    """
    e, e1 = _vec(eps), _vec(eps1)
    if any(x.denominator != 1 for x in e + e1):
        raise NotIntegral("square_doubling needs integral eps and eps1")
    g = len(e)
    w = Fraction(1, 2**g)
    zero = [0] * g
    terms = [_term(ONE, Fraction(1), (Characteristic(e, e1), 2, 2))]
    for d in binary_vectors(g):
        terms.append(
            _term(
                MINUS * Phase(dot(e, d)),
                w,
                (Characteristic(zero, d), 1, 1),
                (Characteristic(zero, [x - y for x, y in zip(e1, d)]), 1, 1),
            )
        )
    return Identity(f"square_doubling [{Characteristic(e, e1)}]", tuple(terms))


def _check(identity: Identity, tau, params: EvalParams, rel_tol: float) -> ResidualReport:
    return verify_identity(identity, tau, params, rel_tol=rel_tol)


def duplication_check(eps, eps1, tau, params: EvalParams = EvalParams(), rel_tol: float = 1e-9) -> ResidualReport:
    return _check(duplication_identity(eps, eps1), tau, params, rel_tol)


def quadruple_expansion_check(delta, tau, params: EvalParams = EvalParams(), rel_tol: float = 1e-9) -> ResidualReport:
    return _check(quadruple_expansion_identity(delta), tau, params, rel_tol)


def quadruple_inversion_check(beta, tau, params: EvalParams = EvalParams(), rel_tol: float = 1e-9) -> ResidualReport:
    return _check(quadruple_inversion_identity(beta), tau, params, rel_tol)


def square_doubling_check(eps, eps1, tau, params: EvalParams = EvalParams(), rel_tol: float = 1e-9) -> ResidualReport:
    return _check(square_doubling_identity(eps, eps1), tau, params, rel_tol)


def fourier_matrix(g: int) -> list[list[Phase]]:
    """Exact matrix A[d][b] = exp(pi i d.b) over {0,1}^g (lexicographic)."""
    vecs = list(binary_vectors(g))
    return [[Phase(dot(d, b)) for b in vecs] for d in vecs]


def gram_exact(g: int) -> list[list[int]]:
    """A A^* computed in exact phase arithmetic; equals 2^g I."""
    a = fourier_matrix(g)
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            # every summand is +-1 because all exponents are integers
            row.append(sum(1 if (a[i][k] * a[j][k].conjugate()).exponent == 0 else -1 for k in range(n)))
        out.append(row)
    return out


def fourier_round_trip(tau: SiegelMatrix | ThetaCache, params: EvalParams = EvalParams()) -> tuple[float, float]:
    """Expand the constants theta[b; 0](0, 4tau) by quadruple_expansion, then invert back.

    Returns ``(max deviation from the input vector, combined error bound)``.
    """
    cache = tau if isinstance(tau, ThetaCache) else ThetaCache(tau, params)
    g = cache.tau.dim
    vecs = list(binary_vectors(g))
    a = np.array([[complex(p) for p in row] for row in fourier_matrix(g)])
    v = [cache(Characteristic(b, [0] * g), 4) for b in vecs]
    vals = np.array([x.value for x in v])
    errs = np.array([x.err for x in v])
    u = a @ vals
    back = (a.conj().T @ u) / 2**g
    n = len(vecs)
    bound = float(errs.max() + 4 * n * np.finfo(float).eps * np.abs(vals).max())
    return float(np.abs(back - vals).max()), bound


def construct_half_characteristics(
    ch: Characteristic,
    tau: SiegelMatrix,
    params: EvalParams = EvalParams(),
    oracle_tol: float = 1e-6,
) -> CertifiedComplex:
    """theta[ch](0, tau) for integral top and dyadic bottom, built from integral constants at tau.

    Rational bottoms descend by duplication (to 2*bottom at 2tau); integral
    constants at 2^m tau come back to tau through square_doubling, except ``[e;0]`` with
    ``e != 0``, which is taken from the ``a = 0`` row of quadruple_inversion by division.
    Each square root is fixed against a direct evaluation at ``oracle_tol``,
    retried at ``params.tol`` when that is too coarse to certify a sign.
    """
    if any(x.denominator != 1 for x in ch.top):
        raise NotIntegral(f"top of {ch} must be integral")
    if any(x.denominator & (x.denominator - 1) for x in ch.bottom):
        raise ValueError(f"bottom of {ch} must have power-of-two denominators")
    g = ch.g
    zero = [0] * g
    memo: dict[tuple[Characteristic, int], CertifiedComplex] = {}
    base = ThetaCache(tau, params)
    oracle = EvalParams(tol=oracle_tol, max_radius=params.max_radius)

    def resolve(square: CertifiedComplex, c: Characteristic, level: int) -> CertifiedComplex:
        root = square.sqrt()
        point = scale(tau, 2**level)
        direct = theta_constant(c, point, oracle)
        if abs(direct.value) < 10 * direct.err:
            direct = theta_constant(c, point, params)
        if abs(direct.value) < 10 * direct.err:
            if abs(root.value) <= root.err:
                # both branches lie inside the error disc
                return root
            raise BranchUnresolvable(f"direct value of theta[{c}] at 2^{level} tau is not certified nonzero")
        if abs(root.value - direct.value) > abs(root.value + direct.value):
            root = -root
        return root

    def build(c: Characteristic, level: int) -> CertifiedComplex:
        red, ph = shift_reduce(c)
        key = (red, level)
        if key not in memo:
            memo[key] = _build_reduced(red, level)
        return memo[key] * ph

    def _build_reduced(c: Characteristic, level: int) -> CertifiedComplex:
        if is_odd_integral(c):
            return CertifiedComplex(0.0)
        if c.is_integral():
            if level == 0:
                return base(c)
            if any(c.top) and not any(c.bottom):
                # theta[0;0] theta[e;0] at 2tau is a sign-free sum of squares at tau;
                # the signed square_doubling sum would cancel catastrophically here.
                sq = CertifiedComplex(0.0)
                for d in binary_vectors(g):
                    sq = sq + build(Characteristic(c.top, d), level - 1) ** 2
                try:
                    return sq * (1.0 / 2**g) / build(Characteristic.zero(g), level)
                except ZeroDivisionError:
                    pass
            sq = CertifiedComplex(0.0)
            for d in binary_vectors(g):
                prod = build(Characteristic(zero, d), level - 1) * build(
                    Characteristic(zero, [x - y for x, y in zip(c.bottom, d)]), level - 1
                )
                sq = sq + prod * Phase(dot(c.top, d))
            sq = sq * (1.0 / 2**g)
            return resolve(sq, c, level)
        sq = CertifiedComplex(0.0)
        for a in binary_vectors(g):
            sq = sq + build(Characteristic([x + y for x, y in zip(c.top, a)], [2 * x for x in c.bottom]), level + 1) * build(
                Characteristic(a, zero), level + 1
            )
        return resolve(sq, c, level)

    return build(ch, 0)
