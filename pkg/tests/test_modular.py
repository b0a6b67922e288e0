import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import siegel
from thetamod.characteristics import Characteristic, Phase, is_even, reduced_characteristics
from thetamod.genus2 import LABEL_MATRIX_CORRECTED, Form, Kind, catalog_identities
from thetamod.identities import Factor, Identity, Term, verify_identity
from thetamod.modular import (
    ModularEqParams,
    NonRealLambda,
    division_indices,
    enumerate_odd,
    jacobi_identity,
    lambda_complement,
    lambda_invariant,
    lambda_modular_check_p3,
    modular_identity,
    order_k_division_check,
)
from thetamod.sampling import siegel_samples
from thetamod.siegel import validate_siegel
from thetamod.theta import DimensionMismatch, ThetaCache, theta_constant

C = Characteristic.parse


class TestParams:
    @pytest.mark.parametrize("p,p1,k,l", [(3, 2, 4, 1), (5, 4, 8, 3), (7, 4, 8, 1), (11, 8, 16, 5), (13, 8, 16, 3)])
    def test_derived(self, p, p1, k, l):
        m = ModularEqParams(p, 1)
        assert (m.p1, m.p2, m.k, m.l) == (p1, 2, k, l)

    @pytest.mark.parametrize("p", [4, 2, 1, 9, -3])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ValueError):
            ModularEqParams(p, 1)

    def test_large_prime_gated(self):
        with pytest.raises(ValueError):
            ModularEqParams(37, 1)
        assert ModularEqParams(37, 1, allow_large=True).p1 == 32

    def test_rejects_bad_genus(self):
        with pytest.raises(ValueError):
            ModularEqParams(3, 0)


@pytest.mark.parametrize("g,count", [(1, 1), (2, 6), (3, 28)])
def test_enumerate_odd(g, count):
    odd = enumerate_odd(g)
    assert len(odd) == count and len(set(odd)) == count


def test_index_range_is_half_open():
    idx = list(division_indices(ModularEqParams(7, 2)))
    assert len(idx) == (2 * 4) ** 2
    assert max(max(nup) for _, nup in idx) == 3


def test_p3_g1_term_for_term():
    # theta00(t) theta00(3t) - theta01(t) theta01(3t) - theta10(t) theta10(3t) = 0
    ident = modular_identity(ModularEqParams(3, 1), C("1;1"))
    expected = tuple(
        Term(Phase(s), (Factor(C(c), 1, 1), Factor(C(c), 3, 1))) for s, c in [(0, "0;0"), (1, "0;1"), (1, "1;0")]
    )
    assert ident.terms == expected and ident.pruned == (C("1;1"),)


@pytest.mark.parametrize("p,g,terms", [(3, 1, 3), (3, 2, 10), (7, 2, 58)])
def test_term_counts(p, g, terms):
    for mu in enumerate_odd(g):
        ident = modular_identity(ModularEqParams(p, g), mu)
        assert len(ident.terms) == terms
        assert len(ident.terms) + len(ident.pruned) == (2 * ModularEqParams(p, g).p1) ** g


def test_mu_validation():
    with pytest.raises(ValueError):
        modular_identity(ModularEqParams(3, 1), C("0;0"))
    with pytest.raises(DimensionMismatch):
        modular_identity(ModularEqParams(3, 2), C("1;1"))


@given(siegel(g=1), st.sampled_from([3, 5, 7, 11, 13]))
def test_identity_holds_g1(tau, p):
    ident = modular_identity(ModularEqParams(p, 1), C("1;1"))
    assert verify_identity(ident, tau, rel_tol=1e-8).passed


@pytest.mark.parametrize("p,holds", [(3, True), (7, True), (5, False)])
def test_literal_bottom_only_for_p_pm1_mod_2p1(p, holds):
    ident = modular_identity(ModularEqParams(p, 1), C("1;1"), literal=True)
    results = [verify_identity(ident, t, rel_tol=1e-8).passed for t in siegel_samples(1, 3, 5)]
    assert all(results) if holds else not any(results)


def test_equal_exponent_variant_fails_at_p5():
    ident = modular_identity(ModularEqParams(5, 1), C("1;1"))
    variant = Identity(
        "equal exponents",
        tuple(Term(t.coeff, (t.factors[0], Factor(t.factors[1].ch, 5, 3)), t.weight) for t in ident.terms),
    )
    assert not any(verify_identity(variant, t, rel_tol=1e-8).passed for t in siegel_samples(1, 3, 5))


@given(siegel(g=1), st.sampled_from([3, 7]))
def test_division_check_g1(tau, p):
    assert order_k_division_check(ModularEqParams(p, 1), C("1;1"), tau).passed


def test_p3_g2_span_matches_catalog():
    evens = [c for c in reduced_characteristics(2) if is_even(c)]

    def vec(ident):
        v = np.zeros(len(evens), complex)
        for t in ident.terms:
            v[evens.index(t.factors[0].ch)] += t.scalar()
        return v

    taus = siegel_samples(2, 5, 25)
    monomials = np.array([[theta_constant(c, t).value * theta_constant(c, t * 3).value for c in evens] for t in taus])
    mods = np.array([vec(modular_identity(ModularEqParams(3, 2), mu)) for mu in enumerate_odd(2)])
    cat = np.array([vec(i) for k in Kind for i in catalog_identities(k, Form.PRIME3, LABEL_MATRIX_CORRECTED)])
    assert np.abs(monomials @ mods.T).max() < 1e-12
    assert np.abs(monomials @ cat.T).max() < 1e-12
    rank = lambda a: np.linalg.matrix_rank(a, tol=1e-8)  # noqa: E731
    null_dim = len(evens) - rank(monomials)
    assert rank(mods) == rank(cat) == rank(np.vstack([mods, cat])) == null_dim == 5


class TestLambda:
    def test_values(self):
        assert lambda_invariant(1j).value == pytest.approx(0.5, abs=1e-14)
        assert lambda_invariant(2j).value == pytest.approx(0.029437251522859413, abs=1e-14)

    @given(siegel(g=1))
    def test_complement(self, tau):
        lam, comp = lambda_invariant(tau), lambda_complement(tau)
        assert abs(lam.value + comp.value - 1) <= lam.err + comp.err + 1e-12 * max(1, abs(lam.value))

    @given(st.floats(0.3, 3.0))
    def test_landen_cross_check(self, y):
        # lambda(2t) = ((1 - k')/(1 + k'))^2 with k' = sqrt(1 - lambda(t))
        kp = cmath.sqrt(1 - lambda_invariant(1j * y).value)
        assert lambda_invariant(2j * y).value == pytest.approx(((1 - kp) / (1 + kp)) ** 2, abs=1e-13)

    def test_jacobi(self):
        for t in siegel_samples(1, 9, 5):
            assert verify_identity(jacobi_identity(), t, rel_tol=1e-10).passed

    @pytest.mark.parametrize("t", [0.6j, 1j, 2j])
    def test_fourth_root_form(self, t):
        assert lambda_modular_check_p3(t).passed

    @pytest.mark.parametrize("t", [1 + 1j, 0.2 + 1j, -1j])
    def test_off_axis_rejected(self, t):
        with pytest.raises(NonRealLambda):
            lambda_modular_check_p3(t)

    def test_genus_check(self):
        with pytest.raises(DimensionMismatch):
            lambda_invariant(validate_siegel([[1j, 0], [0, 1j]]))

    def test_value_at_one_plus_i_is_real_but_outside_unit_interval(self):
        assert lambda_invariant(1 + 1j).value == pytest.approx(-1, abs=1e-12)

    def test_cache_consistency(self):
        t = validate_siegel([[0.1 + 0.9j]])
        cache = ThetaCache(t)
        direct = cache(C("1;0")).value ** 4 / cache(C("0;0")).value ** 4
        assert lambda_invariant(t).value == pytest.approx(direct, rel=1e-13)
