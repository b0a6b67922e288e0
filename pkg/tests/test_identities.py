import json
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import siegel
from thetamod.characteristics import Characteristic, Phase
from thetamod.identities import EmptyIdentity, Factor, Identity, Term, term, verdict, verify_identity
from thetamod.modular import jacobi_identity
from thetamod.siegel import validate_siegel
from thetamod.theta import DimensionMismatch, ThetaCache

C = Characteristic.parse


def _identity_strategy():
    ch = st.sampled_from(["0;0", "1;0", "0;1/2", "1/3;5/4"]).map(C)
    factor = st.builds(Factor, ch, st.integers(1, 7), st.integers(1, 4))
    t = st.builds(
        Term,
        st.fractions(0, 2, max_denominator=8).map(Phase),
        st.lists(factor, min_size=1, max_size=3).map(tuple),
        st.sampled_from([Fraction(1), Fraction(1, 4), Fraction(-3, 2)]),
    )
    return st.builds(Identity, st.text(min_size=1, max_size=20), st.lists(t, min_size=1, max_size=5).map(tuple))


@given(_identity_strategy())
def test_json_round_trip(identity):
    text = json.dumps(identity.to_json())
    assert Identity.from_json(text) == identity


def test_json_shape():
    obj = jacobi_identity().to_json()
    assert obj["terms"][1] == {
        "coeff_exp_over_pi_i": "1",
        "factors": [{"char": "1;0", "tau_scale": 1, "power": 4}],
    }
    assert "weight" not in obj["terms"][0]
    weighted = Identity("w", (term(0, Factor(C("0;0")), weight=Fraction(1, 4)),))
    assert weighted.to_json()["terms"][0]["weight"] == "1/4"


@pytest.mark.parametrize(
    "obj",
    [{}, {"name": "x"}, {"name": "x", "terms": [{"factors": []}]}, {"name": "x", "terms": [{"coeff_exp_over_pi_i": "1/0", "factors": []}]}],
)
def test_bad_json_rejected(obj):
    with pytest.raises(ValueError):
        Identity.from_json(obj)


def test_empty_identity_rejected():
    with pytest.raises(EmptyIdentity):
        Identity("empty", ()).check_well_formed()


def test_mixed_genera_rejected():
    ident = Identity("mixed", (term(0, Factor(C("0;0"))), term(1, Factor(C("0,0;0,0")))))
    with pytest.raises(DimensionMismatch):
        ident.check_well_formed()


def test_genus_mismatch_with_tau():
    with pytest.raises(DimensionMismatch):
        verify_identity(jacobi_identity(), validate_siegel([[1j, 0], [0, 1j]]))


@given(siegel(g=1))
def test_jacobi_passes(tau):
    assert verify_identity(jacobi_identity(), tau, rel_tol=1e-10).passed


@given(siegel(g=1), st.integers(0, 2))
def test_corrupted_term_fails_by_twice_its_size(tau, k):
    good = verify_identity(jacobi_identity(), tau)
    # a term below rel_tol * max|term| is invisible to any verdict
    assume(abs(good.values[k]) > 1e-6)
    bad = verify_identity(jacobi_identity().negate_term(k), tau)
    assert not bad.passed
    assert bad.residual == pytest.approx(2 * abs(good.values[k]), rel=1e-9)


def test_report_json_keys():
    r = verify_identity(jacobi_identity(), validate_siegel([[1j]]), tau_seed=5, sample=2)
    assert list(r.to_json()) == ["identity", "tau_seed", "sample", "residual", "normalizer", "tol", "pass"]
    assert r.to_json()["tau_seed"] == 5 and r.to_json()["pass"] is True


def test_cache_shared_across_identities():
    cache = ThetaCache(validate_siegel([[1j]]))
    a = verify_identity(jacobi_identity(), cache)
    b = verify_identity(jacobi_identity(), cache)
    assert a.residual == b.residual


@pytest.mark.parametrize(
    "residual,normalizer,expected",
    [(1e-13, 0.0, True), (1e-9, 1.0, False), (1e-9, 1e2, True), (2e-12, 1e-5, False)],
)
def test_verdict(residual, normalizer, expected):
    assert verdict(residual, normalizer, tol=1e-12, rel_tol=1e-10) is expected
