from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetamod.characteristics import (
    Characteristic,
    CharacteristicError,
    NotIntegral,
    NotReduced,
    Parity,
    Phase,
    binary_vectors,
    is_odd_integral,
    parity,
    reduce_characteristic,
    reduced_characteristics,
    shift_reduce,
)

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=8)
exponents = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def chars(g, entries=st.integers(-5, 5)):
    return st.tuples(st.lists(entries, min_size=g, max_size=g), st.lists(entries, min_size=g, max_size=g)).map(
        lambda tb: Characteristic(*tb)
    )


class TestParsing:
    def test_round_trip_text(self):
        ch = Characteristic.parse("1,0;1/2,0")
        assert ch.top == (1, 0) and ch.bottom == (Fraction(1, 2), 0)
        assert Characteristic.parse(str(ch)) == ch

    @pytest.mark.parametrize("bad", ["", "1,0", "1;0;1", "1,0;1", "a;b", "1/0;1"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(CharacteristicError):
            Characteristic.parse(bad)

    def test_float_entries_rejected(self):
        with pytest.raises(TypeError):
            Characteristic([0.5], [0])

    @given(chars(3, fractions))
    def test_text_round_trip_property(self, ch):
        assert Characteristic.parse(str(ch)) == ch


class TestReduction:
    def test_example_two_one(self):
        red, ph = reduce_characteristic(Characteristic([2], [1]))
        assert red == Characteristic([0], [1]) and ph == Phase(0)

    def test_example_one_three(self):
        # shifting the bottom by 2 costs exp(pi i * 1 * 1)
        red, ph = reduce_characteristic(Characteristic([1], [3]))
        assert red == Characteristic([1], [1]) and ph == Phase(1)

    def test_rational_needs_shift_reduce(self):
        with pytest.raises(NotIntegral):
            reduce_characteristic(Characteristic([1], [Fraction(1, 2)]))
        red, ph = shift_reduce(Characteristic([3], [Fraction(5, 2)]))
        assert red == Characteristic([1], [Fraction(1, 2)]) and ph == Phase(1)

    @given(chars(2))
    def test_reduced_entries_are_bits(self, ch):
        red, _ = reduce_characteristic(ch)
        assert red.is_reduced()

    @given(chars(2))
    def test_idempotent(self, ch):
        red, _ = reduce_characteristic(ch)
        assert reduce_characteristic(red) == (red, Phase(0))

    @given(chars(2, fractions))
    def test_phase_is_fourth_root_for_integral_top(self, ch):
        top = [Fraction(round(x)) for x in ch.top]
        _, ph = shift_reduce(Characteristic(top, ch.bottom))
        assert ph.is_real

    @given(chars(2), st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    def test_phase_composes_across_shifts(self, ch, m, e):
        red, ph = reduce_characteristic(ch)
        shifted = Characteristic([a + 2 * x for a, x in zip(ch.top, m)], [b + 2 * y for b, y in zip(ch.bottom, e)])
        red2, ph2 = reduce_characteristic(shifted)
        assert red2 == red
        assert ph2 == ph * Phase(sum(a * y for a, y in zip(red.top, e)))


class TestParity:
    def test_counts_genus_two(self):
        ps = [parity(c) for c in reduced_characteristics(2)]
        assert ps.count(Parity.EVEN) == 10 and ps.count(Parity.ODD) == 6

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_counts_general(self, g):
        odd = sum(parity(c) is Parity.ODD for c in reduced_characteristics(g))
        assert odd == 2 ** (g - 1) * (2**g - 1)

    def test_requires_reduced(self):
        with pytest.raises(NotReduced):
            parity(Characteristic([2], [1]))

    @given(chars(3))
    def test_parity_invariant_under_reduction(self, ch):
        red, _ = reduce_characteristic(ch)
        expected = sum(a * b for a, b in zip(ch.top, ch.bottom)) % 2
        assert int(parity(red)) == expected
        assert is_odd_integral(ch) == bool(expected)

    def test_binary_vectors_order(self):
        assert list(binary_vectors(2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


class TestPhase:
    @given(exponents, exponents, exponents)
    def test_associative(self, a, b, c):
        x, y, z = Phase(a), Phase(b), Phase(c)
        assert (x * y) * z == x * (y * z)

    @given(exponents)
    def test_inverse(self, a):
        assert Phase(a) * Phase(a).conjugate() == Phase(0)
        assert Phase(a) / Phase(a) == Phase(0)

    @given(exponents, st.integers(-6, 6))
    def test_power_matches_complex(self, a, k):
        assert abs(complex(Phase(a) ** k) - complex(Phase(a)) ** k) < 1e-12

    def test_exact_fourth_roots(self):
        assert complex(Phase(Fraction(1, 2))) == 1j
        assert complex(Phase(1)) == -1
        assert complex(Phase(3)) == -1

    @given(chars(2), chars(2), chars(2))
    def test_reduction_phases_associate(self, a, b, c):
        pa, pb, pc = (reduce_characteristic(x)[1] for x in (a, b, c))
        assert (pa * pb) * pc == pa * (pb * pc)
