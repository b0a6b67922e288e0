"""Exact theta characteristics and root-of-unity phases.

A characteristic is a pair of rational g-vectors ``[top; bottom]`` stored as
:class:`fractions.Fraction` so that every phase derived from it is exact.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

RationalLike = Union[int, str, Fraction]


class CharacteristicError(ValueError):
    """Base class for malformed or unsuitable characteristics."""


class NotIntegral(CharacteristicError):
    pass


class NotReduced(CharacteristicError):
    pass


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("characteristic entries must be exact (int, str or Fraction), got float")
    return Fraction(x)


@dataclass(frozen=True)
class Phase:
    """The root of unity ``exp(pi*i*exponent)`` with ``exponent`` kept exactly mod 2."""

    exponent: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", _as_fraction(self.exponent) % 2)

    @classmethod
    def sign(cls, k: int) -> Phase:
        """(-1)**k."""
        return cls(Fraction(k % 2))

    def __mul__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.exponent + other.exponent)

    def __truediv__(self, other: Phase) -> Phase:
        return Phase(self.exponent - other.exponent)

    def conjugate(self) -> Phase:
        return Phase(-self.exponent)

    def __pow__(self, k: int) -> Phase:
        return Phase(self.exponent * k)

    @property
    def is_real(self) -> bool:
        return self.exponent.denominator == 1

    def __complex__(self) -> complex:
        q = self.exponent
        # exact values on the fourth roots keep +-1, +-i free of rounding noise
        exact = {Fraction(0): 1.0, Fraction(1, 2): 1j, Fraction(1): -1.0, Fraction(3, 2): -1j}
        if q in exact:
            return complex(exact[q])
        return cmath.exp(1j * cmath.pi * float(q))

    def __str__(self) -> str:
        return str(self.exponent)


@dataclass(frozen=True)
class Characteristic:
    """Rational theta characteristic ``[top; bottom]``.

    Entries are normalized to :class:`Fraction` (lowest terms, positive
    denominators). Use :meth:`parse` for the text form ``"1,0;1/2,0"``.
    """

    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]

    def __init__(self, top: Iterable[RationalLike], bottom: Iterable[RationalLike]):
        t = tuple(_as_fraction(x) for x in top)
        b = tuple(_as_fraction(x) for x in bottom)
        if len(t) != len(b) or not t:
            raise CharacteristicError(f"top and bottom must be nonempty and equal length, got {len(t)} and {len(b)}")
        object.__setattr__(self, "top", t)
        object.__setattr__(self, "bottom", b)

    @property
    def g(self) -> int:
        return len(self.top)

    @classmethod
    def zero(cls, g: int) -> Characteristic:
        return cls([0] * g, [0] * g)

    @classmethod
    def parse(cls, text: str) -> Characteristic:
        try:
            top_s, bottom_s = text.split(";")
            top = [Fraction(s.strip()) for s in top_s.split(",")]
            bottom = [Fraction(s.strip()) for s in bottom_s.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise CharacteristicError(f"cannot parse characteristic {text!r}: expected 'a,b,...;c,d,...'") from exc
        return cls(top, bottom)

    def __str__(self) -> str:
        return ",".join(map(str, self.top)) + ";" + ",".join(map(str, self.bottom))

    def __repr__(self) -> str:
        return f"Characteristic('{self}')"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.top + self.bottom)

    def is_reduced(self) -> bool:
        return self.is_integral() and all(x in (0, 1) for x in self.top + self.bottom)

    def with_bottom(self, bottom: Iterable[RationalLike]) -> Characteristic:
        return Characteristic(self.top, bottom)

    def negate_bottom(self) -> Characteristic:
        return Characteristic(self.top, [-x for x in self.bottom])

    def top_float(self) -> list[float]:
        return [float(x) for x in self.top]

    def bottom_float(self) -> list[float]:
        return [float(x) for x in self.bottom]


def dot(u: Sequence[RationalLike], v: Sequence[RationalLike]) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def shift_reduce(ch: Characteristic) -> tuple[Characteristic, Phase]:
    """Reduce every entry of ``ch`` into ``[0, 2)`` by even integer shifts.

    Returns ``(reduced, phase)`` with ``theta[ch] == phase * theta[reduced]``;
    valid for rational characteristics since only the shifts must be integral.
    """
    top_red: list[Fraction] = []
    e: list[int] = []
    for x in ch.top:
        top_red.append(x % 2)
    for x in ch.bottom:
        e.append((x - x % 2) // 2)
    bottom_red = [x % 2 for x in ch.bottom]
    # theta[eps + 2m; eps' + 2e] = exp(pi i eps.e) theta[eps; eps']
    return Characteristic(top_red, bottom_red), Phase(dot(top_red, e))


def reduce_characteristic(ch: Characteristic) -> tuple[Characteristic, Phase]:
    """Reduce an integral characteristic to entries in {0, 1}."""
    if not ch.is_integral():
        raise NotIntegral(f"{ch} is not integral")
    return shift_reduce(ch)


class Parity(IntEnum):
    EVEN = 0
    ODD = 1


def parity(ch: Characteristic) -> Parity:
    """Parity of bottom.top mod 2. Requires a reduced characteristic."""
    if not ch.is_reduced():
        raise NotReduced(f"{ch} must have entries in {{0, 1}}")
    return Parity(int(dot(ch.top, ch.bottom)) % 2)


def is_even(ch: Characteristic) -> bool:
    return parity(ch) is Parity.EVEN


def is_odd_integral(ch: Characteristic) -> bool:
    """True when ``ch`` is integral and its reduction is odd (theta constant vanishes)."""
    if not ch.is_integral():
        return False
    red, _ = reduce_characteristic(ch)
    return parity(red) is Parity.ODD


def binary_vectors(g: int) -> Iterator[tuple[int, ...]]:
    """All of {0,1}^g in lexicographic order."""
    return itertools.product((0, 1), repeat=g)


def reduced_characteristics(g: int) -> list[Characteristic]:
    """All 4**g reduced integral characteristics, lexicographic in (top, bottom)."""
    return [Characteristic(t, b) for t in binary_vectors(g) for b in binary_vectors(g)]
