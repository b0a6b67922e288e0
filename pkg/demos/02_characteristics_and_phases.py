"""
Characteristics and exact phases
================================

Characteristics hold exact rationals. Shifting one by even integers changes
theta only by a root of unity, which is tracked exactly.
"""

from thetamod import Characteristic, Phase, parity, reduce_characteristic, shift_reduce
from thetamod.characteristics import reduced_characteristics

for text in ("2;1", "1;3", "3,1;5,-2"):
    red, ph = reduce_characteristic(Characteristic.parse(text))
    print(f"[{text}] -> [{red}] times exp(pi i * {ph})")

# Rational bottoms reduce the same way as long as the shift is integral.
red, ph = shift_reduce(Characteristic.parse("3;5/2"))
print(f"[3;5/2] -> [{red}] times exp(pi i * {ph})")

# Genus two has ten even and six odd reduced characteristics.
chars = reduced_characteristics(2)
odd = [str(c) for c in chars if parity(c)]
print(f"{len(chars) - len(odd)} even, {len(odd)} odd:", ", ".join(odd))

# Phase arithmetic never touches floating point.
p = Phase("1/3") * Phase("5/3") ** 2
print("exp(pi i/3) * exp(5 pi i/3)^2 =", f"exp(pi i * {p})", complex(p))
