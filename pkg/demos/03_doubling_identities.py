"""
Doubling identities and constructing rational constants
=======================================================

Squares of constants at tau are bilinear in constants at 2 tau, and the
map between bottom and top characteristics at 4 tau is a signed Fourier
transform. Repeating these lets a constant with a dyadic bottom be rebuilt
from integral constants, with each square-root branch pinned by a cheap
direct evaluation.
"""

from thetamod import Characteristic, siegel_samples, theta_constant, verify_identity
from thetamod.structural import (
    construct_half_characteristics,
    duplication_identity,
    fourier_round_trip,
    gram_exact,
    square_doubling_identity,
)

tau = siegel_samples(2, seed=3, count=1)[0]

for ident in (duplication_identity([1, 0], [0, 1]), square_doubling_identity([1, 0], [1, 1])):
    r = verify_identity(ident, tau, rel_tol=1e-9)
    print(f"{ident.name:30s} residual {r.residual:.1e}  max term {r.normalizer:.2f}  pass={r.passed}")

print("exact Gram matrix of the sign transform, g=2:", gram_exact(2))
dev, bound = fourier_round_trip(tau)
print(f"round trip deviation {dev:.1e} within bound {bound:.1e}")

tau1 = siegel_samples(1, seed=3, count=1)[0]
for text in ("0;1/2", "1;1/4", "1;3/8"):
    ch = Characteristic.parse(text)
    built = construct_half_characteristics(ch, tau1)
    direct = theta_constant(ch, tau1)
    print(f"[{text}] built {built.value:.12f} direct {direct.value:.12f}")
