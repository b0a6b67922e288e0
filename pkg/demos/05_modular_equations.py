"""
Modular equations of prime order
================================

For an odd prime p, summing signed translates of theta^l(z, tau) theta(pz, p tau)
over division points yields a relation between constants at tau and p tau.
The characteristic at p tau carries the bottom 2 p nu'/p1; with bottom
2 nu'/p1 instead, the relation only survives when p = +-1 mod 2 p1.
"""

from thetamod import Characteristic, ModularEqParams, enumerate_odd, modular_identity, siegel_samples, verify_identity
from thetamod.modular import order_k_division_check

for p, g in ((5, 1), (7, 1), (7, 2)):
    params = ModularEqParams(p, g)
    idents = [modular_identity(params, mu) for mu in enumerate_odd(g)]
    taus = siegel_samples(g, seed=1, count=5)
    worst = max(verify_identity(i, t).relative for i in idents for t in taus)
    print(f"p={p} g={g}: k={params.k} l={params.l}, {len(idents)} identities of {len(idents[0].terms)} terms, worst rel {worst:.1e}")

mu = Characteristic.parse("1;1")
tau = siegel_samples(1, seed=1, count=1)[0]
for p in (3, 5, 7):
    literal = modular_identity(ModularEqParams(p, 1), mu, literal=True)
    print(f"p={p} with unscaled bottom: relative residual {verify_identity(literal, tau).relative:.1e}")

# The underlying vanishing sum: f evaluated at the division points directly.
r = order_k_division_check(ModularEqParams(7, 1), mu, tau)
print(f"division-point sum p=7: residual {r.residual:.1e} over max term {r.normalizer:.2f}")
