"""
The lambda invariant and the order-3 equation
=============================================

lambda = theta[1;0]^4 / theta[0;0]^4 parametrizes the Legendre family.
On the imaginary axis it is real in (0, 1), and lambda(tau), lambda(3 tau)
satisfy (l l')^(1/4) + ((1-l)(1-l'))^(1/4) = 1.
"""

from thetamod import (
    Characteristic,
    ModularEqParams,
    lambda_invariant,
    modular_identity,
    validate_siegel,
    verify_identity,
)
from thetamod.modular import jacobi_identity, lambda_modular_check_p3

for t in (0.6j, 1j, 2j):
    lam = lambda_invariant(t)
    r = lambda_modular_check_p3(t)
    print(f"tau={t}: lambda={lam.value.real:.12f}  order-3 residual {r.residual:.1e}")

# The same relation as a bilinear identity between constants at tau and 3 tau.
ident = modular_identity(ModularEqParams(3, 1), Characteristic.parse("1;1"))
print(ident.name, "pruned:", [str(c) for c in ident.pruned])
for t in ident.terms:
    factors = " * ".join(f"theta[{f.ch}]({'' if f.tau_scale == 1 else f.tau_scale}tau)" for f in t.factors)
    print(f"    exp(pi i {t.coeff}) {factors}")
print("holds off the axis too:", verify_identity(ident, validate_siegel([[0.31 + 0.77j]])).passed)
print("Jacobi quartic:", verify_identity(jacobi_identity(), validate_siegel([[0.31 + 0.77j]])).residual)
