"""
Certified theta evaluation
==========================

A theta value comes back with an absolute error bound that covers both the
truncated lattice tail and floating-point rounding.
"""

import numpy as np

from thetamod import Characteristic, EvalParams, theta, theta_constant, validate_siegel

# The simplest point of the upper half plane.
tau = validate_siegel([[1j]])
v = theta_constant(Characteristic.parse("0;0"), tau)
print(f"theta[0;0](0, i) = {v.value.real:.15f}  (err {v.err:.1e})")

# A classical check: theta[0;1](0, i) = theta[0;0](0, i) / 2^(1/4).
w = theta_constant(Characteristic.parse("0;1"), tau)
print(f"ratio check: {abs(w.value - v.value / 2**0.25):.1e}")

# Loosening the tolerance shrinks the box and widens the bound.
for tol in (1e-4, 1e-8, 1e-14):
    c = theta_constant(Characteristic.parse("0;0"), tau, EvalParams(tol=tol))
    print(f"tol {tol:.0e}: value {c.value.real:.15f} err {c.err:.1e}")

# Genus two, rational characteristic, nonzero z.
tau2 = validate_siegel([[0.3 + 1.2j, 0.1 + 0.4j], [0.1 + 0.4j, -0.2 + 0.9j]])
ch = Characteristic.parse("1,0;1/2,0")
z = np.array([0.1 + 0.05j, -0.2j])
r = theta(ch, z, tau2)
print(f"theta[{ch}](z, tau) = {r.value:.12f}  (err {r.err:.1e})")

# Odd integral characteristics give exact zeros at z = 0.
print("odd constant:", theta_constant(Characteristic.parse("1,1;1,0"), tau2))
