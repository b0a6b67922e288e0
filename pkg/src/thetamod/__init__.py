"""Theta functions with rational characteristics: certified evaluation and modular-equation identities."""
from .characteristics import Characteristic, Parity, Phase, parity, reduce_characteristic, shift_reduce
from .identities import Factor, Identity, ResidualReport, Term, verify_identity
from .modular import ModularEqParams, enumerate_odd, lambda_invariant, modular_identity
from .sampling import SplitMix64, random_siegel, siegel_samples
from .siegel import SiegelMatrix, scale, validate_siegel
from .theta import CertifiedComplex, EvalParams, ThetaCache, theta, theta_constant

__all__ = [
    "CertifiedComplex",
    "Characteristic",
    "EvalParams",
    "Factor",
    "Identity",
    "ModularEqParams",
    "Parity",
    "Phase",
    "ResidualReport",
    "SiegelMatrix",
    "SplitMix64",
    "Term",
    "ThetaCache",
    "enumerate_odd",
    "lambda_invariant",
    "modular_identity",
    "parity",
    "random_siegel",
    "reduce_characteristic",
    "scale",
    "shift_reduce",
    "siegel_samples",
    "theta",
    "theta_constant",
    "validate_siegel",
    "verify_identity",
]
__version__ = "0.1.0"
