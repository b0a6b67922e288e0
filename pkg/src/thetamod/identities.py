"""Formal identities between theta constants and their numeric verification."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .characteristics import Characteristic, CharacteristicError, Phase
from .siegel import SiegelMatrix
from .theta import CertifiedComplex, DimensionMismatch, EvalParams, ThetaCache


class EmptyIdentity(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    ch: Characteristic
    tau_scale: int = 1
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.tau_scale < 1 or self.exponent < 1:
            raise ValueError("tau_scale and exponent must be positive integers")


@dataclass(frozen=True)
class Term:
    """``weight * exp(pi i coeff) * prod(factors)``.

    ``weight`` is an exact rational (1 unless an identity needs a
    normalization such as 2**-g).
    """

    coeff: Phase
    factors: tuple[Factor, ...]
    weight: Fraction = Fraction(1)

    def scalar(self) -> complex:
        return complex(self.coeff) * float(self.weight)


@dataclass(frozen=True)
class Identity:
    """``sum(terms) == 0`` for every tau in H_g (claimed, to be verified)."""

    name: str
    terms: tuple[Term, ...]
    pruned: tuple[Characteristic, ...] = ()
    meta: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def g(self) -> int:
        return self.terms[0].factors[0].ch.g

    def check_well_formed(self) -> None:
        if not self.terms:
            raise EmptyIdentity(f"identity {self.name!r} has no terms")
        gs = {f.ch.g for t in self.terms for f in t.factors}
        if len(gs) > 1:
            raise DimensionMismatch(f"identity {self.name!r} mixes genera {sorted(gs)}")

    def negate_term(self, index: int) -> Identity:
        """Copy with one term's sign flipped (for corruption tests)."""
        terms = list(self.terms)
        t = terms[index]
        terms[index] = Term(t.coeff * Phase(1), t.factors, t.weight)
        return Identity(self.name + f" [term {index} negated]", tuple(terms), self.pruned, dict(self.meta))

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "terms": []}
        for t in self.terms:
            term: dict[str, Any] = {
                "coeff_exp_over_pi_i": str(t.coeff.exponent),
                "factors": [{"char": str(f.ch), "tau_scale": f.tau_scale, "power": f.exponent} for f in t.factors],
            }
            if t.weight != 1:
                term["weight"] = str(t.weight)
            out["terms"].append(term)
        if self.pruned:
            out["pruned"] = [str(c) for c in self.pruned]
        return out

    @classmethod
    def from_json(cls, obj: dict[str, Any] | str) -> Identity:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            terms = tuple(
                Term(
                    Phase(Fraction(t["coeff_exp_over_pi_i"])),
                    tuple(
                        Factor(Characteristic.parse(f["char"]), int(f["tau_scale"]), int(f["power"]))
                        for f in t["factors"]
                    ),
                    Fraction(t.get("weight", 1)),
                )
                for t in obj["terms"]
            )
            pruned = tuple(Characteristic.parse(c) for c in obj.get("pruned", []))
            return cls(str(obj["name"]), terms, pruned)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, CharacteristicError):
                raise
            raise ValueError(f"bad identity JSON: {exc}") from exc


def term(coeff: Phase | int, *factors: Factor, weight: Fraction | int = 1) -> Term:
    """Shorthand; an int ``coeff`` k means (-1)**k."""
    if isinstance(coeff, int):
        coeff = Phase.sign(coeff)
    return Term(coeff, tuple(factors), Fraction(weight))


@dataclass
class ResidualReport:
    identity: str
    residual: float
    normalizer: float
    tol: float
    passed: bool
    rel_tol: float = 0.0
    err: float = 0.0
    tau_seed: int | None = None
    sample: int | None = None
    values: tuple[complex, ...] = ()

    @property
    def relative(self) -> float:
        return self.residual / self.normalizer if self.normalizer > 0 else 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "tau_seed": self.tau_seed,
            "sample": self.sample,
            "residual": self.residual,
            "normalizer": self.normalizer,
            "tol": self.tol,
            "pass": self.passed,
        }


def verdict(residual: float, normalizer: float, tol: float, rel_tol: float) -> bool:
    return residual <= max(tol, rel_tol * normalizer)


def report_from_values(
    name: str,
    values: Iterable[CertifiedComplex],
    tol: float,
    rel_tol: float,
    tau_seed: int | None = None,
    sample: int | None = None,
) -> ResidualReport:
    """Report for the claim ``sum(values) == 0``."""
    values = list(values)
    total = sum(values, CertifiedComplex(0.0))
    normalizer = max((abs(v) for v in values), default=0.0)
    residual = abs(total.value)
    return ResidualReport(
        identity=name,
        residual=residual,
        normalizer=normalizer,
        tol=tol,
        passed=verdict(residual, normalizer, tol, rel_tol),
        rel_tol=rel_tol,
        err=total.err,
        tau_seed=tau_seed,
        sample=sample,
        values=tuple(v.value for v in values),
    )


def term_values(identity: Identity, cache: ThetaCache) -> list[CertifiedComplex]:
    out = []
    for t in identity.terms:
        v = CertifiedComplex(t.scalar())
        for f in t.factors:
            v = v * cache(f.ch, f.tau_scale) ** f.exponent
        out.append(v)
    return out


def verify_identity(
    identity: Identity,
    tau: SiegelMatrix | ThetaCache,
    params: EvalParams = EvalParams(),
    rel_tol: float = 1e-8,
    tau_seed: int | None = None,
    sample: int | None = None,
) -> ResidualReport:
    """Evaluate ``identity`` at ``tau``; PASS iff |sum| <= max(tol, rel_tol * max|term|).

    Pass a :class:`ThetaCache` to share constants across identities at the same tau.
    """
    identity.check_well_formed()
    cache = tau if isinstance(tau, ThetaCache) else ThetaCache(tau, params)
    if identity.g != cache.tau.dim:
        raise DimensionMismatch(f"identity has g={identity.g}, tau has g={cache.tau.dim}")
    return report_from_values(
        identity.name, term_values(identity, cache), cache.params.tol, rel_tol, tau_seed, sample
    )
