"""The default verification battery, one row per (identity, tau sample)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import genus2, modular, structural
from .characteristics import Characteristic, binary_vectors
from .identities import ResidualReport, verify_identity
from .sampling import siegel_samples
from .theta import EvalParams, EvaluationError, ThetaCache, theta, theta_constant

DEFAULT_MODULAR_SET = ((3, 1), (5, 1), (7, 1), (3, 2), (7, 2))
DIVISION_SET = ((3, 1), (7, 1), (3, 2))
LAMBDA_AXIS = (0.6j, 0.8j, 1j, 1.3j, 2j)
CSV_COLUMNS = ("identity", "name", "sample", "residual", "normalizer", "pass")


@dataclass
class Row:
    family: str
    name: str
    sample: int
    residual: float
    normalizer: float
    passed: bool
    error: str | None = None

    def csv(self) -> str:
        name = self.name.replace('"', "'")
        return ",".join(
            [self.family, f'"{name}"', str(self.sample), f"{self.residual:.17g}", f"{self.normalizer:.17g}",
             "true" if self.passed else "false"]
        )


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 1
    samples: int = 10
    tol: float = 1e-12
    rel_tol: float = 1e-8
    max_radius: int = 200

    @property
    def params(self) -> EvalParams:
        return EvalParams(tol=self.tol, max_radius=self.max_radius)


FAMILIES: dict[str, Callable[[SweepConfig], Iterator[Row]]] = {}


def family(name: str):
    def deco(fn):
        FAMILIES[name] = fn
        return fn
    return deco


def _row(family: str, report: ResidualReport, sample: int) -> Row:
    return Row(family, report.identity, sample, report.residual, report.normalizer, report.passed)


def _guarded(family: str, name: str, sample: int, fn: Callable[[], Row]) -> Row:
    try:
        return fn()
    except (EvaluationError, structural.BranchUnresolvable, modular.NonRealLambda) as exc:
        return Row(family, name, sample, float("nan"), float("nan"), False, f"{type(exc).__name__}: {exc}")


@family("odd_vanishing")
def _odd_vanishing(cfg: SweepConfig) -> Iterator[Row]:
    for g in (1, 2, 3):
        for n, tau in enumerate(siegel_samples(g, cfg.seed, cfg.samples)):
            for ch in modular.enumerate_odd(g):
                name = f"odd g={g} [{ch}]"

                def run(ch=ch, tau=tau, name=name, n=n):
                    v = theta(ch, np.zeros(tau.dim), tau, cfg.params)
                    return Row("odd_vanishing", name, n, abs(v.value), v.err, abs(v.value) <= v.err + 1e-12)

                yield _guarded("odd_vanishing", name, n, run)


def _identity_family(family: str, builders, g_values, cfg: SweepConfig, rel_tol: float) -> Iterator[Row]:
    for g in g_values:
        idents = builders(g)
        for n, tau in enumerate(siegel_samples(g, cfg.seed, cfg.samples)):
            cache = ThetaCache(tau, cfg.params)
            for ident in idents:
                yield _guarded(
                    family, ident.name, n,
                    lambda ident=ident, cache=cache, n=n: _row(
                        family, verify_identity(ident, cache, rel_tol=rel_tol, tau_seed=cfg.seed, sample=n), n
                    ),
                )


def _pairs(g):
    return [(e, e1) for e in binary_vectors(g) for e1 in binary_vectors(g)]



@family("jacobi")
def _jacobi(cfg):
    return _identity_family("jacobi", lambda g: [modular.jacobi_identity()], (1,), cfg, cfg.rel_tol)


@family("duplication")
def _dup(cfg):
    return _identity_family(
        "duplication", lambda g: [structural.duplication_identity(e, e1) for e, e1 in _pairs(g)], (1, 2), cfg, cfg.rel_tol
    )


@family("quadruple_expansion")
def _qexp(cfg):
    def build(g):
        return [structural.quadruple_expansion_identity(d) for d in binary_vectors(g)]

    return _identity_family("quadruple_expansion", build, (1, 2), cfg, cfg.rel_tol)


@family("quadruple_inversion")
def _qinv(cfg):
    def build(g):
        return [structural.quadruple_inversion_identity(b) for b in binary_vectors(g)]

    return _identity_family("quadruple_inversion", build, (1, 2), cfg, cfg.rel_tol)


@family("square_doubling")
def _sqd(cfg):
    def build(g):
        return [structural.square_doubling_identity(e, e1) for e, e1 in _pairs(g)]

    return _identity_family("square_doubling", build, (1, 2), cfg, cfg.rel_tol)


@family("fourier")
def _fourier(cfg):
    for g in (1, 2):
        for n, tau in enumerate(siegel_samples(g, cfg.seed, cfg.samples)):
            name = f"fourier round trip g={g}"

            def run(tau=tau, n=n, name=name):
                dev, bound = structural.fourier_round_trip(tau, cfg.params)
                return Row("fourier", name, n, dev, bound, dev <= bound)

            yield _guarded("fourier", name, n, run)


@family("lambda_p3")
def _lambda(cfg):
    for n, t in enumerate(LAMBDA_AXIS):
        name = f"lambda p=3 tau={t}"
        yield _guarded(
            "lambda_p3", name, n,
            lambda t=t, n=n: _row("lambda_p3", modular.lambda_modular_check_p3(t, cfg.params), n),
        )


@family("modular")
def _modular(cfg):
    for p, g in DEFAULT_MODULAR_SET:
        params = modular.ModularEqParams(p, g)
        idents = [modular.modular_identity(params, mu) for mu in modular.enumerate_odd(g)]
        for n, tau in enumerate(siegel_samples(g, cfg.seed, cfg.samples)):
            cache = ThetaCache(tau, cfg.params)
            for ident in idents:
                yield _guarded(
                    "modular", ident.name, n,
                    lambda ident=ident, cache=cache, n=n: _row(
                        "modular", verify_identity(ident, cache, rel_tol=cfg.rel_tol, tau_seed=cfg.seed, sample=n), n
                    ),
                )


@family("division")
def _division(cfg):
    for p, g in DIVISION_SET:
        params = modular.ModularEqParams(p, g)
        for n, tau in enumerate(siegel_samples(g, cfg.seed, cfg.samples)):
            for mu in modular.enumerate_odd(g):
                name = f"division p={p} g={g} mu=[{mu}]"
                yield _guarded(
                    "division", name, n,
                    lambda mu=mu, tau=tau, n=n, params=params: _row(
                        "division", modular.order_k_division_check(params, mu, tau, cfg.params, cfg.rel_tol), n
                    ),
                )


@family("genus2")
def _genus2(cfg):
    def build(g):
        return genus2.full_catalog(genus2.LABEL_MATRIX_CORRECTED)

    return _identity_family("genus2", build, (2,), cfg, cfg.rel_tol)


@family("construct")
def _construct(cfg):
    chars = [Characteristic.parse(s) for s in ("0;1/2", "1;1/2", "0;1/4", "0;3/4", "1;1/4", "1;3/4")]
    for n, tau in enumerate(siegel_samples(1, cfg.seed, cfg.samples)):
        for ch in chars:
            name = f"construct [{ch}]"

            def run(ch=ch, tau=tau, n=n, name=name):
                built = structural.construct_half_characteristics(ch, tau, cfg.params)
                direct = theta_constant(ch, tau, cfg.params)
                res = abs(built.value - direct.value)
                norm = abs(direct.value)
                return Row("construct", name, n, res, norm, res <= max(cfg.tol, cfg.rel_tol * norm))

            yield _guarded("construct", name, n, run)


def run_sweep(cfg: SweepConfig = SweepConfig(), only: str | None = None) -> Iterator[Row]:
    if only is not None and only not in FAMILIES:
        raise KeyError(f"unknown family {only!r}; choose from {', '.join(FAMILIES)}")
    for name, fn in FAMILIES.items():
        if only is None or name == only:
            yield from fn(cfg)
