"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import modular
from .characteristics import Characteristic, CharacteristicError
from .identities import Identity, ResidualReport, verify_identity
from .sampling import siegel_samples
from .siegel import SiegelError, SiegelMatrix, siegel_from_json
from .sweep import CSV_COLUMNS, SweepConfig, run_sweep
from .theta import DimensionMismatch, EvalParams, EvaluationError, ThetaCache, theta

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_FAIL = 0, 2, 3, 4


class ParseError(Exception):
    pass


class DomainError(Exception):
    pass


def _params(args) -> EvalParams:
    try:
        return EvalParams.from_env(tol=args.tol)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _tau(args) -> SiegelMatrix | None:
    text = None
    if args.tau_file:
        try:
            text = Path(args.tau_file).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.tau_file}: {exc}") from exc
    elif args.tau:
        text = args.tau
    if text is None:
        return None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"tau is not valid JSON: {exc}") from exc
    try:
        return siegel_from_json(obj)
    except (SiegelError,) as exc:
        if type(exc) is SiegelError:
            raise ParseError(str(exc)) from exc
        raise DomainError(str(exc)) from exc


def _require_tau(args) -> SiegelMatrix:
    tau = _tau(args)
    if tau is None:
        raise ParseError("--tau or --tau-file is required")
    return tau


def _parse_z(text: str | None, g: int) -> np.ndarray:
    if text is None:
        return np.zeros(g, dtype=complex)
    try:
        z = np.array([complex(s.strip().replace(" ", "")) for s in text.split(",")])
    except ValueError as exc:
        raise ParseError(f"bad --z {text!r}: expected comma-separated complex literals like 0.1+0.2j") from exc
    if z.shape != (g,):
        raise ParseError(f"--z has {z.size} entries, tau has g={g}")
    return z


def _char(text: str) -> Characteristic:
    try:
        return Characteristic.parse(text)
    except CharacteristicError as exc:
        raise ParseError(str(exc)) from exc


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _report_csv(reports: Sequence[ResidualReport]) -> None:
    sys.stdout.write("identity,tau_seed,sample,residual,normalizer,tol,pass\n")
    for r in reports:
        name = r.identity.replace('"', "'")
        seed = "" if r.tau_seed is None else str(r.tau_seed)
        sample = "" if r.sample is None else str(r.sample)
        sys.stdout.write(
            f'"{name}",{seed},{sample},{r.residual:.17g},{r.normalizer:.17g},{r.tol:.17g},'
            f'{"true" if r.passed else "false"}\n'
        )


def _emit_reports(args, reports: Sequence[ResidualReport]) -> int:
    if args.output == "csv":
        _report_csv(reports)
    else:
        _dump([r.to_json() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _verification_points(args, g: int) -> list[tuple[SiegelMatrix, int | None, int | None]]:
    tau = _tau(args)
    if tau is not None:
        if tau.dim != g:
            raise DomainError(f"tau has g={tau.dim}, identity has g={g}")
        return [(tau, None, None)]
    return [(t, args.seed, n) for n, t in enumerate(siegel_samples(g, args.seed, args.samples))]


def cmd_eval(args) -> int:
    ch = _char(args.char)
    tau = _require_tau(args)
    if ch.g != tau.dim:
        raise DomainError(f"characteristic has g={ch.g}, tau has g={tau.dim}")
    z = _parse_z(args.z, tau.dim)
    params = _params(args)
    if args.z is None:
        from .theta import theta_constant

        v = theta_constant(ch, tau, params)
    else:
        v = theta(ch, z, tau, params)
    _dump({"value_re": v.value.real, "value_im": v.value.imag, "err": v.err})
    return EXIT_OK


def cmd_lambda(args) -> int:
    tau = _require_tau(args)
    if tau.dim != 1:
        raise DomainError("lambda needs g=1")
    lam = modular.lambda_invariant(tau, _params(args))
    _dump({"lambda_re": lam.value.real, "lambda_im": lam.value.imag, "err": lam.err})
    return EXIT_OK


def cmd_modeq(args) -> int:
    try:
        params = modular.ModularEqParams(args.p, args.g, allow_large=args.allow_large_p)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if args.mu:
        mu = _char(args.mu)
        try:
            identities = [modular.modular_identity(params, mu)]
        except DimensionMismatch as exc:
            raise ParseError(str(exc)) from exc
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    else:
        identities = [modular.modular_identity(params, mu) for mu in modular.enumerate_odd(args.g)]
    if not args.verify:
        _dump([i.to_json() for i in identities])
        return EXIT_OK
    eval_params = _params(args)
    reports = []
    for tau, seed, n in _verification_points(args, args.g):
        cache = ThetaCache(tau, eval_params)
        for ident in identities:
            reports.append(verify_identity(ident, cache, rel_tol=args.rel_tol, tau_seed=seed, sample=n))
    ok = all(r.passed for r in reports)
    if args.output == "csv":
        _report_csv(reports)
    else:
        _dump({"identities": [i.to_json() for i in identities], "reports": [r.to_json() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        text = sys.stdin.read() if args.identity == "-" else Path(args.identity).read_text()
        obj = json.loads(text)
        items = obj if isinstance(obj, list) else [obj]
        identities = [Identity.from_json(o) for o in items]
        for ident in identities:
            ident.check_well_formed()
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise ParseError(f"cannot load identity: {exc}") from exc
    g = identities[0].g
    eval_params = _params(args)
    reports = []
    for tau, seed, n in _verification_points(args, g):
        cache = ThetaCache(tau, eval_params)
        for ident in identities:
            if ident.g != g:
                raise DomainError("identities in one file must share g")
            reports.append(verify_identity(ident, cache, rel_tol=args.rel_tol, tau_seed=seed, sample=n))
    return _emit_reports(args, reports)


def cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig(
            seed=args.seed, samples=args.samples, tol=args.tol, rel_tol=args.rel_tol,
            max_radius=EvalParams.from_env().max_radius,
        )
        cfg.params
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    try:
        rows = run_sweep(cfg, args.only)
        ok = True
        if args.output == "json":
            out = []
            for row in rows:
                ok &= row.passed
                if row.error:
                    sys.stderr.write(f"{row.family} {row.name} sample {row.sample}: {row.error}\n")
                out.append({"identity": row.family, "name": row.name, "sample": row.sample,
                            "residual": row.residual, "normalizer": row.normalizer, "pass": row.passed})
            _dump(out)
        else:
            sys.stdout.write(",".join(CSV_COLUMNS) + "\n")
            for row in rows:
                ok &= row.passed
                if row.error:
                    sys.stderr.write(f"{row.family} {row.name} sample {row.sample}: {row.error}\n")
                sys.stdout.write(row.csv() + "\n")
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from exc
    return EXIT_OK if ok else EXIT_FAIL


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tau", help='inline matrix JSON, e.g. {"g":1,"re":[[0]],"im":[[1]]}')
    common.add_argument("--tau-file", help="path to a matrix JSON file")
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--rel-tol", type=float, default=1e-8)
    common.add_argument("--seed", type=_u64, default=1)
    common.add_argument("--samples", type=_positive_int, default=10)
    common.add_argument("--output", choices=("json", "csv"), help="default: csv for sweep, json otherwise")

    parser = argparse.ArgumentParser(prog="thetamod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a theta function")
    p.add_argument("--char", required=True, help='characteristic "a,b;c,d" (fractions allowed)')
    p.add_argument("--z", help="comma-separated complex literals (default: z = 0)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("lambda", parents=[common], help="lambda invariant at a g=1 tau")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("modeq", parents=[common], help="emit (and verify) modular equations")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--g", type=_positive_int, required=True)
    p.add_argument("--mu", help="odd characteristic; default: all")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--allow-large-p", action="store_true")
    p.set_defaults(func=cmd_modeq)

    p = sub.add_parser("verify", parents=[common], help="verify identities from a JSON file")
    p.add_argument("identity", help="identity JSON file (object or array), '-' for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="run the full verification battery")
    p.add_argument("--only", help="restrict to one family")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.output is None:
        args.output = "csv" if args.command == "sweep" else "json"
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (DomainError, SiegelError, DimensionMismatch, EvaluationError, modular.NonRealLambda) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
