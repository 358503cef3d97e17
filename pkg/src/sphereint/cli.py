"""Command-line front end.

One subcommand per operation; --json switches the human rendering to a
single JSON object with a fixed field set:

    operation, inputs, exact, decimal, oracle_value, oracle_error,
    agreement_sigma, status

Keys are always present, null when not applicable.  Exit codes: 0 success,
1 usage error, 2 domain error, 3 oracle disagreement under --verify.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .exactpi import DomainError, PiRational, to_float
from .fluid import FluidParams, fluid_closed, fluid_series, gamma_power_values
from .integrals import (
    SphereDim,
    dirichlet_abs,
    dirichlet_abs_float,
    dirichlet_signed,
    mu_power_float,
    mu_power_integral,
    reduction_rhs,
    sphere_volume,
)
from .oracle import (
    MCConfig,
    mc_integrate,
    monomial_values,
    mu_power_values,
    poly_integrate,
    polynomial_values,
    quad_integrate,
    sample_batch,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; 2 is reserved for domain errors
    def error(self, message):
        raise _UsageError(message)


def _number(text: str):
    """int for integer literals (exact path), float otherwise."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise _UsageError(
            f"{text!r} is not a number; write an integer like 2 for the exact "
            "path or a decimal like 0.5 for the floating path"
        )


def _number_list(raw):
    out = []
    for item in raw or []:
        for tok in item.split(","):
            tok = tok.strip()
            if tok:
                out.append(_number(tok))
    return out


def _add_verify_args(sub):
    sub.add_argument("--verify", action="store_true", help="run a brute-force oracle and compare")
    sub.add_argument("--oracle", choices=("mc", "quad"), default="mc")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--samples", type=int, default=100_000)
    sub.add_argument("--nodes", type=int, default=32, help="quadrature nodes per axis")
    sub.add_argument("--sigma", type=float, default=3.0, help="MC disagreement threshold")


def _add_common(sub):
    sub.add_argument("--json", action="store_true", help="emit one JSON report object")
    sub.add_argument("--digits", type=int, default=12, help="significant digits in text output")


def build_parser() -> _Parser:
    parser = _Parser(prog="sphereint", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("volume", help="total volume of S^D")
    p.add_argument("--D", type=int, required=True)
    _add_common(p)
    _add_verify_args(p)

    p = subs.add_parser("dirichlet", help="monomial integral over S^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", action="append", metavar="A[,A...]",
                   help="one exponent per coordinate; repeat or comma-separate")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--signed", action="store_true", help="integrate prod x_j^a_j")
    g.add_argument("--abs", dest="absolute", action="store_true",
                   help="integrate prod |x_j|^a_j")
    _add_common(p)
    _add_verify_args(p)

    p = subs.add_parser("mu-power", help="polar-radius power integral over S^D")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--alpha", action="append", metavar="A[,A...]")
    _add_common(p)
    _add_verify_args(p)

    p = subs.add_parser("reduce", help="check the sphere-within-a-sphere reduction")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--alpha", action="append", metavar="A[,A...]")
    _add_common(p)

    p = subs.add_parser("fluid", help="integral of the Lorentz factor power gamma^(D+1)")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--omega", action="append", metavar="W[,W...]",
                   help="one angular velocity per rotation circle")
    p.add_argument("--series", action="store_true", help="also evaluate the truncated series")
    p.add_argument("--kmax", type=int, default=30, help="series truncation order")
    _add_common(p)
    _add_verify_args(p)

    p = subs.add_parser("integrate-poly", help="integrate a polynomial file over S^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--file", required=True, help="one monomial per line: coeff e1 ... e_(n+1)")
    _add_common(p)
    _add_verify_args(p)

    p = subs.add_parser("sample", help="dump uniform samples on S^D")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    _add_common(p)

    return parser


def parse_polynomial(text: str, n: int) -> dict:
    """Parse 'coefficient e1 ... e_(n+1)' lines; # starts a comment."""
    poly = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != n + 2:
            raise ValueError(
                f"line {lineno}: expected a coefficient and {n + 1} exponents, "
                f"got {len(parts)} fields"
            )
        try:
            coeff = Fraction(parts[0])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: bad coefficient {parts[0]!r}; write p/q or an integer")
        try:
            exps = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: exponents must be integers")
        if any(e < 0 for e in exps):
            raise ValueError(f"line {lineno}: exponents must be >= 0")
        poly[exps] = poly.get(exps, Fraction(0)) + coeff
    if not poly:
        raise ValueError("polynomial file has no terms")
    return poly


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def _sigma_of(diff: float, se: float, scale: float) -> float:
    if se > 0.0:
        return diff / se
    return 0.0 if diff <= 1e-12 * abs(scale) else math.inf


def _report(operation, inputs, exact=None, decimal=None, oracle_value=None,
            oracle_error=None, agreement_sigma=None, status="ok"):
    return {
        "operation": operation,
        "inputs": inputs,
        "exact": None if exact is None else str(exact),
        "decimal": decimal,
        "oracle_value": oracle_value,
        "oracle_error": oracle_error,
        "agreement_sigma": agreement_sigma,
        "status": status,
    }


def _verify(args, decimal, mc_dim, mc_f, quad_f=None, quad_dim=None, quad_scale=1.0):
    """Run the chosen oracle against the closed value; returns report fields."""
    if args.oracle == "mc":
        est = mc_integrate(mc_dim, mc_f, MCConfig(seed=args.seed, samples=args.samples))
        sigma = _sigma_of(abs(decimal - est.value), est.std_error, decimal)
        ok = sigma <= args.sigma
        return est.value, est.std_error, sigma, ok
    if quad_f is None:
        raise DomainError("quadrature verification is not available for this operation")
    est = quad_integrate(quad_dim if quad_dim is not None else mc_dim, quad_f, args.nodes)
    value = est.value * quad_scale
    bound = est.error_bound * abs(quad_scale)
    sigma = abs(decimal - value) / bound
    return value, bound, sigma, sigma <= 1.0


def _emit(args, report, lines, out):
    if args.json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _decimal_of(value) -> float:
    return to_float(value) if isinstance(value, PiRational) else float(value)


def _headline(value, digits: int) -> str:
    if isinstance(value, PiRational):
        return f"{value} = {_fmt(to_float(value), digits)}"
    return _fmt(float(value), digits)


def _cmd_volume(args, out):
    dim = SphereDim(args.D)
    exact = sphere_volume(dim)
    decimal = to_float(exact)
    inputs = {"D": args.D}
    lines = [_headline(exact, args.digits)]
    ov = oe = sig = None
    status = "ok"
    if args.verify:
        inputs.update(oracle=args.oracle, seed=args.seed, samples=args.samples, nodes=args.nodes)
        ov, oe, sig, ok = _verify(
            args, decimal, dim,
            lambda b: np.ones(len(b)),
            quad_f=lambda mus: np.ones(mus.shape[0]),
        )
        status = "ok" if ok else "disagree"
        lines += [f"oracle ({args.oracle}) = {_fmt(ov, args.digits)} +- {oe:.3g}",
                  f"agreement sigma = {sig:.3g}", f"status = {status}"]
    _emit(args, _report("volume", inputs, exact, decimal, ov, oe, sig, status), lines, out)
    return 0 if status == "ok" else 3


def _cmd_dirichlet(args, out):
    alphas = _number_list(args.alpha)
    if not alphas:
        raise _UsageError("pass --alpha, one exponent per coordinate (repeat or comma-separate)")
    mode = "signed" if args.signed else "abs"
    if args.signed:
        exact = dirichlet_signed(args.n, alphas)
        decimal = to_float(exact)
    else:
        value = dirichlet_abs(args.n, alphas)
        exact = value if isinstance(value, PiRational) else None
        decimal = _decimal_of(value)
    inputs = {"n": args.n, "alpha": alphas, "mode": mode}
    lines = [_headline(exact if exact is not None else decimal, args.digits)]
    ov = oe = sig = None
    status = "ok"
    if args.verify:
        inputs.update(oracle=args.oracle, seed=args.seed, samples=args.samples, nodes=args.nodes)
        if args.n < 1:
            raise DomainError("oracle verification needs n >= 1; the n = 0 sphere is two points")
        if args.oracle == "quad" and args.signed and any(a % 2 for a in alphas):
            raise DomainError(
                "quadrature verifies |x| integrands only; an odd signed case is "
                "exactly zero, check it with --oracle mc"
            )
        # quadrature route: lift to polar-radius powers a-1 on S^(2n+1)
        lift_dim = SphereDim(2 * args.n + 1)
        lifted = tuple(a - 1 for a in alphas)
        ov, oe, sig, ok = _verify(
            args, decimal, args.n,
            lambda b: monomial_values(b.xs, alphas, absolute=not args.signed),
            quad_f=lambda mus: mu_power_values(mus, lifted),
            quad_dim=lift_dim,
            quad_scale=math.pi ** -(args.n + 1),
        )
        status = "ok" if ok else "disagree"
        lines += [f"oracle ({args.oracle}) = {_fmt(ov, args.digits)} +- {oe:.3g}",
                  f"agreement sigma = {sig:.3g}", f"status = {status}"]
    _emit(args, _report("dirichlet", inputs, exact, decimal, ov, oe, sig, status), lines, out)
    return 0 if status == "ok" else 3


def _cmd_mu_power(args, out):
    alphas = _number_list(args.alpha)
    if not alphas:
        raise _UsageError("pass --alpha, one exponent per rotation circle")
    dim = SphereDim(args.D)
    value = mu_power_integral(dim, alphas)
    exact = value if isinstance(value, PiRational) else None
    decimal = _decimal_of(value)
    inputs = {"D": args.D, "alpha": alphas}
    lines = [_headline(exact if exact is not None else decimal, args.digits)]
    ov = oe = sig = None
    status = "ok"
    if args.verify:
        inputs.update(oracle=args.oracle, seed=args.seed, samples=args.samples, nodes=args.nodes)
        ov, oe, sig, ok = _verify(
            args, decimal, dim,
            lambda b: mu_power_values(b.mus, alphas),
            quad_f=lambda mus: mu_power_values(mus, alphas),
        )
        status = "ok" if ok else "disagree"
        lines += [f"oracle ({args.oracle}) = {_fmt(ov, args.digits)} +- {oe:.3g}",
                  f"agreement sigma = {sig:.3g}", f"status = {status}"]
    _emit(args, _report("mu-power", inputs, exact, decimal, ov, oe, sig, status), lines, out)
    return 0 if status == "ok" else 3


def _cmd_reduce(args, out):
    alphas = _number_list(args.alpha)
    if not alphas:
        raise _UsageError("pass --alpha, one exponent per rotation circle")
    dim = SphereDim(args.D)
    direct = mu_power_integral(dim, alphas)
    reduced = reduction_rhs(dim, alphas)
    exact = direct if isinstance(direct, PiRational) else None
    decimal = _decimal_of(direct)
    reduced_decimal = _decimal_of(reduced)
    if exact is not None:
        agree = direct == reduced
        sig = 0.0 if agree else math.inf
        note = "exact" if agree else "MISMATCH"
    else:
        gap = abs(decimal - reduced_decimal) / max(abs(decimal), 1e-300)
        agree = gap <= 1e-10
        sig = gap
        note = f"relative gap {gap:.3g}"
    status = "ok" if agree else "disagree"
    inputs = {"D": args.D, "alpha": alphas, "oracle": "reduction"}
    lines = [
        f"direct:  {_headline(direct, args.digits)}",
        f"reduced: {_headline(reduced, args.digits)}",
        f"agreement: {note}",
        f"status = {status}",
    ]
    report = _report("reduce", inputs, exact, decimal, reduced_decimal, 0.0, sig, status)
    _emit(args, report, lines, out)
    return 0 if status == "ok" else 3


def _cmd_fluid(args, out):
    omegas = [float(w) for w in _number_list(args.omega)]
    if not omegas:
        raise _UsageError("pass --omega, one angular velocity per rotation circle")
    params = FluidParams(args.D, omegas)
    decimal = fluid_closed(params)
    inputs = {"D": args.D, "omega": omegas}
    lines = [_fmt(decimal, args.digits)]
    ov = oe = sig = None
    status = "ok"
    if args.series and args.verify:
        raise _UsageError("--series and --verify are separate checks; pick one per run")
    if args.series:
        inputs.update(oracle="series", kmax=args.kmax)
        res = fluid_series(params, args.kmax)
        gap = abs(res.value - decimal) / abs(decimal)
        ov, oe, sig = res.value, res.last_term_magnitude, gap
        lines += [
            f"series (kmax={args.kmax}) = {_fmt(res.value, args.digits)} "
            f"(terms={res.terms_used}, last shell={res.last_term_magnitude:.3g})",
            f"relative gap = {gap:.3g}",
        ]
    elif args.verify:
        inputs.update(oracle=args.oracle, seed=args.seed, samples=args.samples, nodes=args.nodes)
        ov, oe, sig, ok = _verify(
            args, decimal, params.dim,
            lambda b: gamma_power_values(b.mus, params),
            quad_f=lambda mus: gamma_power_values(mus, params),
        )
        status = "ok" if ok else "disagree"
        lines += [f"oracle ({args.oracle}) = {_fmt(ov, args.digits)} +- {oe:.3g}",
                  f"agreement sigma = {sig:.3g}", f"status = {status}"]
    _emit(args, _report("fluid", inputs, None, decimal, ov, oe, sig, status), lines, out)
    return 0 if status == "ok" else 3


def _cmd_integrate_poly(args, out):
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {args.file}: {e}")
    poly = parse_polynomial(text, args.n)
    exact = poly_integrate(args.n, poly)
    decimal = to_float(exact)
    inputs = {"n": args.n, "file": args.file, "terms": len(poly)}
    lines = [_headline(exact, args.digits)]
    ov = oe = sig = None
    status = "ok"
    if args.verify:
        if args.n < 1:
            raise DomainError("oracle verification needs n >= 1")
        if args.oracle == "quad":
            raise DomainError(
                "signed polynomials are not radii-only integrands; verify with --oracle mc"
            )
        inputs.update(oracle="mc", seed=args.seed, samples=args.samples)
        ov, oe, sig, ok = _verify(
            args, decimal, args.n, lambda b: polynomial_values(b.xs, poly)
        )
        status = "ok" if ok else "disagree"
        lines += [f"oracle (mc) = {_fmt(ov, args.digits)} +- {oe:.3g}",
                  f"agreement sigma = {sig:.3g}", f"status = {status}"]
    _emit(args, _report("integrate-poly", inputs, exact, decimal, ov, oe, sig, status), lines, out)
    return 0 if status == "ok" else 3


def _cmd_sample(args, out):
    if args.count < 1:
        raise _UsageError("--count must be >= 1")
    dim = SphereDim(args.D)
    batch = sample_batch(dim, MCConfig(seed=args.seed, samples=args.count))
    header = (
        [f"x{i+1}" for i in range(dim.D + 1)]
        + [f"mu{i+1}" for i in range(dim.n_mu)]
        + [f"phi{i+1}" for i in range(dim.n_angles)]
    )
    if args.json:
        points = [
            {
                "xs": [float(v) for v in batch.xs[i]],
                "mus": [float(v) for v in batch.mus[i]],
                "phis": [float(v) for v in batch.phis[i]],
            }
            for i in range(len(batch))
        ]
        report = _report("sample", {"D": args.D, "seed": args.seed, "count": args.count})
        report["points"] = points
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        out.write(",".join(header) + "\n")
        for i in range(len(batch)):
            row = list(batch.xs[i]) + list(batch.mus[i]) + list(batch.phis[i])
            out.write(",".join(repr(float(v)) for v in row) + "\n")
    return 0


_COMMANDS = {
    "volume": _cmd_volume,
    "dirichlet": _cmd_dirichlet,
    "mu-power": _cmd_mu_power,
    "reduce": _cmd_reduce,
    "fluid": _cmd_fluid,
    "integrate-poly": _cmd_integrate_poly,
    "sample": _cmd_sample,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except _UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except (DomainError, ValueError, TypeError, OverflowError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
