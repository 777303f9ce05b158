"""Command-line surface: valuations, norms, digit expansions, lifts, oracle.

Exit codes: 0 ok, 2 parse/argument error, 3 non-prime p, 4 zero has no
expansion, 5 lifting hypothesis failed, 6 internal bound violation,
7 scan domain too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import hensel, oracle
from .errors import (
    DerivativeVanishes,
    DomainTooLarge,
    HypothesisFailed,
    InternalBoundViolation,
    NotPrime,
    PadicError,
    ZeroHasNoExpansion,
)
from .number import DEFAULT_PRECISION, Form, PadicNumber
from .polynomial import PadicPoly, parse_poly
from .valuation import Prime, padic_norm_rat, padic_val_rat

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_PRIME = 3
EXIT_ZERO_EXPANSION = 4
EXIT_HYPOTHESIS = 5
EXIT_INTERNAL = 6
EXIT_DOMAIN = 7


@dataclass
class CliConfig:
    prime: Prime
    rel_precision: int = DEFAULT_PRECISION
    abs_precision: int | None = None
    json_output: bool = False
    poly: PadicPoly | None = None
    rationals: tuple[Fraction, ...] = field(default_factory=tuple)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    prime_flags = argparse.ArgumentParser(add_help=False)
    prime_flags.add_argument("-p", type=int, required=True, metavar="P",
                             help="prime base")
    prime_flags.add_argument("--json", action="store_true",
                             help="emit JSON instead of text")
    rel_flags = argparse.ArgumentParser(add_help=False)
    rel_flags.add_argument("-N", type=_positive_int, default=DEFAULT_PRECISION,
                           metavar="N", help="relative precision in digits")
    abs_flags = argparse.ArgumentParser(add_help=False)
    abs_flags.add_argument("-K", "-k", dest="k", type=_positive_int,
                           required=True, metavar="K",
                           help="absolute precision exponent (work mod p^K)")

    parser = argparse.ArgumentParser(
        prog="padic",
        description="Exact p-adic arithmetic, digit expansions, and "
                    "certified root lifting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("val", parents=[prime_flags],
                         help="p-adic valuation of a rational")
    cmd.add_argument("rational")
    cmd.set_defaults(handler=_cmd_val, needs=("rational",))

    cmd = sub.add_parser("norm", parents=[prime_flags],
                         help="p-adic norm of a rational")
    cmd.add_argument("rational")
    cmd.set_defaults(handler=_cmd_norm, needs=("rational",))

    cmd = sub.add_parser("digits", parents=[prime_flags, rel_flags],
                         help="digit expansion of a nonzero rational")
    cmd.add_argument("rational")
    cmd.set_defaults(handler=_cmd_digits, needs=("rational",))

    cmd = sub.add_parser("eval", parents=[prime_flags, rel_flags],
                         help="evaluate a polynomial at a p-adic integer")
    cmd.add_argument("--poly", required=True)
    cmd.add_argument("rational")
    cmd.set_defaults(handler=_cmd_eval, needs=("rational", "poly"))

    cmd = sub.add_parser("lift", parents=[prime_flags, abs_flags],
                         help="certified root lifting from a seed")
    cmd.add_argument("--poly", required=True)
    cmd.add_argument("--seed", required=True)
    cmd.set_defaults(handler=_cmd_lift, needs=("poly",))

    cmd = sub.add_parser("oracle", parents=[prime_flags, abs_flags],
                         help="brute-force root enumeration mod p^k")
    cmd.add_argument("--poly", required=True)
    cmd.set_defaults(handler=_cmd_oracle, needs=("poly",))

    cmd = sub.add_parser("crosscheck", parents=[prime_flags, abs_flags],
                         help="compare ring ops against rational arithmetic")
    cmd.add_argument("--trials", type=_positive_int, default=1000)
    cmd.add_argument("--seed", dest="rng_seed", type=int, default=0)
    cmd.set_defaults(handler=_cmd_crosscheck, needs=())

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(prime=Prime(args.p), json_output=args.json)
    cfg.rel_precision = getattr(args, "N", DEFAULT_PRECISION)
    cfg.abs_precision = getattr(args, "k", None)
    needs = args.needs
    try:
        if "rational" in needs:
            cfg.rationals = (Fraction(args.rational),)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {args.rational!r}: {exc}")
    if "poly" in needs:
        cfg.poly = parse_poly(args.poly, int(cfg.prime))
    return cfg


def _emit(cfg: CliConfig, payload: dict, text: str):
    if cfg.json_output:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_val(cfg: CliConfig, args) -> int:
    q = cfg.rationals[0]
    v = padic_val_rat(cfg.prime, q)
    _emit(cfg, {"p": int(cfg.prime), "q": str(q), "valuation": v}, str(v))
    return EXIT_OK


def _cmd_norm(cfg: CliConfig, args) -> int:
    p = int(cfg.prime)
    q = cfg.rationals[0]
    norm = padic_norm_rat(p, q)
    if q == 0:
        _emit(cfg, {"p": p, "q": str(q), "valuation": None,
                    "norm": "0", "norm_decimal": 0.0}, "0")
        return EXIT_OK
    v = padic_val_rat(p, q)
    try:
        decimal = float(norm)
    except OverflowError:
        decimal = None
    text = f"{p}^{-v} = {norm}"
    if norm.denominator != 1 and decimal is not None:
        text += f" = {decimal:.6g}"
    _emit(
        cfg,
        {"p": p, "q": str(q), "valuation": v,
         "norm": str(norm), "norm_decimal": decimal},
        text,
    )
    return EXIT_OK


def _cmd_digits(cfg: CliConfig, args) -> int:
    p = int(cfg.prime)
    x = PadicNumber.from_rational(p, cfg.rationals[0], cfg.rel_precision)
    expansion = x.digits()  # raises ZeroHasNoExpansion on zero input
    _emit(
        cfg,
        {"p": p, "start": expansion.start,
         "digits": list(expansion.digits), "text": str(expansion)},
        str(expansion),
    )
    return EXIT_OK


def _cmd_eval(cfg: CliConfig, args) -> int:
    p = int(cfg.prime)
    x = PadicNumber.from_rational(p, cfg.rationals[0], cfg.rel_precision)
    value = cfg.poly.eval(x)
    record = value.to_record()
    payload = dict(record)
    lines = [f"{key}: {record[key]}" for key in record]
    if value.form is Form.UNIT:
        payload["digits"] = list(value.digits().digits)
        lines.append(f"digits: {value}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def _format_certificate(cert: hensel.HenselCertificate) -> str:
    hyp = cert.hypothesis
    lines = [
        f"polynomial: {cert.f}",
        f"p: {cert.p}  seed: {cert.a}  target: {cert.p}^{cert.k}",
    ]
    if cert.degenerate:
        lines.append(f"hypothesis: e={hyp.e}  m=inf (seed is an exact root)")
    else:
        lines.append(f"hypothesis: e={hyp.e}  m={hyp.m}  t={hyp.t}")
    if cert.trace:
        lines.append("trace:")
        for step in cert.trace:
            val = "inf" if step.val_f is None else step.val_f
            lines.append(f"  n={step.n}  a_n={step.residue}  nu(f(a_n))={val}")
    lines.append(f"root: {cert.root}")
    dist = "inf" if cert.dist_exponent is None else cert.dist_exponent
    lines.append(f"nu(root - seed): {dist}")
    lines.append(
        f"uniqueness: only root z with nu(z - seed) > "
        f"{cert.uniqueness_radius_exponent}"
    )
    lines.append(f"verified: {str(cert.checks_passed).lower()}")
    return "\n".join(lines)


def _cmd_lift(cfg: CliConfig, args) -> int:
    try:
        seed = Fraction(args.seed)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse seed {args.seed!r}: {exc}")
    cert = hensel.lift(cfg.poly, seed, cfg.abs_precision)
    _emit(cfg, hensel.certificate_to_record(cert), _format_certificate(cert))
    return EXIT_OK if cert.checks_passed else EXIT_INTERNAL


def _cmd_oracle(cfg: CliConfig, args) -> int:
    report = oracle.enumerate_roots(cfg.poly, cfg.abs_precision)
    _emit(
        cfg,
        {"p": report.p, "k": report.k, "roots": list(report.roots)},
        " ".join(str(r) for r in report.roots),
    )
    return EXIT_OK


def _cmd_crosscheck(cfg: CliConfig, args) -> int:
    report = oracle.crosscheck_arith(
        cfg.prime, cfg.abs_precision, args.trials, args.rng_seed
    )
    text = (
        f"trials: {report.trials}\nchecked: {report.checked}\n"
        f"mismatches: {len(report.mismatches)}"
    )
    _emit(
        cfg,
        {"p": report.p, "k": report.k, "trials": report.trials,
         "checked": report.checked, "mismatches": list(report.mismatches)},
        text,
    )
    return EXIT_OK if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return args.handler(cfg, args)
    except NotPrime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PRIME
    except (HypothesisFailed, DerivativeVanishes) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InternalBoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ZeroHasNoExpansion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_EXPANSION
    except (PadicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
