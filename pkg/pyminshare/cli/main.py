"""Command line front end.

Exit codes: 0 success, 2 malformed input or parameters, 3 unsupported entropy
order, 4 parties not qualified, 5 a verification check failed.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

import jax

from .. import __version__
from ..access.access_structure import (
    AccessStructure,
    from_minimal_qualified,
    threshold_structure,
)
from ..entropy.distributions import JointDist
from ..entropy.order import Order, parse_orders
from ..entropy.renyi import (
    cond_entropy,
    guessing_probability,
    renyi_entropy,
    worst_guessing_probability,
)
from ..errors import NotQualifiedError, ParameterError, PyminshareError, UnsupportedOrderError
from ..schemes.cumulative import CumulativeParams, cumulative_combine, cumulative_share
from ..schemes.scheme import SchemeParams
from ..schemes.shamir import (
    ShamirParams,
    shamir_combine,
    shamir_distribution_table,
    shamir_sample,
    shamir_share,
)
from ..schemes.share_bundle import SCHEME_ALIASES, SCHEME_TAGS, ShareBundle, canonical_scheme
from ..schemes.xor import XorParams, xor_combine, xor_share
from ..utils.jax_helpers import bernoulli_zero_stack, key_from_seed
from ..utils.log_helpers import LOG_LEVELS, configure_logging
from ..utils.rational_helpers import format_rational, parse_rational
from ..verify.suite import (
    CHECK_ALIASES,
    CHECK_NAMES,
    DEFAULT_ORDERS,
    parse_checks,
    security_summary,
    verify_scheme,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ORDER = 3
EXIT_NOT_QUALIFIED = 4
EXIT_CHECK_FAILED = 5

DEFAULT_CHECKS = {
    "pi1": "t5,t3,security,nonperfect",
    "pi2": "t6,t3,security,ideal",
    "general": "t4,t3,security",
}


def _read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _format_bits(value: float) -> str:
    return f"{value + 0.0:.12f}"


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ParameterError(f"expected comma separated integers, got {text!r}") from None


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ParameterError(f"the {args.scheme} scheme needs {', '.join(missing)}")


def _structure_from_args(args: argparse.Namespace) -> AccessStructure:
    if args.structure is not None:
        return AccessStructure.from_json(_read_json(args.structure))
    if args.min_qualified is not None:
        _require(args, "n")
        families = [_parse_int_list(group) for group in args.min_qualified.split(";")]
        return from_minimal_qualified(args.n, families)
    _require(args, "k", "n")
    return threshold_structure(args.k, args.n)


def build_params(args: argparse.Namespace) -> SchemeParams:
    """Scheme parameters from the shared scheme flags."""
    if args.scheme == "pi1":
        _require(args, "n", "p")
        return XorParams.create(args.n, parse_rational(args.p))
    if args.scheme == "pi2":
        _require(args, "t", "k", "n", "p")
        return ShamirParams.create(args.t, args.k, args.n, parse_rational(args.p))
    if args.scheme == "general":
        _require(args, "p")
        return CumulativeParams.create(_structure_from_args(args), parse_rational(args.p))
    raise ParameterError(f"unknown scheme {args.scheme!r}")


def cmd_entropy(args: argparse.Namespace) -> int:
    """Entropy of a distribution file, optionally conditional."""
    order = Order.create(args.order)
    j = JointDist.from_json(_read_json(args.dist_file))

    if not args.joint:
        value = renyi_entropy(j, order)
        line = _format_bits(value)
        if order.is_infinity:
            line += f" ({format_rational(max(j.table.values()))})"
        print(line)
        return EXIT_OK

    if args.target is None:
        raise ParameterError("--joint needs --target")
    target = tuple(name.strip() for name in args.target.split(","))
    given = tuple(name.strip() for name in args.given.split(",") if name.strip())

    value = cond_entropy(j, target, given, order, args.measure)
    line = _format_bits(value)
    if order.is_infinity:
        guess_fn = guessing_probability if args.measure == "arimoto" else worst_guessing_probability
        line += f" ({format_rational(guess_fn(j, target, given))})"
    print(line)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    """Distribution table as CSV."""
    table = shamir_distribution_table(args.t, args.k, args.n)
    _emit(table.to_csv(), args.output)
    return EXIT_OK


def cmd_share(args: argparse.Namespace) -> int:
    """Share a secret with a seeded key and write the bundle as JSON."""
    params = build_params(args)
    share_key = key_from_seed(args.seed)

    if args.scheme == "pi2" and args.secret is None:
        secret, bundle = shamir_sample(params, share_key)
        print(f"sampled secret: {secret}", file=sys.stderr)
    else:
        secret = args.secret
        if secret is None:
            share_key, secret_key = jax.random.split(share_key)
            secret = int(bernoulli_zero_stack(secret_key, params.p, 1)[0])
            print(f"sampled secret: {secret}", file=sys.stderr)

        if args.scheme == "pi1":
            bundle = xor_share(secret, params, share_key)
        elif args.scheme == "pi2":
            bundle = shamir_share(secret, params, share_key)
        else:
            bundle = cumulative_share(secret, params, share_key)

    logger.info("shared a secret among %d parties", len(bundle.shares))
    _emit(bundle.dumps() + "\n", args.output)
    return EXIT_OK


def cmd_combine(args: argparse.Namespace) -> int:
    """Recover the secret from a share file."""
    bundle = ShareBundle.from_json(_read_json(args.shares_file))
    if args.parties is not None:
        bundle = bundle.restrict(_parse_int_list(args.parties))

    combine = {"pi1": xor_combine, "pi2": shamir_combine, "general": cumulative_combine}
    print(combine[bundle.scheme](bundle))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run verification checks; exit 5 if any fails."""
    params = build_params(args)
    checks = parse_checks(args.checks or DEFAULT_CHECKS[args.scheme])
    orders = parse_orders(args.orders)

    reports = verify_scheme(params, checks, orders)
    document = {
        "scheme": params.tag,
        "params": params.to_json(),
        "passed": all(r.passed for r in reports),
        "checks": [r.to_json() for r in reports],
    }
    if args.output:
        Path(args.output).write_text(json.dumps(document, sort_keys=True, indent=2) + "\n")

    for report in reports:
        print(f"{report.name:<12} {'pass' if report.passed else 'FAIL'}")
        for failure in report.failures:
            print(f"    {failure}")

    return EXIT_OK if document["passed"] else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    """Full security report of a scheme instance as JSON."""
    params = build_params(args)
    orders = parse_orders(args.orders)
    summary = security_summary(params, orders)
    _emit(json.dumps(summary, sort_keys=True, indent=2) + "\n", args.output)

    for order, gaps in summary["gaps"].items():
        print(f"order {order:<5} epsilon {gaps['epsilon']:.12f}", file=sys.stderr)
    print(
        f"ideal {summary['ideality']['ideal']}, non-perfect {summary['non_perfect']}",
        file=sys.stderr,
    )
    return EXIT_OK


def _add_scheme_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scheme",
        choices=SCHEME_TAGS + tuple(SCHEME_ALIASES),
        required=True,
        help="pi1 (xor), pi2 (shamir) or general (cumulative)",
    )
    parser.add_argument("--n", type=int, help="number of parties", metavar="INT")
    parser.add_argument("--p", help="probability parameter as 'a/b'", metavar="RATIONAL")
    parser.add_argument("--t", type=int, help="prime field size (pi2)", metavar="PRIME")
    parser.add_argument("--k", type=int, help="threshold (pi2, general)", metavar="INT")
    parser.add_argument(
        "--structure", help="access structure JSON file (general)", metavar="FILE"
    )
    parser.add_argument(
        "--min-qualified",
        help="minimal qualified sets such as '1,2;2,3;3,4' (general)",
        metavar="SETS",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyminshare", description="Min-entropy secure secret sharing toolkit"
    )
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="warning",
        help="log level (default '%(default)s')",
    )
    parser.add_argument("-V", "--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_entropy = sub.add_parser("entropy", help="entropy of a distribution file")
    p_entropy.add_argument("dist_file", metavar="FILE")
    p_entropy.add_argument("--order", required=True, help="0, 1, inf, an integer or 'a/b'")
    p_entropy.add_argument("--joint", action="store_true", help="conditional entropy")
    p_entropy.add_argument("--target", help="target variable(s), comma separated")
    p_entropy.add_argument("--given", default="", help="conditioning variables, comma separated")
    p_entropy.add_argument("--measure", choices=("arimoto", "worst"), default="arimoto")
    p_entropy.set_defaults(func=cmd_entropy)

    p_table = sub.add_parser("table", help="distribution table of the polynomial scheme")
    p_table.add_argument("--t", type=int, required=True, metavar="PRIME")
    p_table.add_argument("--k", type=int, required=True, metavar="INT")
    p_table.add_argument("--n", type=int, required=True, metavar="INT")
    p_table.add_argument("--output", metavar="FILE")
    p_table.set_defaults(func=cmd_table)

    p_share = sub.add_parser("share", help="share a secret")
    _add_scheme_flags(p_share)
    p_share.add_argument("--secret", type=int, metavar="INT", help="sampled when omitted")
    p_share.add_argument("--seed", type=int, required=True, metavar="U64")
    p_share.add_argument("--output", metavar="FILE")
    p_share.set_defaults(func=cmd_share)

    p_combine = sub.add_parser("combine", help="recover a secret from shares")
    p_combine.add_argument("shares_file", metavar="FILE")
    p_combine.add_argument("--parties", help="use only these parties, comma separated")
    p_combine.set_defaults(func=cmd_combine)

    p_verify = sub.add_parser("verify", help="run verification checks")
    _add_scheme_flags(p_verify)
    p_verify.add_argument(
        "--checks",
        help=f"comma separated, from {','.join(CHECK_NAMES)} or the aliases {','.join(CHECK_ALIASES)}",
    )
    p_verify.add_argument("--orders", default=",".join(DEFAULT_ORDERS))
    p_verify.add_argument("--output", metavar="FILE", help="full report JSON")
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser("report", help="security report as JSON")
    _add_scheme_flags(p_report)
    p_report.add_argument("--orders", default=",".join(DEFAULT_ORDERS))
    p_report.add_argument("--output", metavar="FILE")
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse `argv`, run the sub-command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    configure_logging(args.log_level)
    try:
        if getattr(args, "scheme", None) is not None:
            args.scheme = canonical_scheme(args.scheme)
        return args.func(args)
    except UnsupportedOrderError as exc:
        logger.error("%s", exc)
        return EXIT_ORDER
    except NotQualifiedError as exc:
        logger.error("not a qualified set: %s", exc)
        return EXIT_NOT_QUALIFIED
    except (PyminshareError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
