"""Named verification checks on a scheme instance, as used by the command line."""

import logging
from typing import Any, Dict, Iterable, Sequence, Tuple

from ..entropy.order import Order
from ..errors import ParameterError, UnsupportedOrderError
from ..schemes.cumulative import CumulativeParams
from ..schemes.scheme import SchemeParams
from ..schemes.shamir import ShamirParams
from ..schemes.xor import XorParams
from .constructions import check_cumulative_scheme, check_shamir_scheme, check_xor_scheme
from .reports import CheckReport
from .security import (
    check_share_bounds,
    epsilon_security,
    gap_maximized_at_maximal_sets,
    ideality,
    is_non_perfect,
)


logger = logging.getLogger(__name__)

CONSTRUCTION_CHECKS = {
    "t4": (CumulativeParams, check_cumulative_scheme),
    "t5": (XorParams, check_xor_scheme),
    "t6": (ShamirParams, check_shamir_scheme),
}
CHECK_NAMES = ("t3", "t4", "t5", "t6", "security", "ideal", "nonperfect")
CHECK_ALIASES = {"bounds": "t3", "cumulative": "t4", "xor": "t5", "shamir": "t6"}
DEFAULT_ORDERS = ("1/2", "1", "2", "inf")


def parse_checks(text: str) -> Tuple[str, ...]:
    """Parse a comma separated list of check names into canonical names."""
    names = tuple(item.strip() for item in text.split(",") if item.strip())
    if not names:
        raise ParameterError("empty check list")
    return canonical_checks(names)


def canonical_checks(names: Iterable[str]) -> Tuple[str, ...]:
    """Map descriptive aliases such as `bounds` to their canonical check names."""
    names = tuple(CHECK_ALIASES.get(name, name) for name in names)
    unknown = [name for name in names if name not in CHECK_NAMES]
    if unknown:
        known = list(CHECK_NAMES) + list(CHECK_ALIASES)
        raise ParameterError(f"unknown checks {unknown}, expected some of {known}")
    return names


def _bounds_check(j, g, orders: Sequence[Order]) -> CheckReport:
    perfect = not is_non_perfect(j, g)[0]
    per_order, failures = {}, []
    for order in orders:
        if order.is_zero:
            if not perfect:
                per_order[str(order)] = {"skipped": "order 0 leakage is not defined"}
                continue
            epsilon = 0.0
        else:
            epsilon = epsilon_security(j, g, order).epsilon

        report = check_share_bounds(j, g, order, epsilon)
        per_order[str(order)] = report.to_json()
        if not report.passed:
            failures.append(f"share bound fails at order {order}")

        if order.is_infinity:
            worst = epsilon_security(j, g, order, measure="worst").epsilon
            report = check_share_bounds(j, g, order, worst)
            per_order["inf_worst"] = report.to_json()
            if not report.passed:
                failures.append("share bound fails for the worst-case measure")
    return CheckReport(name="t3", passed=not failures, values=per_order, failures=tuple(failures))


def _security_check(j, g, orders: Sequence[Order]) -> CheckReport:
    report = epsilon_security(j, g, Order.infinity())
    values: Dict[str, Any] = {"inf": report.to_json()}
    for order in orders:
        if order.is_infinity or order.is_zero:
            continue
        values[str(order)] = epsilon_security(j, g, order).to_json()

    failures = () if report.perfect else (f"min-entropy leakage {report.epsilon:.12g} bits",)
    return CheckReport(name="security", passed=report.perfect, values=values, failures=failures)


def verify_scheme(
    params: SchemeParams, checks: Iterable[str], orders: Iterable = DEFAULT_ORDERS
) -> Tuple[CheckReport, ...]:
    """Run named checks on one scheme instance.

    Args:
        params: `XorParams`, `ShamirParams` or `CumulativeParams`.
        checks: Names from `CHECK_NAMES` or `CHECK_ALIASES`; a construction
            check must match the type of `params`.
        orders: Orders used by the `t3` and `security` checks.

    Returns:
        tuple: One `CheckReport` per requested check, in request order.
    """
    orders = tuple(Order.create(a) for a in orders)
    j = params.joint_distribution()
    g = params.access_structure()

    reports = []
    for name in canonical_checks(checks):
        if name in CONSTRUCTION_CHECKS:
            params_type, check = CONSTRUCTION_CHECKS[name]
            if not isinstance(params, params_type):
                raise ParameterError(f"check {name!r} does not apply to the {params.tag} scheme")
            report = check(params)
        elif name == "t3":
            report = _bounds_check(j, g, orders)
        elif name == "security":
            report = _security_check(j, g, orders)
        elif name == "ideal":
            ideal = ideality(j)
            failures = tuple(f"party {i} is not ideal" for i in ideal.flagged())
            report = CheckReport(name="ideal", passed=ideal.ideal, values=ideal.to_json(), failures=failures)
        elif name == "nonperfect":
            flag, witness = is_non_perfect(j, g)
            report = CheckReport(
                name="nonperfect",
                passed=flag,
                values={"non_perfect": flag, "witness": None if witness is None else list(witness)},
                failures=() if flag else ("secret is independent of every forbidden set",),
            )

        logger.info("check %s: %s", name, "pass" if report.passed else "FAIL")
        reports.append(report)
    return tuple(reports)


def security_summary(params: SchemeParams, orders: Iterable = DEFAULT_ORDERS) -> Dict[str, Any]:
    """Full security picture of a scheme instance as JSON-ready data.

    Gap tables at every order for the Arimoto measure, the worst-case measure
    at order infinity, ideality, the non-perfectness witness and whether the
    largest min-entropy leakage sits at a maximal forbidden set.
    """
    j = params.joint_distribution()
    g = params.access_structure()

    gaps = {}
    for order in (Order.create(a) for a in orders):
        if order.is_zero:
            raise UnsupportedOrderError("the security report needs orders above 0")
        gaps[str(order)] = epsilon_security(j, g, order).to_json()

    non_perfect, witness = is_non_perfect(j, g)
    return {
        "scheme": params.tag,
        "params": params.to_json(),
        "gaps": gaps,
        "worst_case": epsilon_security(j, g, Order.infinity(), measure="worst").to_json(),
        "ideality": ideality(j).to_json(),
        "non_perfect": non_perfect,
        "non_perfect_witness": None if witness is None else list(witness),
        "max_leakage_at_maximal_sets": gap_maximized_at_maximal_sets(j, g),
    }
