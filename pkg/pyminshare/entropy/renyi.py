"""Rényi entropies and conditional entropies in bits.

Probability masses stay exact `Fraction` values; the logarithm is taken at the
end. Integer orders up to `MAX_EXACT_POWER` use exact power sums, other finite
orders are evaluated in the log domain with numpy.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, Union

import numpy as np

from ..errors import UnsupportedOrderError
from .distributions import JointDist, Names, ProbDist, as_names
from .order import Order


MAX_EXACT_POWER = 64

Dist = Union[ProbDist, JointDist]


def log2(value: Fraction) -> float:
    """Base-2 logarithm of a positive rational, without float overflow."""
    value = Fraction(value)
    return math.log2(value.numerator) - math.log2(value.denominator)


def _masses(d: Dist):
    if isinstance(d, ProbDist):
        return d.positive_masses()
    return tuple(d.table.values())


def _exact_power(order: Order) -> bool:
    return order.is_integral and order.alpha <= MAX_EXACT_POWER


def _log2_power_sum(masses, order: Order) -> float:
    """`log2 sum(m**alpha)` for a finite order."""
    if _exact_power(order):
        power = int(order.alpha)
        return log2(sum((m**power for m in masses), Fraction(0)))

    alpha = float(order.alpha)
    log_terms = np.array([alpha * log2(m) for m in masses])
    return float(np.logaddexp2.reduce(log_terms))


def shannon_entropy(d: Dist) -> float:
    """Shannon entropy, with `0 log 0 = 0`."""
    return float(-sum(float(m) * log2(m) for m in _masses(d)))


def renyi_entropy(d: Dist, order: Union[Order, str, int, float, Fraction]) -> float:
    """Rényi entropy of a distribution in bits.

    A `JointDist` is treated as one variable over its outcome tuples.

    Args:
        d: Distribution.
        order: Entropy order; zero gives the log of the support size, one the
            Shannon entropy, infinity the min-entropy.

    Returns:
        float: Entropy in bits.

    Example:
        >>> import pyminshare as ps
        >>> d = ps.ProbDist.create([0, 1], ["3/4", "1/4"])
        >>> ps.renyi_entropy(d, "inf")
        0.4150374992788438
    """
    order = Order.create(order)
    masses = _masses(d)

    if order.is_zero:
        return math.log2(len(masses))
    if order.is_one:
        return shannon_entropy(d)
    if order.is_infinity:
        return -log2(max(masses))

    alpha = order.alpha
    return float(_log2_power_sum(masses, order) / float(1 - alpha))


def marginal_entropy(j: JointDist, names: Names, order) -> float:
    """Rényi entropy of the marginal of `j` on `names`."""
    return renyi_entropy(j.marginalize(as_names(names)), order)


def guessing_probability(j: JointDist, target: Names, given: Iterable[str] = ()) -> Fraction:
    """Exact `sum_y max_x P(x, y)`, the best one-shot guess of the target given `y`."""
    groups = j.conditional_groups(target, given)
    return sum((max(group.values()) for group in groups.values()), Fraction(0))


def avg_cond_min_entropy(j: JointDist, target: Names, given: Iterable[str] = ()) -> float:
    """Average conditional min-entropy `-log2 sum_y P(y) max_x P(x|y)`."""
    return -log2(guessing_probability(j, target, given))


def worst_guessing_probability(
    j: JointDist, target: Names, given: Iterable[str] = ()
) -> Fraction:
    """Exact `max_y max_x P(x|y)` over conditions with positive mass."""
    groups = j.conditional_groups(target, given)
    return max(
        max(group.values()) / sum(group.values(), Fraction(0)) for group in groups.values()
    )


def worst_cond_min_entropy(j: JointDist, target: Names, given: Iterable[str] = ()) -> float:
    """Worst-case conditional min-entropy `-log2 max_(x,y) P(x|y)`."""
    return -log2(worst_guessing_probability(j, target, given))


def cond_shannon_entropy(j: JointDist, target: Names, given: Iterable[str] = ()) -> float:
    """Conditional Shannon entropy `H(X|Y)`."""
    groups = j.conditional_groups(target, given)
    total = 0.0
    for group in groups.values():
        p_y = sum(group.values(), Fraction(0))
        total -= sum(float(m) * log2(m / p_y) for m in group.values())
    return total


def cond_renyi_arimoto(
    j: JointDist,
    target: Names,
    given: Iterable[str],
    order: Union[Order, str, int, float, Fraction],
) -> float:
    """Conditional Rényi entropy in the Arimoto form.

    For a finite order the value is
    `alpha/(1-alpha) * log2 sum_y (sum_x P(x, y)**alpha)**(1/alpha)`, which
    equals the average of the conditional `alpha`-norms weighted by `P(y)`.
    Order one gives the conditional Shannon entropy and infinity the average
    conditional min-entropy.

    Args:
        j: Joint distribution.
        target: Target variable or tuple of variables.
        given: Conditioning variables.
        order: Entropy order, not zero.

    Raises:
        UnsupportedOrderError: order zero.
        DistributionError: unknown or overlapping variables.
    """
    order = Order.create(order)
    if order.is_zero:
        raise UnsupportedOrderError("conditional Rényi entropy of order 0 is not supported")
    if order.is_one:
        return cond_shannon_entropy(j, target, given)
    if order.is_infinity:
        return avg_cond_min_entropy(j, target, given)

    groups = j.conditional_groups(target, given)
    alpha = float(order.alpha)

    # log2 of (sum_x P(x, y)**alpha)**(1/alpha), per y
    norm_logs = np.array(
        [_log2_power_sum(group.values(), order) / alpha for group in groups.values()]
    )
    total = float(np.logaddexp2.reduce(norm_logs))
    return alpha / (1.0 - alpha) * total


def cond_entropy(
    j: JointDist,
    target: Names,
    given: Iterable[str],
    order: Union[Order, str, int, float, Fraction],
    measure: str = "arimoto",
) -> float:
    """Conditional entropy for a named measure, `"arimoto"` or `"worst"`.

    The worst-case measure exists only at order infinity.
    """
    order = Order.create(order)
    given = tuple(given)
    if measure == "arimoto":
        return cond_renyi_arimoto(j, target, given, order)
    if measure == "worst":
        if not order.is_infinity:
            raise UnsupportedOrderError(
                f"worst-case conditional entropy is defined at order inf only, got {order}"
            )
        return worst_cond_min_entropy(j, target, given)
    raise UnsupportedOrderError(f"unknown measure {measure!r}")


def entropy_profile(d: Dist, orders: Iterable) -> Dict[str, float]:
    """Entropies at several orders, keyed by order text."""
    return {str(Order.create(a)): renyi_entropy(d, a) for a in orders}
