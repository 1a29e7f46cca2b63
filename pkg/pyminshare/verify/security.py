"""Brute-force security checks on exact joints of `(S, V1, ..., Vn)`.

Forbidden sets are visited in ascending bitmask order. At order infinity every
equality is decided on exact guessing probabilities; at other orders a gap is
exactly zero when the secret is independent of the shares.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from ..access.access_structure import (
    AccessStructure,
    is_monotone,
    mask_to_parties,
    maximal_forbidden_masks,
)
from ..entropy.distributions import JointDist, Names
from ..entropy.order import Order
from ..entropy.renyi import (
    cond_entropy,
    guessing_probability,
    log2,
    renyi_entropy,
    worst_guessing_probability,
)
from ..errors import DistributionError, UnsupportedOrderError
from .reports import (
    BoundEntry,
    GapEntry,
    IdealityEntry,
    IdealityReport,
    SecurityReport,
    ShareBoundsReport,
)


logger = logging.getLogger(__name__)

GAP_TOLERANCE = 1e-12
BOUND_TOLERANCE = 1e-9
MEASURES = ("arimoto", "worst")
PERFECT_ORDERS = ("0", "1/2", "1", "2", "inf")

OrderLike = Union[Order, str, int, Fraction]


def share_names(parties: Iterable[int]) -> Tuple[str, ...]:
    return tuple(f"V{i}" for i in parties)


def _check_layout(j: JointDist, g: AccessStructure) -> None:
    expected = ("S",) + share_names(range(1, g.n + 1))
    if tuple(j.variables) != expected:
        raise DistributionError(
            f"joint variables {list(j.variables)} do not match {list(expected)} "
            f"for an access structure on {g.n} parties"
        )


def is_independent(j: JointDist, a: Names, b: Iterable[str]) -> bool:
    """Exact test of `P(a, b) == P(a) P(b)` on every outcome."""
    groups = j.conditional_groups(a, b)
    if len(groups) <= 1:
        return True

    p_a = {}
    for group in groups.values():
        for x, mass in group.items():
            p_a[x] = p_a.get(x, Fraction(0)) + mass

    for group in groups.values():
        p_y = sum(group.values(), Fraction(0))
        if any(group.get(x, Fraction(0)) != mass * p_y for x, mass in p_a.items()):
            return False
    return True


def is_non_perfect(j: JointDist, g: AccessStructure) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Whether some forbidden set reduces the Shannon entropy of the secret.

    Since `H(S | V_F) < H(S)` exactly when `S` and `V_F` are dependent, this
    is decided without logarithms.

    Returns:
        tuple: The flag and the first dependent forbidden set, or `None`.
    """
    _check_layout(j, g)
    for mask in sorted(g.forbidden):
        parties = mask_to_parties(mask)
        if parties and not is_independent(j, "S", share_names(parties)):
            return True, parties
    return False, None


def epsilon_security(
    j: JointDist, g: AccessStructure, order: OrderLike, measure: str = "arimoto"
) -> SecurityReport:
    """Entropy gap of the secret for every forbidden set.

    Args:
        j: Joint distribution of `(S, V1, ..., Vn)`.
        g: Access structure on the same `n` parties.
        order: Entropy order; not zero.
        measure: `"arimoto"` or, at order infinity, `"worst"`.

    Returns:
        SecurityReport: Gaps ascending by bitmask, with the empty set at 0;
            `epsilon` is the largest gap.

    Raises:
        DistributionError: variables do not match the structure.
        UnsupportedOrderError: order zero, or the worst-case measure at a
            finite order.
    """
    order = Order.create(order)
    _check_layout(j, g)
    if order.is_zero:
        raise UnsupportedOrderError("security gaps need a conditional entropy; order 0 is not supported")
    if measure not in MEASURES:
        raise UnsupportedOrderError(f"unknown measure {measure!r}, expected one of {MEASURES}")
    if measure == "worst" and not order.is_infinity:
        raise UnsupportedOrderError("the worst-case measure is defined at order inf only")

    secret = j.marginal("S")
    secret_entropy = renyi_entropy(secret, order)
    secret_guess = secret.max_mass() if order.is_infinity else None
    guess_fn = guessing_probability if measure == "arimoto" else worst_guessing_probability

    entries = []
    for mask in sorted(g.forbidden):
        parties = mask_to_parties(mask)
        given = share_names(parties)

        if not parties:
            entries.append(GapEntry(forbidden=(), gap=0.0, exact=True, cond_guess=secret_guess))
            continue

        if order.is_infinity:
            cond_guess = guess_fn(j, "S", given)
            exact = cond_guess == secret_guess
            gap = 0.0 if exact else log2(cond_guess) - log2(secret_guess)
        else:
            cond_guess = None
            exact = is_independent(j, "S", given)
            gap = 0.0 if exact else secret_entropy - cond_entropy(j, "S", given, order, measure)

        logger.debug("order %s forbidden %s gap %.12g exact %s", order, parties, gap, exact)
        entries.append(GapEntry(forbidden=parties, gap=gap, exact=exact, cond_guess=cond_guess))

    epsilon = max(0.0, max(e.gap for e in entries))
    if order.is_infinity:
        perfect = all(e.exact for e in entries)
    else:
        perfect = all(e.exact or e.gap <= GAP_TOLERANCE for e in entries)

    _, witness = is_non_perfect(j, g)
    return SecurityReport(
        order=str(order),
        measure=measure,
        secret_entropy=secret_entropy,
        entries=tuple(entries),
        epsilon=epsilon,
        perfect=perfect,
        witness=witness,
        secret_guess=secret_guess,
    )


def gap_maximized_at_maximal_sets(j: JointDist, g: AccessStructure, measure: str = "arimoto") -> bool:
    """Whether the largest min-entropy leakage is attained at a maximal forbidden set."""
    _check_layout(j, g)
    guess_fn = guessing_probability if measure == "arimoto" else worst_guessing_probability

    def guess(mask: int) -> Fraction:
        parties = mask_to_parties(mask)
        if not parties:
            return j.marginal("S").max_mass()
        return guess_fn(j, "S", share_names(parties))

    overall = max(guess(mask) for mask in g.forbidden)
    at_maximal = max(guess(mask) for mask in maximal_forbidden_masks(g))
    return overall == at_maximal


def _bound_witness(g: AccessStructure, party: int) -> Optional[Tuple[int, ...]]:
    bit = 1 << (party - 1)
    candidates = maximal_forbidden_masks(g) if is_monotone(g) else sorted(g.forbidden)
    for mask in candidates:
        if not mask & bit and (mask | bit) in g.qualified:
            return mask_to_parties(mask)
    return None


def _bound_entries(j: JointDist, g: AccessStructure, order: Order, epsilon: float):
    secret = j.marginal("S")
    secret_entropy = renyi_entropy(secret, order)

    entries = []
    for i in range(1, g.n + 1):
        share = j.marginal(f"V{i}")
        share_entropy = renyi_entropy(share, order)
        witness = _bound_witness(g, i)

        equal = share.max_mass() == secret.max_mass() if order.is_infinity else None
        if order.is_infinity and epsilon == 0:
            holds = share.max_mass() <= secret.max_mass()
        else:
            holds = share_entropy >= secret_entropy - epsilon - BOUND_TOLERANCE

        entries.append(
            BoundEntry(
                party=i,
                share_entropy=share_entropy,
                applicable=witness is not None,
                passed=holds or witness is None,
                witness=witness,
                equal=equal,
            )
        )
    return secret_entropy, entries


def check_share_bounds(
    j: JointDist, g: AccessStructure, order: OrderLike, epsilon: float
) -> ShareBoundsReport:
    """Share-size lower bound `R(V_i) >= R(S) - epsilon` for every party.

    The bound applies to party `i` when some forbidden `F` turns qualified by
    adding `i`; at order infinity with `epsilon == 0` it is decided on exact
    masses. When `epsilon == 0` and the secret is independent of every
    forbidden set, the bound is also checked at each order in
    `PERFECT_ORDERS`, together with the Shannon bound and the support-size
    bound.

    Args:
        j: Joint distribution of `(S, V1, ..., Vn)`.
        g: Access structure.
        order: Entropy order, zero included.
        epsilon: Leakage at the same order, e.g. from `epsilon_security`.
    """
    order = Order.create(order)
    _check_layout(j, g)

    secret_entropy, entries = _bound_entries(j, g, order, epsilon)
    named = {"share_bound": all(e.passed for e in entries)}

    if epsilon == 0:
        non_perfect, _ = is_non_perfect(j, g)
        if not non_perfect:
            for text in PERFECT_ORDERS:
                _, perfect_entries = _bound_entries(j, g, Order.create(text), 0)
                named[f"perfect_bound_order_{text}"] = all(e.passed for e in perfect_entries)

            secret = j.marginal("S")
            shannon_ok, alphabet_ok = True, True
            for i in range(1, g.n + 1):
                if _bound_witness(g, i) is None:
                    continue
                share = j.marginal(f"V{i}")
                shannon_ok &= renyi_entropy(share, Order.one()) >= renyi_entropy(
                    secret, Order.one()
                ) - BOUND_TOLERANCE
                alphabet_ok &= len(share.support()) >= len(secret.support())
            named["perfect_shannon_bound"] = bool(shannon_ok)
            named["perfect_alphabet_bound"] = bool(alphabet_ok)

    passed = all(named.values())
    logger.debug("share bounds at order %s, epsilon %.3g: %s", order, epsilon, named)
    return ShareBoundsReport(
        order=str(order),
        epsilon=epsilon,
        secret_entropy=secret_entropy,
        entries=tuple(entries),
        named_checks=named,
        passed=passed,
    )


def ideality(j: JointDist) -> IdealityReport:
    """Compare the min-entropy of every share with the secret's, as exact masses."""
    shares = [v for v in j.variables if v != "S"]
    secret = j.marginal("S")
    secret_max = secret.max_mass()

    entries = []
    for name in shares:
        share = j.marginal(name)
        entries.append(
            IdealityEntry(
                party=int(name[1:]),
                share_entropy=-log2(share.max_mass()),
                share_max_mass=share.max_mass(),
                equal=share.max_mass() == secret_max,
            )
        )

    return IdealityReport(
        secret_entropy=-log2(secret_max),
        secret_max_mass=secret_max,
        entries=tuple(entries),
        ideal=all(e.equal for e in entries),
    )
