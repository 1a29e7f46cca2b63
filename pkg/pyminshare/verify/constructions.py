"""Closed-form checks of the three constructions against their exact joints.

Each check rebuilds the joint distribution by enumeration and compares the
closed forms with brute-force values as exact rationals.
"""

import itertools
import logging
from fractions import Fraction
from functools import reduce
from operator import xor
from typing import List

from ..access.access_structure import mask_to_parties
from ..entropy.renyi import guessing_probability, log2, worst_guessing_probability
from ..errors import ParameterError
from ..schemes.cumulative import (
    CumulativeParams,
    cumulative_combine,
    cumulative_extended_distribution,
    cumulative_share_from_draws,
)
from ..schemes.shamir import (
    MAX_TABLE_ROWS,
    ShamirParams,
    shamir_joint_distribution,
    shamir_marginal_masses,
)
from ..schemes.share_bundle import ShareBundle
from ..schemes.xor import MAX_JOINT_PARTIES, XorParams, xor_joint_distribution
from .reports import CheckReport
from .security import ideality, is_non_perfect, share_names


logger = logging.getLogger(__name__)


class _Failures:
    """Collects failed assertions of one check."""

    def __init__(self):
        self.items: List[str] = []

    def expect(self, condition: bool, message: str) -> bool:
        if not condition:
            self.items.append(message)
            logger.info("check failed: %s", message)
        return condition


def check_xor_scheme(params: XorParams) -> CheckReport:
    """Exact min-entropy claims of the biased XOR scheme.

    Checks that the secret and shares `1..n-1` have max mass `p`, that share
    `n` has max mass `(1 + (p - q)**n) / 2` (`p**2 + q**2` for two parties),
    that every forbidden set leaves the guessing probability of the secret at
    `p`, and the conditional masses of the sets of size `n - 1` holding
    party `n`: the best guess has probability 1/2 when the XOR of the
    observed shares is 1, and `p**2 / (p**2 + q**2)` when it is 0.
    """
    if params.n > MAX_JOINT_PARTIES:
        raise ParameterError(f"check needs n <= {MAX_JOINT_PARTIES}, got {params.n}")

    n, p = params.n, params.p
    q = 1 - p
    j = xor_joint_distribution(params)
    fail = _Failures()

    secret_max = j.marginal("S").max_mass()
    fail.expect(secret_max == p, f"secret max mass {secret_max} != p")

    share_max = [j.marginal(f"V{i}").max_mass() for i in range(1, n + 1)]
    for i, mass in enumerate(share_max[:-1], start=1):
        fail.expect(mass == p, f"share {i} max mass {mass} != p")

    last_expected = (1 + (p - q) ** n) / 2
    fail.expect(
        share_max[-1] == last_expected,
        f"share {n} max mass {share_max[-1]} != {last_expected}",
    )

    for size in range(0, n):
        for parties in itertools.combinations(range(1, n + 1), size):
            guess = guessing_probability(j, "S", share_names(parties))
            fail.expect(guess == p, f"guessing probability {guess} given {list(parties)} != p")

    mixed = p**2 / (p**2 + q**2)
    for missing in range(1, n):
        parties = tuple(i for i in range(1, n + 1) if i != missing)
        for y, group in j.conditional_groups("S", share_names(parties)).items():
            best = max(group.values()) / sum(group.values(), Fraction(0))
            expected = Fraction(1, 2) if reduce(xor, y, 0) == 1 else mixed
            fail.expect(
                best == expected,
                f"max conditional {best} given {list(parties)} = {list(y)}, expected {expected}",
            )

    non_perfect, witness = is_non_perfect(j, params.access_structure())
    fail.expect(non_perfect and witness is not None and n in witness, "expected non-perfect with party n")

    values = {
        "n": n,
        "p": p,
        "secret_max_mass": secret_max,
        "share_max_masses": tuple(share_max),
        "secret_min_entropy": -log2(secret_max),
        "last_share_min_entropy": -log2(share_max[-1]),
        "cond_min_entropy": -log2(p),
        "worst_case_guess": worst_guessing_probability(j, "S", share_names(range(2, n + 1))),
        "ideal": False,
        "non_perfect_witness": witness,
    }
    return CheckReport(name="t5", passed=not fail.items, values=values, failures=tuple(fail.items))


def check_shamir_scheme(params: ShamirParams) -> CheckReport:
    """Exact min-entropy claims of the skewed polynomial scheme.

    Checks that the secret and all shares have the same marginal, with mass
    `(p t**k + (1-p) t**(k-1) - 1) / (t**k - 1)` at 0, that every forbidden set
    leaves the guessing probability of the secret at that value, the two
    conditional cases for sets of size `k - 1` (zero observation has mass
    `p + (t-1)(1-p)/(t**k-1)` and the best guess is `p` divided by it, any other
    observation gives `1/t`), ideality, and non-perfectness iff
    `p > 1/t**k` and `k >= 2`.
    """
    if params.num_rows > MAX_TABLE_ROWS:
        raise ParameterError(f"check needs t**k <= {MAX_TABLE_ROWS}")

    t, k, n, p = params.t, params.k, params.n, params.p
    j = shamir_joint_distribution(params)
    fail = _Failures()

    zero_mass, other_mass = shamir_marginal_masses(params)
    expected = (zero_mass,) + (other_mass,) * (t - 1)
    for name in j.variables:
        vector = j.marginal(name).as_vector(range(t))
        fail.expect(vector == expected, f"marginal of {name} differs from the closed form")

    common = zero_mass
    structure = params.access_structure()
    for mask in sorted(structure.forbidden):
        parties = mask_to_parties(mask)
        guess = guessing_probability(j, "S", share_names(parties))
        fail.expect(guess == common, f"guessing probability {guess} given {list(parties)} != {common}")

    zero_condition = p + (t - 1) * (1 - p) / Fraction(t**k - 1)
    for parties in itertools.combinations(range(1, n + 1), k - 1):
        for y, group in j.conditional_groups("S", share_names(parties)).items():
            p_y = sum(group.values(), Fraction(0))
            best = max(group.values()) / p_y
            if all(v == 0 for v in y):
                fail.expect(p_y == zero_condition, f"zero observation mass {p_y} != {zero_condition}")
                fail.expect(best == p / zero_condition, f"best guess {best} on zero observation")
            else:
                fail.expect(best == Fraction(1, t), f"best guess {best} given {list(y)} != 1/{t}")

    ideal = ideality(j)
    fail.expect(ideal.ideal, f"not ideal: parties {list(ideal.flagged())}")

    non_perfect, witness = is_non_perfect(j, structure)
    should_leak = p > Fraction(1, t**k) and k >= 2
    fail.expect(non_perfect == should_leak, f"non-perfect is {non_perfect}, expected {should_leak}")

    values = {
        "t": t,
        "k": k,
        "n": n,
        "p": p,
        "common_max_mass": common,
        "common_min_entropy": -log2(common),
        "zero_condition_mass": zero_condition,
        "zero_condition_best_guess": p / zero_condition,
        "ideal": ideal.ideal,
        "non_perfect": non_perfect,
        "non_perfect_witness": witness,
    }
    return CheckReport(name="t6", passed=not fail.items, values=values, failures=tuple(fail.items))


def check_cumulative_scheme(params: CumulativeParams) -> CheckReport:
    """Exact claims of the cumulative-map scheme.

    Checks that the map covers all `m` blocks exactly on qualified sets, that
    the shares of each forbidden set and the blocks they hold determine each
    other, that the guessing probability of the secret given those shares,
    given those blocks and without anything all equal `p`, and that every
    qualified set reconstructs the secret for every secret and every draw.
    """
    if params.m > MAX_JOINT_PARTIES:
        raise ParameterError(f"check needs m <= {MAX_JOINT_PARTIES}, got {params.m}")

    structure, cmap, p, m = params.structure, params.cmap, params.p, params.m
    fail = _Failures()

    for mask in range(1 << structure.n):
        parties = mask_to_parties(mask)
        covered = len(cmap.image(parties))
        if mask in structure.qualified:
            fail.expect(covered == m, f"qualified {list(parties)} covers {covered} of {m} blocks")
        else:
            fail.expect(covered <= m - 1, f"forbidden {list(parties)} covers all {m} blocks")

    extended = cumulative_extended_distribution(params)
    j = extended.marginalize(("S",) + share_names(range(1, structure.n + 1)))

    secret_guess = j.marginal("S").max_mass()
    fail.expect(secret_guess == p, f"secret max mass {secret_guess} != p")

    for mask in sorted(structure.forbidden):
        parties = mask_to_parties(mask)
        shares = share_names(parties)
        blocks = tuple(f"W{b}" for b in sorted(cmap.image(parties)))

        if shares and blocks:
            forward = extended.conditional_groups(blocks, shares)
            backward = extended.conditional_groups(shares, blocks)
            bijective = all(len(g) == 1 for g in forward.values()) and all(
                len(g) == 1 for g in backward.values()
            )
            fail.expect(bijective, f"shares of {list(parties)} are not a relabeling of their blocks")

        by_shares = guessing_probability(j, "S", shares)
        by_blocks = guessing_probability(extended, "S", blocks)
        fail.expect(by_shares == by_blocks, f"{list(parties)}: {by_shares} != {by_blocks}")
        fail.expect(by_blocks == p, f"{list(parties)}: guessing probability {by_blocks} != p")

    qualified = [mask_to_parties(mask) for mask in sorted(structure.qualified)]
    params_json = params.to_json()
    reconstructions = 0
    for s in (0, 1):
        for draws in itertools.product((0, 1), repeat=m - 1):
            shares = cumulative_share_from_draws(s, draws, params)
            for parties in qualified:
                bundle = ShareBundle.create(
                    CumulativeParams.tag, params_json, {i: shares[i] for i in parties}
                )
                recovered = cumulative_combine(bundle, params)
                reconstructions += 1
                fail.expect(recovered == s, f"{list(parties)} recovered {recovered} instead of {s}")

    values = {
        "n": structure.n,
        "m": m,
        "p": p,
        "maximal_forbidden": tuple(mask_to_parties(f) for f in cmap.maximal_forbidden),
        "assignment": cmap.assignment,
        "cond_min_entropy": -log2(p),
        "reconstructions": reconstructions,
    }
    return CheckReport(
        name="t4", passed=not fail.items, values=values, failures=tuple(fail.items)
    )
