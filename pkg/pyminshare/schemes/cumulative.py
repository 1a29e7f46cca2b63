"""Sharing for a general monotone access structure via the cumulative map.

The secret is XOR-shared into `w1..wm`, one block per maximal forbidden set,
and party `i` holds every `w_j` whose maximal forbidden set omits `i`.
"""

import logging
from fractions import Fraction
from functools import reduce
from operator import xor
from typing import Any, Dict, Optional, Sequence, Tuple

import chex
import jax
from typing_extensions import Self

from ..access.access_structure import (
    AccessStructure,
    CumulativeMap,
    cumulative_map,
    is_monotone,
)
from ..entropy.distributions import JointDist
from ..errors import NonMonotoneError, NotQualifiedError, ParameterError
from ..utils.jax_helpers import bernoulli_zero_stack
from ..utils.rational_helpers import parse_rational, rational_from_json, rational_to_json
from .scheme import SchemeParams
from .share_bundle import ShareBundle
from .xor import MAX_JOINT_PARTIES, xor_joint, xor_split


logger = logging.getLogger(__name__)


@chex.dataclass(mappable_dataclass=False, frozen=True)
class CumulativeParams(SchemeParams):
    """Parameters of the cumulative-map scheme.

    Attributes:
        p (Fraction): Probability of a zero secret, `1/2 < p < 1`.
        structure (AccessStructure): Monotone access structure.
        cmap (CumulativeMap): Its cumulative map.

    Example usage:
        >>> import pyminshare as ps
        >>> params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")
        >>> params.cmap.assignment
        ((2, 3), (1, 3), (1, 2))
    """

    structure: AccessStructure
    cmap: CumulativeMap

    tag = "general"

    @classmethod
    def create(cls: Self, structure: AccessStructure, p: Any) -> Self:
        """Validate the structure and `p`, then build the cumulative map.

        Raises:
            NonMonotoneError: the structure is not monotone.
            ParameterError: `p` outside `(1/2, 1)`, or no maximal forbidden
                set (the empty set is qualified).
        """
        if not is_monotone(structure):
            raise NonMonotoneError("the cumulative scheme needs a monotone access structure")

        p = parse_rational(p)
        if not Fraction(1, 2) < p < 1:
            raise ParameterError(f"p must satisfy 1/2 < p < 1, got {p}")

        cmap = cumulative_map(structure)
        if cmap.m < 1:
            raise ParameterError("every set is qualified; there is nothing to share")

        return cls(p=p, structure=structure, cmap=cmap)

    @property
    def n(self: Self) -> int:
        return self.structure.n

    @property
    def m(self: Self) -> int:
        return self.cmap.m

    def access_structure(self: Self) -> AccessStructure:
        return self.structure

    def joint_distribution(self: Self) -> JointDist:
        return cumulative_joint_distribution(self)

    def to_json(self: Self) -> Dict[str, Any]:
        return {"structure": self.structure.to_json(), "p": rational_to_json(self.p)}

    @classmethod
    def from_json(cls: Self, obj: Dict[str, Any]) -> Self:
        if not isinstance(obj, dict) or set(obj) != {"structure", "p"}:
            raise ParameterError(f"cumulative parameters need 'structure' and 'p', got {obj!r}")
        return cls.create(AccessStructure.from_json(obj["structure"]), rational_from_json(obj["p"]))


def cumulative_share_from_draws(
    s: int, draws: Sequence[int], params: CumulativeParams
) -> Dict[int, Tuple[Tuple[int, int], ...]]:
    """Per-party subshares `((j, w_j), ...)` from the secret and `m - 1` draws."""
    if len(draws) != params.m - 1:
        raise ParameterError(f"expected {params.m - 1} drawn blocks, got {len(draws)}")
    w = xor_split(s, draws)
    return {
        i: tuple((j, w[j - 1]) for j in params.cmap.of_party(i))
        for i in range(1, params.n + 1)
    }


def cumulative_share(s: int, params: CumulativeParams, key: jax.Array) -> ShareBundle:
    """Share a secret bit among all parties of the structure."""
    draws = bernoulli_zero_stack(key, params.p, params.m - 1)
    shares = cumulative_share_from_draws(s, [int(v) for v in draws], params)
    return ShareBundle.create(params.tag, params.to_json(), shares)


def cumulative_combine(bundle: ShareBundle, params: Optional[CumulativeParams] = None) -> int:
    """Collect all `m` blocks from a qualified party set and XOR them.

    Raises:
        NotQualifiedError: the bundle's parties form a forbidden set.
        ParameterError: two parties report different values for one block.
    """
    if bundle.scheme != CumulativeParams.tag:
        raise ParameterError(f"expected a general bundle, got {bundle.scheme!r}")
    if params is None:
        params = CumulativeParams.from_json(bundle.params)

    parties = bundle.parties()
    if any(i > params.n for i in parties):
        raise ParameterError(f"parties {list(parties)} exceed n = {params.n}")
    if not params.structure.is_qualified(parties):
        raise NotQualifiedError(f"parties {list(parties)} are not a qualified set")

    blocks: Dict[int, int] = {}
    for i, subshares in bundle.shares:
        for j, bit in subshares:
            if bit not in (0, 1) or not 1 <= j <= params.m:
                raise ParameterError(f"party {i}: bad subshare ({j}, {bit})")
            if blocks.setdefault(j, bit) != bit:
                raise ParameterError(f"inconsistent values for block {j}")

    missing = sorted(set(range(1, params.m + 1)) - set(blocks))
    if missing:
        raise NotQualifiedError(f"blocks {missing} are missing from the bundle")

    return reduce(xor, blocks.values(), 0)


def cumulative_extended_distribution(params: CumulativeParams) -> JointDist:
    """Exact joint of `(S, W1..Wm, V1..Vn)`; `V_i` is the tuple of its blocks.

    Raises:
        ParameterError: `m > MAX_JOINT_PARTIES`.
    """
    m, n = params.m, params.n
    if m > MAX_JOINT_PARTIES:
        raise ParameterError(f"joint enumeration needs m <= {MAX_JOINT_PARTIES}, got {m}")

    base = xor_joint(m, params.p, share_prefix="W")
    assignment = params.cmap.assignment

    def attach_shares(outcome: tuple) -> tuple:
        w = outcome[1:]
        return outcome + tuple(tuple(w[j - 1] for j in assignment[i]) for i in range(n))

    variables = base.variables + tuple(f"V{i}" for i in range(1, n + 1))
    logger.debug("cumulative joint over n=%d parties, m=%d blocks", n, m)
    return base.pushforward(variables, attach_shares)


def cumulative_joint_distribution(params: CumulativeParams) -> JointDist:
    """Exact joint of `(S, V1..Vn)`, each `V_i` a tuple of bits in ascending block order."""
    extended = cumulative_extended_distribution(params)
    keep = ("S",) + tuple(f"V{i}" for i in range(1, params.n + 1))
    return extended.marginalize(keep)
