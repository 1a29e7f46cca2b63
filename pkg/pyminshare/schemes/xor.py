"""Biased XOR sharing for the `(n, n)` threshold structure.

The secret and the first `n - 1` shares are independent bits that are 0 with
probability `p`; the last share is the XOR of the secret and all other shares.
"""

import itertools
import logging
from fractions import Fraction
from functools import reduce
from operator import xor
from typing import Any, Dict, Optional, Sequence, Tuple

import chex
import jax
import numpy as np
from typing_extensions import Self

from ..access.access_structure import AccessStructure, threshold_structure
from ..entropy.distributions import JointDist
from ..errors import NotQualifiedError, ParameterError
from ..utils.jax_helpers import bernoulli_zero_stack
from ..utils.rational_helpers import parse_rational, rational_from_json, rational_to_json
from .scheme import SchemeParams
from .share_bundle import ShareBundle


logger = logging.getLogger(__name__)

MAX_JOINT_PARTIES = 20


def _check_bit(value: Any, what: str) -> int:
    if isinstance(value, bool) or value not in (0, 1):
        raise ParameterError(f"{what} must be a bit, got {value!r}")
    return int(value)


def _check_probability(p: Any) -> Fraction:
    p = parse_rational(p)
    if not Fraction(1, 2) < p < 1:
        raise ParameterError(f"p must satisfy 1/2 < p < 1, got {p}")
    return p


@chex.dataclass(mappable_dataclass=False, frozen=True)
class XorParams(SchemeParams):
    """Parameters of the biased XOR scheme.

    Attributes:
        p (Fraction): Probability that the secret (and each of the first
            `n - 1` shares) is 0, `1/2 < p < 1`.
        n (int): Number of parties, at least 2.

    Example usage:
        >>> import pyminshare as ps
        >>> params = ps.XorParams.create(n=3, p="3/4")
        >>> key = ps.key_from_seed(7)
        >>> bundle = ps.xor_share(1, params, key)
        >>> ps.xor_combine(bundle)
        1
    """

    n: int

    tag = "pi1"

    @classmethod
    def create(cls: Self, n: int, p: Any) -> Self:
        """Validate `n >= 2` and `1/2 < p < 1`."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 2:
            raise ParameterError(f"the XOR scheme needs n >= 2 parties, got {n!r}")
        return cls(p=_check_probability(p), n=n)

    def access_structure(self: Self) -> AccessStructure:
        return threshold_structure(self.n, self.n)

    def joint_distribution(self: Self) -> JointDist:
        return xor_joint_distribution(self)

    def to_json(self: Self) -> Dict[str, Any]:
        return {"n": self.n, "p": rational_to_json(self.p)}

    @classmethod
    def from_json(cls: Self, obj: Dict[str, Any]) -> Self:
        if not isinstance(obj, dict) or set(obj) != {"n", "p"}:
            raise ParameterError(f"XOR parameters need 'n' and 'p', got {obj!r}")
        return cls.create(obj["n"], rational_from_json(obj["p"]))


def xor_sample_secret(params: XorParams, key: jax.Array) -> int:
    """Secret bit, 0 with probability `p`."""
    return int(bernoulli_zero_stack(key, params.p, 1)[0])


def xor_sample_secret_stack(params: XorParams, key: jax.Array, num: int) -> np.ndarray:
    """`num` independent secret bits."""
    return bernoulli_zero_stack(key, params.p, num)


def xor_split(s: int, draws: Sequence[int]) -> Tuple[int, ...]:
    """Shares `(*draws, s ^ xor(draws))` for any number of draws, including none."""
    s = _check_bit(s, "secret")
    draws = tuple(_check_bit(v, "draw") for v in draws)
    return draws + (reduce(xor, draws, s),)


def xor_share_from_draws(s: int, draws: Sequence[int], params: XorParams) -> Tuple[int, ...]:
    """All `n` shares from the secret and the `n - 1` drawn shares."""
    if len(draws) != params.n - 1:
        raise ParameterError(f"expected {params.n - 1} drawn shares, got {len(draws)}")
    return xor_split(s, draws)


def xor_share(s: int, params: XorParams, key: jax.Array) -> ShareBundle:
    """Share a secret bit among all `n` parties.

    Args:
        s: Secret bit.
        params: Scheme parameters.
        key: PRNG key for the `n - 1` biased draws.

    Returns:
        ShareBundle: Shares of parties `1..n`.
    """
    draws = bernoulli_zero_stack(key, params.p, params.n - 1)
    shares = xor_share_from_draws(s, [int(v) for v in draws], params)
    return ShareBundle.create(
        params.tag, params.to_json(), {i + 1: v for i, v in enumerate(shares)}
    )


def xor_share_stack(secret_stack: np.ndarray, params: XorParams, key: jax.Array) -> np.ndarray:
    """Share many secrets at once.

    Returns:
        np.ndarray: int64 array `(num, n)`, row `a` sharing `secret_stack[a]`.
    """
    secret_stack = np.asarray(secret_stack, dtype=np.int64)
    if np.any((secret_stack != 0) & (secret_stack != 1)):
        raise ParameterError("secrets must be bits")

    num = secret_stack.shape[0]
    draw_stack = bernoulli_zero_stack(key, params.p, num * (params.n - 1)).reshape(
        num, params.n - 1
    )
    last = np.bitwise_xor.reduce(draw_stack, axis=1) ^ secret_stack
    return np.concatenate([draw_stack, last[:, None]], axis=1)


def xor_combine(bundle: ShareBundle, params: Optional[XorParams] = None) -> int:
    """Recover the secret as the XOR of all `n` shares.

    Raises:
        NotQualifiedError: some party's share is missing.
    """
    if bundle.scheme != XorParams.tag:
        raise ParameterError(f"expected a pi1 bundle, got {bundle.scheme!r}")
    if params is None:
        params = XorParams.from_json(bundle.params)

    values = bundle.values()
    missing = sorted(set(range(1, params.n + 1)) - set(values))
    if missing:
        raise NotQualifiedError(
            f"parties {sorted(values)} are not a qualified set: missing {missing}"
        )
    extra = sorted(set(values) - set(range(1, params.n + 1)))
    if extra:
        raise ParameterError(f"parties {extra} do not exist for n = {params.n}")

    return reduce(xor, (_check_bit(values[i], f"share {i}") for i in range(1, params.n + 1)), 0)


def xor_joint(
    m: int, p: Fraction, secret_name: str = "S", share_prefix: str = "V"
) -> JointDist:
    """Exact joint of the secret and `m` XOR shares, `m >= 1`."""
    if m > MAX_JOINT_PARTIES:
        raise ParameterError(
            f"joint enumeration needs at most {MAX_JOINT_PARTIES} shares, got {m}"
        )
    q = 1 - p
    table = {}
    for pattern in itertools.product((0, 1), repeat=m):
        s, draws = pattern[0], pattern[1:]
        zeros = pattern.count(0)
        table[(s,) + xor_split(s, draws)] = p**zeros * q ** (m - zeros)

    variables = (secret_name,) + tuple(f"{share_prefix}{i}" for i in range(1, m + 1))
    logger.debug("XOR joint over %d shares has %d outcomes", m, len(table))
    return JointDist.create(variables, table)


def xor_joint_distribution(params: XorParams) -> JointDist:
    """Exact joint distribution of `(S, V1, ..., Vn)`.

    Each of the `2**n` patterns of `(s, v1, ..., v_{n-1})` with `z` zeros has
    mass `p**z * (1 - p)**(n - z)`.

    Raises:
        ParameterError: `n > MAX_JOINT_PARTIES`.
    """
    return xor_joint(params.n, params.p)
