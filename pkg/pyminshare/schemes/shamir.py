"""Threshold sharing over a prime field with a skewed coefficient distribution.

The rows `(s, v1, ..., vn)` with `v_i = s + sum_l i**l r_l` form the
distribution table. The all-zero row has mass `p` and every other row has mass
`(1 - p) / (t**k - 1)`; `p = 1/t**k` is ordinary uniform Shamir sharing.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

import chex
import jax
import numpy as np
from typing_extensions import Self

from ..access.access_structure import AccessStructure, threshold_structure
from ..entropy.distributions import JointDist
from ..errors import NotQualifiedError, ParameterError
from ..field.prime_field import PrimeField, eval_share_poly, lagrange_at_zero
from ..utils.jax_helpers import (
    MAX_UNIFORM_BOUND,
    bernoulli_zero_stack,
    uniform_below,
    uniform_below_stack,
)
from ..utils.rational_helpers import parse_rational, rational_from_json, rational_to_json
from .scheme import SchemeParams
from .share_bundle import ShareBundle


logger = logging.getLogger(__name__)

MAX_TABLE_ROWS = 10**6


def _check_shape(field: PrimeField, k: int, n: int) -> None:
    for name, value in (("k", k), ("n", n)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParameterError(f"{name} must be an integer, got {value!r}")
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    if n >= field.t:
        raise ParameterError(
            f"need n < t so parties are distinct nonzero points, got n = {n}, t = {field.t}"
        )


def _check_table_size(field: PrimeField, k: int) -> None:
    if field.t**k > MAX_TABLE_ROWS:
        raise ParameterError(
            f"distribution table has t**k = {field.t}**{k} rows, above {MAX_TABLE_ROWS}"
        )


@chex.dataclass(mappable_dataclass=False, frozen=True)
class ShamirParams(SchemeParams):
    """Parameters of the skewed polynomial scheme.

    Attributes:
        p (Fraction): Mass of the all-zero row, `1/t**k <= p < 1`.
        field (PrimeField): Field `F_t`.
        k (int): Threshold.
        n (int): Number of parties, `k <= n < t`.

    Example usage:
        >>> import pyminshare as ps
        >>> params = ps.ShamirParams.create(t=5, k=2, n=3, p="9/10")
        >>> secret, bundle = ps.shamir_sample(params, ps.key_from_seed(0))
        >>> ps.shamir_combine(bundle.restrict([1, 3])) == secret
        True
    """

    field: PrimeField
    k: int
    n: int

    tag = "pi2"

    @classmethod
    def create(cls: Self, t: Any, k: int, n: int, p: Any) -> Self:
        """Validate `1 <= k <= n < t` and `1/t**k <= p < 1`.

        Args:
            t: Prime modulus or a `PrimeField`.
            k: Threshold.
            n: Number of parties.
            p: Mass of the all-zero row.
        """
        field = t if isinstance(t, PrimeField) else PrimeField.create(t)
        _check_shape(field, k, n)

        p = parse_rational(p)
        if not Fraction(1, field.t**k) <= p < 1:
            raise ParameterError(f"p must satisfy 1/t**k <= p < 1, got {p}")

        return cls(p=p, field=field, k=k, n=n)

    @property
    def t(self: Self) -> int:
        return self.field.t

    @property
    def num_rows(self: Self) -> int:
        return self.field.t**self.k

    def access_structure(self: Self) -> AccessStructure:
        return threshold_structure(self.k, self.n)

    def joint_distribution(self: Self) -> JointDist:
        return shamir_joint_distribution(self)

    def to_json(self: Self) -> Dict[str, Any]:
        return {"t": self.t, "k": self.k, "n": self.n, "p": rational_to_json(self.p)}

    @classmethod
    def from_json(cls: Self, obj: Dict[str, Any]) -> Self:
        if not isinstance(obj, dict) or set(obj) != {"t", "k", "n", "p"}:
            raise ParameterError(f"polynomial scheme parameters need t, k, n, p, got {obj!r}")
        return cls.create(obj["t"], obj["k"], obj["n"], rational_from_json(obj["p"]))


@chex.dataclass(mappable_dataclass=False, frozen=True)
class DistributionTable:
    """All rows `(s, v1, ..., vn)` generated by degree `k - 1` polynomials.

    Attributes:
        field (PrimeField): Field `F_t`.
        k (int): Threshold.
        n (int): Number of parties.
        rows (tuple): `t**k` distinct integer tuples, in lexicographic order of
            the coefficients `(s, r1, ..., r_{k-1})`.
    """

    field: PrimeField
    k: int
    n: int
    rows: tuple

    def __len__(self: Self) -> int:
        return len(self.rows)

    def zero_row(self: Self) -> Tuple[int, ...]:
        return (0,) * (self.n + 1)

    def contains(self: Self, row: Sequence[int]) -> bool:
        return tuple(int(v) for v in row) in set(self.rows)

    def to_csv(self: Self) -> str:
        header = ",".join(["s"] + [f"v{i}" for i in range(1, self.n + 1)])
        lines = [header] + [",".join(str(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def _coefficient_stack(t: int, k: int) -> np.ndarray:
    """All `t**k` coefficient vectors `(s, r1, ..., r_{k-1})`, lexicographic."""
    return np.indices((t,) * k).reshape(k, -1).T.astype(np.int64)


def _share_stack(coef_stack: np.ndarray, t: int, n: int) -> np.ndarray:
    """Rows `(s, v1..vn)` for a stack of coefficient vectors, modulo `t`."""
    secret = coef_stack[:, 0]
    points = np.arange(1, n + 1, dtype=np.int64)

    acc = np.zeros((coef_stack.shape[0], n), dtype=np.int64)
    for ell in range(coef_stack.shape[1] - 1, 0, -1):
        acc = ((acc + coef_stack[:, ell : ell + 1]) * points) % t
    v_stack = (acc + secret[:, None]) % t
    return np.concatenate([secret[:, None], v_stack], axis=1)


def shamir_distribution_table(field: Any, k: int, n: int) -> DistributionTable:
    """Enumerate the distribution table.

    Raises:
        ParameterError: shape out of range, `n >= t`, or more than
            `MAX_TABLE_ROWS` rows.

    Example:
        >>> table = shamir_distribution_table(3, 2, 2)
        >>> table.rows[:3]
        ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    """
    field = field if isinstance(field, PrimeField) else PrimeField.create(field)
    _check_shape(field, k, n)
    _check_table_size(field, k)

    row_stack = _share_stack(_coefficient_stack(field.t, k), field.t, n)
    rows = tuple(tuple(int(v) for v in row) for row in row_stack)

    if len(set(rows)) != len(rows):
        raise ParameterError("distribution table rows are not distinct")

    logger.debug("distribution table for t=%d k=%d n=%d has %d rows", field.t, k, n, len(rows))
    return DistributionTable(field=field, k=k, n=n, rows=rows)


def shamir_joint_distribution(params: ShamirParams) -> JointDist:
    """Exact joint of `(S, V1, ..., Vn)`: `p` on the zero row, the rest uniform."""
    table = shamir_distribution_table(params.field, params.k, params.n)
    other = (1 - params.p) / (params.num_rows - 1)
    zero = table.zero_row()

    masses = {row: params.p if row == zero else other for row in table.rows}
    variables = ("S",) + tuple(f"V{i}" for i in range(1, params.n + 1))
    return JointDist.create(variables, masses)


def shamir_marginal_masses(params: ShamirParams) -> Tuple[Fraction, Fraction]:
    """Common marginal masses `(P(0), P(z))`, `z != 0`, of the secret and every share."""
    t, k, p = params.t, params.k, params.p
    zero = (p * t**k + (1 - p) * t ** (k - 1) - 1) / Fraction(t**k - 1)
    nonzero = t ** (k - 1) * (1 - p) / Fraction(t**k - 1)
    return zero, nonzero


def shamir_guessing_probability(params: ShamirParams) -> Fraction:
    """Max marginal mass shared by the secret and every share."""
    return shamir_marginal_masses(params)[0]


def shamir_params_for_guessing_probability(field: Any, k: int, n: int, q: Any) -> ShamirParams:
    """Parameters whose secret and shares all have max mass `q`.

    Args:
        field: Prime modulus or `PrimeField`.
        k: Threshold.
        n: Number of parties.
        q: Target guessing probability, `1/t <= q < 1`.

    Raises:
        ParameterError: `q` outside `[1/t, 1)`.
    """
    field = field if isinstance(field, PrimeField) else PrimeField.create(field)
    q = parse_rational(q)
    t = field.t
    if not Fraction(1, t) <= q < 1:
        raise ParameterError(f"target guessing probability must be in [1/{t}, 1), got {q}")

    p = (q * (t**k - 1) - t ** (k - 1) + 1) / Fraction(t**k - t ** (k - 1))
    return ShamirParams.create(field, k, n, p)


def shamir_share_from_coefficients(
    s: int, r: Sequence[int], params: ShamirParams
) -> Tuple[int, ...]:
    """Shares `v1..vn` of the polynomial `s + r1 x + ... + r_{k-1} x**(k-1)`."""
    if len(r) != params.k - 1:
        raise ParameterError(f"expected {params.k - 1} coefficients, got {len(r)}")
    field = params.field
    coefs = [field(c) for c in r]
    return tuple(
        int(eval_share_poly(field(s), coefs, i, params.n)) for i in range(1, params.n + 1)
    )


def _coefficients_from_index(index: int, t: int, k: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(k):
        index, digit = divmod(index, t)
        digits.append(digit)
    return tuple(reversed(digits))


def shamir_sample(params: ShamirParams, key: jax.Array) -> Tuple[int, ShareBundle]:
    """Draw a table row: the zero row with probability `p`, else a uniform other row.

    Returns:
        tuple: The secret and the bundle of all `n` shares.
    """
    zero_key, row_key = jax.random.split(key)
    if bernoulli_zero_stack(zero_key, params.p, 1)[0] == 0:
        coefs = (0,) * params.k
    else:
        index = uniform_below(row_key, params.num_rows - 1) + 1
        coefs = _coefficients_from_index(index, params.t, params.k)

    shares = shamir_share_from_coefficients(coefs[0], coefs[1:], params)
    bundle = ShareBundle.create(
        params.tag, params.to_json(), {i + 1: v for i, v in enumerate(shares)}
    )
    return coefs[0], bundle


def shamir_share(s: int, params: ShamirParams, key: jax.Array) -> ShareBundle:
    """Share a given secret, drawing the coefficients from the table law given `S = s`.

    For `s = 0` the higher coefficients are all zero with probability
    `p / P(S = 0)` and otherwise a uniform nonzero vector; for `s != 0` they
    are uniform.
    """
    if isinstance(s, bool) or not isinstance(s, int) or not 0 <= s < params.t:
        raise ParameterError(f"secret must be an element of F_{params.t}, got {s!r}")

    zero_key, coef_key = jax.random.split(key)
    t, k = params.t, params.k
    if k == 1:
        index = 0
    elif s == 0:
        stay_zero = params.p / shamir_marginal_masses(params)[0]
        if bernoulli_zero_stack(zero_key, stay_zero, 1)[0] == 0:
            index = 0
        else:
            index = uniform_below(coef_key, t ** (k - 1) - 1) + 1
    else:
        index = uniform_below(coef_key, t ** (k - 1))

    r = _coefficients_from_index(index, t, k - 1)
    shares = shamir_share_from_coefficients(s, r, params)
    return ShareBundle.create(
        params.tag, params.to_json(), {i + 1: v for i, v in enumerate(shares)}
    )


def shamir_sample_stack(params: ShamirParams, key: jax.Array, num: int) -> np.ndarray:
    """Draw `num` table rows at once.

    Returns:
        np.ndarray: int64 array `(num, n + 1)` of rows `(s, v1, ..., vn)`.

    Raises:
        ParameterError: `t**k` above `2**63` or `t` above `2**31`, where int64
            arithmetic would overflow.
    """
    if params.num_rows > MAX_UNIFORM_BOUND or params.t > 2**31:
        raise ParameterError("vectorised sampling needs t**k <= 2**63 and t <= 2**31")

    zero_key, row_key = jax.random.split(key)
    is_other = bernoulli_zero_stack(zero_key, params.p, num)
    index_stack = uniform_below_stack(row_key, params.num_rows - 1, num) + 1
    index_stack = np.where(is_other == 1, index_stack, 0)

    coef_stack = np.zeros((num, params.k), dtype=np.int64)
    for ell in range(params.k - 1, -1, -1):
        index_stack, coef_stack[:, ell] = np.divmod(index_stack, params.t)

    return _share_stack(coef_stack, params.t, params.n)


def shamir_combine(bundle: ShareBundle, params: Optional[ShamirParams] = None) -> int:
    """Recover the secret by Lagrange interpolation of the first `k` shares.

    Every share in the bundle is checked, not only the interpolated ones.

    Raises:
        NotQualifiedError: fewer than `k` parties.
        ParameterError: a party index above `n` or a share outside the field.
    """
    if bundle.scheme != ShamirParams.tag:
        raise ParameterError(f"expected a pi2 bundle, got {bundle.scheme!r}")
    if params is None:
        params = ShamirParams.from_json(bundle.params)

    values = bundle.values()
    if len(values) < params.k:
        raise NotQualifiedError(
            f"parties {sorted(values)} are not a qualified set: need {params.k} shares"
        )

    field = params.field
    for i, value in values.items():
        if i > params.n:
            raise ParameterError(f"party {i} does not exist for n = {params.n}")
        if value >= field.t:
            raise ParameterError(f"share {value} of party {i} is not an element of F_{field.t}")

    points = [(field.party(i, params.n), field(values[i])) for i in sorted(values)[: params.k]]

    return int(lagrange_at_zero(points))
