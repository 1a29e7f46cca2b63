"""Prime field arithmetic, share polynomials and Lagrange interpolation at zero."""

from typing import Iterable, List, Sequence, Tuple, Union

import chex
import sympy
from typing_extensions import Self

from ..errors import FieldError, FieldInversionError


MAX_MODULUS = 2**64

IntLike = Union[int, "FieldElement"]


@chex.dataclass(mappable_dataclass=False, frozen=True)
class PrimeField:
    """The field of integers modulo a prime `t`.

    Party `i` of an `n` party scheme is encoded as the element `i`, which
    needs `n < t`.

    Attributes:
        t (int): Prime modulus.

    Example usage:
        >>> import pyminshare as ps
        >>> f5 = ps.PrimeField.create(5)
        >>> f5(3) + f5(4)
        FieldElement(field=PrimeField(t=5), value=2)
    """

    t: int

    @classmethod
    def create(cls: Self, t: int) -> Self:
        """Build the field, checking primality.

        Raises:
            FieldError: `t` not a prime below `2**64`.
        """
        if isinstance(t, bool) or not isinstance(t, int):
            raise FieldError(f"modulus must be an integer, got {t!r}")
        if not 2 <= t < MAX_MODULUS or not sympy.isprime(t):
            raise FieldError(f"modulus must be a prime below 2**64, got {t}")
        return cls(t=t)

    def __call__(self: Self, value: int) -> "FieldElement":
        return FieldElement(field=self, value=int(value) % self.t)

    @property
    def zero(self: Self) -> "FieldElement":
        return self(0)

    @property
    def one(self: Self) -> "FieldElement":
        return self(1)

    def elements(self: Self) -> List["FieldElement"]:
        return [self(v) for v in range(self.t)]

    def party(self: Self, i: int, n: int) -> "FieldElement":
        """Encode party `i` of `n` as the field element `i`.

        Raises:
            FieldError: `i` outside `[1, n]` or `n >= t`.
        """
        check_party_count(self, n)
        if not 1 <= i <= n:
            raise FieldError(f"party index {i} outside [1, {n}]")
        return self(i)


@chex.dataclass(mappable_dataclass=False, frozen=True)
class FieldElement:
    """Element of a prime field, `0 <= value < t`."""

    field: PrimeField
    value: int

    def _coerce(self: Self, other: IntLike) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(
                    f"elements of F_{self.field.t} and F_{other.field.t} do not mix"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other)
        raise FieldError(f"cannot combine a field element with {other!r}")

    def __add__(self: Self, other: IntLike) -> Self:
        other = self._coerce(other)
        return self.field(self.value + other.value)

    __radd__ = __add__

    def __sub__(self: Self, other: IntLike) -> Self:
        other = self._coerce(other)
        return self.field(self.value - other.value)

    def __rsub__(self: Self, other: IntLike) -> Self:
        return self._coerce(other) - self

    def __mul__(self: Self, other: IntLike) -> Self:
        other = self._coerce(other)
        return self.field(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self: Self) -> Self:
        return self.field(-self.value)

    def __pow__(self: Self, exponent: int) -> Self:
        if exponent < 0:
            return self.inv() ** (-exponent)
        return self.field(pow(self.value, exponent, self.field.t))

    def __truediv__(self: Self, other: IntLike) -> Self:
        return self * self._coerce(other).inv()

    def inv(self: Self) -> Self:
        """Multiplicative inverse.

        Raises:
            FieldInversionError: the element is zero.
        """
        if self.value == 0:
            raise FieldInversionError(f"zero has no inverse in F_{self.field.t}")
        return self.field(pow(self.value, -1, self.field.t))

    def __int__(self: Self) -> int:
        return self.value

    def __index__(self: Self) -> int:
        return self.value

    def __str__(self: Self) -> str:
        return str(self.value)


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def check_party_count(field: PrimeField, n: int) -> None:
    """Raise `FieldError` unless parties `1..n` are distinct nonzero elements."""
    if n < 1:
        raise FieldError(f"party count must be positive, got {n}")
    if n >= field.t:
        raise FieldError(
            f"n = {n} parties need n < t, got t = {field.t} "
            "(party points must be distinct and nonzero)"
        )


def eval_share_poly(
    s: FieldElement, r: Sequence[FieldElement], i: int, n: int = None
) -> FieldElement:
    """Share of party `i`: `s + sum_l i**l * r[l-1]`, by Horner's rule.

    Args:
        s: Secret, the constant coefficient.
        r: Coefficients `r_1..r_{k-1}` of the higher powers.
        i: Party index.
        n: Party count; when given, `1 <= i <= n < t` is enforced.

    Returns:
        FieldElement: The polynomial evaluated at `i`.

    Example:
        >>> f5 = PrimeField.create(5)
        >>> int(eval_share_poly(f5(3), [f5(2)], 1))
        0
    """
    field = s.field
    if n is not None:
        x = field.party(i, n)
    else:
        if not 1 <= i < field.t:
            raise FieldError(f"party index {i} must lie in [1, {field.t - 1}]")
        x = field(i)

    acc = field.zero
    for coef in reversed(list(r)):
        acc = (acc + coef) * x
    return acc + s


def lagrange_at_zero(points: Iterable[Tuple[IntLike, IntLike]]) -> FieldElement:
    """Value at zero of the lowest-degree polynomial through `points`.

    Args:
        points: `(x, y)` pairs of field elements with distinct nonzero `x`.

    Raises:
        FieldError: no points, a zero or repeated `x`, or mixed fields.

    Example:
        >>> f5 = PrimeField.create(5)
        >>> int(lagrange_at_zero([(f5(1), f5(0)), (f5(2), f5(2))]))
        3
    """
    points = list(points)
    if not points:
        raise FieldError("interpolation needs at least one point")

    field = next(
        (c.field for pt in points for c in pt if isinstance(c, FieldElement)), None
    )
    if field is None:
        raise FieldError("interpolation points carry no field")

    points = [(field.zero + x, field.zero + y) for x, y in points]
    xs = [x.value for x, _ in points]
    if any(x == 0 for x in xs):
        raise FieldError("interpolation point at x = 0")
    if len(set(xs)) != len(xs):
        raise FieldError(f"repeated interpolation points {xs}")

    secret = field.zero
    for j, (x_j, y_j) in enumerate(points):
        num, den = field.one, field.one
        for m, (x_m, _) in enumerate(points):
            if m != j:
                num = num * x_m
                den = den * (x_m - x_j)
        secret = secret + y_j * num / den
    return secret
