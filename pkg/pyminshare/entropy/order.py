"""Orders of the Rényi entropy family."""

import math
from fractions import Fraction
from typing import Tuple, Union

import chex
from typing_extensions import Self

from ..errors import UnsupportedOrderError
from ..utils.rational_helpers import parse_rational


ZERO = "zero"
FINITE = "finite"
ONE = "one"
INFINITY = "infinity"

_INFINITY_NAMES = ("inf", "infinity", "+inf")


@chex.dataclass(mappable_dataclass=False, frozen=True)
class Order:
    """Order of a Rényi entropy.

    The limit orders are explicit tags, finite orders carry an exact rational
    `alpha` (positive, not one). A float order such as `math.sqrt(2)` is kept
    as the exact binary fraction it stores and evaluated in floating point.

    Attributes:
        kind (str): One of `"zero"`, `"finite"`, `"one"`, `"infinity"`.
        alpha (Fraction): Order value for `"finite"`; 0 or 1 for those tags,
            `None` for infinity.

    Example usage:
        >>> import math
        >>> import pyminshare as ps
        >>> ps.Order.create("inf")
        >>> ps.Order.create("1/2")
        >>> ps.Order.create(math.sqrt(2))
    """

    kind: str
    alpha: Fraction = None

    @classmethod
    def create(cls: Self, value: Union[str, int, float, Fraction, "Order"]) -> Self:
        """Parse `0`, `1`, `inf`, integers, `a/b` strings or real numbers.

        Decimal text such as `"0.5"` is rejected; only a float object is taken
        as a real order.

        Args:
            value: Order text or number.

        Raises:
            UnsupportedOrderError: negative, NaN or malformed order.
        """
        if isinstance(value, Order):
            return value

        if isinstance(value, str) and value.strip().lower() in _INFINITY_NAMES:
            return cls.infinity()

        if isinstance(value, float):
            if math.isnan(value):
                raise UnsupportedOrderError("order must be a number, got nan")
            if value == math.inf:
                return cls.infinity()
            if value < 0:
                raise UnsupportedOrderError(f"order must be nonnegative, got {value!r}")
            value = Fraction(value)

        try:
            alpha = parse_rational(value)
        except ValueError as exc:
            raise UnsupportedOrderError(f"invalid order {value!r}") from exc

        if alpha < 0:
            raise UnsupportedOrderError(f"order must be nonnegative, got {value!r}")
        if alpha == 0:
            return cls.zero()
        if alpha == 1:
            return cls.one()
        return cls.finite(alpha)

    @classmethod
    def zero(cls: Self) -> Self:
        return cls(kind=ZERO, alpha=Fraction(0))

    @classmethod
    def one(cls: Self) -> Self:
        return cls(kind=ONE, alpha=Fraction(1))

    @classmethod
    def infinity(cls: Self) -> Self:
        return cls(kind=INFINITY, alpha=None)

    @classmethod
    def finite(cls: Self, alpha: Fraction) -> Self:
        alpha = parse_rational(alpha)
        if alpha <= 0 or alpha == 1:
            raise UnsupportedOrderError(
                f"finite order must be positive and not 1, got {alpha}"
            )
        return cls(kind=FINITE, alpha=alpha)

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO

    @property
    def is_one(self) -> bool:
        return self.kind == ONE

    @property
    def is_infinity(self) -> bool:
        return self.kind == INFINITY

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def is_integral(self) -> bool:
        """Finite order with an integer value, evaluated with exact power sums."""
        return self.is_finite and self.alpha.denominator == 1

    def sort_key(self) -> Tuple[int, Fraction]:
        """Total order: zero < finite (ascending, one in place) < infinity."""
        if self.is_infinity:
            return (1, Fraction(0))
        return (0, self.alpha)

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        if self.alpha.denominator == 1:
            return str(self.alpha.numerator)
        return f"{self.alpha.numerator}/{self.alpha.denominator}"


def parse_orders(text: str) -> Tuple[Order, ...]:
    """Parse a comma separated order list such as `"1/2,1,2,inf"`."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise UnsupportedOrderError("empty order list")
    return tuple(Order.create(item) for item in items)
