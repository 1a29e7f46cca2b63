"""Finite probability distributions with exact rational masses.

A `ProbDist` is a single named variable, a `JointDist` a table over a tuple of
named variables. Only outcomes with positive mass are stored in a joint table.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, Iterable, List, Sequence, Tuple, Union

import chex
from typing_extensions import Self

from ..errors import DistributionError
from ..utils.rational_helpers import parse_rational


Names = Union[str, Sequence[str]]


def _to_mass(value: Any) -> Fraction:
    try:
        mass = parse_rational(value)
    except ValueError as exc:
        raise DistributionError(f"mass is not an exact rational: {value!r}") from exc
    if mass < 0:
        raise DistributionError(f"negative mass {mass}")
    return mass


def _sorted(items: Iterable[Any]) -> List[Any]:
    items = list(items)
    try:
        return sorted(items)
    except TypeError:
        return sorted(items, key=repr)


def _symbol_from_json(value: Any) -> Hashable:
    if isinstance(value, list):
        return tuple(_symbol_from_json(item) for item in value)
    if isinstance(value, (dict, float)) or value is None:
        raise DistributionError(f"unsupported symbol {value!r}")
    return value


def _symbol_to_json(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_symbol_to_json(item) for item in value]
    return value


def as_names(names: Names) -> Tuple[str, ...]:
    """Normalise a variable name or a sequence of names to a tuple."""
    if isinstance(names, str):
        return (names,)
    return tuple(names)


@chex.dataclass(mappable_dataclass=False, frozen=True)
class ProbDist:
    """Distribution of one named variable.

    Attributes:
        name (str): Variable name.
        symbols (tuple): Distinct outcome labels.
        masses (tuple): Exact masses, aligned with `symbols`, summing to one.

    Example usage:
        >>> import pyminshare as ps
        >>> d = ps.ProbDist.create([0, 1], ["3/4", "1/4"], name="S")
        >>> d.max_mass()
        Fraction(3, 4)
    """

    name: str
    symbols: tuple
    masses: tuple

    @classmethod
    def create(
        cls: Self, symbols: Sequence[Hashable], masses: Sequence[Any], name: str = "X"
    ) -> Self:
        """Validate and build a distribution.

        Args:
            symbols: Distinct outcome labels.
            masses: Exact rational masses (`Fraction`, int or `"a/b"`).
            name: Variable name.

        Raises:
            DistributionError: lengths differ, duplicate symbols, negative or
                inexact masses, or masses not summing to exactly one.
        """
        symbols = tuple(symbols)
        masses = tuple(_to_mass(m) for m in masses)

        if len(symbols) != len(masses):
            raise DistributionError("symbols and masses differ in length")
        if len(set(symbols)) != len(symbols):
            raise DistributionError("duplicate symbols")
        if sum(masses, Fraction(0)) != 1:
            raise DistributionError(f"masses sum to {sum(masses, Fraction(0))}, not 1")

        return cls(name=name, symbols=symbols, masses=masses)

    @classmethod
    def uniform(cls: Self, symbols: Sequence[Hashable], name: str = "X") -> Self:
        symbols = tuple(symbols)
        if not symbols:
            raise DistributionError("uniform distribution needs at least one symbol")
        return cls.create(symbols, [Fraction(1, len(symbols))] * len(symbols), name)

    def support(self: Self) -> Tuple[Hashable, ...]:
        return tuple(s for s, m in zip(self.symbols, self.masses) if m > 0)

    def mass(self: Self, symbol: Hashable) -> Fraction:
        for s, m in zip(self.symbols, self.masses):
            if s == symbol:
                return m
        return Fraction(0)

    def max_mass(self: Self) -> Fraction:
        return max(self.masses)

    def positive_masses(self: Self) -> Tuple[Fraction, ...]:
        return tuple(m for m in self.masses if m > 0)

    def as_vector(self: Self, symbols: Sequence[Hashable]) -> Tuple[Fraction, ...]:
        """Masses on the given symbols, in that order."""
        return tuple(self.mass(s) for s in symbols)

    def to_joint(self: Self) -> "JointDist":
        return JointDist.create(
            (self.name,), {(s,): m for s, m in zip(self.symbols, self.masses)}
        )

    def to_json(self: Self) -> Dict[str, Any]:
        return self.to_joint().to_json()

    @classmethod
    def from_json(cls: Self, obj: Any) -> Self:
        joint = JointDist.from_json(obj)
        if len(joint.variables) != 1:
            raise DistributionError(
                f"expected a single variable, got {list(joint.variables)}"
            )
        return joint.marginal(joint.variables[0])


@chex.dataclass(mappable_dataclass=False, frozen=True)
class JointDist:
    """Exact joint distribution over named variables.

    Attributes:
        variables (tuple): Variable names, in column order.
        table (dict): Map from outcome tuples to positive masses.

    Example usage:
        >>> import pyminshare as ps
        >>> j = ps.JointDist.create(("X", "Y"), {(0, 0): "1/2", (1, 1): "1/2"})
        >>> j.marginal("X").masses
        (Fraction(1, 2), Fraction(1, 2))
    """

    variables: tuple
    table: dict

    @classmethod
    def create(cls: Self, variables: Sequence[str], table: Dict[tuple, Any]) -> Self:
        """Validate and build a joint table.

        Zero masses are dropped.

        Raises:
            DistributionError: bad variable names, arity mismatch, inexact or
                negative masses, or masses not summing to exactly one.
        """
        variables = tuple(variables)
        if not variables:
            raise DistributionError("a joint distribution needs at least one variable")
        if any(not isinstance(v, str) or not v for v in variables):
            raise DistributionError(f"variable names must be nonempty strings: {variables}")
        if len(set(variables)) != len(variables):
            raise DistributionError(f"duplicate variable names: {variables}")

        clean = {}
        for outcome, value in table.items():
            outcome = tuple(outcome)
            if len(outcome) != len(variables):
                raise DistributionError(
                    f"outcome {outcome} has arity {len(outcome)}, expected {len(variables)}"
                )
            mass = _to_mass(value)
            if mass > 0:
                clean[outcome] = mass

        total = sum(clean.values(), Fraction(0))
        if total != 1:
            raise DistributionError(f"masses sum to {total}, not 1")

        return cls(variables=variables, table=clean)

    def index(self: Self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise DistributionError(
                f"unknown variable {name!r}, have {list(self.variables)}"
            ) from None

    def indices(self: Self, names: Names) -> Tuple[int, ...]:
        return tuple(self.index(name) for name in as_names(names))

    def marginalize(self: Self, keep: Iterable[str]) -> Self:
        """Exact marginal on `keep`, columns in the order of `self.variables`."""
        return marginalize(self, keep)

    def marginal(self: Self, name: str) -> ProbDist:
        """Distribution of a single variable, symbols sorted."""
        idx = self.index(name)
        masses: Dict[Hashable, Fraction] = {}
        for outcome, mass in self.table.items():
            masses[outcome[idx]] = masses.get(outcome[idx], Fraction(0)) + mass

        symbols = _sorted(masses)
        return ProbDist(
            name=name, symbols=tuple(symbols), masses=tuple(masses[s] for s in symbols)
        )

    def conditional_groups(
        self: Self, target: Names, given: Iterable[str] = ()
    ) -> Dict[tuple, Dict[tuple, Fraction]]:
        """Group `P(x, y)` by the value `y` of the conditioning variables.

        Args:
            target: Target variable name or tuple of names (joint target).
            given: Conditioning variable names, possibly empty.

        Returns:
            dict: `{y: {x: P(x, y)}}` over outcomes with positive mass.
        """
        target_idx = self.indices(target)
        given = tuple(given)
        given_idx = self.indices(given)

        overlap = set(as_names(target)) & set(given)
        if overlap:
            raise DistributionError(f"variables {sorted(overlap)} are both target and given")

        groups: Dict[tuple, Dict[tuple, Fraction]] = {}
        for outcome, mass in self.table.items():
            x = tuple(outcome[i] for i in target_idx)
            y = tuple(outcome[i] for i in given_idx)
            group = groups.setdefault(y, {})
            group[x] = group.get(x, Fraction(0)) + mass
        return groups

    def product(self: Self, other: Self) -> Self:
        """Joint of two independent distributions with disjoint variables."""
        if set(self.variables) & set(other.variables):
            raise DistributionError("product needs disjoint variable names")

        table = {
            a + b: ma * mb
            for a, ma in self.table.items()
            for b, mb in other.table.items()
        }
        return JointDist(variables=self.variables + other.variables, table=table)

    def pushforward(
        self: Self, variables: Sequence[str], fn: Callable[[tuple], tuple]
    ) -> Self:
        """Distribution of `fn(outcome)` with columns named `variables`."""
        table: Dict[tuple, Fraction] = {}
        for outcome, mass in self.table.items():
            image = tuple(fn(outcome))
            table[image] = table.get(image, Fraction(0)) + mass
        return JointDist.create(variables, table)

    def rename(self: Self, mapping: Dict[str, str]) -> Self:
        variables = tuple(mapping.get(v, v) for v in self.variables)
        return JointDist.create(variables, self.table)

    def to_json(self: Self) -> Dict[str, Any]:
        """`{"variables": [...], "entries": [{"tuple", "num", "den"}, ...]}`, sorted."""
        entries = [
            {
                "tuple": [_symbol_to_json(s) for s in outcome],
                "num": self.table[outcome].numerator,
                "den": self.table[outcome].denominator,
            }
            for outcome in _sorted(self.table)
        ]
        return {"variables": list(self.variables), "entries": entries}

    @classmethod
    def from_json(cls: Self, obj: Any) -> Self:
        if not isinstance(obj, dict) or "variables" not in obj or "entries" not in obj:
            raise DistributionError("distribution JSON needs 'variables' and 'entries'")
        if not isinstance(obj["variables"], list) or not isinstance(obj["entries"], list):
            raise DistributionError("'variables' and 'entries' must be lists")

        table: Dict[tuple, Fraction] = {}
        for entry in obj["entries"]:
            if not isinstance(entry, dict) or set(entry) != {"tuple", "num", "den"}:
                raise DistributionError(f"malformed entry {entry!r}")
            if not isinstance(entry["tuple"], list):
                raise DistributionError(f"entry tuple must be a list: {entry!r}")

            outcome = tuple(_symbol_from_json(s) for s in entry["tuple"])
            if outcome in table:
                raise DistributionError(f"duplicate outcome {list(outcome)}")
            table[outcome] = _to_mass({"num": entry["num"], "den": entry["den"]})

        return cls.create(obj["variables"], table)


def marginalize(j: JointDist, keep: Iterable[str]) -> JointDist:
    """Exact marginal of `j` on the variables in `keep`.

    Raises:
        DistributionError: empty `keep` or unknown names.
    """
    keep = set(as_names(keep) if isinstance(keep, str) else keep)
    if not keep:
        raise DistributionError("marginalize needs a nonempty set of variables")
    for name in keep:
        j.index(name)

    idx = tuple(i for i, v in enumerate(j.variables) if v in keep)
    table: Dict[tuple, Fraction] = {}
    for outcome, mass in j.table.items():
        key = tuple(outcome[i] for i in idx)
        table[key] = table.get(key, Fraction(0)) + mass

    return JointDist(variables=tuple(j.variables[i] for i in idx), table=table)


def independent_joint(*dists: ProbDist) -> JointDist:
    """Product of independent single-variable distributions."""
    if not dists:
        raise DistributionError("need at least one distribution")
    joint = dists[0].to_joint()
    for dist in dists[1:]:
        joint = joint.product(dist.to_joint())
    return joint
