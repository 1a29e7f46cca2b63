"""Report types returned by the verifiers.

Every report carries float bit values for reading and exact pre-log
rationals for comparisons; `to_json` writes rationals as `{"num", "den"}`.
"""

from fractions import Fraction
from typing import Any, Dict, Optional

import chex
from typing_extensions import Self

from ..utils.rational_helpers import rational_to_json


def json_value(value: Any) -> Any:
    """JSON form of report values: rationals as `{"num", "den"}`, tuples as lists."""
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, tuple):
        return [json_value(v) for v in value]
    if isinstance(value, list):
        return [json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    return value


def _party_list(parties: Optional[tuple]) -> Optional[list]:
    return None if parties is None else list(parties)


@chex.dataclass(mappable_dataclass=False, frozen=True)
class GapEntry:
    """Entropy gap of the secret for one forbidden set.

    Attributes:
        forbidden (tuple): Parties of the forbidden set.
        gap (float): `R(S) - R(S | V_F)` in bits.
        exact (bool): Gap is exactly zero (rational comparison at order
            infinity, independence otherwise).
        cond_guess (Fraction): Guessing probability of the secret given
            `V_F`, at order infinity only.
    """

    forbidden: tuple
    gap: float
    exact: bool
    cond_guess: Optional[Fraction] = None

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "forbidden": list(self.forbidden),
            "gap": self.gap,
            "exact": self.exact,
            "cond_guess": json_value(self.cond_guess),
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class SecurityReport:
    """Gaps over all forbidden sets at one order and measure."""

    order: str
    measure: str
    secret_entropy: float
    entries: tuple
    epsilon: float
    perfect: bool
    witness: Optional[tuple] = None
    secret_guess: Optional[Fraction] = None

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "measure": self.measure,
            "secret_entropy": self.secret_entropy,
            "epsilon": self.epsilon,
            "perfect": self.perfect,
            "non_perfect_witness": _party_list(self.witness),
            "secret_guess": json_value(self.secret_guess),
            "gaps": [e.to_json() for e in self.entries],
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class BoundEntry:
    """Share-size lower bound `R(V_i) >= R(S) - epsilon` for one party.

    Attributes:
        party (int): Party index.
        share_entropy (float): `R(V_i)`.
        applicable (bool): Some forbidden `F` with `F + {i}` qualified exists.
        witness (tuple): Such an `F`, or `None`.
        passed (bool): Bound holds, or does not apply.
        equal (bool): `R(V_i) == R(S)` exactly (order infinity only).
    """

    party: int
    share_entropy: float
    applicable: bool
    passed: bool
    witness: Optional[tuple] = None
    equal: Optional[bool] = None

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "party": self.party,
            "share_entropy": self.share_entropy,
            "applicable": self.applicable,
            "passed": self.passed,
            "witness": _party_list(self.witness),
            "equal": self.equal,
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class ShareBoundsReport:
    """Per-party share bounds plus the named zero-leakage consequences."""

    order: str
    epsilon: float
    secret_entropy: float
    entries: tuple
    named_checks: dict
    passed: bool

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "epsilon": self.epsilon,
            "secret_entropy": self.secret_entropy,
            "passed": self.passed,
            "named_checks": dict(self.named_checks),
            "parties": [e.to_json() for e in self.entries],
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class IdealityEntry:
    party: int
    share_entropy: float
    share_max_mass: Fraction
    equal: bool

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "party": self.party,
            "share_entropy": self.share_entropy,
            "share_max_mass": json_value(self.share_max_mass),
            "equal": self.equal,
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class IdealityReport:
    """Min-entropy of every share against the secret."""

    secret_entropy: float
    secret_max_mass: Fraction
    entries: tuple
    ideal: bool

    def flagged(self: Self) -> tuple:
        """Parties whose share min-entropy differs from the secret's."""
        return tuple(e.party for e in self.entries if not e.equal)

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "ideal": self.ideal,
            "secret_entropy": self.secret_entropy,
            "secret_max_mass": json_value(self.secret_max_mass),
            "parties": [e.to_json() for e in self.entries],
        }


@chex.dataclass(mappable_dataclass=False, frozen=True)
class CheckReport:
    """Outcome of a construction check.

    Attributes:
        name (str): Check name.
        passed (bool): All assertions held.
        values (dict): Computed quantities, exact where possible.
        failures (tuple): Descriptions of failed assertions.
    """

    name: str
    passed: bool
    values: dict
    failures: tuple = ()

    def to_json(self: Self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "values": json_value(self.values),
            "failures": list(self.failures),
        }
