"""Shares handed to parties, with their JSON form.

A share value is an integer (a bit for the XOR scheme `pi1`, a field element
for the polynomial scheme `pi2`) or, for the cumulative scheme `general`, a
tuple of `(j, bit)` subshares in ascending `j`.
"""

import json
from typing import Any, Dict, Iterable, Mapping, Tuple

import chex
from typing_extensions import Self

from ..errors import ParameterError


SCHEME_TAGS = ("pi1", "pi2", "general")
SCHEME_ALIASES = {"xor": "pi1", "shamir": "pi2", "cumulative": "general"}


def canonical_scheme(scheme: Any) -> str:
    """Canonical tag of a scheme tag or its descriptive alias."""
    tag = SCHEME_ALIASES.get(scheme, scheme) if isinstance(scheme, str) else scheme
    if tag not in SCHEME_TAGS:
        raise ParameterError(
            f"unknown scheme {scheme!r}, expected one of {SCHEME_TAGS + tuple(SCHEME_ALIASES)}"
        )
    return tag


def _check_value(scheme: str, party: int, value: Any) -> Any:
    if scheme == "general":
        try:
            subshares = tuple((j, b) for j, b in value)
        except (TypeError, ValueError):
            raise ParameterError(f"party {party}: subshares must be (j, bit) pairs") from None
        for j, b in subshares:
            if isinstance(j, bool) or not isinstance(j, int) or j < 1:
                raise ParameterError(f"party {party}: subshare index must be a positive integer")
            if isinstance(b, bool) or not isinstance(b, int):
                raise ParameterError(f"party {party}: subshares must be bits")
        if [j for j, _ in subshares] != sorted({j for j, _ in subshares}):
            raise ParameterError(f"party {party}: subshare indices must be ascending and distinct")
        if any(b not in (0, 1) for _, b in subshares):
            raise ParameterError(f"party {party}: subshares must be bits")
        return subshares

    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParameterError(f"party {party}: share must be a nonnegative integer, got {value!r}")
    return value


@chex.dataclass(mappable_dataclass=False, frozen=True)
class ShareBundle:
    """Shares of some parties of one sharing.

    Attributes:
        scheme (str): One of `"pi1"`, `"pi2"`, `"general"`; the aliases
            `"xor"`, `"shamir"`, `"cumulative"` are normalized on creation.
        params (dict): JSON echo of the scheme parameters.
        shares (tuple): `(party, value)` pairs, ascending by party.

    Example usage:
        >>> import pyminshare as ps
        >>> bundle = ps.ShareBundle.create("pi1", {"n": 2}, {1: 0, 2: 1})
        >>> bundle.restrict([2]).parties()
        (2,)
    """

    scheme: str
    params: dict
    shares: tuple

    @classmethod
    def create(
        cls: Self, scheme: str, params: Dict[str, Any], shares: Mapping[int, Any]
    ) -> Self:
        """Validate party indices and value types for the scheme tag."""
        scheme = canonical_scheme(scheme)

        checked = []
        for party in sorted(shares):
            if isinstance(party, bool) or not isinstance(party, int) or party < 1:
                raise ParameterError(f"party index must be a positive integer, got {party!r}")
            checked.append((party, _check_value(scheme, party, shares[party])))

        return cls(scheme=scheme, params=dict(params), shares=tuple(checked))

    def parties(self: Self) -> Tuple[int, ...]:
        return tuple(party for party, _ in self.shares)

    def values(self: Self) -> Dict[int, Any]:
        return dict(self.shares)

    def restrict(self: Self, parties: Iterable[int]) -> Self:
        """Bundle holding only the listed parties' shares.

        Raises:
            ParameterError: a listed party has no share here.
        """
        parties = set(parties)
        missing = parties - set(self.parties())
        if missing:
            raise ParameterError(f"parties {sorted(missing)} hold no share in this bundle")
        return self.replace(shares=tuple(s for s in self.shares if s[0] in parties))

    def to_json(self: Self) -> Dict[str, Any]:
        shares = []
        for party, value in self.shares:
            if self.scheme == "general":
                subshares = [{"j": j, "bit": b} for j, b in value]
                shares.append({"party": party, "subshares": subshares})
            else:
                shares.append({"party": party, "value": value})
        return {"scheme": self.scheme, "params": self.params, "shares": shares}

    @classmethod
    def from_json(cls: Self, obj: Any) -> Self:
        if not isinstance(obj, dict) or set(obj) != {"scheme", "params", "shares"}:
            raise ParameterError("share file needs 'scheme', 'params' and 'shares'")
        if not isinstance(obj["params"], dict) or not isinstance(obj["shares"], list):
            raise ParameterError("'params' must be an object and 'shares' a list")

        scheme = canonical_scheme(obj["scheme"])
        shares: Dict[int, Any] = {}
        for entry in obj["shares"]:
            if not isinstance(entry, dict) or "party" not in entry:
                raise ParameterError(f"malformed share entry {entry!r}")
            party = entry["party"]
            if isinstance(party, bool) or not isinstance(party, int):
                raise ParameterError(f"party index must be an integer, got {party!r}")
            if party in shares:
                raise ParameterError(f"party {party} listed twice")

            if scheme == "general":
                subshares = entry.get("subshares")
                if set(entry) != {"party", "subshares"} or not isinstance(subshares, list):
                    raise ParameterError(f"malformed share entry {entry!r}")
                if not all(isinstance(s, dict) and set(s) == {"j", "bit"} for s in subshares):
                    raise ParameterError(f"malformed subshares for party {party}")
                shares[party] = [(s["j"], s["bit"]) for s in subshares]
            else:
                if set(entry) != {"party", "value"}:
                    raise ParameterError(f"malformed share entry {entry!r}")
                shares[party] = entry["value"]

        return cls.create(scheme, obj["params"], shares)

    def dumps(self: Self) -> str:
        """Deterministic JSON text: sorted keys, two-space indent."""
        return json.dumps(self.to_json(), sort_keys=True, indent=2)
