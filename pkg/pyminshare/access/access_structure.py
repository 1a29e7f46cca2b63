"""Access structures over parties `1..n` and the cumulative map.

Party sets are bitmasks: party `i` is bit `i - 1`. Every query enumerates all
`2**n` subsets, so `n` is capped at `MAX_PARTIES`.
"""

import logging
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import chex
from typing_extensions import Self

from ..errors import AccessStructureError, NonMonotoneError


logger = logging.getLogger(__name__)

MAX_PARTIES = 20


def parties_to_mask(parties: Iterable[int], n: int) -> int:
    """Bitmask of a party set.

    Raises:
        AccessStructureError: a party outside `[1, n]`.
    """
    mask = 0
    for i in parties:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
            raise AccessStructureError(f"party {i!r} outside [1, {n}]")
        mask |= 1 << (i - 1)
    return mask


def mask_to_parties(mask: int) -> Tuple[int, ...]:
    """Ascending party indices of a bitmask."""
    parties = []
    i = 1
    while mask:
        if mask & 1:
            parties.append(i)
        mask >>= 1
        i += 1
    return tuple(parties)


def _check_party_count(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_PARTIES:
        raise AccessStructureError(f"party count must be in [1, {MAX_PARTIES}], got {n!r}")


@chex.dataclass(mappable_dataclass=False, frozen=True)
class AccessStructure:
    """Partition of all party subsets into qualified and forbidden sets.

    Attributes:
        n (int): Number of parties.
        qualified (frozenset): Bitmasks of qualified sets.
        forbidden (frozenset): Bitmasks of forbidden sets.

    Example usage:
        >>> import pyminshare as ps
        >>> g = ps.threshold_structure(2, 3)
        >>> g.is_qualified([1, 3])
        True
    """

    n: int
    qualified: frozenset
    forbidden: frozenset

    @classmethod
    def create(
        cls: Self,
        n: int,
        qualified: Iterable[Iterable[int]],
        forbidden: Optional[Iterable[Iterable[int]]] = None,
    ) -> Self:
        """Build from explicit party-set families.

        Args:
            n: Number of parties.
            qualified: Qualified party sets.
            forbidden: Forbidden party sets; the complement of `qualified`
                when omitted.

        Raises:
            AccessStructureError: the two families do not partition the
                power set of `[n]`.
        """
        _check_party_count(n)
        qualified = frozenset(parties_to_mask(q, n) for q in qualified)

        full = 1 << n
        if forbidden is None:
            forbidden = frozenset(m for m in range(full) if m not in qualified)
        else:
            forbidden = frozenset(parties_to_mask(f, n) for f in forbidden)

        if qualified & forbidden:
            raise AccessStructureError("a set is both qualified and forbidden")
        if len(qualified) + len(forbidden) != full:
            raise AccessStructureError("qualified and forbidden sets do not cover all subsets")

        return cls(n=n, qualified=qualified, forbidden=forbidden)

    @classmethod
    def from_masks(cls: Self, n: int, qualified_masks: Iterable[int]) -> Self:
        _check_party_count(n)
        qualified = frozenset(qualified_masks)
        full = 1 << n
        forbidden = frozenset(m for m in range(full) if m not in qualified)
        return cls(n=n, qualified=qualified, forbidden=forbidden)

    @property
    def full_mask(self: Self) -> int:
        return (1 << self.n) - 1

    def is_qualified(self: Self, parties: Iterable[int]) -> bool:
        return parties_to_mask(parties, self.n) in self.qualified

    def is_forbidden(self: Self, parties: Iterable[int]) -> bool:
        return parties_to_mask(parties, self.n) in self.forbidden

    def forbidden_sets(self: Self) -> List[Tuple[int, ...]]:
        """All forbidden sets, ascending by bitmask."""
        return [mask_to_parties(m) for m in sorted(self.forbidden)]

    def qualified_sets(self: Self) -> List[Tuple[int, ...]]:
        """All qualified sets, ascending by bitmask."""
        return [mask_to_parties(m) for m in sorted(self.qualified)]

    def minimal_qualified(self: Self) -> List[Tuple[int, ...]]:
        """Qualified sets none of whose proper subsets is qualified."""
        minimal = [
            q
            for q in sorted(self.qualified)
            if not any(q & ~(1 << b) in self.qualified for b in range(self.n) if q >> b & 1)
        ]
        return [mask_to_parties(m) for m in minimal]

    def to_json(self: Self) -> Dict[str, Any]:
        return {"n": self.n, "min_qualified": [list(q) for q in self.minimal_qualified()]}

    @classmethod
    def from_json(cls: Self, obj: Any) -> Self:
        if not isinstance(obj, dict) or set(obj) != {"n", "min_qualified"}:
            raise AccessStructureError("access structure JSON needs 'n' and 'min_qualified'")
        if not isinstance(obj["min_qualified"], list) or not all(
            isinstance(q, list) for q in obj["min_qualified"]
        ):
            raise AccessStructureError("'min_qualified' must be a list of party lists")
        return from_minimal_qualified(obj["n"], obj["min_qualified"])


def threshold_structure(k: int, n: int) -> AccessStructure:
    """The `(k, n)` threshold structure: qualified iff at least `k` parties.

    Raises:
        AccessStructureError: `k` outside `[1, n]`.
    """
    _check_party_count(n)
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
        raise AccessStructureError(f"threshold k must be in [1, {n}], got {k!r}")
    return AccessStructure.from_masks(
        n, (m for m in range(1 << n) if m.bit_count() >= k)
    )


def from_minimal_qualified(n: int, min_qualified: Iterable[Iterable[int]]) -> AccessStructure:
    """Monotone structure generated by an antichain of minimal qualified sets.

    Raises:
        AccessStructureError: empty family, empty set, party out of range or
            a family that is not an antichain.
    """
    _check_party_count(n)
    generators = [parties_to_mask(q, n) for q in min_qualified]
    if not generators:
        raise AccessStructureError("minimal qualified family is empty")
    if 0 in generators:
        raise AccessStructureError("the empty set cannot be qualified")
    if len(set(generators)) != len(generators):
        raise AccessStructureError("repeated minimal qualified set")
    for a in generators:
        for b in generators:
            if a != b and a & b == a:
                raise AccessStructureError(
                    f"not an antichain: {list(mask_to_parties(a))} "
                    f"is contained in {list(mask_to_parties(b))}"
                )

    return AccessStructure.from_masks(
        n, (m for m in range(1 << n) if any(m & g == g for g in generators))
    )


def is_monotone(g: AccessStructure) -> bool:
    """Whether adding a party to a qualified set keeps it qualified.

    Since the families partition the power set, this also means every subset
    of a forbidden set is forbidden.
    """
    for mask in g.qualified:
        for b in range(g.n):
            if (mask | 1 << b) not in g.qualified:
                return False
    return True


def _require_monotone(g: AccessStructure) -> None:
    if not is_monotone(g):
        raise NonMonotoneError("operation requires a monotone access structure")


def maximal_forbidden_masks(g: AccessStructure) -> Tuple[int, ...]:
    """Bitmasks of the maximal forbidden sets, ascending."""
    _require_monotone(g)
    maximal = [
        f
        for f in sorted(g.forbidden)
        if all((f | 1 << b) in g.qualified for b in range(g.n) if not f >> b & 1)
    ]
    return tuple(maximal)


def maximal_forbidden_sets(g: AccessStructure) -> List[Tuple[int, ...]]:
    """Forbidden sets that become qualified when any missing party joins.

    Sorted by bitmask value.

    Raises:
        NonMonotoneError: `g` is not monotone.

    Example:
        >>> maximal_forbidden_sets(threshold_structure(2, 3))
        [(1,), (2,), (3,)]
    """
    return [mask_to_parties(m) for m in maximal_forbidden_masks(g)]


@chex.dataclass(mappable_dataclass=False, frozen=True)
class CumulativeMap:
    """Assignment of building-block indices to parties.

    Index `j` (1-based) stands for the `j`-th maximal forbidden set; party `i`
    receives every `j` whose maximal forbidden set omits `i`.

    Attributes:
        n (int): Number of parties.
        m (int): Number of maximal forbidden sets.
        maximal_forbidden (tuple): Their bitmasks, ascending.
        assignment (tuple): Per party `i` (position `i - 1`), the ascending
            indices assigned to it.
    """

    n: int
    m: int
    maximal_forbidden: tuple
    assignment: tuple

    def of_party(self: Self, i: int) -> Tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise AccessStructureError(f"party {i} outside [1, {self.n}]")
        return self.assignment[i - 1]

    def image(self: Self, parties: Iterable[int]) -> FrozenSet[int]:
        """Union of the indices assigned to `parties`."""
        out = set()
        for i in parties:
            out.update(self.of_party(i))
        return frozenset(out)

    def covers(self: Self, parties: Iterable[int]) -> bool:
        return len(self.image(parties)) == self.m


def cumulative_map(g: AccessStructure) -> CumulativeMap:
    """Cumulative map of a monotone structure.

    Raises:
        NonMonotoneError: `g` is not monotone.

    Example:
        >>> cumulative_map(threshold_structure(2, 3)).assignment
        ((2, 3), (1, 3), (1, 2))
    """
    maximal = maximal_forbidden_masks(g)
    assignment = tuple(
        tuple(j + 1 for j, f in enumerate(maximal) if not f >> (i - 1) & 1)
        for i in range(1, g.n + 1)
    )
    logger.debug("cumulative map over %d parties uses m = %d indices", g.n, len(maximal))
    return CumulativeMap(
        n=g.n, m=len(maximal), maximal_forbidden=maximal, assignment=assignment
    )
