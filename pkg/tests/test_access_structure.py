"""Unit tests for access structures and the cumulative map."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import pyminshare as ps


def test_masks():
    assert ps.parties_to_mask([1, 3], 3) == 0b101
    assert ps.mask_to_parties(0b101) == (1, 3)
    assert ps.mask_to_parties(0) == ()

    with pytest.raises(ps.AccessStructureError):
        ps.parties_to_mask([4], 3)


def test_threshold_structure():
    g = ps.threshold_structure(2, 3)

    assert g.n == 3
    assert g.full_mask == 0b111
    assert g.is_qualified([1, 3])
    assert g.is_forbidden([2])
    assert g.is_forbidden([])
    assert g.forbidden_sets() == [(), (1,), (2,), (3,)]
    assert g.minimal_qualified() == [(1, 2), (1, 3), (2, 3)]
    assert ps.is_monotone(g)


@pytest.mark.parametrize("k, n", [(0, 3), (4, 3), (1, 0), (2, 21)])
def test_threshold_rejects(k, n):
    with pytest.raises(ps.AccessStructureError):
        ps.threshold_structure(k, n)


def test_create_partition():
    g = ps.AccessStructure.create(2, qualified=[[1, 2]])

    assert g.forbidden_sets() == [(), (1,), (2,)]

    with pytest.raises(ps.AccessStructureError):
        ps.AccessStructure.create(2, qualified=[[1, 2]], forbidden=[[1]])
    with pytest.raises(ps.AccessStructureError):
        ps.AccessStructure.create(2, qualified=[[1, 2]], forbidden=[[], [1], [2], [1, 2]])


def test_non_monotone():
    g = ps.AccessStructure.create(2, qualified=[[1]])

    assert not ps.is_monotone(g)
    with pytest.raises(ps.NonMonotoneError):
        ps.maximal_forbidden_sets(g)
    with pytest.raises(ps.NonMonotoneError):
        ps.cumulative_map(g)


def test_from_minimal_qualified():
    g = ps.from_minimal_qualified(4, [[1, 2], [2, 3], [3, 4]])

    assert g.is_qualified([1, 2, 4])
    assert g.is_forbidden([1, 3])
    assert ps.maximal_forbidden_sets(g) == [(1, 3), (1, 4), (2, 4)]
    assert g.minimal_qualified() == [(1, 2), (2, 3), (3, 4)]


@pytest.mark.parametrize(
    "family", [[], [[]], [[1, 2], [1, 2]], [[1], [1, 2]], [[5]]]
)
def test_from_minimal_qualified_rejects(family):
    with pytest.raises(ps.AccessStructureError):
        ps.from_minimal_qualified(4, family)


def test_json_round_trip():
    g = ps.from_minimal_qualified(4, [[1, 2], [2, 3], [3, 4]])

    obj = g.to_json()
    assert obj == {"n": 4, "min_qualified": [[1, 2], [2, 3], [3, 4]]}
    assert ps.AccessStructure.from_json(obj) == g

    with pytest.raises(ps.AccessStructureError):
        ps.AccessStructure.from_json({"n": 4})


def test_cumulative_map_threshold():
    cmap = ps.cumulative_map(ps.threshold_structure(2, 3))

    assert cmap.m == 3
    assert cmap.assignment == ((2, 3), (1, 3), (1, 2))
    assert cmap.of_party(2) == (1, 3)
    assert cmap.image([1, 2]) == frozenset({1, 2, 3})
    assert cmap.covers([1, 3])
    assert not cmap.covers([3])


def test_cumulative_map_full_threshold_is_one_block_per_party():
    cmap = ps.cumulative_map(ps.threshold_structure(4, 4))

    assert cmap.m == 4
    assert cmap.assignment == ((4,), (3,), (2,), (1,))


def antichains(n):
    """Every nonempty antichain of nonempty subsets of `n` parties, as bitmasks."""
    masks = list(range(1, 1 << n))

    def extend(start, chosen):
        if chosen:
            yield chosen
        for index in range(start, len(masks)):
            mask = masks[index]
            if all(mask & c not in (c, mask) for c in chosen):
                yield from extend(index + 1, chosen + [mask])

    yield from extend(0, [])


def all_subsets(n):
    for r in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), r)


def check_maximal_forbidden(g):
    maximal = ps.maximal_forbidden_masks(g)

    assert maximal
    for a in maximal:
        assert a in g.forbidden
        assert all((a | 1 << b) in g.qualified for b in range(g.n) if not a >> b & 1)
        assert not any(a != b and a & b == a for b in maximal)
    for f in g.forbidden:
        assert any(f & a == f for a in maximal)

    cmap = ps.cumulative_map(g)
    assert cmap.m == len(maximal)
    for parties in all_subsets(g.n):
        assert cmap.covers(parties) == g.is_qualified(parties)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 18), (4, 166), (5, 7579)])
def test_every_structure_up_to_five_parties(n, count):
    seen = 0
    for chain in antichains(n):
        g = ps.from_minimal_qualified(n, [ps.mask_to_parties(a) for a in chain])

        assert set(g.minimal_qualified()) == {ps.mask_to_parties(a) for a in chain}
        assert ps.is_monotone(g)
        check_maximal_forbidden(g)
        seen += 1

    assert seen == count


@st.composite
def monotone_structures(draw):
    n = draw(st.integers(6, 8))
    candidates = [m for m in range(1, 1 << n)]
    picked = draw(st.lists(st.sampled_from(candidates), min_size=1, max_size=6, unique=True))
    antichain = [a for a in picked if not any(b != a and a & b == b for b in picked)]
    return ps.from_minimal_qualified(n, [ps.mask_to_parties(a) for a in antichain])


@settings(max_examples=300, deadline=None)
@given(monotone_structures())
def test_cumulative_map_on_larger_structures(g):
    check_maximal_forbidden(g)
