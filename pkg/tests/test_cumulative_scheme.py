"""Unit tests for the cumulative-map scheme."""

import itertools
from fractions import Fraction

import pytest

import pyminshare as ps


def ladder():
    return ps.from_minimal_qualified(4, [[1, 2], [2, 3], [3, 4]])


def test_create():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")

    assert params.tag == "general"
    assert params.n == 3
    assert params.m == 3
    assert params.cmap.assignment == ((2, 3), (1, 3), (1, 2))
    assert params.to_json() == {
        "structure": {"n": 3, "min_qualified": [[1, 2], [1, 3], [2, 3]]},
        "p": {"num": 3, "den": 4},
    }
    assert ps.CumulativeParams.from_json(params.to_json()) == params


def test_create_rejects():
    with pytest.raises(ps.NonMonotoneError):
        ps.CumulativeParams.create(ps.AccessStructure.create(2, qualified=[[1]]), "3/4")
    with pytest.raises(ps.ParameterError):
        ps.CumulativeParams.create(ps.threshold_structure(2, 3), "1/2")
    with pytest.raises(ps.ParameterError):
        ps.CumulativeParams.from_json({"p": {"num": 3, "den": 4}})


def test_share_from_draws():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")
    shares = ps.cumulative_share_from_draws(1, [0, 1], params)

    # w = (0, 1, 0)
    assert shares == {1: ((2, 1), (3, 0)), 2: ((1, 0), (3, 0)), 3: ((1, 0), (2, 1))}

    with pytest.raises(ps.ParameterError):
        ps.cumulative_share_from_draws(1, [0], params)


@pytest.mark.parametrize(
    "structure",
    [ps.threshold_structure(2, 3), ps.threshold_structure(3, 4), ladder()],
    ids=["2-of-3", "3-of-4", "ladder"],
)
def test_every_qualified_set_reconstructs(structure):
    params = ps.CumulativeParams.create(structure, "3/5")
    qualified = structure.qualified_sets()

    for s in (0, 1):
        for draws in itertools.product((0, 1), repeat=params.m - 1):
            shares = ps.cumulative_share_from_draws(s, draws, params)
            for parties in qualified:
                bundle = ps.ShareBundle.create(
                    "general", params.to_json(), {i: shares[i] for i in parties}
                )
                assert ps.cumulative_combine(bundle) == s


def test_share_and_combine():
    params = ps.CumulativeParams.create(ladder(), "2/3")
    bundle = ps.cumulative_share(1, params, ps.key_from_seed(3))

    assert ps.cumulative_combine(bundle.restrict([2, 3])) == 1
    assert ps.cumulative_share(1, params, ps.key_from_seed(3)) == bundle

    with pytest.raises(ps.NotQualifiedError):
        ps.cumulative_combine(bundle.restrict([1, 3]))


def test_share_with_wide_denominator():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), Fraction(2**64 + 1, 2**65))
    bundle = ps.cumulative_share(1, params, ps.key_from_seed(4))

    assert ps.cumulative_combine(bundle.restrict([1, 3])) == 1


def test_combine_rejects_inconsistent_blocks():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")
    bundle = ps.ShareBundle.create(
        "general", params.to_json(), {1: [(2, 1), (3, 0)], 2: [(1, 0), (3, 1)]}
    )

    with pytest.raises(ps.ParameterError):
        ps.cumulative_combine(bundle)


def test_extended_distribution():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")
    extended = ps.cumulative_extended_distribution(params)

    assert extended.variables == ("S", "W1", "W2", "W3", "V1", "V2", "V3")
    assert len(extended.table) == 8
    assert extended.table[(0, 0, 0, 0, (0, 0), (0, 0), (0, 0))] == Fraction(27, 64)


def test_joint_distribution():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 2), "3/4")
    j = ps.cumulative_joint_distribution(params)

    assert j.variables == ("S", "V1", "V2")
    assert j.marginal("S").max_mass() == Fraction(3, 4)
    # the (2, 2) map hands each party one block, which is the XOR scheme
    xor = ps.xor_joint(2, Fraction(3, 4))
    relabeled = j.pushforward(j.variables, lambda o: (o[0], o[2][0], o[1][0]))
    assert relabeled.table == xor.table
