"""Unit tests for exact probability distributions."""

from fractions import Fraction

import pytest

import pyminshare as ps


def test_create_prob_dist():
    """Unit test the initialization of a single-variable distribution."""
    d = ps.ProbDist.create([0, 1, 2], ["1/2", "1/4", Fraction(1, 4)], name="X")

    assert isinstance(d, ps.ProbDist)
    assert d.name == "X"
    assert d.masses == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
    assert d.max_mass() == Fraction(1, 2)
    assert d.mass(2) == Fraction(1, 4)
    assert d.mass(7) == 0
    assert d.as_vector([2, 0]) == (Fraction(1, 4), Fraction(1, 2))


def test_prob_dist_support_skips_zero_mass():
    d = ps.ProbDist.create(["a", "b", "c"], [1, 0, 0])

    assert d.support() == ("a",)
    assert d.positive_masses() == (Fraction(1),)


def test_uniform():
    d = ps.ProbDist.uniform(range(4))

    assert d.masses == (Fraction(1, 4),) * 4


@pytest.mark.parametrize(
    "symbols, masses",
    [
        ([0, 1], ["1/2", "1/3"]),
        ([0, 0], ["1/2", "1/2"]),
        ([0, 1], ["3/2", "-1/2"]),
        ([0, 1], [0.5, 0.5]),
        ([0, 1, 2], ["1/2", "1/2"]),
    ],
)
def test_prob_dist_rejects_invalid(symbols, masses):
    with pytest.raises(ps.DistributionError):
        ps.ProbDist.create(symbols, masses)


def test_create_joint_drops_zero_mass():
    j = ps.JointDist.create(("X", "Y"), {(0, 0): "1/2", (1, 1): "1/2", (0, 1): 0})

    assert j.variables == ("X", "Y")
    assert set(j.table) == {(0, 0), (1, 1)}


@pytest.mark.parametrize(
    "variables, table",
    [
        ((), {(): 1}),
        (("X", "X"), {(0, 0): 1}),
        (("X",), {(0, 1): 1}),
        (("X",), {(0,): "1/2"}),
        (("X", ""), {(0, 0): 1}),
    ],
)
def test_joint_rejects_invalid(variables, table):
    with pytest.raises(ps.DistributionError):
        ps.JointDist.create(variables, table)


def test_marginal_sorted():
    """Marginal of a small XOR joint: `Y = X ^ Z` with biased bits."""
    j = ps.xor_joint(2, Fraction(3, 4))

    v2 = j.marginal("V2")
    assert v2.symbols == (0, 1)
    assert v2.masses == (Fraction(5, 8), Fraction(3, 8))


def test_marginalize_identity_and_factor():
    x = ps.ProbDist.create([0, 1], ["3/4", "1/4"], name="X")
    y = ps.ProbDist.create(["a", "b"], ["1/2", "1/2"], name="Y")
    j = ps.independent_joint(x, y)

    assert ps.marginalize(j, ["Y", "X"]).table == j.table
    assert ps.marginalize(j, ["X"]).table == {(0,): Fraction(3, 4), (1,): Fraction(1, 4)}
    assert j.marginalize("Y").variables == ("Y",)


def test_marginalize_rejects_empty_and_unknown():
    j = ps.ProbDist.uniform([0, 1], name="X").to_joint()

    with pytest.raises(ps.DistributionError):
        ps.marginalize(j, [])
    with pytest.raises(ps.DistributionError):
        ps.marginalize(j, ["Q"])


def test_conditional_groups():
    j = ps.JointDist.create(
        ("X", "Y"), {(0, 0): "1/4", (1, 0): "1/4", (1, 1): "1/2"}
    )

    groups = j.conditional_groups("X", ["Y"])
    assert groups == {
        (0,): {(0,): Fraction(1, 4), (1,): Fraction(1, 4)},
        (1,): {(1,): Fraction(1, 2)},
    }

    with pytest.raises(ps.DistributionError):
        j.conditional_groups("X", ["X"])


def test_product_and_pushforward():
    x = ps.ProbDist.uniform([0, 1], name="X").to_joint()
    y = ps.ProbDist.uniform([0, 1], name="Y").to_joint()
    j = x.product(y)

    assert len(j.table) == 4

    parity = j.pushforward(("P",), lambda outcome: (outcome[0] ^ outcome[1],))
    assert parity.table == {(0,): Fraction(1, 2), (1,): Fraction(1, 2)}

    with pytest.raises(ps.DistributionError):
        x.product(x)


def test_rename():
    j = ps.xor_joint(2, Fraction(3, 4)).rename({"S": "secret"})

    assert j.variables == ("secret", "V1", "V2")


def test_json_round_trip_with_tuple_symbols():
    params = ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4")
    j = ps.cumulative_joint_distribution(params)

    obj = j.to_json()
    assert obj["variables"] == ["S", "V1", "V2", "V3"]
    assert obj["entries"] == sorted(obj["entries"], key=lambda e: e["tuple"])
    assert ps.JointDist.from_json(obj).table == j.table


def test_prob_dist_from_json():
    obj = {
        "variables": ["X"],
        "entries": [
            {"tuple": [0], "num": 3, "den": 4},
            {"tuple": [1], "num": 1, "den": 4},
        ],
    }
    d = ps.ProbDist.from_json(obj)

    assert d.name == "X"
    assert d.masses == (Fraction(3, 4), Fraction(1, 4))


@pytest.mark.parametrize(
    "obj",
    [
        {"variables": ["X"]},
        {"variables": ["X"], "entries": [{"tuple": [0], "num": 1}]},
        {"variables": ["X"], "entries": [{"tuple": [0.5], "num": 1, "den": 1}]},
        {
            "variables": ["X"],
            "entries": [{"tuple": [0], "num": 1, "den": 2}, {"tuple": [0], "num": 1, "den": 2}],
        },
        {"variables": ["X"], "entries": [{"tuple": [0], "num": 1, "den": 0}]},
    ],
)
def test_from_json_rejects_malformed(obj):
    with pytest.raises(ps.PyminshareError):
        ps.JointDist.from_json(obj)
