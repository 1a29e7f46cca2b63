"""Unit tests for the construction checks and the verification suite."""

import json
from fractions import Fraction

import pytest

import pyminshare as ps


def shamir_grid():
    for t, k, n in [(3, 2, 2), (5, 2, 3), (7, 2, 3), (5, 3, 4), (5, 2, 4)]:
        size = t**k
        for p in (Fraction(1, size), Fraction(1 + size, 2 * size), Fraction(9, 10)):
            yield t, k, n, p


def xor_grid():
    for n in (2, 3, 4):
        for p in (Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)):
            yield n, p


def grid_params():
    params = [ps.XorParams.create(n, p) for n, p in xor_grid()]
    params += [ps.ShamirParams.create(t, k, n, p) for t, k, n, p in shamir_grid()]
    return params


def ladder():
    return ps.from_minimal_qualified(4, [[1, 2], [2, 3], [3, 4]])


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", ["3/5", "3/4", "9/10"])
def test_xor_check_passes(n, p):
    report = ps.check_xor_scheme(ps.XorParams.create(n, p))

    assert report.passed, report.failures
    assert report.name == "t5"
    assert report.values["secret_max_mass"] == Fraction(p)


def test_xor_check_values():
    report = ps.check_xor_scheme(ps.XorParams.create(2, "3/4"))

    assert report.values["share_max_masses"] == (Fraction(3, 4), Fraction(5, 8))
    assert report.values["worst_case_guess"] == Fraction(9, 10)
    assert report.values["non_perfect_witness"] == (2,)
    json.dumps(report.to_json())


@pytest.mark.parametrize("t, k, n, p", list(shamir_grid()))
def test_shamir_check_passes(t, k, n, p):
    report = ps.check_shamir_scheme(ps.ShamirParams.create(t, k, n, p))

    assert report.passed, report.failures
    assert report.values["ideal"]
    assert report.values["non_perfect"] == (p > Fraction(1, t**k))


def test_shamir_check_values():
    report = ps.check_shamir_scheme(ps.ShamirParams.create(3, 2, 2, "3/8"))

    assert report.values["common_max_mass"] == Fraction(17, 32)
    assert report.values["zero_condition_mass"] == Fraction(17, 32)
    assert report.values["zero_condition_best_guess"] == Fraction(12, 17)


@pytest.mark.parametrize(
    "structure",
    [ps.threshold_structure(2, 2), ps.threshold_structure(2, 3), ps.threshold_structure(3, 4), ladder()],
    ids=["2-of-2", "2-of-3", "3-of-4", "ladder"],
)
@pytest.mark.parametrize("p", ["3/5", "3/4"])
def test_cumulative_check_passes(structure, p):
    report = ps.check_cumulative_scheme(ps.CumulativeParams.create(structure, p))

    assert report.passed, report.failures


def test_cumulative_check_values():
    report = ps.check_cumulative_scheme(ps.CumulativeParams.create(ps.threshold_structure(2, 3), "3/4"))

    assert report.values["m"] == 3
    assert report.values["maximal_forbidden"] == ((1,), (2,), (3,))
    assert report.values["assignment"] == ((2, 3), (1, 3), (1, 2))
    assert report.values["reconstructions"] == 32


def test_parse_checks():
    assert ps.parse_checks("t5, t3,security") == ("t5", "t3", "security")
    assert ps.parse_checks("xor,bounds,cumulative,shamir,ideal") == ("t5", "t3", "t4", "t6", "ideal")

    with pytest.raises(ps.ParameterError):
        ps.parse_checks(" , ")
    with pytest.raises(ps.ParameterError):
        ps.parse_checks("xor,entropy")


def test_verify_xor_scheme():
    params = ps.XorParams.create(3, "3/4")
    reports = ps.verify_scheme(params, ["t5", "t3", "security", "nonperfect", "ideal"])

    assert [r.name for r in reports] == ["t5", "t3", "security", "nonperfect", "ideal"]
    assert [r.passed for r in reports] == [True, True, True, True, False]
    assert reports[-1].failures == ("party 3 is not ideal",)
    assert reports[3].values == {"non_perfect": True, "witness": [3]}


def test_verify_rejects_mismatched_construction():
    with pytest.raises(ps.ParameterError):
        ps.verify_scheme(ps.XorParams.create(2, "3/4"), ["t6"])


def test_verify_perfect_scheme():
    params = ps.ShamirParams.create(3, 2, 2, "1/9")
    reports = ps.verify_scheme(params, ["t6", "t3", "security", "ideal", "nonperfect"], ["0", "1", "inf"])
    by_name = {r.name: r for r in reports}

    assert by_name["t6"].passed
    assert by_name["t3"].passed
    assert by_name["security"].passed
    assert by_name["ideal"].passed
    assert not by_name["nonperfect"].passed
    assert by_name["t3"].values["0"]["named_checks"]["perfect_alphabet_bound"]


def test_bounds_skip_order_zero_with_leakage():
    params = ps.ShamirParams.create(3, 2, 2, "3/8")
    (report,) = ps.verify_scheme(params, ["t3"], ["0", "inf"])

    assert report.passed
    assert "skipped" in report.values["0"]
    assert "inf_worst" in report.values


PERFECT_CHECKS = {
    "perfect_bound_order_0",
    "perfect_bound_order_1/2",
    "perfect_bound_order_1",
    "perfect_bound_order_2",
    "perfect_bound_order_inf",
    "perfect_shannon_bound",
    "perfect_alphabet_bound",
}


@pytest.mark.parametrize("params", grid_params(), ids=lambda params: json.dumps(params.to_json()))
def test_share_bounds_hold_on_grids(params):
    j = params.joint_distribution()
    g = params.access_structure()
    perfect = isinstance(params, ps.ShamirParams) and params.p == Fraction(1, params.num_rows)

    for order in ("1/2", "1", "2", "inf"):
        epsilon = ps.epsilon_security(j, g, order).epsilon
        report = ps.check_share_bounds(j, g, order, epsilon)

        assert report.passed, (order, report.named_checks)
        named = report.named_checks
        if perfect:
            assert epsilon == 0
            assert set(named) == PERFECT_CHECKS | {"share_bound"}
            assert all(named.values())
        else:
            assert set(named) == {"share_bound"}


def test_share_bounds_hold_for_cumulative_scheme():
    (report,) = ps.verify_scheme(ps.CumulativeParams.create(ladder(), "3/4"), ["bounds"])

    assert report.name == "t3"
    assert report.passed, report.failures
    assert set(report.values) == {"1/2", "1", "2", "inf", "inf_worst"}


def test_security_summary():
    params = ps.ShamirParams.create(3, 2, 2, "3/8")
    summary = ps.security_summary(params)

    assert summary["scheme"] == "pi2"
    assert summary["params"] == params.to_json()
    assert list(summary["gaps"]) == ["1/2", "1", "2", "inf"]
    assert summary["gaps"]["inf"]["epsilon"] == 0.0
    assert summary["worst_case"]["measure"] == "worst"
    assert summary["ideality"]["ideal"]
    assert summary["non_perfect"]
    assert summary["max_leakage_at_maximal_sets"]
    json.dumps(summary)


def test_security_summary_rejects_order_zero():
    with pytest.raises(ps.UnsupportedOrderError):
        ps.security_summary(ps.XorParams.create(2, "3/4"), ["0", "inf"])
