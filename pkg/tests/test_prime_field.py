"""Unit tests for prime field arithmetic and interpolation."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import pyminshare as ps


def test_create():
    f7 = ps.PrimeField.create(7)

    assert f7.t == 7
    assert len(f7.elements()) == 7
    assert f7(9).value == 2
    assert f7(-1).value == 6


@pytest.mark.parametrize("t", [0, 1, 4, 9, 2**64 + 13, "7", True])
def test_create_rejects(t):
    with pytest.raises(ps.FieldError):
        ps.PrimeField.create(t)


def test_large_prime():
    t = 2**61 - 1
    f = ps.PrimeField.create(t)

    assert (f(t - 1) * f(t - 1)).value == 1


def test_arithmetic():
    f5 = ps.PrimeField.create(5)
    a, b = f5(3), f5(4)

    assert (a + b).value == 2
    assert (a - b).value == 4
    assert (a * b).value == 2
    assert (-a).value == 2
    assert (a / b).value == 2
    assert (a**3).value == 2
    assert (b ** -1).value == 4
    assert (1 + a).value == 4
    assert (1 - a).value == 3
    assert (2 * a).value == 1
    assert int(ps.add(a, b)) == 2
    assert int(ps.sub(a, b)) == 4
    assert int(ps.mul(a, b)) == 2
    assert int(ps.inv(a)) == 2
    assert str(a) == "3"


def test_inverse_of_zero():
    f5 = ps.PrimeField.create(5)

    with pytest.raises(ps.FieldInversionError):
        f5.zero.inv()
    with pytest.raises(ZeroDivisionError):
        f5.one / f5.zero


def test_mixed_fields():
    f5, f7 = ps.PrimeField.create(5), ps.PrimeField.create(7)

    with pytest.raises(ps.FieldError):
        f5(1) + f7(1)


def test_party_embedding():
    f5 = ps.PrimeField.create(5)

    assert f5.party(4, 4).value == 4
    with pytest.raises(ps.FieldError):
        f5.party(5, 5)
    with pytest.raises(ps.FieldError):
        f5.party(0, 3)
    with pytest.raises(ps.FieldError):
        ps.check_party_count(f5, 5)


def test_eval_share_poly():
    f5 = ps.PrimeField.create(5)

    # 3 + 2x + x**2 at x = 1, 2, 3
    coefs = [f5(2), f5(1)]
    assert [int(ps.eval_share_poly(f5(3), coefs, i)) for i in (1, 2, 3)] == [1, 1, 3]
    assert int(ps.eval_share_poly(f5(3), [], 2)) == 3
    with pytest.raises(ps.FieldError):
        ps.eval_share_poly(f5(3), coefs, 4, n=5)


def test_lagrange_at_zero():
    f5 = ps.PrimeField.create(5)

    assert int(ps.lagrange_at_zero([(f5(1), f5(0)), (f5(2), f5(2))])) == 3
    assert int(ps.lagrange_at_zero([(f5(1), 4), (2, f5(1))])) == 2


@pytest.mark.parametrize(
    "points", [[], [(0, 1), (1, 1)], [(1, 1), (1, 2)]]
)
def test_lagrange_rejects(points):
    f5 = ps.PrimeField.create(5)
    points = [(f5(x), f5(y)) for x, y in points]

    with pytest.raises(ps.FieldError):
        ps.lagrange_at_zero(points)


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from([5, 7, 11, 13]),
    st.integers(1, 4),
    st.data(),
)
def test_interpolation_recovers_secret(t, k, data):
    """Any `k` evaluation points of a degree `k - 1` polynomial give back its constant term."""
    field = ps.PrimeField.create(t)
    s = data.draw(st.integers(0, t - 1))
    r = [field(data.draw(st.integers(0, t - 1))) for _ in range(k - 1)]
    n = t - 1

    shares = {i: ps.eval_share_poly(field(s), r, i, n) for i in range(1, n + 1)}
    for subset in itertools.islice(itertools.combinations(range(1, n + 1), k), 20):
        points = [(field(i), shares[i]) for i in subset]
        assert int(ps.lagrange_at_zero(points)) == s
