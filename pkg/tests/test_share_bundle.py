"""Unit tests for share bundles and their JSON form."""

import json

import pytest

import pyminshare as ps


def test_create():
    bundle = ps.ShareBundle.create("pi1", {"n": 2}, {2: 1, 1: 0})

    assert bundle.shares == ((1, 0), (2, 1))
    assert bundle.parties() == (1, 2)
    assert bundle.values() == {1: 0, 2: 1}
    assert bundle.restrict([2]).parties() == (2,)


@pytest.mark.parametrize(
    "scheme, shares",
    [
        ("binary", {1: 0}),
        ("pi1", {0: 1}),
        ("pi1", {1: -1}),
        ("pi2", {1: True}),
        ("general", {1: [(2, 0), (1, 1)]}),
        ("general", {1: [(1, 2)]}),
        ("general", {1: [(0, 1)]}),
        ("general", {1: 5}),
    ],
)
def test_create_rejects(scheme, shares):
    with pytest.raises(ps.ParameterError):
        ps.ShareBundle.create(scheme, {}, shares)


def test_restrict_rejects_missing_party():
    bundle = ps.ShareBundle.create("pi1", {"n": 2}, {1: 0})

    with pytest.raises(ps.ParameterError):
        bundle.restrict([2])


def test_json_layout():
    bundle = ps.ShareBundle.create(
        "general", {"p": {"num": 3, "den": 4}}, {1: [(2, 1), (3, 0)]}
    )

    assert bundle.to_json() == {
        "scheme": "general",
        "params": {"p": {"num": 3, "den": 4}},
        "shares": [{"party": 1, "subshares": [{"j": 2, "bit": 1}, {"j": 3, "bit": 0}]}],
    }
    assert ps.ShareBundle.from_json(json.loads(bundle.dumps())) == bundle


def test_dumps_is_stable():
    params = ps.XorParams.create(3, "3/4")
    bundle = ps.xor_share(1, params, ps.key_from_seed(7))

    text = bundle.dumps()
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2)
    assert ps.ShareBundle.from_json(json.loads(text)) == bundle


@pytest.mark.parametrize(
    "obj",
    [
        {"scheme": "pi1", "params": {}},
        {"scheme": "pi1", "params": [], "shares": []},
        {"scheme": "pi1", "params": {}, "shares": [{"value": 1}]},
        {"scheme": "pi1", "params": {}, "shares": [{"party": "1", "value": 1}]},
        {"scheme": "pi1", "params": {}, "shares": [{"party": 1, "value": 1}, {"party": 1, "value": 0}]},
        {"scheme": "pi1", "params": {}, "shares": [{"party": 1, "subshares": []}]},
        {"scheme": "general", "params": {}, "shares": [{"party": 1, "subshares": [{"j": 1}]}]},
    ],
)
def test_from_json_rejects(obj):
    with pytest.raises(ps.ParameterError):
        ps.ShareBundle.from_json(obj)


@pytest.mark.parametrize("alias, tag", [("xor", "pi1"), ("shamir", "pi2"), ("cumulative", "general")])
def test_aliases_serialize_canonical_tag(alias, tag):
    shares = {1: [(1, 0)]} if tag == "general" else {1: 0}
    bundle = ps.ShareBundle.create(alias, {}, shares)

    assert bundle.scheme == tag
    assert bundle.to_json()["scheme"] == tag
    assert ps.canonical_scheme(alias) == ps.canonical_scheme(tag) == tag


def test_from_json_with_interface_tags():
    params = ps.XorParams.create(2, "3/4")
    obj = {
        "scheme": "pi1",
        "params": params.to_json(),
        "shares": [{"party": 1, "value": 1}, {"party": 2, "value": 0}],
    }
    bundle = ps.ShareBundle.from_json(obj)

    assert bundle.scheme == "pi1"
    assert ps.xor_combine(bundle) == 1
    assert ps.ShareBundle.from_json({**obj, "scheme": "xor"}) == bundle
