import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latlift import (
    LoadError,
    are_isomorphic,
    classify_element,
    enumerate_small_lattices,
    is_domain,
    lattice_from_dict,
    load_lattice,
    verify_lattice,
)
from latlift.bitset import bits, mask_from

from conftest import FIXTURES


# Independent oracles: recompute bounds from the raw order relation only.

def brute_join(lat, mask):
    ubs = [u for u in range(lat.n) if all(lat.le(i, u) for i in bits(mask))]
    least = [u for u in ubs if all(lat.le(u, v) for v in ubs)]
    assert len(least) == 1
    return least[0]


def brute_meet(lat, mask):
    lbs = [u for u in range(lat.n) if all(lat.le(u, i) for i in bits(mask))]
    greatest = [u for u in lbs if all(lat.le(v, u) for v in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def brute_residual(lat, a, b):
    return brute_join(lat, mask_from(y for y in range(lat.n) if lat.le(lat.mul[b][y], a)))


def test_fixtures_verify(l6, two, chain3, chain3_nil):
    for lat in (l6, two, chain3, chain3_nil):
        assert verify_lattice(lat).passed


def test_l6_join_meet_examples(l6):
    b, c, d = l6.index("b"), l6.index("c"), l6.index("d")
    assert l6.join(b, c) == d == brute_join(l6, mask_from((b, c)))
    assert l6.join_of(0) == l6.bot
    assert l6.join(l6.index("a")) == l6.index("a")
    assert l6.meet(b, c) == l6.index("a") == brute_meet(l6, mask_from((b, c)))
    assert l6.meet_of(0) == l6.top
    assert l6.meet(d, l6.top) == d


def test_join_of_subsets_agrees_with_oracle(l6):
    for mask in range(1 << l6.n):
        assert l6.join_of(mask) == brute_join(l6, mask)
        assert l6.meet_of(mask) == brute_meet(l6, mask)


def test_join_is_associative_over_unions(l6):
    for s in range(1 << l6.n):
        for t in range(1 << l6.n):
            assert l6.join_of(s | t) == l6.join(l6.join_of(s), l6.join_of(t))


def test_residual_examples(l6):
    c, b = l6.index("c"), l6.index("b")
    assert l6.residual(c, b) == l6.index("d") == brute_residual(l6, c, b)
    for a in range(l6.n):
        assert l6.residual(a, l6.top) == a
        assert l6.residual(l6.top, a) == l6.top


def test_residual_adjunction_exhaustive(l6, chain3, chain3_nil, two):
    for lat in (l6, chain3, chain3_nil, two):
        for a in range(lat.n):
            for b in range(lat.n):
                r = lat.residual(a, b)
                for y in range(lat.n):
                    assert lat.le(lat.mul[b][y], a) == lat.le(y, r)


def test_full_distributivity_over_all_subsets(l6):
    for a in range(l6.n):
        for mask in range(1 << l6.n):
            pointwise = mask_from(l6.mul[a][s] for s in bits(mask))
            assert l6.mul[a][l6.join_of(mask)] == l6.join_of(pointwise)


@settings(max_examples=200)
@given(st.integers(0, 63), st.integers(0, 63))
def test_interval_members_match_definition(s, t):
    lat = load_lattice(FIXTURES / "l6.json")
    lo, hi = lat.meet(s % lat.n, t % lat.n), lat.join(s % lat.n, t % lat.n)
    iv = lat.interval(lo, hi)
    expected = mask_from(x for x in range(lat.n) if lat.le(lo, x) and lat.le(x, hi))
    assert iv.members == expected


def test_classify_l6(l6):
    a, b = l6.index("a"), l6.index("b")
    assert classify_element(l6, a).weak_meet_principal
    assert not classify_element(l6, b).weak_meet_principal
    # the witness behind that failure: c ^ b = a while b * (c:b) = b * d = 0
    c = l6.index("c")
    assert l6.meet(c, b) == a
    assert l6.mul[b][l6.residual(c, b)] == l6.bot
    top_flags = classify_element(l6, l6.top)
    assert top_flags.meet_principal and top_flags.join_principal
    assert top_flags.principal and top_flags.weak_principal and top_flags.compact
    assert classify_element(l6, l6.bot).weak_meet_principal
    wmp = {f.element for x in range(l6.n) for f in [classify_element(l6, x)]
           if f.weak_meet_principal}
    assert wmp == {"0", "a", "1"}


def test_classify_top_bot_all_corpus():
    for n in (2, 3, 4):
        for lat in enumerate_small_lattices(n):
            top_flags = classify_element(lat, lat.top)
            assert top_flags.principal and top_flags.weak_principal
            assert classify_element(lat, lat.bot).weak_meet_principal


def test_is_domain(l6, two, chain3, chain3_nil):
    assert not is_domain(l6)
    assert is_domain(two)
    assert is_domain(chain3)
    assert not is_domain(chain3_nil)


def test_broken_l6_fails_with_distributivity_witness():
    lat = load_lattice(FIXTURES / "l6_broken.json")
    verdict = verify_lattice(lat)
    assert not verdict.passed
    assert "distributivity" in verdict.laws or "annihilation" in verdict.laws
    assert "associativity" in verdict.laws


def test_verify_catches_broken_identity(l6):
    data = json.loads((FIXTURES / "l6.json").read_text())
    data["mul"].append(["1", "a", "b"])
    lat = lattice_from_dict(data)
    verdict = verify_lattice(lat)
    assert not verdict.passed
    assert "identity" in verdict.laws


def test_load_errors():
    good = json.loads((FIXTURES / "l6.json").read_text())
    with pytest.raises(LoadError):
        load_lattice(FIXTURES / "missing.json")
    bad = dict(good, elements=["0", "0", "b", "c", "d", "1"])
    with pytest.raises(LoadError):
        lattice_from_dict(bad)
    bad = dict(good, order={"covers": [["0", "zz"]]})
    with pytest.raises(LoadError):
        lattice_from_dict(bad)
    bad = dict(good, mul=good["mul"][:-1])  # drop d*d, not fillable
    with pytest.raises(LoadError):
        lattice_from_dict(bad)
    bad = dict(good, order={"covers": good["order"]["covers"] + [["1", "0"]]})
    with pytest.raises(LoadError):
        lattice_from_dict(bad)  # cycle


def test_leq_order_input_accepted():
    data = {
        "elements": ["0", "x", "1"],
        "order": {"leq": [["0", "x"], ["x", "1"], ["0", "1"]]},
        "mul": [["x", "x", "x"]],
        "top": "1",
        "bot": "0",
    }
    assert verify_lattice(lattice_from_dict(data)).passed


def test_enumerate_counts():
    assert len(list(enumerate_small_lattices(1))) == 1
    assert len(list(enumerate_small_lattices(2))) == 1
    three = list(enumerate_small_lattices(3))
    assert len(three) == 2
    # the two three-element chains: the inner square is bot or itself
    assert sorted(lat.mul[1][1] for lat in three) == [0, 1]
    assert len(list(enumerate_small_lattices(4))) == 13
    assert len(list(enumerate_small_lattices(5))) == 147
    with pytest.raises(ValueError):
        next(enumerate_small_lattices(7))


def test_enumerated_lattices_all_verify():
    for n in (1, 2, 3, 4):
        for lat in enumerate_small_lattices(n):
            assert verify_lattice(lat).passed
    for lat in enumerate_small_lattices(5, limit=60):
        assert verify_lattice(lat).passed


def test_enumerate_six_contains_l6_class(l6):
    assert any(are_isomorphic(lat, l6) for lat in enumerate_small_lattices(6, limit=100))


def test_enumerate_yields_distinct_tables():
    seen = set()
    for lat in enumerate_small_lattices(4):
        key = (lat.up, lat.mul)
        assert key not in seen
        seen.add(key)


@settings(max_examples=100)
@given(st.integers(0, 63), st.integers(0, 63))
def test_adjunction_on_random_subset_joins(s, t):
    lat = load_lattice(FIXTURES / "l6.json")
    a = lat.join_of(s & lat.full)
    b = lat.join_of(t & lat.full)
    r = lat.residual(a, b)
    for y in range(lat.n):
        assert lat.le(lat.mul[b][y], a) == lat.le(y, r)
