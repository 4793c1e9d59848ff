import random

import pytest

from mananets import (Multiset, Net, NetMorphism, UnknownSymbolError,
                      compose_morphisms, lift_multiset_map, validate_morphism,
                      validate_net)
from mananets.sampling import random_net, random_net_morphism


def kinds(violations):
    return [(v.kind, v.subject) for v in violations]


def test_atp_net_is_valid(atp_net):
    assert validate_net(atp_net) == []


def test_undeclared_place_reported():
    net = Net.build(["A"], {"u": ({"X": 1}, {"A": 1})})
    assert ("unknown-place", "X") in kinds(validate_net(net))


def test_place_transition_name_clash():
    net = Net.build(["u", "A"], {"u": ({"A": 1}, {})})
    assert ("name-clash", "u") in kinds(validate_net(net))


def test_duplicates_and_missing_arcs():
    net = Net(("A", "A"), ("u", "u"), {"u": Multiset()}, {})
    found = kinds(validate_net(net))
    assert ("duplicate-place", "A") in found
    assert ("duplicate-transition", "u") in found
    assert ("missing-post", "u") in found


def test_lift_identity():
    m = Multiset({"A": 2})
    assert lift_multiset_map({"A": "A"}, m) == m


def test_lift_merges_preimages():
    got = lift_multiset_map({"A": "P", "B": "P"}, Multiset({"A": 1, "B": 1}))
    assert got == Multiset({"P": 2})


def test_lift_against_pointwise_oracle():
    g = {"A": "P", "B": "Q"}
    m = Multiset({"A": 2, "B": 1})
    expected = {}
    for x, count in m.items():
        expected[g[x]] = expected.get(g[x], 0) + count
    assert lift_multiset_map(g, m) == Multiset(expected)


def test_lift_accepts_multiset_images():
    g = {"A": Multiset({"P": 2}), "B": Multiset()}
    assert lift_multiset_map(g, Multiset({"A": 1, "B": 3})) == Multiset({"P": 2})


def test_lift_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        lift_multiset_map({"A": "P"}, Multiset({"B": 1}))


@pytest.mark.parametrize("seed", range(5))
def test_lift_is_monoid_homomorphism(seed):
    rng = random.Random(seed)
    symbols = ["A", "B", "C"]
    g = {s: rng.choice(["P", "Q"]) for s in symbols}
    a = Multiset({s: rng.randint(0, 3) for s in symbols})
    b = Multiset({s: rng.randint(0, 3) for s in symbols})
    assert lift_multiset_map(g, a + b) == lift_multiset_map(g, a) + lift_multiset_map(g, b)


def test_identity_morphism_valid(atp_net):
    assert validate_morphism(NetMorphism.identity(atp_net)) == []


def test_collapsing_parallel_transitions_is_valid():
    source = Net.build(["A", "B"], {
        "u1": ({"A": 1}, {"B": 1}),
        "u2": ({"A": 1}, {"B": 1}),
    })
    target = Net.build(["A", "B"], {"u": ({"A": 1}, {"B": 1})})
    morphism = NetMorphism(source, target,
                           {"u1": "u", "u2": "u"},
                           {"A": "A", "B": "B"})
    # oracle: both squares by direct multiset computation
    for t in source.transitions:
        assert lift_multiset_map(morphism.place_map, source.pre[t]) == target.pre["u"]
        assert lift_multiset_map(morphism.place_map, source.post[t]) == target.post["u"]
    assert validate_morphism(morphism) == []


def test_arity_mismatch_fails_square():
    source = Net.build(["A", "B", "C"], {"u": ({"A": 1, "B": 1}, {"C": 1})})
    target = Net.build(["X", "C"], {"w": ({"X": 1}, {"C": 1})})
    morphism = NetMorphism(source, target, {"u": "w"},
                           {"A": "X", "B": "X", "C": "C"})
    found = validate_morphism(morphism)
    assert ("square-fails", "u") in kinds(found)
    assert any(v.detail == "pre" for v in found)


def test_unmapped_and_unknown_targets():
    source = Net.build(["A"], {"u": ({"A": 1}, {})})
    target = Net.build(["B"], {"w": ({"B": 1}, {})})
    found = validate_morphism(NetMorphism(source, target, {}, {"A": "Z"}))
    assert ("unmapped-transition", "u") in kinds(found)
    assert ("unknown-target-place", "Z") in kinds(found)


@pytest.mark.parametrize("seed", range(20))
def test_random_morphisms_valid_and_composable(seed):
    rng = random.Random(seed)
    inner = random_net_morphism(rng, random_net(rng))
    assert validate_morphism(inner) == []
    outer = random_net_morphism(rng, inner.target)
    assert validate_morphism(outer) == []
    composite = compose_morphisms(outer, inner)
    assert validate_morphism(composite) == []
