import pytest

from mananets import ManaPolicy, Multiset, Net


@pytest.fixture
def atp_net():
    """ATP hydrolysis: ATP + H2O -> ADP + Pi."""
    return Net.build(
        ["ATP", "H2O", "ADP", "Pi"],
        {"hydrolysis": ({"ATP": 1, "H2O": 1}, {"ADP": 1, "Pi": 1})},
    )


@pytest.fixture
def abc_net():
    """One transition u: A + B -> C."""
    return Net.build(["A", "B", "C"], {"u": ({"A": 1, "B": 1}, {"C": 1})})


@pytest.fixture
def pipeline_net():
    """Three-stage net: t: p1->p2, v: p2->p3+p4, u: p3->p4."""
    return Net.build(
        ["p1", "p2", "p3", "p4"],
        {
            "t": ({"p1": 1}, {"p2": 1}),
            "v": ({"p2": 1}, {"p3": 1, "p4": 1}),
            "u": ({"p3": 1}, {"p4": 1}),
        },
    )


@pytest.fixture
def loop_net():
    """Four transitions whose mana wiring forms catalyst and feed loops."""
    return Net.build(
        ["p1", "p2", "p3", "p4"],
        {
            "u1": ({"p1": 1}, {"p2": 1, "p3": 1}),
            "u2": ({"p2": 1}, {"p4": 1}),
            "u3": ({"p3": 1}, {}),
            "u4": ({"p4": 1}, {}),
        },
    )


@pytest.fixture
def loop_policy(loop_net):
    """u1 free, u2 hungry and feeding u4, u3 a catalyst, u4 feeding u2+u3."""
    return ManaPolicy.of(loop_net, {
        "u1": (0, {}),
        "u2": (2, {"u4": 1}),
        "u3": (1, {"u3": 1}),
        "u4": (1, {"u2": 1, "u3": 1}),
    })


@pytest.fixture
def ms():
    """Shorthand multiset builder."""
    return lambda **counts: Multiset(counts)
