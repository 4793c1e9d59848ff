"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as
they happen. Every check is exact; the time budgets are asserted too.
"""

import random
import time
from contextlib import contextmanager

from mananets import (EMPTY, ManaPolicy, ManaState, Multiset, Net,
                      check_comonad_laws, check_equivalence,
                      check_functor_laws, check_laxator_naturality, emit_json,
                      externalize, fire, internalize, mana_enabled, mana_fire,
                      mana_reach)
from mananets.documents import NetDocument
from mananets.sampling import (random_marking, random_net,
                               random_net_morphism, random_policy,
                               random_state, random_trace)


@contextmanager
def criterion(number, name, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    within = elapsed < budget_seconds
    verdict = "PASS" if within else "FAIL (over time budget)"
    print(f"ACCEPTANCE {number} {name}: {verdict} ({elapsed:.2f}s, budget {budget_seconds}s)")
    assert within, f"criterion {number} took {elapsed:.2f}s, budget {budget_seconds}s"


def abc_net():
    return Net.build(["A", "B", "C"], {"u": ({"A": 1, "B": 1}, {"C": 1})})


def atp_net():
    return Net.build(
        ["ATP", "H2O", "ADP", "Pi"],
        {"hydrolysis": ({"ATP": 1, "H2O": 1}, {"ADP": 1, "Pi": 1})},
    )


def loop_net_and_policy():
    net = Net.build(
        ["p1", "p2", "p3", "p4"],
        {
            "u1": ({"p1": 1}, {"p2": 1, "p3": 1}),
            "u2": ({"p2": 1}, {"p4": 1}),
            "u3": ({"p3": 1}, {}),
            "u4": ({"p4": 1}, {}),
        },
    )
    policy = ManaPolicy.of(net, {
        "u1": (0, {}),
        "u2": (2, {"u4": 1}),
        "u3": (1, {"u3": 1}),
        "u4": (1, {"u2": 1, "u3": 1}),
    })
    return net, policy


def test_criterion_1_external_firing_example():
    with criterion(1, "external firing example", 1.0):
        net = abc_net()
        policy = ManaPolicy.plain(net)
        state = ManaState(Multiset({"A": 1, "B": 1}), Multiset({"u": 2}))
        assert mana_enabled(net, policy, state, "u")
        fired = mana_fire(net, policy, state, "u")
        assert fired == ManaState(Multiset({"C": 1}), Multiset({"u": 1}))
        assert not mana_enabled(net, policy,
                                ManaState(Multiset({"A": 1, "B": 1}), EMPTY), "u")
        assert not mana_enabled(net, policy,
                                ManaState(Multiset({"A": 1}), Multiset({"u": 4})), "u")


EXPECTED_BUILT_JSON = """\
{
  "places": [
    "A",
    "B",
    "C",
    "mana:u"
  ],
  "transitions": {
    "u": {
      "post": {
        "C": 1
      },
      "pre": {
        "A": 1,
        "B": 1,
        "mana:u": 1
      }
    }
  }
}
"""


def test_criterion_2_internalization_example():
    with criterion(2, "internalization example (byte-exact)", 1.0):
        net = abc_net()
        built = internalize(net, ManaPolicy.plain(net)).built
        expected = Net.build(
            ["A", "B", "C", "mana:u"],
            {"u": ({"A": 1, "B": 1, "mana:u": 1}, {"C": 1})},
        )
        assert built == expected
        assert emit_json(NetDocument(built)) == EXPECTED_BUILT_JSON
        assert emit_json(NetDocument(expected)) == EXPECTED_BUILT_JSON


def test_criterion_3_round_trip_1000():
    with criterion(3, "externalize after internalize, 1000 random nets", 30.0):
        rng = random.Random(2026)
        failures = 0
        for _ in range(1000):
            net = random_net(rng, max_places=5, max_transitions=4)
            policy = random_policy(rng, net, max_consume=2, max_produce_total=3)
            base, recovered = externalize(internalize(net, policy))
            if base != net or recovered != policy:
                failures += 1
        assert failures == 0


def test_criterion_4_equivalence_200():
    with criterion(4, "reach-graph isomorphism, 200 random triples", 60.0):
        rng = random.Random(404)
        failures = []
        for index in range(200):
            net = random_net(rng, max_places=4, max_transitions=3)
            policy = random_policy(rng, net, max_consume=2, max_produce_total=2)
            initial = random_state(rng, net, max_tokens=3, max_pool=3)
            report = check_equivalence(net, policy, initial,
                                       depth_bound=6, token_bound=12)
            if not report.isomorphic:
                failures.append((index, report.first_discrepancy))
        assert failures == []


def test_criterion_5_comonad_laws():
    with criterion(5, "comonad laws, 100 nets + 50 morphisms", 30.0):
        rng = random.Random(55)
        for _ in range(100):
            report = check_comonad_laws(random_net(rng, max_places=5, max_transitions=4))
            core = {r.law: r.status for r in report.results}
            assert core["left-counit"] == "pass"
            assert core["right-counit"] == "pass"
            assert core["coassociativity"] == "pass"
        for _ in range(50):
            morphism = random_net_morphism(rng, random_net(rng))
            report = check_comonad_laws(morphism.source, [morphism])
            statuses = {r.law: r.status for r in report.results}
            assert statuses["counit-naturality"] == "pass"
            assert statuses["comultiplication-naturality"] == "pass"


def _sample_traces(rng, net, count):
    return [random_trace(rng, net, random_marking(rng, net, 4), max_steps=6)
            for _ in range(count)]


def test_criterion_6_functor_and_laxator_laws():
    with criterion(6, "functor/laxator laws, 500 samples per class", 30.0):
        rng = random.Random(606)
        for klass in ("plain", "generalized"):
            traces_checked = 0
            pairs_checked = 0
            while traces_checked < 500 or pairs_checked < 250:
                net = random_net(rng, max_places=4, max_transitions=3)
                policy = (ManaPolicy.plain(net) if klass == "plain"
                          else random_policy(rng, net))
                traces = _sample_traces(rng, net, 10)
                report = check_functor_laws(net, policy, traces)
                assert report.ok, (klass, report.results)
                traces_checked += len(traces)

                samples = [(random_trace(rng, net, random_marking(rng, net, 4)),
                            random_trace(rng, net, random_marking(rng, net, 4)),
                            random_state(rng, net).pool,
                            random_state(rng, net).pool)
                           for _ in range(5)]
                report = check_laxator_naturality(net, policy, samples)
                assert report.ok, (klass, report.results)
                pairs_checked += len(samples)


def test_criterion_7_catalyst_invariant():
    with criterion(7, "catalyst keeps its pool over depth-8 window", 10.0):
        net, policy = loop_net_and_policy()
        initial = ManaState(Multiset({"p1": 2, "p3": 1}),
                            Multiset({"u2": 2, "u3": 1, "u4": 1}))
        window = mana_reach(net, policy, initial, depth_bound=8, token_bound=20)
        catalyst_firings = [(src, dst) for src, label, dst in window.edges
                            if label == "u3"]
        assert catalyst_firings, "window never fires the catalyst"
        for src, dst in catalyst_firings:
            assert src.pool["u3"] == dst.pool["u3"]


def test_criterion_8_token_game_figure():
    with criterion(8, "hydrolysis replay, with and without mana", 1.0):
        net = atp_net()
        start = Multiset({"ATP": 2, "H2O": 1})
        once = fire(net, start, "hydrolysis")
        assert once == Multiset({"ATP": 1, "ADP": 1, "Pi": 1})

        policy = ManaPolicy.plain(net)
        state = ManaState(start, Multiset({"hydrolysis": 1}))
        assert mana_enabled(net, policy, state, "hydrolysis")
        after = mana_fire(net, policy, state, "hydrolysis")
        assert after.marking == once
        assert after.pool == EMPTY
        assert not mana_enabled(net, policy, after, "hydrolysis")
