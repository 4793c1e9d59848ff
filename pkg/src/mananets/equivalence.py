"""Round trip between the two mana constructions and its operational check.

Internalizing a policy builds the mana places into the net; putting the
pool of a :class:`~mananets.external.ManaState` onto those places
(:func:`state_to_object`) turns external states into built-net markings.
:func:`check_equivalence` verifies that this translation is a
label-preserving isomorphism between the two bounded reachability
graphs, and :func:`externalize` recovers the policy back from a built
net, inverting :func:`internalize` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeViolationError
from .execution import reach
from .external import ManaState, mana_reach
from .internal import (ManaNet, ManaPolicy, generalized_internal_construction,
                       mana_place_name)
from .multiset import Multiset
from .net import Net, lift_multiset_map


def internalize(net: Net, policy: ManaPolicy) -> ManaNet:
    """Build the net whose executions are exactly the policy's mana runs."""
    return generalized_internal_construction(net, policy)


def state_to_object(mn: ManaNet, state: ManaState) -> Multiset:
    """Lay a state out as a built-net marking: pool tokens onto mana places.

    This is a monoid isomorphism onto markings of the built net; summing
    two states componentwise corresponds to summing their images.
    """
    return state.marking + lift_multiset_map(mn.mana_place_of, state.pool)


def object_to_state(mn: ManaNet, marking: Multiset) -> ManaState:
    """Split a built-net marking back into (marking, pool)."""
    mana_places = mn.mana_places()
    pool = {t: marking[place] for t, place in mn.mana_place_of.items() if marking[place]}
    return ManaState(marking.drop(mana_places), Multiset(pool))


def externalize(mn: ManaNet) -> tuple[Net, ManaPolicy]:
    """Read the base net and the policy off a built net.

    Inverts :func:`internalize` exactly. Raises
    :class:`ShapeViolationError` when a transition consumes mana that is
    not its own, the one shape the construction can never produce.
    """
    return _read_base_and_policy(mn.built, mn.mana_place_of)


def mana_net_from_built(built: Net, prefix: str = mana_place_name("")) -> ManaNet:
    """Reconstruct a ManaNet from a built net exported as an ordinary net.

    The mana layer is identified by the canonical naming convention: the
    mana place of transition ``t`` is the place ``mana:<t>``, which must
    exist for every transition.
    """
    mana_place_of = {}
    places = set(built.places)
    for t in built.transitions:
        name = prefix + t
        if name not in places:
            raise ShapeViolationError(t, f"no mana place {name!r} in the net")
        mana_place_of[t] = name
    base, policy = _read_base_and_policy(built, mana_place_of)
    return ManaNet(base, built, mana_place_of, policy)


def _read_base_and_policy(built: Net, mana_place_of) -> tuple[Net, ManaPolicy]:
    mana_places = set(mana_place_of.values())
    place_owner = {place: t for t, place in mana_place_of.items()}

    consume = {}
    produce = {}
    pre = {}
    post = {}
    for t in built.transitions:
        own = mana_place_of[t]
        for place in built.pre[t].support():
            if place in mana_places and place != own:
                raise ShapeViolationError(
                    t, f"consumes mana of {place_owner[place]!r}; "
                       "each transition may use only its own pool")
        consume[t] = built.pre[t][own]
        produce[t] = Multiset({v: built.post[t][place]
                               for v, place in mana_place_of.items()
                               if built.post[t][place]})
        pre[t] = built.pre[t].drop(mana_places)
        post[t] = built.post[t].drop(mana_places)

    base = Net(tuple(p for p in built.places if p not in mana_places),
               built.transitions, pre, post)
    return base, ManaPolicy(consume, produce)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of comparing the external and internal reachability windows."""

    isomorphic: bool
    ext_nodes: int
    int_nodes: int
    ext_edges: int
    int_edges: int
    first_discrepancy: dict | None

    def to_json_dict(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "ext_nodes": self.ext_nodes,
            "int_nodes": self.int_nodes,
            "ext_edges": self.ext_edges,
            "int_edges": self.int_edges,
            "first_discrepancy": self.first_discrepancy,
        }


def check_equivalence(net: Net, policy: ManaPolicy, initial: ManaState,
                      depth_bound: int, token_bound: int) -> EquivalenceReport:
    """Compare mana reachability with plain reachability on the built net.

    Both graphs are explored to the same bounds; the external one is then
    mapped through :func:`state_to_object` and must match the internal
    one node for node and edge for edge (labels included).
    """
    mn = internalize(net, policy)
    ext = mana_reach(net, policy, initial, depth_bound, token_bound)
    internal = reach(mn.built, state_to_object(mn, initial), depth_bound, token_bound)

    mapped_nodes = {state_to_object(mn, s) for s in ext.nodes}
    mapped_edges = {(state_to_object(mn, s), label, state_to_object(mn, d))
                    for s, label, d in ext.edges}
    int_nodes = set(internal.nodes)
    int_edges = set(internal.edges)

    discrepancy = _first_discrepancy(mapped_nodes, int_nodes, mapped_edges, int_edges)
    return EquivalenceReport(
        isomorphic=discrepancy is None,
        ext_nodes=len(ext.nodes),
        int_nodes=len(internal.nodes),
        ext_edges=len(ext.edges),
        int_edges=len(internal.edges),
        first_discrepancy=discrepancy,
    )


def _first_discrepancy(ext_nodes, int_nodes, ext_edges, int_edges) -> dict | None:
    def marking_json(m: Multiset) -> dict:
        return m.as_dict()

    def edge_json(edge) -> list:
        return [edge[0].as_dict(), edge[1], edge[2].as_dict()]

    for side, extra in (("external-only", ext_nodes - int_nodes),
                        ("internal-only", int_nodes - ext_nodes)):
        if extra:
            first = min(extra, key=lambda m: m.sort_key())
            return {"kind": "node", "side": side, "value": marking_json(first)}
    for side, extra in (("external-only", ext_edges - int_edges),
                        ("internal-only", int_edges - ext_edges)):
        if extra:
            first = min(extra, key=lambda e: (e[0].sort_key(), e[1], e[2].sort_key()))
            return {"kind": "edge", "side": side, "value": edge_json(first)}
    return None
