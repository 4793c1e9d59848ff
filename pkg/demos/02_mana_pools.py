"""Mana pools: transitions with a limited firing budget.

The same net behaves very differently once each transition has to pay
mana to fire. A state is now a (marking, pool) pair, and every firing
acts on the pool through an affine span: subtract what it consumes, add
what it produces.
"""

from mananets import (EMPTY, ManaState, Multiset, Trace, laxator,
                      mana_enabled, mana_fire, mana_reach, parse_reaction_dsl,
                      span_of_trace, span_of_transition)

doc = parse_reaction_dsl("""
u: A + B -> C mana: consume 1
marking: A + B
pool: u=2
""")
net, policy = doc.net, doc.policy

state = ManaState(doc.marking, doc.pool)
print("state:", state.marking.as_dict(), "| pool", state.pool.as_dict())

# With two units of mana, u may fire...
print("enabled?", mana_enabled(net, policy, state, "u"))
fired = mana_fire(net, policy, state, "u")
print("after firing:", fired.marking.as_dict(), "| pool", fired.pool.as_dict())

# ...but an empty pool blocks it even when the tokens are there,
# and missing tokens block it even when the pool is full.
print("empty pool: ",
      mana_enabled(net, policy, ManaState(doc.marking, EMPTY), "u"))
print("missing B:  ",
      mana_enabled(net, policy, ManaState(Multiset({"A": 1}), Multiset({"u": 4})), "u"))

# Each transition's effect on pools is an affine span.
span = span_of_transition(policy, "u")
print("\nspan of u: consume", span.consume.as_dict(), "produce", span.produce.as_dict())

# Spans compose by adding both components; a whole trace folds to one span.
trace = Trace(net, doc.marking, ("u",))
print("span of the trace:", span_of_trace(policy, trace).consume.as_dict())

# Two independent observers merge what they know about the pools by
# summing: that sum is the laxator.
knows_u = Multiset({"u": 3})
knows_uv = Multiset({"u": 1, "v": 8})
print("\nmerged pool knowledge:", laxator(knows_u, knows_uv).as_dict())

# The mana-aware reachability window stops exactly when the pool runs dry.
window = mana_reach(net, policy, state, depth_bound=6, token_bound=12)
print("\nmana-reachable states:")
for node in window.nodes:
    print("  ", node.marking.as_dict(), "| pool", node.pool.as_dict())
