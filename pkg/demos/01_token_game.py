"""The plain token game: build a net, fire it, explore its states.

Walks through the ATP hydrolysis reaction ATP + H2O -> ADP + Pi, first
as a one-shot firing, then as a trace replay, then as a bounded
reachability window.
"""

from mananets import (Trace, enabled, fire, parse_reaction_dsl, reach,
                      run_trace, validate_net)

# The reaction DSL is the quickest way to describe a net. Every symbol
# on a reaction side becomes a place, every named line a transition.
doc = parse_reaction_dsl("""
hydrolysis: ATP + H2O -> ADP + Pi
marking: 2 ATP + H2O
""")
net = doc.net

print("places:     ", net.places)
print("transitions:", net.transitions)
print("violations: ", validate_net(net))

# Two ATP and one H2O on the left; the transition is enabled.
marking = doc.marking
print("\nstart marking:", marking.as_dict())
print("enabled?     ", enabled(net, marking, "hydrolysis"))

after = fire(net, marking, "hydrolysis")
print("after firing: ", after.as_dict())

# The same thing as a trace: an initial marking plus a firing sequence.
trace = Trace(net, marking, ("hydrolysis",))
print("trace replay: ", run_trace(trace).as_dict())

# With the water used up, the reaction is dead.
print("enabled again?", enabled(net, after, "hydrolysis"))

# The bounded reachability window shows the whole (tiny) state space.
window = reach(net, marking, depth_bound=4, token_bound=10)
print("\nreachable markings:")
for node in window.nodes:
    print("  ", node.as_dict())
print("firings:")
for src, label, dst in window.edges:
    print(f"   {src.as_dict()} --{label}--> {dst.as_dict()}")
print("truncated:", window.truncated)
