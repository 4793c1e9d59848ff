"""The token game: enabledness, firing, traces and bounded reachability.

A marking is just a :class:`~mananets.multiset.Multiset` over the places
of a net. A :class:`Trace` (an initial marking plus a firing sequence)
stands for one execution of the net; two traces that differ only in the
order of independent firings describe the same execution, which is what
:func:`trace_equivalent` decides up to a search bound.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Callable, Hashable, Iterable
from dataclasses import dataclass
from typing import TypeVar

from .errors import NotEnabledError, UnknownSymbolError
from .multiset import Multiset
from .net import Net

#: Markings are plain multisets over a net's places.
Marking = Multiset

#: Default search bound for trace_equivalent, in trace length.
DEFAULT_EQUIVALENCE_BOUND = 8


@dataclass(frozen=True)
class Trace:
    """An initial marking plus an ordered firing sequence.

    Valid traces replay without ever going negative; :func:`run_trace`
    raises :class:`NotEnabledError` (with the failing index) otherwise.
    """

    net: Net
    initial: Multiset
    steps: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)


def enabled(net: Net, marking: Multiset, transition: str) -> bool:
    """True when the marking covers the transition's pre multiset."""
    if transition not in net.pre:
        raise UnknownSymbolError(transition, "transitions")
    return net.pre[transition] <= marking


def fire(net: Net, marking: Multiset, transition: str) -> Multiset:
    """Fire one transition atomically; raises NotEnabledError if blocked."""
    pre, post = net.arcs(transition)
    rest = marking.minus(pre)
    if rest is None:
        raise NotEnabledError(transition)
    return rest + post


def replay(trace: Trace) -> list[Multiset]:
    """All intermediate markings, from the initial one to the final one."""
    markings = [trace.initial]
    for index, transition in enumerate(trace.steps):
        pre, post = trace.net.arcs(transition)
        rest = markings[-1].minus(pre)
        if rest is None:
            raise NotEnabledError(transition, index)
        markings.append(rest + post)
    return markings


def run_trace(trace: Trace) -> Multiset:
    """The final marking after replaying every step."""
    return replay(trace)[-1]


def concat_traces(first: Trace, second: Trace) -> Trace:
    """Sequential composition; the second trace must start where the first ends."""
    if first.net != second.net:
        raise ValueError("traces live on different nets")
    if run_trace(first) != second.initial:
        raise ValueError("traces do not compose: end marking differs from start marking")
    return Trace(first.net, first.initial, first.steps + second.steps)


def occurrence_multiset(trace: Trace) -> Multiset:
    """How many times each transition occurs in the firing sequence."""
    counts: dict[str, int] = {}
    for transition in trace.steps:
        counts[transition] = counts.get(transition, 0) + 1
    return Multiset(counts)


def trace_equivalent(t1: Trace, t2: Trace,
                     bound: int = DEFAULT_EQUIVALENCE_BOUND) -> bool | None:
    """Decide whether two traces describe the same execution.

    Equivalent traces must share the initial marking, the final marking
    and the occurrence multiset, and must be connected by swaps of
    adjacent independent firings (firings that could have happened in
    either order). The swap search is exhaustive, so the answer is exact
    for traces of length <= `bound`; longer traces whose invariants agree
    return None (inconclusive) rather than guessing.
    """
    if t1.net != t2.net:
        return False
    if t1.initial != t2.initial:
        return False
    if occurrence_multiset(t1) != occurrence_multiset(t2):
        return False
    if run_trace(t1) != run_trace(t2):
        return False
    if t1.steps == t2.steps:
        return True
    if len(t1.steps) > bound:
        return None

    net = t1.net
    goal = t2.steps
    seen = {t1.steps}
    queue = deque([t1.steps])
    while queue:
        steps = queue.popleft()
        markings = replay(Trace(net, t1.initial, steps))
        for i in range(len(steps) - 1):
            u, v = steps[i], steps[i + 1]
            if u == v:
                continue
            # Swap is legal only if the pair replays in the other order.
            after_v = markings[i].minus(net.pre[v])
            if after_v is None:
                continue
            if not net.pre[u] <= after_v + net.post[v]:
                continue
            swapped = steps[:i] + (v, u) + steps[i + 2:]
            if swapped == goal:
                return True
            if swapped not in seen:
                seen.add(swapped)
                queue.append(swapped)
    return False


# -- bounded reachability ---------------------------------------------------

State = TypeVar("State", bound=Hashable)


@dataclass(frozen=True)
class ReachGraph:
    """A finite window of the reachability graph.

    Nodes and edges are sorted deterministically; `truncated` is set
    whenever the depth or token bound cut off unexplored behaviour.
    """

    root: object
    nodes: tuple
    edges: tuple
    depth_bound: int
    token_bound: int
    truncated: bool


def explore(root: State,
            successors: Callable[[State], Iterable[tuple[str, State]]],
            *,
            size: Callable[[State], int],
            key: Callable[[State], object],
            depth_bound: int,
            token_bound: int) -> ReachGraph:
    """Breadth-first closure of a labelled successor relation.

    Nodes deeper than `depth_bound` are not expanded and successors whose
    `size` exceeds `token_bound` are discarded; either event marks the
    graph as truncated.
    """
    truncated = False
    depth = {root: 0}
    nodes = {root}
    edges: set[tuple] = set()
    queue: deque[State] = deque([root])
    while queue:
        state = queue.popleft()
        if depth[state] >= depth_bound or size(state) > token_bound:
            if any(True for _ in successors(state)):
                truncated = True
            continue
        for label, nxt in successors(state):
            if size(nxt) > token_bound:
                truncated = True
                continue
            edges.add((state, label, nxt))
            if nxt not in nodes:
                nodes.add(nxt)
                depth[nxt] = depth[state] + 1
                queue.append(nxt)
    sorted_nodes = tuple(sorted(nodes, key=key))
    sorted_edges = tuple(sorted(edges, key=lambda e: (key(e[0]), e[1], key(e[2]))))
    return ReachGraph(root, sorted_nodes, sorted_edges, depth_bound, token_bound, truncated)


def reach(net: Net, initial: Multiset, depth_bound: int, token_bound: int) -> ReachGraph:
    """Bounded reachability of the plain token game from `initial`."""

    def successors(marking: Multiset):
        for transition in sorted(net.transitions):
            rest = marking.minus(net.pre[transition])
            if rest is not None:
                yield transition, rest + net.post[transition]

    return explore(initial, successors,
                   size=lambda m: m.total(),
                   key=lambda m: m.sort_key(),
                   depth_bound=depth_bound,
                   token_bound=token_bound)


def simulate(net: Net, initial: Multiset, max_steps: int,
             rng: random.Random | None = None) -> Trace:
    """Fire up to `max_steps` transitions, stopping when nothing is enabled.

    The enabled transition with the lexicographically smallest name is
    chosen unless an `rng` is supplied, in which case the choice is drawn
    from it (reproducibly, given a seeded Random).
    """
    marking = initial
    steps: list[str] = []
    for _ in range(max_steps):
        candidates = [t for t in sorted(net.transitions) if net.pre[t] <= marking]
        if not candidates:
            break
        choice = rng.choice(candidates) if rng is not None else candidates[0]
        marking = fire(net, marking, choice)
        steps.append(choice)
    return Trace(net, initial, tuple(steps))
