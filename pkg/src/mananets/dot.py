"""Deterministic DOT rendering for nets, mana nets and reach graphs.

Places draw as circles, mana places as double circles, transitions as
boxes; arc multiplicities become edge labels. Identical input always
yields identical bytes, so renders can be golden-tested.
"""

from __future__ import annotations

from .documents import NetDocument
from .execution import ReachGraph
from .external import ManaState
from .internal import ManaNet, is_mana_place_name
from .multiset import Multiset
from .net import Net


def export_dot(obj) -> str:
    """Render a Net, NetDocument, ManaNet or ReachGraph as DOT text."""
    if isinstance(obj, ReachGraph):
        return _graph_dot(obj)
    if isinstance(obj, ManaNet):
        return _net_dot(obj.built, obj.mana_places())
    if isinstance(obj, NetDocument):
        net = obj.net
    elif isinstance(obj, Net):
        net = obj
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as DOT")
    mana_places = {p for p in net.places if is_mana_place_name(p)}
    return _net_dot(net, mana_places)


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _net_dot(net: Net, mana_places) -> str:
    lines = ["digraph net {", "  rankdir=LR;"]
    for place in sorted(net.places):
        shape = "doublecircle" if place in mana_places else "circle"
        lines.append(f"  {_quote(place)} [shape={shape}];")
    for transition in sorted(net.transitions):
        lines.append(f"  {_quote(transition)} [shape=box];")
    for transition in sorted(net.transitions):
        for place, count in net.pre[transition].items():
            lines.append(f"  {_quote(place)} -> {_quote(transition)} [label=\"{count}\"];")
        for place, count in net.post[transition].items():
            lines.append(f"  {_quote(transition)} -> {_quote(place)} [label=\"{count}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_marking(m: Multiset) -> str:
    """Compact text for a marking: ``2 ATP + H2O``, or ``0`` when empty."""
    if not m:
        return "0"
    return " + ".join(f"{count} {symbol}" if count > 1 else symbol
                      for symbol, count in m.items())


def _node_label(node) -> str:
    if isinstance(node, ManaState):
        pool = " ".join(f"{t}={count}" for t, count in node.pool.items()) or "-"
        return f"{format_marking(node.marking)} | {pool}"
    return format_marking(node)


def _graph_dot(graph: ReachGraph) -> str:
    index = {node: i for i, node in enumerate(graph.nodes)}
    lines = ["digraph reach {", "  rankdir=LR;"]
    for i, node in enumerate(graph.nodes):
        style = ", style=bold" if node == graph.root else ""
        lines.append(f"  n{i} [shape=ellipse, label={_quote(_node_label(node))}{style}];")
    for src, label, dst in graph.edges:
        lines.append(f"  n{index[src]} -> n{index[dst]} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
