"""Petri nets as multiset-valued pre/post maps on transitions.

A net is a pair of functions from transitions to multisets of places.
Nothing here is validated on construction; :func:`validate_net` and
:func:`validate_morphism` return violations as data so that callers (and
the CLI) can report them instead of crashing.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .errors import UnknownSymbolError
from .multiset import EMPTY, Multiset


@dataclass(frozen=True)
class Net:
    """A Petri net: ordered places and transitions with pre/post multisets."""

    places: tuple[str, ...]
    transitions: tuple[str, ...]
    pre: Mapping[str, Multiset]
    post: Mapping[str, Multiset]

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "pre", dict(self.pre))
        object.__setattr__(self, "post", dict(self.post))

    @classmethod
    def build(cls, places, transitions: Mapping[str, tuple]) -> Net:
        """Convenience constructor.

        `transitions` maps each name to a ``(pre, post)`` pair, given as
        :class:`Multiset` values or plain ``{symbol: count}`` dicts.

        >>> net = Net.build(["A", "B", "C"], {"u": ({"A": 1, "B": 1}, {"C": 1})})
        >>> net.pre["u"]["B"]
        1
        """
        pre = {}
        post = {}
        for name, (before, after) in transitions.items():
            pre[name] = before if isinstance(before, Multiset) else Multiset(before)
            post[name] = after if isinstance(after, Multiset) else Multiset(after)
        return cls(tuple(places), tuple(transitions), pre, post)

    def arcs(self, transition: str) -> tuple[Multiset, Multiset]:
        """The (pre, post) pair of a transition."""
        if transition not in self.pre or transition not in self.post:
            raise UnknownSymbolError(transition, "transitions")
        return self.pre[transition], self.post[transition]


@dataclass(frozen=True)
class Violation:
    """One structural problem found by a validator."""

    kind: str
    subject: str
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "subject": self.subject, "detail": self.detail}


def validate_net(net: Net) -> list[Violation]:
    """Check the net invariants; an empty list means the net is well formed.

    Reported kinds: duplicate-place, duplicate-transition, name-clash
    (place and transition share a name), missing-pre/missing-post (pre or
    post not total), unknown-transition (pre/post keyed by an undeclared
    transition), unknown-place (an arc mentions an undeclared place).
    """
    out: list[Violation] = []
    places = set(net.places)
    transitions = set(net.transitions)

    seen: set[str] = set()
    for p in net.places:
        if p in seen:
            out.append(Violation("duplicate-place", p))
        seen.add(p)
    seen = set()
    for t in net.transitions:
        if t in seen:
            out.append(Violation("duplicate-transition", t))
        seen.add(t)

    for name in sorted(places & transitions):
        out.append(Violation("name-clash", name))

    for t in net.transitions:
        if t not in net.pre:
            out.append(Violation("missing-pre", t))
        if t not in net.post:
            out.append(Violation("missing-post", t))
    for key in sorted(set(net.pre) - transitions):
        out.append(Violation("unknown-transition", key, "pre"))
    for key in sorted(set(net.post) - transitions):
        out.append(Violation("unknown-transition", key, "post"))

    for side, arcs in (("pre", net.pre), ("post", net.post)):
        for t in sorted(arcs):
            for symbol in arcs[t].support():
                if symbol not in places:
                    out.append(Violation("unknown-place", symbol, f"{side} of {t}"))
    return out


def lift_multiset_map(mapping: Mapping[str, str | Multiset], m: Multiset) -> Multiset:
    """Apply a symbol map to a multiset, summing over preimages.

    Each symbol may map to another symbol or to a whole multiset; a count
    of ``k`` contributes ``k`` copies of the image. This is the unique
    monoid homomorphism extending `mapping`.

    >>> lift_multiset_map({"A": "P", "B": "P"}, Multiset({"A": 1, "B": 1}))
    Multiset({'P': 2})
    """
    parts = []
    for symbol, count in m.items():
        if symbol not in mapping:
            raise UnknownSymbolError(symbol, "symbol map")
        image = mapping[symbol]
        if isinstance(image, str):
            image = Multiset({image: 1})
        parts.append(count * image)
    return Multiset.sum(parts) if parts else EMPTY


@dataclass(frozen=True)
class NetMorphism:
    """A net morphism: compatible maps of transitions and places.

    Compatibility means the lifted place map carries each source arc to
    the corresponding target arc (checked by :func:`validate_morphism`).
    """

    source: Net
    target: Net
    transition_map: Mapping[str, str]
    place_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "transition_map", dict(self.transition_map))
        object.__setattr__(self, "place_map", dict(self.place_map))

    @classmethod
    def identity(cls, net: Net) -> NetMorphism:
        return cls(net, net, {t: t for t in net.transitions}, {p: p for p in net.places})


def validate_morphism(morphism: NetMorphism) -> list[Violation]:
    """Check totality, codomain membership and the two commuting squares.

    Square failures are reported as ``square-fails`` with detail "pre" or
    "post" naming which side disagrees.
    """
    out: list[Violation] = []
    src, tgt = morphism.source, morphism.target
    for v in validate_net(src):
        out.append(Violation(v.kind, v.subject, f"source net: {v.detail}".rstrip(": ")))
    for v in validate_net(tgt):
        out.append(Violation(v.kind, v.subject, f"target net: {v.detail}".rstrip(": ")))
    if out:
        return out

    fmap, gmap = morphism.transition_map, morphism.place_map
    for p in src.places:
        if p not in gmap:
            out.append(Violation("unmapped-place", p))
        elif gmap[p] not in set(tgt.places):
            out.append(Violation("unknown-target-place", gmap[p], f"image of {p}"))
    for t in src.transitions:
        if t not in fmap:
            out.append(Violation("unmapped-transition", t))
        elif fmap[t] not in set(tgt.transitions):
            out.append(Violation("unknown-target-transition", fmap[t], f"image of {t}"))
    if out:
        return out

    for t in src.transitions:
        image = fmap[t]
        if lift_multiset_map(gmap, src.pre[t]) != tgt.pre[image]:
            out.append(Violation("square-fails", t, "pre"))
        if lift_multiset_map(gmap, src.post[t]) != tgt.post[image]:
            out.append(Violation("square-fails", t, "post"))
    return out


def compose_morphisms(outer: NetMorphism, inner: NetMorphism) -> NetMorphism:
    """Componentwise composition (inner first, then outer)."""
    if inner.target != outer.source:
        raise ValueError("morphisms are not composable: target/source nets differ")
    return NetMorphism(
        inner.source,
        outer.target,
        {t: outer.transition_map[u] for t, u in inner.transition_map.items()},
        {p: outer.place_map[q] for p, q in inner.place_map.items()},
    )
