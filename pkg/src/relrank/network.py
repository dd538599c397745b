"""Entity network extraction: node weights, boundary-corrected Jaccard edges, export.

Nodes carry the implication probability of the actor's name patterns; edges
carry a Jaccard-style strength where both event counts are corrected by their
boundaries. Edge support records the documents whose sentences back the
relation, which is what the ranking layer consumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Sequence

from .corpus import CorpusIndex, Term
from .events import EventSpace, InvalidPairError, implication_prob, pair_event, union_event


class DuplicateActorError(ValueError):
    """Raised when an actor list repeats an id."""


@dataclass(frozen=True)
class Actor:
    """A named entity with one primary name pattern and optional aliases."""

    id: str
    term: Term
    aliases: tuple[Term, ...] = ()

    @property
    def patterns(self) -> tuple[Term, ...]:
        return (self.term, *self.aliases)


@dataclass(frozen=True)
class NodeRecord:
    actor: Actor
    weight: float
    event: EventSpace


@dataclass(frozen=True)
class EdgeRecord:
    pair: tuple[str, str]  # canonically ordered actor ids
    strength: float
    support: frozenset[str]  # pair implication members
    event: EventSpace


@dataclass(frozen=True)
class SocialNetwork:
    nodes: dict[str, NodeRecord]
    edges: dict[tuple[str, str], EdgeRecord]
    threshold: float
    window: int

    def neighbors(self, actor_id: str) -> list[tuple[str, float]]:
        """Adjacent (actor id, strength) pairs, strongest first, ties by id."""
        out = []
        for (a, b), edge in self.edges.items():
            if a == actor_id:
                out.append((b, edge.strength))
            elif b == actor_id:
                out.append((a, edge.strength))
        out.sort(key=lambda item: (-item[1], item[0]))
        return out


def node_weight(index: CorpusIndex, actor: Actor) -> float:
    """Implication probability of the actor's name patterns (alias union)."""
    return implication_prob(union_event(index, actor.patterns))


def jaccard_from_counts(
    n_a: int, n_b: int, n_ab: int, beta_a: int, beta_b: int, beta_ab: int
) -> float:
    """Boundary-corrected Jaccard; degenerate denominators/numerators clamp to 0."""
    numerator = n_ab - beta_ab
    denominator = n_a + n_b - n_ab - beta_a - beta_b + beta_ab
    if denominator <= 0 or numerator < 0:
        return 0.0
    return min(numerator / denominator, 1.0)


def _pair_edge(index: CorpusIndex, a: Actor, b: Actor, window: int) -> tuple[float, EventSpace]:
    if a.id == b.id:
        raise InvalidPairError(f"edge endpoints must differ: {a.id}")
    ev_a = union_event(index, a.patterns)
    ev_b = union_event(index, b.patterns)
    ev_ab = pair_event(index, a.patterns, b.patterns, window)
    strength = jaccard_from_counts(
        len(ev_a.members),
        len(ev_b.members),
        len(ev_ab.members),
        ev_a.boundary,
        ev_b.boundary,
        ev_ab.boundary,
    )
    return strength, ev_ab


def edge_strength(index: CorpusIndex, a: Actor, b: Actor, window: int = 0) -> float:
    """Boundary-corrected Jaccard strength of the pair, clamped to [0, 1]."""
    strength, _ = _pair_edge(index, a, b, window)
    return strength


def extract_network(
    index: CorpusIndex,
    actors: Sequence[Actor],
    threshold: float = 0.0,
    window: int = 0,
) -> SocialNetwork:
    """Build the full network: one node per actor, edges at or above threshold."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be in [0, 1]")
    seen: set[str] = set()
    for actor in actors:
        if actor.id in seen:
            raise DuplicateActorError(f"duplicate actor id: {actor.id!r}")
        seen.add(actor.id)
    ordered = sorted(actors, key=lambda a: a.id)
    nodes = {
        actor.id: NodeRecord(
            actor=actor,
            weight=node_weight(index, actor),
            event=union_event(index, actor.patterns),
        )
        for actor in ordered
    }
    edges: dict[tuple[str, str], EdgeRecord] = {}
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            strength, ev_ab = _pair_edge(index, a, b, window)
            if strength > 0.0 and strength >= threshold:
                pair = (a.id, b.id)
                edges[pair] = EdgeRecord(
                    pair=pair,
                    strength=strength,
                    support=ev_ab.implication_members,
                    event=ev_ab,
                )
    return SocialNetwork(nodes=nodes, edges=edges, threshold=threshold, window=window)


def network_to_dict(net: SocialNetwork) -> dict:
    """Canonical JSON-ready form: nodes by id, edges by ordered pair."""
    return {
        "nodes": [
            {
                "id": node.actor.id,
                "label": str(node.actor.term),
                "weight": node.weight,
            }
            for _, node in sorted(net.nodes.items())
        ],
        "edges": [
            {
                "source": edge.pair[0],
                "target": edge.pair[1],
                "strength": edge.strength,
                "support": sorted(edge.support),
            }
            for _, edge in sorted(net.edges.items())
        ],
    }


def export_network(net: SocialNetwork, sink: IO[bytes], fmt: str = "json") -> int:
    """Write the network as canonical JSON or a TSV edge list; returns bytes written."""
    if fmt == "json":
        data = json.dumps(network_to_dict(net), sort_keys=True, separators=(",", ":"))
        data += "\n"
    elif fmt == "tsv":
        lines = [
            f"{edge.pair[0]}\t{edge.pair[1]}\t{edge.strength}"
            for _, edge in sorted(net.edges.items())
        ]
        data = "".join(line + "\n" for line in lines)
    else:
        raise ValueError(f"unsupported graph format: {fmt!r}")
    encoded = data.encode("utf-8")
    sink.write(encoded)
    return len(encoded)
