"""Relation-space ranking: priors, truth indicators, imaging sums, query expansion.

The extracted network's edges become elementary relations with a prior
proportional to their strength. A document is relevant to a query through
the relation mass that connects them: relations whose support contains the
document and whose endpoints match the query terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .corpus import CorpusIndex, Term, pattern_sentences
from .network import SocialNetwork

PRIOR_TOLERANCE = 1e-9


class EmptyRelationSpaceError(ValueError):
    """Raised when a relation space is requested from an edgeless network."""


class QueryMode(Enum):
    ENTITY = "entity"
    RELATION = "relation"


@dataclass(frozen=True)
class Query:
    """Entity terms plus any expansion terms added from the network."""

    entity_terms: tuple[Term, ...]
    expanded_terms: tuple[tuple[Term, float], ...] = ()

    def __post_init__(self) -> None:
        if not self.entity_terms:
            raise ValueError("query needs at least one entity term")
        if len(set(self.entity_terms)) != len(self.entity_terms):
            raise ValueError("entity terms must be pairwise distinct")
        if set(t for t, _ in self.expanded_terms) & set(self.entity_terms):
            raise ValueError("expanded terms must be disjoint from entity terms")

    @classmethod
    def from_strings(cls, raw_terms: list[str]) -> "Query":
        terms: list[Term] = []
        for raw in raw_terms:
            term = Term.parse(raw)
            if term not in terms:
                terms.append(term)
        return cls(entity_terms=tuple(terms))

    @property
    def mode(self) -> QueryMode:
        return QueryMode.ENTITY if len(self.entity_terms) == 1 else QueryMode.RELATION

    def all_terms(self) -> tuple[Term, ...]:
        return self.entity_terms + tuple(t for t, _ in self.expanded_terms)


@dataclass(frozen=True)
class Relation:
    """One network edge viewed as an elementary relation outcome."""

    actor_a: str
    actor_b: str
    strength: float
    support: frozenset[str]
    patterns_a: frozenset[Term]
    patterns_b: frozenset[Term]

    @property
    def pair(self) -> tuple[str, str]:
        return (self.actor_a, self.actor_b)


@dataclass(frozen=True)
class RelationSpace:
    relations: tuple[Relation, ...]
    prior: dict[Relation, float]


@dataclass(frozen=True)
class ResultEntry:
    doc_id: str
    score: float
    band: str  # "relation" or "fallback"
    evidence: tuple


@dataclass(frozen=True)
class RankedResult:
    entries: tuple[ResultEntry, ...]
    query: Query
    mode: QueryMode


def doc_prior(index: CorpusIndex) -> dict[str, float]:
    """Uniform prior over documents."""
    if index.total_docs == 0:
        raise ValueError("document prior over an empty corpus")
    p = 1.0 / index.total_docs
    return {doc_id: p for doc_id in index.doc_ids()}


def relation_prior(net: SocialNetwork) -> RelationSpace:
    """Relations with prior proportional to edge strength, normalized to 1."""
    if not net.edges:
        raise EmptyRelationSpaceError("network has no edges")
    relations = []
    for _, edge in sorted(net.edges.items()):
        a, b = edge.pair
        relations.append(
            Relation(
                actor_a=a,
                actor_b=b,
                strength=edge.strength,
                support=edge.support,
                patterns_a=frozenset(net.nodes[a].actor.patterns),
                patterns_b=frozenset(net.nodes[b].actor.patterns),
            )
        )
    total = sum(rel.strength for rel in relations)
    prior = {rel: rel.strength / total for rel in relations}
    return RelationSpace(relations=tuple(relations), prior=prior)


def truth_doc(relation: Relation, doc_id: str) -> int:
    """1 iff the document is in the relation's sentence-level support."""
    return 1 if doc_id in relation.support else 0


def truth_query(relation: Relation, query: Query) -> int:
    """1 iff the query selects this relation (endpoint pair match or incidence)."""
    if query.mode is QueryMode.ENTITY:
        term = query.entity_terms[0]
        return 1 if term in relation.patterns_a or term in relation.patterns_b else 0
    terms = query.all_terms()
    for i, t1 in enumerate(terms):
        for t2 in terms[i + 1:]:
            if (t1 in relation.patterns_a and t2 in relation.patterns_b) or (
                t1 in relation.patterns_b and t2 in relation.patterns_a
            ):
                return 1
    return 0


def imaging_doc_relevance(space: RelationSpace, doc_id: str) -> float:
    """Prior-weighted truth of the document across the relation space."""
    return sum(space.prior[rel] * truth_doc(rel, doc_id) for rel in space.relations)


def imaging_query_relevance(space: RelationSpace, query: Query) -> float:
    """Prior-weighted truth of the query across the relation space."""
    return sum(space.prior[rel] * truth_query(rel, query) for rel in space.relations)


def score(space: RelationSpace, doc_id: str, query: Query) -> float:
    """Joint relation mass connecting document and query."""
    return sum(
        space.prior[rel] * truth_doc(rel, doc_id) * truth_query(rel, query)
        for rel in space.relations
    )


def expand_query(
    query: Query,
    net: SocialNetwork,
    min_strength: float = 0.1,
    max_neighbors: int = 5,
) -> Query:
    """Add, per entity term, the strongest network neighbors as expansion terms."""
    if max_neighbors <= 0:
        return query
    known = set(query.entity_terms) | {t for t, _ in query.expanded_terms}
    additions: list[tuple[Term, float]] = list(query.expanded_terms)
    for term in query.entity_terms:
        owner = None
        for _, node in sorted(net.nodes.items()):
            if term in node.actor.patterns:
                owner = node.actor
                break
        if owner is None:
            continue
        taken = 0
        for neighbor_id, strength in net.neighbors(owner.id):
            if taken >= max_neighbors:
                break
            if strength < min_strength:
                continue
            neighbor_term = net.nodes[neighbor_id].actor.term
            if neighbor_term in known:
                continue
            additions.append((neighbor_term, strength))
            known.add(neighbor_term)
            taken += 1
    return Query(entity_terms=query.entity_terms, expanded_terms=tuple(additions))


def _fallback_fraction(index: CorpusIndex, doc_id: str, query: Query) -> float:
    """Share of entity terms with a sentence-pattern match in the document."""
    matched = sum(
        1 for term in query.entity_terms if pattern_sentences(index, doc_id, term)
    )
    return matched / len(query.entity_terms)


def rank(
    index: CorpusIndex,
    space: RelationSpace | None,
    query: Query,
    fallback: bool = True,
) -> RankedResult:
    """Score every document; fallback docs always rank strictly below relation docs."""
    relation_entries: list[ResultEntry] = []
    fallback_entries: list[ResultEntry] = []
    for doc_id in index.doc_ids():
        s = score(space, doc_id, query) if space is not None else 0.0
        if s > 0.0:
            evidence = tuple(
                rel.pair
                for rel in space.relations
                if truth_doc(rel, doc_id) and truth_query(rel, query)
            )
            relation_entries.append(ResultEntry(doc_id, s, "relation", evidence))
        elif fallback:
            frac = _fallback_fraction(index, doc_id, query)
            if frac > 0.0:
                evidence = tuple(
                    str(term)
                    for term in query.entity_terms
                    if pattern_sentences(index, doc_id, term)
                )
                fallback_entries.append(ResultEntry(doc_id, frac, "fallback", evidence))
    relation_entries.sort(key=lambda e: (-e.score, e.doc_id))
    fallback_entries.sort(key=lambda e: (-e.score, e.doc_id))
    return RankedResult(
        entries=tuple(relation_entries + fallback_entries),
        query=query,
        mode=query.mode,
    )
