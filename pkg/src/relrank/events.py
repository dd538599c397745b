"""Singleton and doubleton event spaces with sentence-level boundary corrections.

An event space is the set of documents matching a term (or a pair of terms);
its implication subset holds the documents where the match is a contiguous
pattern inside a sentence (same sentence window for pairs). The boundary is
the gap between the two counts and is the correction applied downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .corpus import CorpusIndex, MatchKind, Term, match_term, pattern_sentences


class EmptyUniverseError(ValueError):
    """Raised when probabilities are requested over an empty corpus."""


class InvalidPairError(ValueError):
    """Raised when a pair operation receives two equal terms or actors."""


class EventKind(Enum):
    SINGLETON = "singleton"
    DOUBLETON = "doubleton"


@dataclass(frozen=True)
class EventSpace:
    """Document sets for an event, its implication subset, and the universe size."""

    kind: EventKind
    terms: tuple[Term, ...]
    members: frozenset[str]
    implication_members: frozenset[str]
    universe_size: int

    def __post_init__(self) -> None:
        if not self.implication_members <= self.members:
            raise ValueError("implication members must be a subset of members")

    @property
    def boundary(self) -> int:
        return len(self.members) - len(self.implication_members)


def _term_members(index: CorpusIndex, term: Term) -> tuple[frozenset[str], frozenset[str]]:
    members = set()
    implication = set()
    for doc_id in index.documents:
        kind = match_term(index, doc_id, term)
        if kind is MatchKind.SENTENCE_PATTERN:
            members.add(doc_id)
            implication.add(doc_id)
        elif kind is MatchKind.BAG_OF_WORDS:
            members.add(doc_id)
    return frozenset(members), frozenset(implication)


def singleton_event(index: CorpusIndex, term: Term) -> EventSpace:
    """Event space of one term; unknown words simply yield empty sets."""
    members, implication = _term_members(index, term)
    return EventSpace(
        kind=EventKind.SINGLETON,
        terms=(term,),
        members=members,
        implication_members=implication,
        universe_size=index.total_docs,
    )


def union_event(index: CorpusIndex, terms: Sequence[Term]) -> EventSpace:
    """Singleton event of an entity known under several name patterns (set union)."""
    members: set[str] = set()
    implication: set[str] = set()
    for term in terms:
        m, i = _term_members(index, term)
        members |= m
        implication |= i
    return EventSpace(
        kind=EventKind.SINGLETON,
        terms=tuple(terms),
        members=frozenset(members),
        implication_members=frozenset(implication),
        universe_size=index.total_docs,
    )


def _pair_implies(
    index: CorpusIndex,
    doc_id: str,
    terms_a: Sequence[Term],
    terms_b: Sequence[Term],
    window: int,
) -> bool:
    """True if some a-pattern and some b-pattern match sentences <= window apart."""
    sents_a: set[int] = set()
    for term in terms_a:
        sents_a |= pattern_sentences(index, doc_id, term)
    if not sents_a:
        return False
    sents_b: set[int] = set()
    for term in terms_b:
        sents_b |= pattern_sentences(index, doc_id, term)
    if not sents_b:
        return False
    return any(abs(sa - sb) <= window for sa in sents_a for sb in sents_b)


def pair_event(
    index: CorpusIndex,
    terms_a: Sequence[Term],
    terms_b: Sequence[Term],
    window: int = 0,
) -> EventSpace:
    """Doubleton event for two entities, each possibly known under several patterns."""
    if window < 0:
        raise ValueError("window must be >= 0")
    if set(terms_a) & set(terms_b):
        raise InvalidPairError("pair terms must be distinct")
    ev_a = union_event(index, terms_a)
    ev_b = union_event(index, terms_b)
    members = ev_a.members & ev_b.members
    implication = frozenset(
        doc_id
        for doc_id in members
        if _pair_implies(index, doc_id, terms_a, terms_b, window)
    )
    return EventSpace(
        kind=EventKind.DOUBLETON,
        terms=tuple(terms_a) + tuple(terms_b),
        members=members,
        implication_members=implication,
        universe_size=index.total_docs,
    )


def doubleton_event(index: CorpusIndex, term_a: Term, term_b: Term, window: int = 0) -> EventSpace:
    """Doubleton event of two distinct terms; window 0 means same sentence."""
    if term_a == term_b:
        raise InvalidPairError(f"doubleton terms must differ: {term_a}")
    return pair_event(index, [term_a], [term_b], window)


def _check_universe(ev: EventSpace) -> None:
    if ev.universe_size <= 0:
        raise EmptyUniverseError("event space over an empty corpus")


def prob_singleton(ev: EventSpace) -> float:
    """|members| / |universe| for a singleton event."""
    if ev.kind is not EventKind.SINGLETON:
        raise ValueError("prob_singleton requires a singleton event")
    _check_universe(ev)
    return len(ev.members) / ev.universe_size


def prob_doubleton(ev: EventSpace) -> float:
    """|members| / |universe| for a doubleton event."""
    if ev.kind is not EventKind.DOUBLETON:
        raise ValueError("prob_doubleton requires a doubleton event")
    _check_universe(ev)
    return len(ev.members) / ev.universe_size


def implication_prob(ev: EventSpace) -> float:
    """(|members| - boundary) / |universe|, i.e. the implication count over the universe."""
    _check_universe(ev)
    return len(ev.implication_members) / ev.universe_size
