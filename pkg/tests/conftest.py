"""Shared fixtures: the 4-document desk corpus and random corpus generators."""

from __future__ import annotations

import random

import pytest

from relrank.corpus import CorpusIndex, Term, build_index, make_document
from relrank.network import Actor

C4_DOCS = {
    "d1": "Alice Smith wrote a paper with Bob Jones.",
    "d2": "Alice Smith visited Paris. Bob Jones stayed home.",
    "d3": "Bob Jones published alone.",
    "d4": "Smith and Alice are common names.",
}

NAME_WORDS = [
    "alice", "bob", "carol", "dave", "erin", "frank", "grace", "heidi",
    "ivan", "judy", "mallory", "oscar", "peggy", "trent", "victor", "walter",
    "smith", "jones", "brown", "taylor", "lee", "kim", "park", "chen",
    "young", "hall", "king", "reed",
]

FILLER_WORDS = [
    "wrote", "met", "paper", "visited", "city", "stayed", "home", "published",
    "alone", "team", "project", "award", "talk", "lab", "group", "idea",
    "study", "result", "joined", "left",
]


def index_of(docs: dict[str, str]) -> CorpusIndex:
    return build_index([make_document(doc_id, text) for doc_id, text in docs.items()])


def random_corpus(rng: random.Random, max_docs: int = 60) -> dict[str, str]:
    """Docs of 1-5 sentences over a small name/filler vocabulary."""
    n_docs = rng.randint(1, max_docs)
    docs = {}
    for i in range(n_docs):
        sentences = []
        for _ in range(rng.randint(1, 5)):
            length = rng.randint(2, 9)
            words = [rng.choice(NAME_WORDS + FILLER_WORDS) for _ in range(length)]
            sentences.append(" ".join(words).capitalize() + rng.choice([".", "!", "?"]))
        docs[f"d{i:04d}"] = " ".join(sentences)
    return docs


def random_term_words(rng: random.Random, count: int) -> list[tuple[str, ...]]:
    """Distinct 1- or 2-word name patterns."""
    terms: list[tuple[str, ...]] = []
    while len(terms) < count:
        words = tuple(rng.sample(NAME_WORDS, rng.randint(1, 2)))
        if words not in terms:
            terms.append(words)
    return terms


def actors_from(term_words: list[tuple[str, ...]]) -> list[Actor]:
    return [
        Actor(id=f"a{i:03d}", term=Term(words))
        for i, words in enumerate(term_words)
    ]


@pytest.fixture
def c4_docs() -> dict[str, str]:
    return dict(C4_DOCS)


@pytest.fixture
def c4_index() -> CorpusIndex:
    return index_of(C4_DOCS)


@pytest.fixture
def alice() -> Actor:
    return Actor(id="alice", term=Term.parse("alice smith"))


@pytest.fixture
def bob() -> Actor:
    return Actor(id="bob", term=Term.parse("bob jones"))
