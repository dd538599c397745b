"""Relation-space priors, truth indicators, imaging sums, expansion, ranking."""

from __future__ import annotations

import random

import pytest

from relrank.corpus import Term
from relrank.imaging import (
    EmptyRelationSpaceError,
    Query,
    QueryMode,
    Relation,
    RelationSpace,
    doc_prior,
    expand_query,
    imaging_doc_relevance,
    imaging_query_relevance,
    rank,
    relation_prior,
    score,
    truth_doc,
    truth_query,
)
from relrank.network import extract_network

from .conftest import actors_from, index_of, random_corpus, random_term_words

ALICE = Term.parse("alice smith")
BOB = Term.parse("bob jones")


def _relation(a="alice", b="bob", strength=0.25, support=("d1",),
              pa=(ALICE,), pb=(BOB,)) -> Relation:
    return Relation(
        actor_a=a,
        actor_b=b,
        strength=strength,
        support=frozenset(support),
        patterns_a=frozenset(pa),
        patterns_b=frozenset(pb),
    )


def _space(*relations: Relation) -> RelationSpace:
    total = sum(r.strength for r in relations)
    return RelationSpace(
        relations=tuple(relations),
        prior={r: r.strength / total for r in relations},
    )


@pytest.fixture
def c4_net(c4_index, alice, bob):
    return extract_network(c4_index, [alice, bob], threshold=0.1)


def test_doc_prior_uniform(c4_index):
    prior = doc_prior(c4_index)
    assert prior == {"d1": 0.25, "d2": 0.25, "d3": 0.25, "d4": 0.25}
    assert abs(sum(prior.values()) - 1.0) <= 1e-9


def test_doc_prior_single_doc():
    index = index_of({"only": "One doc."})
    assert doc_prior(index) == {"only": 1.0}


def test_doc_prior_empty_corpus():
    with pytest.raises(ValueError):
        doc_prior(index_of({}))


def test_relation_prior_single_edge(c4_net):
    space = relation_prior(c4_net)
    assert len(space.relations) == 1
    assert space.prior[space.relations[0]] == 1.0


def test_relation_prior_two_edges():
    r1 = _relation(a="a", b="b", strength=0.2)
    r2 = _relation(a="c", b="d", strength=0.3, support=("d2",))
    space = _space(r1, r2)
    assert space.prior[r1] == pytest.approx(0.4)
    assert space.prior[r2] == pytest.approx(0.6)


def test_relation_prior_edgeless(c4_index, alice, bob):
    net = extract_network(c4_index, [alice, bob], threshold=0.9)
    with pytest.raises(EmptyRelationSpaceError):
        relation_prior(net)


def test_truth_doc(c4_net):
    rel = relation_prior(c4_net).relations[0]
    assert truth_doc(rel, "d1") == 1
    assert truth_doc(rel, "d3") == 0
    for doc_id in rel.support:
        assert truth_doc(rel, doc_id) == 1


def test_truth_query_relation_mode(c4_net):
    rel = relation_prior(c4_net).relations[0]
    assert truth_query(rel, Query.from_strings(["alice smith", "bob jones"])) == 1
    assert truth_query(rel, Query.from_strings(["carol king", "dan ray"])) == 0


def test_truth_query_entity_mode(c4_net):
    rel = relation_prior(c4_net).relations[0]
    query = Query.from_strings(["alice smith"])
    assert query.mode is QueryMode.ENTITY
    assert truth_query(rel, query) == 1
    assert truth_query(rel, Query.from_strings(["carol king"])) == 0


def test_truth_query_order_symmetric(c4_net):
    rel = relation_prior(c4_net).relations[0]
    ab = Query.from_strings(["alice smith", "bob jones"])
    ba = Query.from_strings(["bob jones", "alice smith"])
    assert truth_query(rel, ab) == truth_query(rel, ba)


def test_imaging_doc_relevance_single():
    space = _space(_relation(strength=1.0))
    assert imaging_doc_relevance(space, "d1") == 1.0
    assert imaging_doc_relevance(space, "d2") == 0.0


def test_imaging_doc_relevance_weighted():
    space = _space(
        _relation(a="a", b="b", strength=0.2, support=("d1",)),
        _relation(a="c", b="d", strength=0.3, support=("d9",)),
    )
    assert imaging_doc_relevance(space, "d1") == pytest.approx(0.4)


def test_imaging_query_relevance():
    carol, dan = Term.parse("carol king"), Term.parse("dan ray")
    space = _space(
        _relation(a="a", b="b", strength=0.2),
        _relation(a="c", b="d", strength=0.3, support=("d2",), pa=(carol,), pb=(dan,)),
    )
    assert imaging_query_relevance(space, Query.from_strings(["carol king", "dan ray"])) \
        == pytest.approx(0.6)
    assert imaging_query_relevance(space, Query.from_strings(["eve", "mallory"])) == 0.0
    assert imaging_query_relevance(
        space, Query.from_strings(["alice smith", "bob jones"])
    ) == pytest.approx(0.4)


def test_score_c4(c4_index, c4_net):
    space = relation_prior(c4_net)
    query = Query.from_strings(["alice smith", "bob jones"])
    assert score(space, "d1", query) == 1.0
    assert score(space, "d2", query) == 0.0
    assert score(space, "d1", Query.from_strings(["carol king", "dan ray"])) == 0.0


def test_score_symmetric_under_indicator_exchange():
    space = _space(
        _relation(a="a", b="b", strength=0.2),
        _relation(a="c", b="d", strength=0.3, support=("d2",)),
    )
    query = Query.from_strings(["alice smith", "bob jones"])
    for doc_id in ("d1", "d2", "d7"):
        direct = score(space, doc_id, query)
        swapped = sum(
            space.prior[rel] * truth_query(rel, query) * truth_doc(rel, doc_id)
            for rel in space.relations
        )
        assert direct == swapped


def test_expand_query(c4_net):
    query = expand_query(Query.from_strings(["alice smith"]), c4_net,
                         min_strength=0.1, max_neighbors=5)
    assert [(str(t), s) for t, s in query.expanded_terms] == [("bob jones", 0.25)]


def test_expand_query_strength_floor(c4_net):
    query = expand_query(Query.from_strings(["alice smith"]), c4_net,
                         min_strength=0.3, max_neighbors=5)
    assert query.expanded_terms == ()


def test_expand_query_zero_neighbors(c4_net):
    original = Query.from_strings(["alice smith"])
    assert expand_query(original, c4_net, max_neighbors=0) == original


def test_expand_query_idempotent(c4_net):
    once = expand_query(Query.from_strings(["alice smith"]), c4_net)
    twice = expand_query(once, c4_net)
    assert once == twice


def test_rank_no_fallback(c4_index, c4_net):
    space = relation_prior(c4_net)
    result = rank(c4_index, space, Query.from_strings(["alice smith", "bob jones"]),
                  fallback=False)
    assert [(e.doc_id, e.score) for e in result.entries] == [("d1", 1.0)]


def test_rank_with_fallback(c4_index, c4_net):
    space = relation_prior(c4_net)
    result = rank(c4_index, space, Query.from_strings(["alice smith", "bob jones"]),
                  fallback=True)
    assert [e.doc_id for e in result.entries] == ["d1", "d2", "d3"]
    bands = {e.doc_id: e.band for e in result.entries}
    assert bands == {"d1": "relation", "d2": "fallback", "d3": "fallback"}
    scores = {e.doc_id: e.score for e in result.entries}
    assert scores["d2"] == 1.0 and scores["d3"] == 0.5


def test_rank_unknown_terms(c4_index, c4_net):
    space = relation_prior(c4_net)
    result = rank(c4_index, space, Query.from_strings(["zelda"]), fallback=False)
    assert result.entries == ()


def test_rank_no_network_fallback_only(c4_index):
    result = rank(c4_index, None, Query.from_strings(["bob jones"]), fallback=True)
    assert [e.doc_id for e in result.entries] == ["d1", "d2", "d3"]
    assert all(e.band == "fallback" for e in result.entries)


def test_rank_fallback_strictly_below_relations(c4_index, c4_net):
    space = relation_prior(c4_net)
    result = rank(c4_index, space, Query.from_strings(["alice smith", "bob jones"]))
    bands = [e.band for e in result.entries]
    assert bands == sorted(bands, key=lambda b: b != "relation")


def test_rank_evidence_supports_doc(c4_index, c4_net):
    space = relation_prior(c4_net)
    result = rank(c4_index, space, Query.from_strings(["alice smith", "bob jones"]))
    by_pair = {rel.pair: rel for rel in space.relations}
    for entry in result.entries:
        if entry.band == "relation":
            for pair in entry.evidence:
                assert entry.doc_id in by_pair[pair].support


def test_rank_matches_enumeration_random():
    rng = random.Random(47)
    for _ in range(5):
        docs = random_corpus(rng, max_docs=40)
        index = index_of(docs)
        actors = actors_from(random_term_words(rng, 5))
        net = extract_network(index, actors, threshold=0.0)
        if not net.edges:
            continue
        space = relation_prior(net)
        query = Query(entity_terms=(actors[0].term, actors[1].term))
        result = rank(index, space, query, fallback=False)
        expected = {}
        for doc_id in docs:
            s = sum(
                space.prior[rel] * truth_doc(rel, doc_id) * truth_query(rel, query)
                for rel in space.relations
            )
            if s > 0.0:
                expected[doc_id] = s
        got = {e.doc_id: e.score for e in result.entries}
        assert got == expected
        ordered = sorted(expected.items(), key=lambda kv: (-kv[1], kv[0]))
        assert [e.doc_id for e in result.entries] == [doc_id for doc_id, _ in ordered]


def test_query_validation():
    with pytest.raises(ValueError):
        Query(entity_terms=())
    with pytest.raises(ValueError):
        Query(entity_terms=(ALICE, Term.parse("alice smith")))
    with pytest.raises(ValueError):
        Query(entity_terms=(ALICE,), expanded_terms=((ALICE, 0.5),))


def test_query_dedupes_raw_strings():
    query = Query.from_strings(["Alice Smith", "alice  smith", "bob jones"])
    assert len(query.entity_terms) == 2
    assert query.mode is QueryMode.RELATION
