"""Entity-network corpus indexing and relation-based document ranking."""

from .corpus import (
    CorpusIndex,
    Document,
    MatchKind,
    Sentence,
    Term,
    build_index,
    ingest_corpus,
    ingest_directory,
    load_index,
    match_term,
    save_index,
    split_sentences,
    tokenize,
)
from .events import (
    EventKind,
    EventSpace,
    doubleton_event,
    implication_prob,
    pair_event,
    prob_doubleton,
    prob_singleton,
    singleton_event,
    union_event,
)
from .imaging import (
    Query,
    QueryMode,
    RankedResult,
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
from .network import (
    Actor,
    EdgeRecord,
    NodeRecord,
    SocialNetwork,
    edge_strength,
    export_network,
    extract_network,
    node_weight,
)

__version__ = "0.1.0"

__all__ = [
    "Actor",
    "CorpusIndex",
    "Document",
    "EdgeRecord",
    "EventKind",
    "EventSpace",
    "MatchKind",
    "NodeRecord",
    "Query",
    "QueryMode",
    "RankedResult",
    "Relation",
    "RelationSpace",
    "Sentence",
    "SocialNetwork",
    "Term",
    "build_index",
    "doc_prior",
    "doubleton_event",
    "edge_strength",
    "expand_query",
    "export_network",
    "extract_network",
    "imaging_doc_relevance",
    "imaging_query_relevance",
    "implication_prob",
    "ingest_corpus",
    "ingest_directory",
    "load_index",
    "match_term",
    "node_weight",
    "pair_event",
    "prob_doubleton",
    "prob_singleton",
    "rank",
    "relation_prior",
    "save_index",
    "score",
    "singleton_event",
    "split_sentences",
    "tokenize",
    "truth_doc",
    "truth_query",
    "union_event",
]
