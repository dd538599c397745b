"""Corpus ingestion, tokenization, sentence segmentation, and a positional inverted index.

Documents are sentence-segmented and tokenized once at ingest time; the index
maps each word to its (document, sentence, position) occurrences so that
contiguous phrase matches can be resolved without rescanning text.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Iterator

INDEX_VERSION = "SRIDX1"

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)
# Sentence boundary: terminal punctuation followed by whitespace. No
# abbreviation handling; determinism matters more than linguistic accuracy.
_SENT_RE = re.compile(r"(?<=[.!?])\s+")


class CorpusFormatError(ValueError):
    """Raised when a corpus source cannot be parsed or violates invariants."""


class UnknownDocumentError(KeyError):
    """Raised when an operation references a document id not in the index."""


class IndexFormatError(ValueError):
    """Raised when an index stream is empty, truncated, or malformed."""


class UnsupportedVersionError(IndexFormatError):
    """Raised when an index stream carries a version tag we cannot read."""


def tokenize(text: str) -> list[str]:
    """Lowercase and split on whitespace/punctuation, dropping empty tokens."""
    return _WORD_RE.findall(text.lower())


class MatchKind(Enum):
    """How a term relates to a document."""

    SENTENCE_PATTERN = "sentence_pattern"  # contiguous in-order match inside one sentence
    BAG_OF_WORDS = "bag_of_words"  # all words present, pattern in no sentence
    NONE = "none"


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Term:
    """A word pattern naming an entity; equality is by word list only."""

    words: tuple[str, ...]
    raw: str = field(compare=False, default="")

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError("term must contain at least one word")
        for w in self.words:
            if tokenize(w) != [w]:
                raise ValueError(f"term word not normalized: {w!r}")

    @classmethod
    def parse(cls, raw: str) -> "Term":
        words = tuple(tokenize(raw))
        if not words:
            raise ValueError(f"term has no words after normalization: {raw!r}")
        return cls(words, raw)

    def __str__(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    sentences: tuple[Sentence, ...]


def split_sentences(text: str) -> list[Sentence]:
    """Split on terminal punctuation + whitespace; tokenize each piece."""
    sentences: list[Sentence] = []
    for chunk in _SENT_RE.split(text):
        tokens = tuple(tokenize(chunk))
        if tokens:
            sentences.append(Sentence(index=len(sentences), tokens=tokens))
    return sentences


def make_document(doc_id: str, text: str) -> Document:
    return Document(id=doc_id, text=text, sentences=tuple(split_sentences(text)))


@dataclass(frozen=True)
class CorpusIndex:
    """Immutable corpus index: documents plus positional postings."""

    documents: dict[str, Document]
    # word -> doc id -> set of (sentence index, token position)
    word_postings: dict[str, dict[str, frozenset[tuple[int, int]]]]
    version: str = INDEX_VERSION

    @property
    def total_docs(self) -> int:
        return len(self.documents)

    @property
    def vocabulary_size(self) -> int:
        return len(self.word_postings)

    def doc_ids(self) -> list[str]:
        return sorted(self.documents)

    def postings(self, word: str) -> Iterator[tuple[str, int, int]]:
        """Yield (doc id, sentence index, token position) for a word, in sorted order."""
        for doc_id in sorted(self.word_postings.get(word, ())):
            for sent, pos in sorted(self.word_postings[word][doc_id]):
                yield doc_id, sent, pos

    def docs_with_word(self, word: str) -> frozenset[str]:
        return frozenset(self.word_postings.get(word, ()))


def build_index(documents: Iterable[Document]) -> CorpusIndex:
    """Build the index; output is independent of document iteration order."""
    by_id: dict[str, Document] = {}
    for doc in documents:
        if doc.id in by_id:
            raise CorpusFormatError(f"duplicate document id: {doc.id!r}")
        by_id[doc.id] = doc
    postings: dict[str, dict[str, set[tuple[int, int]]]] = {}
    for doc_id in sorted(by_id):
        for sentence in by_id[doc_id].sentences:
            for pos, word in enumerate(sentence.tokens):
                postings.setdefault(word, {}).setdefault(doc_id, set()).add(
                    (sentence.index, pos)
                )
    frozen = {
        word: {doc_id: frozenset(occ) for doc_id, occ in docs.items()}
        for word, docs in postings.items()
    }
    return CorpusIndex(documents=dict(sorted(by_id.items())), word_postings=frozen)


def ingest_corpus(source: IO[str] | IO[bytes], fmt: str = "jsonl") -> CorpusIndex:
    """Build an index from a JSONL stream of {"id": ..., "text": ...} objects."""
    if fmt != "jsonl":
        raise CorpusFormatError(f"unsupported corpus format: {fmt!r}")
    docs: list[Document] = []
    seen: set[str] = set()
    for lineno, line in enumerate(source, start=1):
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"malformed JSON on line {lineno}: {exc}") from exc
        if not isinstance(obj, dict) or not isinstance(obj.get("id"), str) \
                or not isinstance(obj.get("text"), str):
            raise CorpusFormatError(
                f'line {lineno}: expected object with string "id" and "text"'
            )
        if obj["id"] in seen:
            raise CorpusFormatError(f'line {lineno}: duplicate document id {obj["id"]!r}')
        seen.add(obj["id"])
        docs.append(make_document(obj["id"], obj["text"]))
    return build_index(docs)


def ingest_directory(path: str | Path) -> CorpusIndex:
    """Build an index from a directory of .txt files; document id = filename stem."""
    path = Path(path)
    if not path.is_dir():
        raise CorpusFormatError(f"corpus directory not found: {path}")
    docs = []
    for txt in sorted(path.glob("*.txt")):
        docs.append(make_document(txt.stem, txt.read_text(encoding="utf-8")))
    return build_index(docs)


def pattern_sentences(index: CorpusIndex, doc_id: str, term: Term) -> frozenset[int]:
    """Sentence indices of doc_id where term.words occur contiguously in order."""
    if doc_id not in index.documents:
        raise UnknownDocumentError(doc_id)
    per_word = []
    for word in term.words:
        occ = index.word_postings.get(word, {}).get(doc_id)
        if not occ:
            return frozenset()
        per_word.append(occ)
    hits = set()
    for sent, pos in per_word[0]:
        if all((sent, pos + i) in per_word[i] for i in range(1, len(per_word))):
            hits.add(sent)
    return frozenset(hits)


def match_term(index: CorpusIndex, doc_id: str, term: Term) -> MatchKind:
    """Classify how a term matches a document (pattern, bag of words, or not at all)."""
    if doc_id not in index.documents:
        raise UnknownDocumentError(doc_id)
    if pattern_sentences(index, doc_id, term):
        return MatchKind.SENTENCE_PATTERN
    if all(doc_id in index.word_postings.get(w, {}) for w in set(term.words)):
        return MatchKind.BAG_OF_WORDS
    return MatchKind.NONE


def save_index(index: CorpusIndex, sink: IO[bytes]) -> int:
    """Serialize the index (version tag + JSON document payload); returns bytes written."""
    payload = {
        "documents": [
            {"id": doc_id, "text": index.documents[doc_id].text}
            for doc_id in sorted(index.documents)
        ]
    }
    data = (
        index.version + "\n" + json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    ).encode("utf-8")
    sink.write(data)
    return len(data)


def load_index(source: IO[bytes]) -> CorpusIndex:
    """Rebuild an index from a stream produced by save_index."""
    raw = source.read()
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    if not raw.strip():
        raise IndexFormatError("empty or truncated index stream")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IndexFormatError(f"index stream is not valid UTF-8: {exc}") from exc
    tag, _, body = text.partition("\n")
    if tag.strip() != INDEX_VERSION:
        raise UnsupportedVersionError(f"unsupported index version tag: {tag.strip()!r}")
    try:
        payload = json.loads(body)
        entries = payload["documents"]
        docs = [make_document(e["id"], e["text"]) for e in entries]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise IndexFormatError(f"corrupt index payload: {exc}") from exc
    return build_index(docs)
