"""Command-line front end: index, network, query, eval."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .corpus import CorpusIndex, Term, ingest_corpus, ingest_directory, load_index, save_index
from .imaging import Query, RankedResult, expand_query, rank, relation_prior
from .network import Actor, SocialNetwork, export_network, extract_network


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _load_index_file(path: str) -> CorpusIndex:
    with open(path, "rb") as fh:
        return load_index(fh)


def _load_actors(path: str) -> list[Actor]:
    actors: list[Actor] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise corpus_mod.CorpusFormatError(
                    f"actors line {lineno}: malformed JSON: {exc}"
                ) from exc
            if not isinstance(obj.get("id"), str) or not isinstance(obj.get("name"), str):
                raise corpus_mod.CorpusFormatError(
                    f'actors line {lineno}: expected string "id" and "name"'
                )
            aliases = tuple(Term.parse(a) for a in obj.get("aliases", []))
            actors.append(Actor(id=obj["id"], term=Term.parse(obj["name"]), aliases=aliases))
    return actors


def cmd_index(args: argparse.Namespace) -> int:
    source = Path(args.corpus)
    if not source.exists():
        return _fail(f"corpus not found: {source}")
    try:
        if source.is_dir():
            index = ingest_directory(source)
        else:
            with open(source, encoding="utf-8") as fh:
                index = ingest_corpus(fh, "jsonl")
    except corpus_mod.CorpusFormatError as exc:
        return _fail(str(exc))
    with open(args.out, "wb") as fh:
        save_index(index, fh)
    print(f"{index.total_docs} docs, {index.vocabulary_size} words")
    return 0


def _build_network(args: argparse.Namespace, index: CorpusIndex) -> SocialNetwork:
    actors = _load_actors(args.actors)
    return extract_network(index, actors, threshold=args.threshold, window=args.window)


def cmd_network(args: argparse.Namespace) -> int:
    try:
        index = _load_index_file(args.index)
        net = _build_network(args, index)
    except (OSError, ValueError, KeyError) as exc:
        return _fail(str(exc))
    with open(args.out, "wb") as fh:
        export_network(net, fh, fmt=args.format)
    if args.plot:
        from .plotting import render_network

        render_network(net, args.plot)
    print(f"{len(net.nodes)} nodes, {len(net.edges)} edges")
    return 0


def _run_query(args: argparse.Namespace, index: CorpusIndex, net: SocialNetwork | None,
               terms: list[str]) -> RankedResult:
    query = Query.from_strings(terms)
    space = None
    if net is not None:
        if args.expand:
            query = expand_query(
                query, net, min_strength=args.min_strength, max_neighbors=args.max_neighbors
            )
        if net.edges:
            space = relation_prior(net)
    return rank(index, space, query, fallback=not args.no_fallback)


def _emit_result(result: RankedResult, fmt: str) -> None:
    for entry in result.entries:
        if fmt == "json":
            if entry.band == "relation":
                evidence = [list(pair) for pair in entry.evidence]
            else:
                evidence = list(entry.evidence)
            print(
                json.dumps(
                    {
                        "band": entry.band,
                        "doc": entry.doc_id,
                        "evidence": evidence,
                        "score": entry.score,
                    },
                    sort_keys=True,
                    separators=(",", ":"),
                )
            )
        else:
            if entry.band == "relation":
                evidence = ";".join("--".join(pair) for pair in entry.evidence)
            else:
                evidence = ";".join(entry.evidence)
            print(f"{entry.doc_id}\t{entry.score}\t{entry.band}\t{evidence}")


def cmd_query(args: argparse.Namespace) -> int:
    if not args.terms:
        return _fail("no query terms given")
    try:
        index = _load_index_file(args.index)
        net = _build_network(args, index) if args.actors else None
        result = _run_query(args, index, net, args.terms)
    except (OSError, ValueError, KeyError) as exc:
        return _fail(str(exc))
    _emit_result(result, args.format)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        index = _load_index_file(args.index)
        net = _build_network(args, index) if args.actors else None
    except (OSError, ValueError, KeyError) as exc:
        return _fail(str(exc))

    queries: dict[str, list[str]] = {}
    try:
        with open(args.queries, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                obj = json.loads(line)
                if not isinstance(obj.get("qid"), str) or not isinstance(obj.get("terms"), list):
                    return _fail(f'queries line {lineno}: expected "qid" and "terms"')
                queries[obj["qid"]] = [str(t) for t in obj["terms"]]
        qrels: dict[str, set[str]] = {}
        with open(args.qrels, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                parts = line.rstrip("\n").split("\t")
                if len(parts) != 2:
                    return _fail(f"qrels line {lineno}: expected qid<TAB>docid")
                qrels.setdefault(parts[0], set()).add(parts[1])
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))

    if set(queries) != set(qrels):
        return _fail("qid mismatch between queries and qrels files")
    if not queries:
        print("warning: no queries to evaluate", file=sys.stderr)
        print("mean\t0.0000\t0.0000")
        return 0

    k = args.k
    per_query: dict[str, tuple[float, float]] = {}
    for qid in sorted(queries):
        try:
            result = _run_query(args, index, net, queries[qid])
        except ValueError as exc:
            return _fail(f"query {qid}: {exc}")
        top = [entry.doc_id for entry in result.entries[:k]]
        relevant = qrels[qid]
        hits = len(set(top) & relevant)
        precision = hits / k
        recall = hits / len(relevant) if relevant else 0.0
        per_query[qid] = (precision, recall)
        print(f"{qid}\t{precision:.4f}\t{recall:.4f}")
    mean_p = sum(p for p, _ in per_query.values()) / len(per_query)
    mean_r = sum(r for _, r in per_query.values()) / len(per_query)
    print(f"mean\t{mean_p:.4f}\t{mean_r:.4f}")
    if args.plot:
        from .plotting import render_eval

        render_eval(per_query, k, args.plot)
    return 0


def _add_network_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--actors", help="actors JSONL file")
    parser.add_argument("--window", type=int, default=0, help="sentence window (default 0)")
    parser.add_argument("--threshold", type=float, default=0.0,
                        help="minimum edge strength (default 0.0)")


def _add_query_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--expand", action="store_true", help="enable query expansion")
    parser.add_argument("--min-strength", type=float, default=0.1)
    parser.add_argument("--max-neighbors", type=int, default=5)
    parser.add_argument("--no-fallback", action="store_true",
                        help="disable singleton-evidence fallback ranking")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relrank",
        description="Entity-network indexing and relation-based document ranking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build and persist a corpus index")
    p_index.add_argument("--corpus", required=True, help="JSONL corpus or .txt directory")
    p_index.add_argument("--out", required=True, help="index output path")
    p_index.set_defaults(func=cmd_index)

    p_net = sub.add_parser("network", help="extract and export the entity network")
    p_net.add_argument("--index", required=True)
    p_net.add_argument("--out", required=True)
    _add_network_flags(p_net)
    p_net.add_argument("--format", choices=["json", "tsv"], default="json")
    p_net.add_argument("--plot", help="also render the network figure to this path")
    p_net.set_defaults(func=cmd_network)

    p_query = sub.add_parser("query", help="rank documents for entity/relation terms")
    p_query.add_argument("terms", nargs="*", help="entity name patterns")
    p_query.add_argument("--index", required=True)
    _add_network_flags(p_query)
    _add_query_flags(p_query)
    p_query.add_argument("--format", choices=["json", "tsv"], default="json")
    p_query.set_defaults(func=cmd_query)

    p_eval = sub.add_parser("eval", help="precision/recall@k against a qrels file")
    p_eval.add_argument("--index", required=True)
    _add_network_flags(p_eval)
    _add_query_flags(p_eval)
    p_eval.add_argument("--queries", required=True, help='JSONL {"qid","terms":[...]}')
    p_eval.add_argument("--qrels", required=True, help="TSV qid<TAB>docid")
    p_eval.add_argument("--k", type=int, default=10)
    p_eval.add_argument("--plot", help="also render per-query metric bars to this path")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "network" and not args.actors:
        return _fail("--actors is required for the network command")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
