"""Corpus files (JSON pages + links), the bundled ten-site fixture, and rank
table serialization.

Corpus layout::

    {"pages": [{"id": ..., "title": ..., "metadata": [...], "hits": 0}, ...],
     "links": [{"source": ..., "target": ..., "visits": 0}, ...]}
"""

from __future__ import annotations

import io
import json
from decimal import ROUND_HALF_EVEN, Decimal
from functools import lru_cache
from importlib import resources
from typing import IO, Union

from .hybrid_query import QueryResult
from .link_rank import RankVector
from .webgraph import GraphError, LinkRecord, PageRecord, WebGraph, build_graph

PAGE_FIELDS = ("id", "title", "metadata", "hits")
LINK_FIELDS = ("source", "target", "visits")
FIXTURE_RESOURCE = "paper_fixture.json"
TABULAR_HEADER = "rank\tpage\tscore"

Source = Union[bytes, str, IO[bytes], IO[str]]


class CorpusError(Exception):
    pass


class ParseError(CorpusError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ValidationError(CorpusError):
    def __init__(self, message: str, record=None):
        self.record = record
        super().__init__(message if record is None else f"{message}: {json.dumps(record)}")


def _read(source: Source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"corpus is not valid UTF-8 (byte {exc.start})") from exc
    return source


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_fields(record, expected, kind):
    if not isinstance(record, dict):
        raise ValidationError(f"{kind} record must be an object", record)
    unknown = sorted(set(record) - set(expected))
    if unknown:
        raise ValidationError(f"{kind} record has unknown field(s) {unknown}", record)
    missing = [f for f in expected if f not in record]
    if missing:
        raise ValidationError(f"{kind} record is missing field(s) {missing}", record)


def _page(record) -> PageRecord:
    _check_fields(record, PAGE_FIELDS, "page")
    if not isinstance(record["title"], str):
        raise ValidationError("page title must be a string", record)
    meta = record["metadata"]
    if not isinstance(meta, list) or not all(isinstance(m, str) for m in meta):
        raise ValidationError("page metadata must be a list of strings", record)
    if not _is_int(record["hits"]):
        raise ValidationError("page hits must be an integer", record)
    try:
        return PageRecord(record["id"], record["title"], tuple(meta), record["hits"])
    except GraphError as exc:
        raise ValidationError(str(exc), record) from exc


def _link(record) -> LinkRecord:
    _check_fields(record, LINK_FIELDS, "link")
    if not _is_int(record["visits"]):
        raise ValidationError("link visits must be an integer", record)
    try:
        return LinkRecord(record["source"], record["target"], record["visits"])
    except GraphError as exc:
        raise ValidationError(str(exc), record) from exc


def parse_corpus(source: Source) -> dict:
    """Decode a corpus document without validating its records."""
    text = _read(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("corpus must be a JSON object with 'pages' and 'links'", 1, 1)
    return doc


def load_corpus(source: Source) -> WebGraph:
    doc = parse_corpus(source)
    unknown = sorted(set(doc) - {"pages", "links"})
    if unknown:
        raise ValidationError(f"unknown top-level key(s) {unknown}")
    for key in ("pages", "links"):
        if not isinstance(doc.get(key), list):
            raise ValidationError(f"top-level {key!r} must be a list")

    pages = [_page(r) for r in doc["pages"]]
    links = [_link(r) for r in doc["links"]]

    # build_graph reports the problem; _culprit finds the record behind it.
    try:
        return build_graph(pages, links)
    except GraphError as exc:
        raise ValidationError(str(exc), _culprit(doc)) from exc


def _culprit(doc: dict):
    seen_pages: set = set()
    for r in doc["pages"]:
        if r["id"] in seen_pages:
            return r
        seen_pages.add(r["id"])
    seen_links: set = set()
    for r in doc["links"]:
        pair = (r["source"], r["target"])
        if r["source"] not in seen_pages or r["target"] not in seen_pages or pair in seen_links:
            return r
        seen_links.add(pair)
    return None


def load_corpus_path(path) -> WebGraph:
    with open(path, "rb") as fh:
        return load_corpus(fh)


def corpus_document(g: WebGraph) -> dict:
    return {
        "pages": [
            {"id": p.id, "title": p.title, "metadata": list(p.metadata), "hits": p.hits}
            for p in g.pages.values()
        ],
        "links": [
            {"source": l.source, "target": l.target, "visits": l.visits}
            for l in g.links.values()
        ],
    }


def save_corpus(g: WebGraph) -> bytes:
    return (json.dumps(corpus_document(g), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def fixture_bytes() -> bytes:
    return resources.files("linkrank.data").joinpath(FIXTURE_RESOURCE).read_bytes()


@lru_cache(maxsize=None)
def paper_fixture() -> WebGraph:
    """The ten demo sites with their metadata, hit counts and link graph."""
    return load_corpus(fixture_bytes())


def format_score(score: float) -> str:
    return str(Decimal(repr(score)).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def export_ranks(result: RankVector | QueryResult, format: str = "tabular") -> bytes:
    rows = result.ranked()
    if format == "tabular":
        out = io.StringIO()
        out.write(TABULAR_HEADER + "\n")
        for rank, page, score in rows:
            out.write(f"{rank}\t{page}\t{format_score(score)}\n")
        return out.getvalue().encode("utf-8")
    if format == "structured":
        if isinstance(result, QueryResult):
            doc = {"query": result.query}
        else:
            doc = {
                "algorithm": result.algorithm,
                "converged": result.converged,
                "iterations_used": result.iterations_used,
            }
        doc["results"] = [{"rank": r, "page": p, "score": s} for r, p, s in rows]
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {format!r}")
