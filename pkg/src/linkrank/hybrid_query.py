"""Query-time hybrid ranking.

A page's score adds three parts: a fixed bonus when the query equals one of
its metadata phrases, a damped share of its total degree, and a scaled
share of its analytics hit count::

    score = c*s + d*vl*(in_degree + out_degree) + ga*hits / hits_divisor

where ``c`` is 1 on a metadata match and 0 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .webgraph import EmptyGraph, PageRecord, WebGraph


@dataclass(frozen=True)
class HybridWeights:
    s: float = 0.65
    vl: float = 0.25
    ga: float = 0.1
    d: float = 0.3
    hits_divisor: float = 1000.0

    def __post_init__(self):
        for name in ("s", "vl", "ga"):
            if getattr(self, name) < 0:
                raise ValueError(f"weight {name} must be >= 0, got {getattr(self, name)}")
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"d must lie in [0, 1], got {self.d}")
        if not self.hits_divisor > 0:
            raise ValueError(f"hits_divisor must be > 0, got {self.hits_divisor}")


class RankedPage(NamedTuple):
    rank: int
    page: str
    score: float


@dataclass(frozen=True)
class QueryResult:
    query: str
    rows: tuple[RankedPage, ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def ranked(self) -> list[tuple[int, str, float]]:
        return [tuple(r) for r in self.rows]

    def order(self) -> list[str]:
        return [r.page for r in self.rows]


def normalize_phrase(raw: str) -> str:
    return " ".join(raw.split()).casefold()


def sorted_metadata(page: PageRecord) -> list[str]:
    return sorted({p for p in map(normalize_phrase, page.metadata) if p})


def binary_search(sorted_phrases: Sequence[str], key: str) -> int | None:
    """Index of ``key`` in an ascending, duplicate-free sequence, else None."""
    lo, hi = 0, len(sorted_phrases) - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        element = sorted_phrases[mid]
        if element < key:
            lo = mid + 1
        elif element > key:
            hi = mid - 1
        else:
            return mid
    return None


def match_counter(page: PageRecord, query: str) -> int:
    key = normalize_phrase(query)
    if not key:
        return 0
    return 0 if binary_search(sorted_metadata(page), key) is None else 1


def hybrid_score(
    g: WebGraph, page_id: str, query: str, w: HybridWeights | None = None
) -> float:
    w = w or HybridWeights()
    page = g.page(page_id)
    c = match_counter(page, query)
    degree = g.in_degree(page_id) + g.out_degree(page_id)
    return c * w.s + w.d * (w.vl * degree) + (w.ga * page.hits) / w.hits_divisor


def rank_query(g: WebGraph, query: str, w: HybridWeights | None = None) -> QueryResult:
    if len(g) == 0:
        raise EmptyGraph("cannot rank an empty graph")
    w = w or HybridWeights()
    scored = [(hybrid_score(g, p, query, w), p) for p in g.page_ids]
    scored.sort(key=lambda sp: (-sp[0], sp[1]))
    rows = tuple(RankedPage(i, p, s) for i, (s, p) in enumerate(scored, start=1))
    return QueryResult(query, rows)
