"""Immutable directed web graph: pages, links, and the degree/visit indices
the rank algorithms read from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Base class for graph construction and lookup failures."""


class InvalidRecord(GraphError):
    pass


class DuplicatePageId(GraphError):
    pass


class UnknownLinkEndpoint(GraphError):
    pass


class DuplicateLink(GraphError):
    pass


class NegativeVisits(GraphError):
    pass


class UnknownPage(GraphError, KeyError):
    # KeyError.__str__ would repr() the message
    __str__ = GraphError.__str__


class NoSuchLink(GraphError, KeyError):
    __str__ = GraphError.__str__


class EmptyGraph(GraphError):
    pass


def _check_page_id(value: str) -> None:
    if not isinstance(value, str) or not value:
        raise InvalidRecord(f"page id must be a non-empty string, got {value!r}")
    if value != value.strip():
        raise InvalidRecord(f"page id has surrounding whitespace: {value!r}")


@dataclass(frozen=True)
class PageRecord:
    id: str
    title: str = ""
    metadata: tuple[str, ...] = ()
    hits: int = 0

    def __post_init__(self):
        _check_page_id(self.id)
        object.__setattr__(self, "metadata", tuple(self.metadata))
        for phrase in self.metadata:
            if not isinstance(phrase, str) or not phrase.strip():
                raise InvalidRecord(f"page {self.id!r}: empty metadata phrase")
        if isinstance(self.hits, bool) or not isinstance(self.hits, int) or self.hits < 0:
            raise InvalidRecord(f"page {self.id!r}: hits must be an integer >= 0, got {self.hits!r}")


@dataclass(frozen=True)
class LinkRecord:
    source: str
    target: str
    visits: int = 0

    def __post_init__(self):
        _check_page_id(self.source)
        _check_page_id(self.target)
        if isinstance(self.visits, bool) or not isinstance(self.visits, int):
            raise InvalidRecord(f"link {self.source!r}->{self.target!r}: visits must be an integer")
        if self.visits < 0:
            raise NegativeVisits(
                f"link {self.source!r}->{self.target!r} has negative visits ({self.visits})"
            )


@dataclass(frozen=True, eq=False)
class WebGraph:
    """Read-only page/link store.

    Pages iterate in sorted id order. Neighbor lists are sorted too, so any
    sum over them is evaluated in a fixed order.
    """

    pages: Mapping[str, PageRecord]
    links: Mapping[tuple[str, str], LinkRecord]
    _in: Mapping[str, tuple[str, ...]] = field(repr=False)
    _out: Mapping[str, tuple[str, ...]] = field(repr=False)
    _visit_totals: Mapping[str, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.pages)

    def __contains__(self, page_id: object) -> bool:
        return page_id in self.pages

    @property
    def page_ids(self) -> tuple[str, ...]:
        return tuple(self.pages)

    def page(self, page_id: str) -> PageRecord:
        try:
            return self.pages[page_id]
        except KeyError:
            raise UnknownPage(f"unknown page {page_id!r}") from None

    def _require(self, page_id: str) -> None:
        if page_id not in self.pages:
            raise UnknownPage(f"unknown page {page_id!r}")

    def in_neighbors(self, u: str) -> list[str]:
        """Pages linking to ``u`` (the backlink set), sorted."""
        self._require(u)
        return list(self._in[u])

    def out_neighbors(self, v: str) -> list[str]:
        """Pages ``v`` links to (its reference list), sorted."""
        self._require(v)
        return list(self._out[v])

    def in_degree(self, u: str) -> int:
        self._require(u)
        return len(self._in[u])

    def out_degree(self, v: str) -> int:
        self._require(v)
        return len(self._out[v])

    def visits(self, v: str, u: str) -> int:
        try:
            return self.links[(v, u)].visits
        except KeyError:
            raise NoSuchLink(f"no link {v!r}->{u!r}") from None

    def total_link_visits(self, v: str) -> int:
        self._require(v)
        return self._visit_totals[v]

    def has_link(self, v: str, u: str) -> bool:
        return (v, u) in self.links


def build_graph(pages: Iterable[PageRecord], links: Iterable[LinkRecord]) -> WebGraph:
    by_id: dict[str, PageRecord] = {}
    for page in pages:
        if page.id in by_id:
            raise DuplicatePageId(f"duplicate page id {page.id!r}")
        by_id[page.id] = page

    by_pair: dict[tuple[str, str], LinkRecord] = {}
    for link in links:
        for end in (link.source, link.target):
            if end not in by_id:
                raise UnknownLinkEndpoint(
                    f"link {link.source!r}->{link.target!r}: unknown endpoint {end!r}"
                )
        if link.visits < 0:
            raise NegativeVisits(f"link {link.source!r}->{link.target!r} has negative visits")
        key = (link.source, link.target)
        if key in by_pair:
            raise DuplicateLink(f"duplicate link {link.source!r}->{link.target!r}")
        by_pair[key] = link

    order = sorted(by_id)
    ins: dict[str, list[str]] = {p: [] for p in order}
    outs: dict[str, list[str]] = {p: [] for p in order}
    totals = dict.fromkeys(order, 0)
    for (v, u) in sorted(by_pair):
        outs[v].append(u)
        ins[u].append(v)
        totals[v] += by_pair[(v, u)].visits

    return WebGraph(
        pages=MappingProxyType({p: by_id[p] for p in order}),
        links=MappingProxyType({k: by_pair[k] for k in sorted(by_pair)}),
        _in=MappingProxyType({p: tuple(ins[p]) for p in order}),
        _out=MappingProxyType({p: tuple(outs[p]) for p in order}),
        _visit_totals=MappingProxyType(totals),
    )


def in_neighbors(g: WebGraph, u: str) -> list[str]:
    return g.in_neighbors(u)


def out_neighbors(g: WebGraph, v: str) -> list[str]:
    return g.out_neighbors(v)


def in_degree(g: WebGraph, u: str) -> int:
    return g.in_degree(u)


def out_degree(g: WebGraph, v: str) -> int:
    return g.out_degree(v)


def total_link_visits(g: WebGraph, v: str) -> int:
    return g.total_link_visits(v)
