"""Popularity- and visit-weighted PageRank variants.

* ``weighted_pagerank``: rank flows along v -> u in proportion to the
  inlink weight times the outlink weight of u among v's references.
* ``vol_pagerank``: rank flows in proportion to the link's visit count
  over all visits recorded on v's links.
* ``wpr_vol``: visit share times the inlink weight (outlink weight is
  intentionally left out).
"""

from __future__ import annotations

from .link_rank import DampingParams, IterationParams, RankVector, iterate_fixed_point
from .webgraph import NoSuchLink, WebGraph


def _require_link(g: WebGraph, v: str, u: str) -> None:
    if not g.has_link(v, u):
        raise NoSuchLink(f"no link {v!r}->{u!r}")


def _inlink_denominator(g: WebGraph, v: str) -> int:
    return sum(g.in_degree(p) for p in g.out_neighbors(v))


def _outlink_denominator(g: WebGraph, v: str) -> int:
    return sum(g.out_degree(p) for p in g.out_neighbors(v))


def inlink_weight(g: WebGraph, v: str, u: str) -> float:
    """I_u divided by the summed in-degree of every page ``v`` links to.

    The denominator is never zero: each reference page has at least the
    inlink from ``v`` itself.
    """
    _require_link(g, v, u)
    return g.in_degree(u) / _inlink_denominator(g, v)


def outlink_weight(g: WebGraph, v: str, u: str) -> float:
    """O_u divided by the summed out-degree of ``v``'s reference pages.

    Returns 0.0 when all of them are dangling.
    """
    _require_link(g, v, u)
    denom = _outlink_denominator(g, v)
    if denom == 0:
        return 0.0
    return g.out_degree(u) / denom


def _cached(fn):
    cache: dict[str, int] = {}

    def get(g, v):
        if v not in cache:
            cache[v] = fn(g, v)
        return cache[v]

    return get


def weighted_pagerank(
    g: WebGraph, damping: DampingParams | None = None, params: IterationParams | None = None
) -> RankVector:
    damping = damping or DampingParams()
    params = params or IterationParams()
    in_denom = _cached(_inlink_denominator)
    out_denom = _cached(_outlink_denominator)

    def weight(v, u):
        w_in = g.in_degree(u) / in_denom(g, v)
        od = out_denom(g, v)
        w_out = g.out_degree(u) / od if od else 0.0
        return w_in * w_out

    return iterate_fixed_point(g, 1.0 - damping.d, damping.d, weight, params, "wpr")


def vol_pagerank(
    g: WebGraph, damping: DampingParams | None = None, params: IterationParams | None = None
) -> RankVector:
    damping = damping or DampingParams()
    params = params or IterationParams()

    def weight(v, u):
        total = g.total_link_visits(v)
        if total == 0:
            return None
        return g.visits(v, u) / total

    return iterate_fixed_point(g, 1.0 - damping.d, damping.d, weight, params, "vol")


def wpr_vol(
    g: WebGraph, damping: DampingParams | None = None, params: IterationParams | None = None
) -> RankVector:
    damping = damping or DampingParams()
    params = params or IterationParams()
    in_denom = _cached(_inlink_denominator)

    def weight(v, u):
        total = g.total_link_visits(v)
        if total == 0:
            return None
        return g.visits(v, u) * (g.in_degree(u) / in_denom(g, v)) / total

    return iterate_fixed_point(g, 1.0 - damping.d, damping.d, weight, params, "wprvol")
