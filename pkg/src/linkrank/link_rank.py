"""Classic PageRank (simplified and damped) on top of a small fixed-point
iteration engine that the weighted variants reuse.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .webgraph import EmptyGraph, WebGraph

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERATIONS = 1000


class NonFiniteRank(ArithmeticError):
    """Iteration produced an infinite or NaN score."""


@dataclass(frozen=True)
class IterationParams:
    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    initial_value: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not math.isfinite(self.initial_value):
            raise ValueError("initial_value must be finite")


@dataclass(frozen=True)
class DampingParams:
    d: float = 0.85
    c_norm: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"damping factor must lie in [0, 1], got {self.d}")
        if not self.c_norm > 0:
            raise ValueError(f"normalization factor must be > 0, got {self.c_norm}")


@dataclass(frozen=True)
class RankVector:
    scores: Mapping[str, float]
    iterations_used: int = 0
    converged: bool = True
    algorithm: str = field(default="", compare=False)

    def __getitem__(self, page_id: str) -> float:
        return self.scores[page_id]

    def __len__(self) -> int:
        return len(self.scores)

    def ranked(self) -> list[tuple[int, str, float]]:
        """(rank, page, score) rows, highest score first, ties by page id."""
        order = sorted(self.scores.items(), key=lambda kv: (-kv[1], kv[0]))
        return [(i, page, score) for i, (page, score) in enumerate(order, start=1)]


# weight(v, u) for every link v -> u; None drops the term from the sum
LinkWeightFn = Callable[[str, str], "float | None"]


def iterate_fixed_point(
    g: WebGraph,
    base: float,
    scale: float,
    weight: LinkWeightFn,
    params: IterationParams,
    algorithm: str = "",
) -> RankVector:
    """Iterate ``x[u] <- base + scale * sum_{v in B(u)} weight(v, u) * x[v]``.

    Stops once the max-norm change between successive iterates drops below
    ``params.tolerance`` or after ``params.max_iterations`` sweeps (Jacobi
    style: every update reads the previous iterate only).
    """
    if len(g) == 0:
        raise EmptyGraph("cannot rank an empty graph")

    pages = g.page_ids
    # Precompute per-target (source, weight) lists once per run.
    incoming: list[list[tuple[int, float]]] = []
    index = {p: i for i, p in enumerate(pages)}
    for u in pages:
        terms = []
        for v in g.in_neighbors(u):
            w = weight(v, u)
            if w is not None:
                terms.append((index[v], w))
        incoming.append(terms)

    x = [float(params.initial_value)] * len(pages)
    converged = False
    it = 0
    while it < params.max_iterations:
        it += 1
        new = []
        for terms in incoming:
            acc = 0.0
            for j, w in terms:
                acc += w * x[j]
            new.append(base + scale * acc)
        delta = max(abs(a - b) for a, b in zip(new, x))
        x = new
        if not math.isfinite(delta):
            raise NonFiniteRank(f"{algorithm or 'rank'} diverged after {it} iterations")
        if delta < params.tolerance:
            converged = True
            break

    if not converged:
        logger.warning("%s did not converge in %d iterations", algorithm or "rank", it)
    return RankVector(dict(zip(pages, x)), iterations_used=it, converged=converged,
                      algorithm=algorithm)


def simplified_pagerank(
    g: WebGraph, c_norm: float = 1.0, params: IterationParams | None = None
) -> RankVector:
    """PR(u) = c * sum over backlinks v of PR(v) / N_v, with no damping."""
    DampingParams(d=0.0, c_norm=c_norm)  # validates c_norm
    params = params or IterationParams()
    return iterate_fixed_point(
        g, 0.0, c_norm, lambda v, u: 1.0 / g.out_degree(v), params, "simplified"
    )


def damped_pagerank(
    g: WebGraph, damping: DampingParams | None = None, params: IterationParams | None = None
) -> RankVector:
    """PR(u) = (1 - d) + d * sum over backlinks v of PR(v) / N_v.

    Dangling pages pass on nothing, so the scores only sum to the page count
    when every page has at least one outlink.
    """
    damping = damping or DampingParams()
    params = params or IterationParams()
    d = damping.d
    return iterate_fixed_point(
        g, 1.0 - d, d, lambda v, u: 1.0 / g.out_degree(v), params, "pagerank"
    )
