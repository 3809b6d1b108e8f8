"""PageRank variants and a hybrid metadata/degree/analytics query ranker."""

from .corpus_io import (
    ParseError,
    ValidationError,
    export_ranks,
    load_corpus,
    load_corpus_path,
    paper_fixture,
    save_corpus,
)
from .hybrid_query import (
    HybridWeights,
    QueryResult,
    binary_search,
    hybrid_score,
    match_counter,
    normalize_phrase,
    rank_query,
    sorted_metadata,
)
from .link_rank import (
    DampingParams,
    IterationParams,
    RankVector,
    damped_pagerank,
    simplified_pagerank,
)
from .webgraph import LinkRecord, PageRecord, WebGraph, build_graph
from .weighted_rank import (
    inlink_weight,
    outlink_weight,
    vol_pagerank,
    weighted_pagerank,
    wpr_vol,
)

__version__ = "0.1.0"
