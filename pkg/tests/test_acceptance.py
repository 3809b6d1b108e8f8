"""Exit criteria. Each test carries a ``criterion`` marker; the summary at the
end of the pytest run prints one PASS/FAIL line per criterion.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from linkrank import (
    DampingParams,
    binary_search,
    IterationParams,
    damped_pagerank,
    hybrid_score,
    inlink_weight,
    outlink_weight,
    paper_fixture,
    rank_query,
    vol_pagerank,
    weighted_pagerank,
    wpr_vol,
)
from oracles import (
    binary_search_cases,
    dangling_free_edges,
    linear_scan,
    linear_solution,
    make_graph,
    random_edges,
    seeded,
)

TOL = 1e-10
PAPER_SCORES = {
    "FoodWorld": 1.775,
    "Socialize": 1.425,
    "StudyJava": 0.875,
    "Travelogue": 0.85,
    "TennisPro": 0.8,
}
PAPER_ORDER = ["FoodWorld", "Socialize", "StudyJava", "Travelogue", "TennisPro"]
VARIANTS = {
    "pagerank": damped_pagerank,
    "wpr": weighted_pagerank,
    "vol": vol_pagerank,
    "wprvol": wpr_vol,
}


@pytest.mark.criterion("1. worked hybrid scores reproduced within 1e-9, < 1 s")
def test_paper_scores():
    start = time.perf_counter()
    g = paper_fixture()
    got = {p: hybrid_score(g, p, "Pasta") for p in PAPER_SCORES}
    elapsed = time.perf_counter() - start
    for p, expected in PAPER_SCORES.items():
        assert abs(got[p] - expected) <= 1e-9, (p, got[p])
    assert elapsed < 1.0


@pytest.mark.criterion("2. published rank order FoodWorld > Socialize > StudyJava > Travelogue > TennisPro, < 1 s")
def test_paper_ranking():
    start = time.perf_counter()
    result = rank_query(paper_fixture(), "Pasta")
    elapsed = time.perf_counter() - start
    assert [p for p in result.order() if p in PAPER_SCORES] == PAPER_ORDER
    assert elapsed < 1.0


@pytest.mark.criterion("3. four damped variants match dense linear solve within 1e-8 on 120 graphs, < 30 s")
def test_oracle_equivalence():
    rng = seeded(3)
    start = time.perf_counter()
    checked = 0
    for trial in range(120):
        n = rng.randint(1, 10)
        edges = random_edges(rng, n, p=rng.uniform(0.05, 0.7), self_loops=trial % 3 == 0)
        g = make_graph(n, edges)
        d = (0.3, 0.5, 0.85)[trial % 3]
        for kind, fn in VARIANTS.items():
            rv = fn(g, DampingParams(d), IterationParams(tolerance=TOL))
            assert rv.converged
            got = np.array([rv[p] for p in g.page_ids])
            err = np.max(np.abs(got - linear_solution(n, edges, kind, d)))
            assert err < 1e-8, (trial, kind, err)
        checked += 1
    assert checked >= 100
    assert time.perf_counter() - start < 30


@pytest.mark.criterion("4. conservation |sum PR - N| < 10*tol*N on 60 dangling-free graphs, < 30 s")
def test_conservation():
    rng = seeded(4)
    start = time.perf_counter()
    for _ in range(60):
        n = rng.randint(1, 50)
        g = make_graph(n, dangling_free_edges(rng, n, p=rng.uniform(0.02, 0.3)))
        assert all(g.out_degree(p) > 0 for p in g.page_ids)
        rv = damped_pagerank(g, DampingParams(0.85), IterationParams(tolerance=TOL))
        assert rv.converged
        assert abs(sum(rv.scores.values()) - n) < 10 * TOL * n
    assert time.perf_counter() - start < 30


@pytest.mark.criterion("5. inlink weight rows sum to 1; outlink rows sum to 1 or are all zero, 120 graphs")
def test_weight_normalization():
    rng = seeded(5)
    for _ in range(120):
        n = rng.randint(1, 12)
        g = make_graph(n, random_edges(rng, n, p=rng.uniform(0.05, 0.6), self_loops=True))
        for v in g.page_ids:
            refs = g.out_neighbors(v)
            if not refs:
                continue
            assert abs(sum(inlink_weight(g, v, u) for u in refs) - 1.0) < 1e-12
            w_out = [outlink_weight(g, v, u) for u in refs]
            if sum(g.out_degree(u) for u in refs) == 0:
                assert w_out == [0.0] * len(refs)
            else:
                assert abs(sum(w_out) - 1.0) < 1e-12


@pytest.mark.criterion("6. visit-weighted rank equals damped rank within 10*tol under uniform visits, 60 graphs")
def test_vol_reduction():
    rng = seeded(6)
    for trial in range(60):
        n = rng.randint(1, 15)
        g = make_graph(n, random_edges(rng, n, p=rng.uniform(0.05, 0.6), uniform_visits=True))
        params = IterationParams(tolerance=TOL)
        d = DampingParams((0.3, 0.5, 0.85)[trial % 3])
        a, b = vol_pagerank(g, d, params), damped_pagerank(g, d, params)
        assert max(abs(a[p] - b[p]) for p in g.page_ids) < 10 * TOL


@pytest.mark.criterion("7. binary search agrees with linear scan on 1500 randomized cases")
def test_search_equivalence():
    cases = binary_search_cases(seeded(7), 1500)
    assert sum(1 for items, _ in cases if not items) > 0
    assert sum(1 for items, key in cases if key not in items) > 0
    for items, key in cases:
        assert binary_search(items, key) == linear_scan(items, key)


@pytest.mark.criterion("8. query CLI output is byte-identical across two runs")
def test_cli_determinism():
    cmd = [sys.executable, "-m", "linkrank", "query", "--corpus", "paper-fixture",
           "--text", "Pasta"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.splitlines()[1] == b"1\tFoodWorld\t1.775000"
