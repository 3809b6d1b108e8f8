"""Independent reference computations for the rank tests.

Everything here works from a raw edge list, never from WebGraph accessors,
so a bug in the graph indices cannot hide behind a matching oracle.
"""

import random

import numpy as np

from linkrank import LinkRecord, PageRecord, build_graph


def page_names(n):
    return [f"p{i:02d}" for i in range(n)]


def make_graph(n, edges):
    """edges: iterable of (source, target, visits) over page_names(n)."""
    names = page_names(n)
    return build_graph(
        [PageRecord(p) for p in names],
        [LinkRecord(names[a], names[b], vis) for a, b, vis in edges],
    )


def random_edges(rng, n, p=0.35, self_loops=False, max_visits=20, uniform_visits=False):
    edges = []
    per_source = {a: rng.randint(1, max_visits) for a in range(n)}
    for a in range(n):
        for b in range(n):
            if a == b and not self_loops:
                continue
            if rng.random() < p:
                vis = per_source[a] if uniform_visits else rng.randint(0, max_visits)
                edges.append((a, b, vis))
    return edges


def dangling_free_edges(rng, n, p=0.1):
    edges = {(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p}
    for a in range(n):
        if not any(e[0] == a for e in edges):
            edges.add((a, (a + 1) % n if n > 1 else a))
    return [(a, b, 1) for a, b in sorted(edges)]


def transfer_matrix(n, edges, kind):
    """Column v, row u holds the weight of v's rank that flows to u."""
    indeg = np.zeros(n)
    outdeg = np.zeros(n)
    visit_total = np.zeros(n)
    refs = [[] for _ in range(n)]
    for a, b, vis in edges:
        outdeg[a] += 1
        indeg[b] += 1
        visit_total[a] += vis
        refs[a].append(b)
    M = np.zeros((n, n))
    for a, b, vis in edges:
        in_den = sum(indeg[r] for r in refs[a])
        out_den = sum(outdeg[r] for r in refs[a])
        w_in = indeg[b] / in_den
        w_out = outdeg[b] / out_den if out_den else 0.0
        share = vis / visit_total[a] if visit_total[a] else 0.0
        M[b, a] = {
            "pagerank": 1.0 / outdeg[a],
            "wpr": w_in * w_out,
            "vol": share,
            "wprvol": share * w_in,
        }[kind]
    return M


def linear_solution(n, edges, kind, d):
    """Exact fixed point of x = (1 - d) + d * M x by dense solve."""
    M = transfer_matrix(n, edges, kind)
    return np.linalg.solve(np.eye(n) - d * M, np.full(n, 1.0 - d))


def linear_scan(items, key):
    for i, x in enumerate(items):
        if x == key:
            return i
    return None


def seeded(seed):
    return random.Random(seed)


def binary_search_cases(rng, count):
    """(sorted unique list, key) pairs; roughly half the keys are absent."""
    alphabet = "abcdefgh "
    cases = []
    for i in range(count):
        size = 0 if i % 25 == 0 else rng.randint(1, 40)
        words = {"".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
                 for _ in range(size)}
        items = sorted(words)
        if items and rng.random() < 0.5:
            key = rng.choice(items)
        else:
            key = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 4)))
        cases.append((items, key))
    return cases
