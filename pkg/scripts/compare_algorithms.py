"""Damping sweep: how the four damped PageRank variants order the bundled
corpus as d changes, plus how many sweeps each needed.

    python scripts/compare_algorithms.py --d 0.3 0.5 0.85
"""

import argparse

from linkrank import (
    DampingParams,
    damped_pagerank,
    paper_fixture,
    vol_pagerank,
    weighted_pagerank,
    wpr_vol,
)

VARIANTS = [("pagerank", damped_pagerank), ("wpr", weighted_pagerank),
            ("vol", vol_pagerank), ("wprvol", wpr_vol)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--d", type=float, nargs="+", default=[0.3, 0.5, 0.85])
    args = parser.parse_args()
    g = paper_fixture()
    for d in args.d:
        print(f"== d = {d}")
        for name, fn in VARIANTS:
            rv = fn(g, DampingParams(d))
            top = ", ".join(p for _, p, _ in rv.ranked()[:3])
            print(f"  {name:<8} iterations={rv.iterations_used:<4} top3: {top}")


if __name__ == "__main__":
    main()
