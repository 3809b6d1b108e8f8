"""Regenerate src/linkrank/data/paper_fixture.json.

Five sites have published in/out degrees and hit counts; the other five get
chosen degrees and hits. A loop-free simple digraph with exactly those
degree sequences is realized with networkx's directed Havel-Hakimi
construction, then every link gets a seeded positive visit counter.
Degrees are re-checked before writing.
"""

import json
import random
import sys
from pathlib import Path

import networkx as nx

# id, title, metadata, hits, in_degree, out_degree
SITES = [
    ("ChattingWeek", "Chatting Week",
     ["Chatting Week", "Chat24*7 Chat", "Private Chat", "Public Chat"], 1200, 2, 3),
    ("Socialize", "Socialize",
     ["Socialize", "Friends", "Strangers", "Blog", "Share"], 7500, 6, 3),
    ("FoodWorld", "Food World",
     ["Food World", "Pasta", "Pizza", "Burger", "Continental", "Food"], 6000, 4, 3),
    ("EatYourWay", "Eat Your Way",
     ["Eat Your Way", "Paratha", "Indian Food", "Dosa", "Parotta"], 1800, 2, 3),
    ("StudyJava", "Study Java",
     ["Study Java", "Java", "JVM", "Java Byte Code"], 3500, 3, 4),
    ("ConnectWithPHP", "Connect with PHP",
     ["Connect with PHP", "PHP", "Backend", "Cookies", "Session"], 900, 3, 3),
    ("Travelogue", "Travelogue",
     ["Travelogue", "Explore India", "Travel Bangalore", "Travel Hyderabad"], 2500, 4, 4),
    ("WelcomeToWorld", "Welcome to World",
     ["Welcome to World", "Explore World", "Travel Paris", "Travel Los Angeles"], 1100, 2, 3),
    ("CricketMania", "Cricket Mania",
     ["Cricket Mania", "IPL", "World Cup", "Cricket Live", "Cricket Score"], 4200, 2, 4),
    ("TennisPro", "Tennis Pro Group",
     ["Tennis Pro Group", "Grand Slam", "Tennis Open Live", "Tennis Score",
      "Tennis Wimbledon"], 2000, 5, 3),
]

SEED = 20160
OUT = Path(__file__).resolve().parents[1] / "src" / "linkrank" / "data" / "paper_fixture.json"


def main(out=OUT):
    ins = [s[4] for s in SITES]
    outs = [s[5] for s in SITES]
    g = nx.directed_havel_hakimi_graph(ins, outs)
    ids = [s[0] for s in SITES]
    edges = sorted((ids[a], ids[b]) for a, b in g.edges())
    assert all(a != b for a, b in edges)
    for i, site in enumerate(SITES):
        assert sum(1 for e in edges if e[1] == site[0]) == site[4], site[0]
        assert sum(1 for e in edges if e[0] == site[0]) == site[5], site[0]

    rng = random.Random(SEED)
    doc = {
        "pages": [
            {"id": i, "title": t, "metadata": m, "hits": h}
            for i, t, m, h, _, _ in sorted(SITES)
        ],
        "links": [
            {"source": a, "target": b, "visits": rng.randint(1, 40)} for a, b in edges
        ],
    }
    out.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {len(doc['pages'])} pages, {len(doc['links'])} links to {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else OUT)
