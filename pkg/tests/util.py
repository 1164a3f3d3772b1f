"""Shared helpers for the test suite: exhaustive small-graph enumeration,
a small-n isomorphism check, and an independent template-based oracle
for the four configurations."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from truemper.graph import Graph, bits, mask_of

PAIRS = {n: list(combinations(range(n), 2)) for n in range(0, 13)}


def graph_from_bits(n: int, code: int) -> Graph:
    rows = [0] * n
    for k, (u, v) in enumerate(PAIRS[n]):
        if code >> k & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows)


def all_graphs(n: int) -> Iterator[Graph]:
    total = 1 << (n * (n - 1) // 2)
    for code in range(total):
        yield graph_from_bits(n, code)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for u, v in PAIRS[n]:
        if rng.random() < p:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test for small graphs."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return False
    n = g1.n
    order = sorted(range(n), key=lambda v: (-g1.degree(v), v))
    image: list[Optional[int]] = [None] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for j in range(idx):
                u = order[j]
                if g1.has_edge(v, u) != g2.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                image[v] = None
        return False

    return extend(0)


# -- independent configuration oracle -----------------------------------------
# Builds every theta/prism/pyramid/wheel on at most max_n nodes directly from
# the definitions (path-length tuples; rim plus center attachments) and tests
# induced subgraphs against the templates by isomorphism.  Completely separate
# from the structural checks in truemper.oracle.


def _theta_template(lengths: Sequence[int]) -> Graph:
    a, b = 0, 1
    edges = []
    nxt = 2
    for length in lengths:
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return Graph.from_edge_list(nxt, sorted({(min(u, v), max(u, v)) for u, v in edges}))


def _prism_template(lengths: Sequence[int]) -> Graph:
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for a, b, length in ((0, 3, lengths[0]), (1, 4, lengths[1]), (2, 5, lengths[2])):
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((min(prev, b), max(prev, b)))
    return Graph.from_edge_list(nxt, sorted(set(edges)))


def _pyramid_template(lengths: Sequence[int]) -> Graph:
    edges = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for b, length in ((1, lengths[0]), (2, lengths[1]), (3, lengths[2])):
        prev = 0
        for _ in range(length - 1):
            edges.append((min(prev, nxt), max(prev, nxt)))
            prev = nxt
            nxt += 1
        edges.append((min(prev, b), max(prev, b)))
    return Graph.from_edge_list(nxt, sorted(set(edges)))


def _wheel_templates(max_n: int) -> list[Graph]:
    out = []
    for k in range(4, max_n):
        rim = [(i, (i + 1) % k) for i in range(k)]
        for size in range(3, k + 1):
            for chosen in combinations(range(k), size):
                edges = [(min(u, v), max(u, v)) for u, v in rim]
                edges += [(v, k) for v in chosen]
                out.append(Graph.from_edge_list(k + 1, edges))
    return out


def _length_tuples(three_min: Sequence[int], total_max: int) -> Iterator[tuple[int, ...]]:
    lo1, lo2, lo3 = three_min
    for l1 in range(lo1, total_max + 1):
        for l2 in range(max(l1, lo2), total_max + 1):
            for l3 in range(max(l2, lo3), total_max + 1):
                if l1 + l2 + l3 <= total_max:
                    yield l1, l2, l3


@lru_cache(maxsize=None)
def config_templates(max_n: int) -> dict[str, list[Graph]]:
    """All configurations on at most max_n nodes, deduplicated up to
    isomorphism."""
    raw: dict[str, list[Graph]] = {"theta": [], "wheel": [], "prism": [], "pyramid": []}
    for lengths in _length_tuples((2, 2, 2), max_n + 1):
        g = _theta_template(lengths)
        if g.n <= max_n:
            raw["theta"].append(g)
    for lengths in _length_tuples((1, 1, 1), max_n - 3):
        g = _prism_template(lengths)
        if g.n <= max_n:
            raw["prism"].append(g)
    for lengths in _length_tuples((1, 2, 2), max_n - 1):
        g = _pyramid_template(lengths)
        if g.n <= max_n:
            raw["pyramid"].append(g)
    raw["wheel"] = [g for g in _wheel_templates(max_n) if g.n <= max_n]
    out: dict[str, list[Graph]] = {}
    for kind, graphs in raw.items():
        kept: list[Graph] = []
        for g in graphs:
            if not any(is_isomorphic(g, h) for h in kept if h.n == g.n):
                kept.append(g)
        out[kind] = kept
    return out


def template_contains(g: Graph, kinds: Sequence[str], max_n: int = 8) -> dict[str, bool]:
    """Second oracle: does g contain each configuration kind as an
    induced subgraph, decided by isomorphism against the templates."""
    templates = config_templates(max_n)
    found = {k: False for k in kinds}
    if g.n > max_n:
        raise ValueError("template oracle capped")
    for size in range(5, g.n + 1):
        by_size = {k: [t for t in templates[k] if t.n == size] for k in kinds}
        if not any(by_size.values()):
            continue
        for combo in combinations(range(g.n), size):
            sel = mask_of(combo)
            rows = []
            pos = {v: i for i, v in enumerate(combo)}
            for v in combo:
                row = 0
                for w in bits(g.adj_mask(v) & sel):
                    row |= 1 << pos[w]
                rows.append(row)
            sub = Graph(size, rows)
            for kind in kinds:
                if found[kind]:
                    continue
                for tmpl in by_size[kind]:
                    if is_isomorphic(sub, tmpl):
                        found[kind] = True
                        break
        if all(found.values()):
            break
    return found


def perfect_elimination_chordal(rng: random.Random, n: int) -> Graph:
    """Random chordal graph: each new node attaches to a clique inside an
    existing closed neighborhood, so reverse insertion order is a perfect
    elimination ordering."""
    rows = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        pool = [u] + [w for w in range(v) if rows[u] >> w & 1]
        rng.shuffle(pool)
        base: list[int] = []
        for w in pool:
            if all(rows[w] >> b & 1 for b in base):
                base.append(w)
            if len(base) > 3:
                break
        keep = rng.randint(1, len(base))
        for w in base[:keep]:
            rows[v] |= 1 << w
            rows[w] |= 1 << v
    return Graph(n, rows)
