"""Recognizers and constructors for the basic graph classes.

The basic classes are cliques, holes, long pyramids, pyramid-basic
graphs, and line graphs of triangle-free chordless graphs.  Root graphs
are recovered through a Krausz clique partition (each edge covered by
exactly one clique, each node in at most two), which is simple and exact
at this scale; triangle components of the root are canonicalized to
claws since both have the same line graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import (Graph, bits, find_claw, find_diamond, induced_subgraph,
                    is_clique_graph, is_connected, is_hole_graph,
                    is_triangle_free, hole_order, mask_of)
from .graph import biconnected_blocks
from .oracle import ConfigWitness, is_pyramid

Edge = tuple[int, int]


# -- line graphs and roots ----------------------------------------------------

def line_graph(r: Graph) -> Graph:
    """The line graph of r; node i of the result is edge i of r (lex order)."""
    edges = r.edges()
    k = len(edges)
    rows = [0] * k
    for i, (u, v) in enumerate(edges):
        for j in range(i + 1, k):
            a, b = edges[j]
            if a in (u, v) or b in (u, v):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(k, rows)


def _krausz_partition(g: Graph) -> Optional[list[frozenset[int]]]:
    """Partition of the edges of g into cliques with every node in at
    most two of them, or None if impossible (g is not a line graph)."""
    if find_claw(g) is not None:
        return None  # line graphs are claw-free; prunes hopeless searches
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    uncovered = set(range(len(edges)))
    clique_count = [0] * g.n
    chosen: list[frozenset[int]] = []

    def clique_edges(nodes: tuple[int, ...]) -> list[int]:
        out = []
        for a, b in combinations(nodes, 2):
            out.append(edge_index[(a, b) if a < b else (b, a)])
        return out

    def candidates(u: int, v: int) -> list[tuple[int, ...]]:
        common = mask_of(w for w in bits(g.adj_mask(u) & g.adj_mask(v))
                         if clique_count[w] < 2)
        extras: list[tuple[int, ...]] = []

        def grow(clique: tuple[int, ...], cand: int) -> None:
            extras.append(clique)
            for w in bits(cand):
                grow(clique + (w,), cand & g.adj_mask(w) & ~((1 << (w + 1)) - 1))

        grow((), common)
        options: list[tuple[int, ...]] = []
        for extra in sorted(extras, key=lambda t: (-len(t), t)):
            nodes = tuple(sorted((u, v) + extra))
            es = clique_edges(nodes)
            if any(e not in uncovered for e in es):
                continue
            options.append(nodes)
        return options

    def solve() -> bool:
        if not uncovered:
            return True
        i = min(uncovered)
        u, v = edges[i]
        if clique_count[u] >= 2 or clique_count[v] >= 2:
            return False
        for nodes in candidates(u, v):
            es = clique_edges(nodes)
            for e in es:
                uncovered.discard(e)
            for w in nodes:
                clique_count[w] += 1
            chosen.append(frozenset(nodes))
            if solve():
                return True
            chosen.pop()
            for w in nodes:
                clique_count[w] -= 1
            uncovered.update(es)
        return False

    if not solve():
        return None
    return chosen


def _root_with_edge_map(g: Graph) -> Optional[tuple[Graph, list[Edge]]]:
    """Root graph plus the map g-node -> root edge, or None."""
    part = _krausz_partition(g)
    if part is None:
        return None
    clique_of: list[list[int]] = [[] for _ in range(g.n)]
    for ci, clique in enumerate(part):
        for v in clique:
            clique_of[v].append(ci)
    next_id = len(part)
    root_edges: list[Edge] = []
    edge_of: list[Edge] = []
    for v in range(g.n):
        cs = clique_of[v]
        if len(cs) == 2:
            e = (min(cs), max(cs))
        elif len(cs) == 1:
            e = (cs[0], next_id)
            next_id += 1
        else:  # isolated node of g: a lone edge in the root
            e = (next_id, next_id + 1)
            next_id += 2
        root_edges.append(e)
        edge_of.append(e)
    root = Graph.from_edge_list(next_id, root_edges)
    root, edge_of = _canonicalize_triangles(root, edge_of)
    return root, edge_of


def _canonicalize_triangles(root: Graph, edge_of: list[Edge]) -> tuple[Graph, list[Edge]]:
    """Replace every triangle component of the root by a claw."""
    from .graph import components_masks, mask_of

    tri_comps = []
    for comp in components_masks(root):
        vs = bits(comp)
        if len(vs) == 3 and all(root.has_edge(a, b) for a, b in combinations(vs, 2)):
            tri_comps.append(vs)
    if not tri_comps:
        return root, edge_of
    edges = {tuple(sorted(e)) for e in root.edges()}
    n = root.n
    remap: dict[Edge, Edge] = {}
    for vs in tri_comps:
        center = n
        n += 1
        for a, b in combinations(vs, 2):
            edges.discard((a, b))
        for v in vs:
            edges.add((v, center))
        pairs = [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
        # triangle edge ab maps to the claw edge at the third vertex
        remap[pairs[0]] = (vs[2], center)
        remap[pairs[1]] = (vs[1], center)
        remap[pairs[2]] = (vs[0], center)
    new_root = Graph.from_edge_list(n, sorted(edges))
    new_map = [remap.get(tuple(sorted(e)), e) for e in edge_of]
    new_map = [tuple(sorted(e)) for e in new_map]
    return new_root, new_map


def root_graph(g: Graph) -> Optional[Graph]:
    """Some graph R with L(R) isomorphic to g, or None if g is not a
    line graph.  Triangle components of R are canonicalized to claws."""
    res = _root_with_edge_map(g)
    return None if res is None else res[0]


def is_chordless_graph(r: Graph) -> bool:
    """True iff every cycle of r is chordless.

    An edge uv is a chord of some cycle exactly when u and v still share
    a 2-connected block after the edge itself is removed.
    """
    for u, v in r.edges():
        rows = list(r._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        stripped = Graph(r.n, rows)
        for block in biconnected_blocks(stripped):
            nodes = set()
            for a, b in block:
                nodes.add(a)
                nodes.add(b)
            if u in nodes and v in nodes:
                return False
    return True


def is_lg_tf_chordless(g: Graph) -> Optional[Graph]:
    """Root certificate iff g is the line graph of a triangle-free
    chordless graph."""
    # line graphs of triangle-free graphs are exactly the (claw, diamond)-
    # free line graphs, so an induced claw or diamond settles it early
    if find_claw(g) is not None or find_diamond(g) is not None:
        return None
    root = root_graph(g)
    if root is None:
        return None
    if not is_triangle_free(root):
        return None
    if not is_chordless_graph(root):
        return None
    return root


# -- safe trees and pyramid-basic graphs -------------------------------------

def is_tree_graph(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def pendant_edges(t: Graph) -> list[Edge]:
    return [(u, v) for u, v in t.edges() if t.degree(u) == 1 or t.degree(v) == 1]


def _leaf_end(t: Graph, e: Edge) -> int:
    u, v = e
    return u if t.degree(u) == 1 else v


def _tree_path(t: Graph, a: int, b: int) -> list[int]:
    prev = {a: a}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in frontier:
            for w in t.neighbors(v):
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def pendant_siblings(t: Graph) -> list[tuple[Edge, Edge]]:
    """Pairs of pendant edges whose connecting path (between their
    degree-1 endpoints) holds at most one node of degree >= 3."""
    if not is_tree_graph(t):
        raise ValueError("pendant_siblings expects a tree")
    pend = pendant_edges(t)
    out = []
    for e, f in combinations(pend, 2):
        path = _tree_path(t, _leaf_end(t, e), _leaf_end(t, f))
        high = sum(1 for v in path if t.degree(v) >= 3)
        if high <= 1:
            out.append((e, f))
    return out


def is_safe_tree(t: Graph, labels: Optional[dict[Edge, str]] = None) -> bool:
    """Safety of a tree, and validity of a pendant-edge labeling if given.

    Safe: every degree-1 node's neighbor has degree at most 2 and every
    pendant edge has at most one sibling.  A labeling is valid when it
    assigns 'x' or 'y' to exactly the pendant edges and gives distinct
    labels to the members of every sibling pair.
    """
    if not is_tree_graph(t):
        raise ValueError("is_safe_tree expects a tree")
    for u in range(t.n):
        if t.degree(u) == 1:
            v = t.neighbors(u)[0]
            if t.degree(v) > 2:
                return False
    sibs = pendant_siblings(t)
    counts: dict[Edge, int] = {}
    for e, f in sibs:
        counts[e] = counts.get(e, 0) + 1
        counts[f] = counts.get(f, 0) + 1
    if any(c > 1 for c in counts.values()):
        return False
    if labels is not None:
        pend = set(pendant_edges(t))
        norm = {tuple(sorted(e)): lab for e, lab in labels.items()}
        if set(norm) != pend:
            return False
        if any(lab not in ("x", "y") for lab in norm.values()):
            return False
        for e, f in sibs:
            if norm[e] == norm[f]:
                return False
    return True


@dataclass(frozen=True)
class LabeledSafeTree:
    """A safe tree with pendant edges labeled 'x' or 'y'.

    The seed of the pyramid-basic construction; labels are keyed by the
    sorted node pair of the pendant edge.
    """

    tree: Graph
    labels: dict[Edge, str]

    def normalized_labels(self) -> dict[Edge, str]:
        return {tuple(sorted(e)): lab for e, lab in self.labels.items()}

    def to_json(self) -> dict:
        return {
            "tree": {"n": self.tree.n,
                     "edges": [[u, v] for u, v in self.tree.edges()]},
            "labels": {f"{u} {v}": lab
                       for (u, v), lab in sorted(self.normalized_labels().items())},
        }


def build_pyramid_basic(t: LabeledSafeTree) -> Graph:
    """Construct a pyramid-basic graph from a labeled safe tree.

    Nodes 0..m-1 are the tree's edges (the line graph), node m is x
    (adjacent to every x-labeled pendant edge) and node m+1 is y
    (adjacent to x and every y-labeled pendant edge).
    """
    tree = t.tree
    labels = t.normalized_labels()
    if not is_tree_graph(tree):
        raise ValueError("pyramid-basic seed must be a tree")
    if len(pendant_edges(tree)) < 2:
        raise ValueError("tree needs at least two pendant edges to attach x and y")
    if not is_safe_tree(tree, labels):
        if not is_safe_tree(tree):
            raise ValueError("tree is not safe")
        raise ValueError("pendant-edge labeling is invalid (missing label or "
                         "identically labeled sibling pair)")
    lg = line_graph(tree)
    edges_lex = tree.edges()
    m = lg.n
    x, y = m, m + 1
    new_edges = list(lg.edges())
    for i, e in enumerate(edges_lex):
        lab = labels.get(e)
        if lab == "x":
            new_edges.append((i, x))
        elif lab == "y":
            new_edges.append((i, y))
    new_edges.append((x, y))
    tags = [None] * m + ["special-x", "special-y"]
    return Graph.from_edge_list(m + 2, new_edges, tags)


def is_pyramid_basic(g: Graph) -> Optional[LabeledSafeTree]:
    """Certificate iff g can be built from some labeled safe tree.

    Scans edges xy in ascending order, tests whether g minus {x, y} is
    the line graph of a tree and whether the attachments realize a valid
    labeling; first hit wins.
    """
    for x, y in g.edges():
        cert = _pyramid_basic_via(g, x, y)
        if cert is not None:
            return cert
    return None


def _pyramid_basic_via(g: Graph, x: int, y: int) -> Optional[LabeledSafeTree]:
    # the attachment nodes are pendant edges of a safe tree, whose line
    # graph leaves them with degree at most 1; so their degree in g is at
    # most 2, which disposes of dense candidates before any root search
    for s, other in ((x, y), (y, x)):
        for v in g.neighbors(s):
            if v != other and g.degree(v) > 2:
                return None
    rest = [v for v in range(g.n) if v not in (x, y)]
    if len(rest) < 2:
        return None
    h, h_map = induced_subgraph(g, rest)
    if not is_connected(h):
        return None
    res = _root_with_edge_map(h)
    if res is None:
        return None
    root, edge_of = res
    if not is_tree_graph(root):
        return None
    pend = set(pendant_edges(root))
    if len(pend) < 2:
        return None
    if not is_safe_tree(root):
        return None
    pos = {old: i for i, old in enumerate(h_map)}
    x_nodes = {pos[v] for v in bits(g.adj_mask(x)) if v != y}
    y_nodes = {pos[v] for v in bits(g.adj_mask(y)) if v != x}
    if x_nodes & y_nodes:
        return None
    labels: dict[Edge, str] = {}
    for hv in range(h.n):
        e = edge_of[hv]
        if hv in x_nodes:
            lab = "x"
        elif hv in y_nodes:
            lab = "y"
        else:
            if e in pend:
                return None  # unlabeled pendant edge
            continue
        if e not in pend:
            return None  # special node attached to a non-pendant edge
        labels[e] = lab
    if set(labels) != pend:
        return None
    if not is_safe_tree(root, labels):
        return None
    return LabeledSafeTree(root, labels)


# -- combined classification --------------------------------------------------

BASIC_CLASSES = ("clique", "hole", "long-pyramid", "pyramid-basic",
                 "lg-tf-chordless")

ONLY_PYRAMID_BASIC = ("clique", "hole", "long-pyramid", "pyramid-basic")


@dataclass(frozen=True)
class BasicVerdict:
    """Outcome of classify_basic: a class name and a re-validatable
    certificate (or 'none' with no certificate)."""

    category: str
    certificate: object = None

    def to_json(self) -> dict:
        cert: object
        if self.certificate is None:
            cert = None
        elif isinstance(self.certificate, Graph):
            cert = {"n": self.certificate.n,
                    "edges": [[u, v] for u, v in self.certificate.edges()]}
        elif isinstance(self.certificate, LabeledSafeTree):
            cert = self.certificate.to_json()
        elif isinstance(self.certificate, ConfigWitness):
            cert = self.certificate.to_json()
        else:
            cert = self.certificate
        return {"class": self.category, "certificate": cert}


def classify_basic(g: Graph) -> BasicVerdict:
    """First matching basic class in the fixed order clique, hole,
    long-pyramid, pyramid-basic, lg-tf-chordless; else 'none'."""
    if is_clique_graph(g):
        return BasicVerdict("clique", sorted(range(g.n)))
    if is_hole_graph(g):
        return BasicVerdict("hole", hole_order(g))
    w = is_pyramid(g)
    if w is not None and all(len(p) >= 3 for p in w.structure["paths"]):
        return BasicVerdict("long-pyramid", w)
    cert = is_pyramid_basic(g)
    if cert is not None:
        return BasicVerdict("pyramid-basic", cert)
    root = is_lg_tf_chordless(g)
    if root is not None:
        return BasicVerdict("lg-tf-chordless", root)
    return BasicVerdict("none")
