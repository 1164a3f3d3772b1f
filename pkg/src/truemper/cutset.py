"""Clique cutsets and the clique cutset decomposition tree.

A node cutset K is a clique cutset when K induces a clique; the empty
set counts, so every disconnected graph has one.  find_clique_cutset
returns a trimmed split (A, K, B): A is a full component of the removal,
K = N(A) is exactly A's neighborhood, and B is everything else.  Among
all candidates the one with the smallest A is chosen (ties broken by
lexicographic node order).  Minimizing |A| guarantees that the block
G[A + K] has no clique cutset of its own, which keeps the decomposition
tree a caterpillar with at most n leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import (Graph, bits, components_masks, induced_subgraph,
                    is_clique_graph, mask_of)


@dataclass(frozen=True)
class CliqueSplit:
    """A certified clique-cutset partition (A, K, B) of a graph."""

    A: frozenset[int]
    K: frozenset[int]
    B: frozenset[int]

    def to_json(self) -> dict:
        return {"A": sorted(self.A), "K": sorted(self.K), "B": sorted(self.B)}


def validate_clique_split(g: Graph, s: CliqueSplit) -> None:
    """Raise ValueError unless s is a valid clique-cutset split of g."""
    a, k, b = mask_of(s.A), mask_of(s.K), mask_of(s.B)
    if a & k or a & b or k & b or (a | k | b) != g.full_mask():
        raise ValueError("A, K, B must partition the node set")
    if not s.A or not s.B:
        raise ValueError("A and B must be nonempty")
    klist = sorted(s.K)
    for i, u in enumerate(klist):
        for v in klist[i + 1:]:
            if not g.has_edge(u, v):
                raise ValueError(f"K is not a clique: {u} and {v} are non-adjacent")
    for u in s.A:
        if g.adj_mask(u) & b:
            raise ValueError(f"edge between A and B at node {u}")


def _component_candidates(g: Graph) -> Iterator[int]:
    """Components of G minus K, over every nonempty clique cutset K.

    Only meaningful for connected graphs; components are untrimmed, the
    caller trims K down to the exact neighborhood of the winner.
    """
    full = g.full_mask()
    adj = g._adj

    def extend(clique_mask: int, cand: int) -> Iterator[int]:
        for v in bits(cand):
            new = clique_mask | (1 << v)
            yield new
            yield from extend(new, cand & adj[v] & ~((1 << (v + 1)) - 1))

    for clique in extend(0, full):
        rest = full & ~clique
        if not rest:
            continue
        parts = components_masks(g, rest)
        if len(parts) < 2:
            continue
        yield from parts


def find_clique_cutset(g: Graph) -> Optional[CliqueSplit]:
    """A clique-cutset split of g, or None.

    Disconnected graphs yield K = empty set with A the component holding
    node 0.  Otherwise A is the smallest component over all clique
    cutsets (lexicographically smallest on ties) and K is trimmed to
    N(A); the minimal choice makes the block G[A + K] cutset-free, which
    caps the decomposition tree at n leaves.
    """
    if g.n <= 1:
        return None
    comps = components_masks(g)
    if len(comps) >= 2:
        a_mask = comps[0]  # component containing node 0
        b_mask = g.full_mask() & ~a_mask
        return CliqueSplit(frozenset(bits(a_mask)), frozenset(),
                           frozenset(bits(b_mask)))
    if is_clique_graph(g):
        return None
    best: Optional[tuple[int, list[int], int]] = None
    seen_comps: set[int] = set()
    for comp in _component_candidates(g):
        if comp in seen_comps:
            continue
        seen_comps.add(comp)
        key = (comp.bit_count(), bits(comp))
        if best is None or key < (best[0], best[1]):
            best = (key[0], key[1], comp)
    if best is None:
        return None
    comp = best[2]
    nbhd = 0
    for v in bits(comp):
        nbhd |= g.adj_mask(v)
    k_mask = nbhd & ~comp
    b_mask = g.full_mask() & ~comp & ~k_mask
    return CliqueSplit(frozenset(bits(comp)), frozenset(bits(k_mask)),
                       frozenset(bits(b_mask)))


def blocks_of_clique_split(g: Graph, s: CliqueSplit) -> tuple[tuple[Graph, tuple[int, ...]],
                                                              tuple[Graph, tuple[int, ...]]]:
    """The induced blocks G[A + K] and G[K + B], each with its id map."""
    validate_clique_split(g, s)
    ga = induced_subgraph(g, s.A | s.K)
    gb = induced_subgraph(g, s.K | s.B)
    return ga, gb


@dataclass
class CliqueDecompNode:
    graph: Graph
    origin: tuple[int, ...]  # node id -> root graph id
    split: Optional[CliqueSplit] = None
    children: tuple["CliqueDecompNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.split is None


@dataclass
class CliqueDecompTree:
    root: CliqueDecompNode
    leaves: list[CliqueDecompNode] = field(default_factory=list)

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    def to_json(self) -> dict:
        def node_json(node: CliqueDecompNode) -> dict:
            out = {
                "n": node.graph.n,
                "edges": [[u, v] for u, v in node.graph.edges()],
                "origin": list(node.origin),
                "kind": "leaf" if node.is_leaf else "internal",
            }
            if node.split is not None:
                out["split"] = node.split.to_json()
                out["children"] = [node_json(c) for c in node.children]
            return out

        return {"tree": "clique-cutset", "root": node_json(self.root)}

    def to_dot(self) -> str:
        lines = ["graph clique_decomposition {", '  node [shape=box];']
        counter = [0]

        def walk(node: CliqueDecompNode) -> int:
            idx = counter[0]
            counter[0] += 1
            if node.is_leaf:
                label = f"leaf n={node.graph.n}"
            else:
                k = ",".join(str(v) for v in sorted(node.split.K))
                label = f"n={node.graph.n} K={{{k}}}"
            lines.append(f'  v{idx} [label="{label}"];')
            for child in node.children:
                cidx = walk(child)
                lines.append(f"  v{idx} -- v{cidx};")
            return idx

        walk(self.root)
        lines.append("}")
        return "\n".join(lines) + "\n"


def clique_decomposition_tree(g: Graph) -> CliqueDecompTree:
    """Decompose g along clique cutsets until no block has one.

    Every leaf satisfies find_clique_cutset(leaf) is None and the tree
    has at most n leaves.
    """
    leaves: list[CliqueDecompNode] = []

    def build(graph: Graph, origin: tuple[int, ...]) -> CliqueDecompNode:
        split = find_clique_cutset(graph)
        if split is None:
            node = CliqueDecompNode(graph, origin)
            leaves.append(node)
            return node
        (ga, map_a), (gb, map_b) = blocks_of_clique_split(graph, split)
        child_a = build(ga, tuple(origin[v] for v in map_a))
        child_b = build(gb, tuple(origin[v] for v in map_b))
        return CliqueDecompNode(graph, origin, split, (child_a, child_b))

    root = build(g, tuple(range(g.n)))
    return CliqueDecompTree(root, leaves)
