"""2-joins: validation, consistency, detection, blocks and composition.

A split (X1, X2, A1, A2, B1, B2) is an almost 2-join when X1, X2
partition the nodes, the nonempty disjoint special sets A_i, B_i sit
inside X_i, the crossing edges are exactly the two complete bipartite
bundles A1-A2 and B1-B2, and |X_i| >= 3.  A 2-join additionally needs an
A_i-B_i path inside each side, and forbids a side that is a chordless
path with singleton special sets.

Detection seeds on ordered pairs of crossing edges and closes the
partition under forcing rules; an exhaustive partition sweep backs it up
on small graphs.  Splitting a 2-join replaces the far side by a
three-node marker path; composition is the inverse operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import (Graph, bits, components_masks, is_clique_graph,
                    is_hole_graph, mask_of)

BRUTE_FALLBACK_MAX = 13

MARKER_TAGS = ("marker-a", "marker-c", "marker-b")


@dataclass(frozen=True)
class TwoJoinSplit:
    """A (candidate) split; validity is checked by validate_split."""

    X1: frozenset[int]
    X2: frozenset[int]
    A1: frozenset[int]
    A2: frozenset[int]
    B1: frozenset[int]
    B2: frozenset[int]

    @property
    def C1(self) -> frozenset[int]:
        return self.X1 - self.A1 - self.B1

    @property
    def C2(self) -> frozenset[int]:
        return self.X2 - self.A2 - self.B2

    def to_json(self) -> dict:
        return {name: sorted(getattr(self, name))
                for name in ("X1", "X2", "A1", "A2", "B1", "B2")}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_split(g: Graph, s: TwoJoinSplit, mode: str = "full") -> ValidationReport:
    """Check every clause of the almost-2-join (and, in full mode,
    2-join) definition; the report names the first violated clause."""
    if mode not in ("almost", "full"):
        raise ValueError(f"mode must be 'almost' or 'full', got {mode!r}")
    x1, x2 = mask_of(s.X1), mask_of(s.X2)
    a1, a2 = mask_of(s.A1), mask_of(s.A2)
    b1, b2 = mask_of(s.B1), mask_of(s.B2)
    if x1 & x2 or (x1 | x2) != g.full_mask():
        return ValidationReport(False, "X1 and X2 must partition the node set")
    for name, spec_mask, side in (("A1", a1, x1), ("B1", b1, x1),
                                  ("A2", a2, x2), ("B2", b2, x2)):
        if not spec_mask:
            return ValidationReport(False, f"{name} is empty")
        if spec_mask & ~side:
            return ValidationReport(False, f"{name} is not contained in its side")
    if a1 & b1:
        return ValidationReport(False, "A1 and B1 intersect")
    if a2 & b2:
        return ValidationReport(False, "A2 and B2 intersect")
    for u in bits(a1):
        if g.adj_mask(u) & a2 != a2:
            return ValidationReport(False, "A1 is not complete to A2")
    for u in bits(b1):
        if g.adj_mask(u) & b2 != b2:
            return ValidationReport(False, "B1 is not complete to B2")
    for u in bits(x1):
        allowed = a2 if a1 & (1 << u) else 0
        allowed |= b2 if b1 & (1 << u) else 0
        if g.adj_mask(u) & x2 & ~allowed:
            return ValidationReport(False, "crossing edge outside the two bundles")
    if x1.bit_count() < 3 or x2.bit_count() < 3:
        return ValidationReport(False, "|X_i| >= 3 fails")
    if mode == "almost":
        return ValidationReport(True)
    for side, am, bm, name in ((x1, a1, b1, "X1"), (x2, a2, b2, "X2")):
        if not _side_has_special_path(g, side, am, bm):
            return ValidationReport(False, f"{name} has no path between its special sets")
    for side, am, bm, name in ((x1, a1, b1, "X1"), (x2, a2, b2, "X2")):
        if am.bit_count() == 1 and bm.bit_count() == 1 and _is_chordless_path_mask(g, side):
            return ValidationReport(False, f"{name} is a chordless path with singleton special sets")
    return ValidationReport(True)


def _side_has_special_path(g: Graph, side: int, am: int, bm: int) -> bool:
    reach = am
    frontier = am
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj_mask(v)
        nxt &= side & ~reach
        reach |= nxt
        frontier = nxt
    return bool(reach & bm)


def _is_chordless_path_mask(g: Graph, side: int) -> bool:
    nodes = bits(side)
    if len(nodes) == 1:
        return True
    ends = 0
    for v in nodes:
        d = (g.adj_mask(v) & side).bit_count()
        if d == 1:
            ends += 1
        elif d != 2:
            return False
    if ends != 2:
        return False
    return len(components_masks(g, side)) == 1


# -- consistency ---------------------------------------------------------------

CONSISTENCY_CONDITIONS = (
    "every component of G[X_i] meets both A_i and B_i",
    "every node of A_i has a non-neighbor in B_i",
    "every node of B_i has a non-neighbor in A_i",
    "A1 and A2 are both cliques, or one is a single node and the other a disjoint union of cliques",
    "B1 and B2 are both cliques, or one is a single node and the other a disjoint union of cliques",
    "G[X_i] is connected",
    "every node of X_i reaches B_i by a path with no internal node in A_i",
    "every node of X_i reaches A_i by a path with no internal node in B_i",
)


def is_consistent(g: Graph, s: TwoJoinSplit) -> tuple[bool, Optional[int]]:
    """Evaluate the eight consistency conditions of an almost 2-join.

    Returns (True, None) or (False, index) with the 1-based index of the
    first failed condition.  Rejects splits that are not valid almost
    2-joins outright.
    """
    rep = validate_split(g, s, mode="almost")
    if not rep:
        raise ValueError(f"not an almost 2-join: {rep.violation}")
    sides = ((mask_of(s.X1), mask_of(s.A1), mask_of(s.B1)),
             (mask_of(s.X2), mask_of(s.A2), mask_of(s.B2)))

    # 1: components of each side meet both special sets
    for side, am, bm in sides:
        for comp in components_masks(g, side):
            if not (comp & am) or not (comp & bm):
                return False, 1
    # 2 and 3: non-neighbor requirements between A_i and B_i
    for side, am, bm in sides:
        for u in bits(am):
            if g.adj_mask(u) & bm == bm:
                return False, 2
    for side, am, bm in sides:
        for u in bits(bm):
            if g.adj_mask(u) & am == am:
                return False, 3
    # 4 and 5: clique shape of the special-set pairs
    if not _clique_pair_ok(g, sides[0][1], sides[1][1]):
        return False, 4
    if not _clique_pair_ok(g, sides[0][2], sides[1][2]):
        return False, 5
    # 6: connected sides
    for side, _am, _bm in sides:
        if len(components_masks(g, side)) != 1:
            return False, 6
    # 7 and 8: reachability avoiding the opposite special set internally
    for side, am, bm in sides:
        for v in bits(side):
            if not _reaches_avoiding(g, side, v, target=bm, forbidden=am):
                return False, 7
    for side, am, bm in sides:
        for v in bits(side):
            if not _reaches_avoiding(g, side, v, target=am, forbidden=bm):
                return False, 8
    return True, None


def _is_clique_mask(g: Graph, m: int) -> bool:
    for u in bits(m):
        if g.adj_mask(u) & m != m & ~(1 << u):
            return False
    return True


def _is_union_of_cliques(g: Graph, m: int) -> bool:
    return all(_is_clique_mask(g, comp) for comp in components_masks(g, m))


def _clique_pair_ok(g: Graph, m1: int, m2: int) -> bool:
    if _is_clique_mask(g, m1) and _is_clique_mask(g, m2):
        return True
    if m1.bit_count() == 1 and _is_union_of_cliques(g, m2):
        return True
    if m2.bit_count() == 1 and _is_union_of_cliques(g, m1):
        return True
    return False


def _reaches_avoiding(g: Graph, side: int, v: int, target: int, forbidden: int) -> bool:
    if target & (1 << v):
        return True
    allowed = (side & ~forbidden) | (1 << v)
    reach = 1 << v
    frontier = reach
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj_mask(u)
        if nxt & target & side:
            return True
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return False


# -- detection -------------------------------------------------------------------

def find_2join(g: Graph) -> Optional[TwoJoinSplit]:
    """A valid 2-join split of g, or None if none exists.

    Seeds on ordered pairs of crossing edges (one for each bundle) and
    closes the side containing the seeds under forcing rules; a second
    pass retries each seed with one extra forced node.  Exhaustive
    partition enumeration backs the seed scan up to 13 nodes, so the
    answer is complete there.  Deterministic: seeds are scanned in
    lexicographic order and the first valid split wins.
    """
    if g.n < 6:
        return None
    if is_clique_graph(g) or is_hole_graph(g):
        return None  # neither admits a 2-join (one bundle / path-side clauses)
    split = _seeded_scan(g)
    if split is not None:
        return split
    if g.n <= BRUTE_FALLBACK_MAX:
        return _brute_2join(g)
    return None


_FULL_RETRY_MAX = 25


def _seeded_scan(g: Graph) -> Optional[TwoJoinSplit]:
    edges = g.edges()
    seeds = []
    for i, ea in enumerate(edges):
        for eb in edges[i + 1:]:
            if set(ea) & set(eb):
                continue
            for a1, a2 in (ea, ea[::-1]):
                for b1, b2 in (eb, eb[::-1]):
                    if g.has_edge(a1, b2) or g.has_edge(b1, a2):
                        continue
                    seeds.append((a1, a2, b1, b2))
    stalled = []
    for seed in seeds:
        split, stall = _closure(g, *seed, 0)
        if split is not None:
            return split
        if stall:
            stalled.append(seed)
    # Seeds drawn from the bundles of a genuine 2-join never force a pinned
    # node and never collide A1 with B1, so only stalled seeds can belong to
    # one; retry those with one extra node pushed into X1.
    for a1, a2, b1, b2 in stalled:
        banned = mask_of((a1, a2, b1, b2))
        near = (g.adj_mask(a1) | g.adj_mask(b1)) & ~banned
        for c in bits(near):
            split, _ = _closure(g, a1, a2, b1, b2, 1 << c)
            if split is not None:
                return split
    if g.n <= _FULL_RETRY_MAX:
        for a1, a2, b1, b2 in stalled:
            banned = mask_of((a1, a2, b1, b2))
            for c in range(g.n):
                if banned & (1 << c):
                    continue
                split, _ = _closure(g, a1, a2, b1, b2, 1 << c)
                if split is not None:
                    return split
    return None


def _closure(g: Graph, a1: int, a2: int, b1: int, b2: int,
             extra: int) -> tuple[Optional[TwoJoinSplit], bool]:
    """Grow X1 from {a1, b1} + extra by forcing, with a2, b2 pinned in X2.

    A node sitting in X2 must look like an A2 node (adjacent to a1, side-1
    neighborhood exactly N(a2) & X1), a B2 node, or a C2 node (no side-1
    neighbors); anything else is forced across.  Returns (split, stalled):
    the split when the fixpoint validates as a full 2-join, else None with
    a flag telling contradiction (False) apart from a mere stall (True).
    """
    adj = g._adj
    n = g.n
    pin2 = (1 << a2) | (1 << b2)
    x1 = (1 << a1) | (1 << b1) | extra
    if x1 & pin2:
        return None, False
    na1, nb1 = adj[a1], adj[b1]
    changed = True
    while changed:
        changed = False
        a1s = adj[a2] & x1
        b1s = adj[b2] & x1
        if a1s & b1s:
            return None, False
        forced = 0
        for v in range(n):
            vb = 1 << v
            if x1 & vb:
                continue
            pat = adj[v] & x1
            if na1 & vb:
                if nb1 & vb or pat != a1s:
                    forced |= vb
            elif nb1 & vb:
                if pat != b1s:
                    forced |= vb
            elif pat:
                forced |= vb
        if forced & pin2:
            return None, False
        if forced:
            x1 |= forced
            changed = True
    x2 = g.full_mask() & ~x1
    if x1.bit_count() < 3 or x2.bit_count() < 3:
        return None, True
    a1s = adj[a2] & x1
    b1s = adj[b2] & x1
    a2s = adj[a1] & x2
    b2s = adj[b1] & x2
    split = TwoJoinSplit(
        frozenset(bits(x1)), frozenset(bits(x2)),
        frozenset(bits(a1s)), frozenset(bits(a2s)),
        frozenset(bits(b1s)), frozenset(bits(b2s)))
    if validate_split(g, split, mode="full"):
        return split, False
    return None, True


def _bundles_of_partition(g: Graph, x1: int, x2: int) -> Optional[tuple[int, int, int, int]]:
    """Derive (A1, B1, A2, B2) masks forced by a partition, or None if
    the crossing edges do not form exactly two complete bundles."""
    m_a = m_b = 0
    a1 = b1 = 0
    for v in bits(x1):
        cm = g.adj_mask(v) & x2
        if not cm:
            continue
        if not m_a or cm == m_a:
            m_a = cm
            a1 |= 1 << v
        elif not m_b or cm == m_b:
            m_b = cm
            b1 |= 1 << v
        else:
            return None
    if not m_a or not m_b or m_a & m_b:
        return None
    return a1, b1, m_a, m_b


def _brute_2join(g: Graph) -> Optional[TwoJoinSplit]:
    full = g.full_mask()
    for half in range(1 << (g.n - 1)):
        x1 = (half << 1) | 1  # node 0 stays on side 1; complements are equivalent
        x2 = full & ~x1
        if x1.bit_count() < 3 or x2.bit_count() < 3:
            continue
        bundles = _bundles_of_partition(g, x1, x2)
        if bundles is None:
            continue
        a1, b1, a2, b2 = bundles
        split = TwoJoinSplit(
            frozenset(bits(x1)), frozenset(bits(x2)),
            frozenset(bits(a1)), frozenset(bits(a2)),
            frozenset(bits(b1)), frozenset(bits(b2)))
        if validate_split(g, split, mode="full"):
            return split
    return None


def all_2joins_brute(g: Graph) -> list[TwoJoinSplit]:
    """Every valid 2-join split, by exhaustive partition enumeration.

    Independent oracle for find_2join; n is capped hard since the sweep
    is exponential.
    """
    if g.n > 16:
        raise ValueError("brute-force 2-join sweep capped at 16 nodes")
    out = []
    if g.n < 6:
        return out
    full = g.full_mask()
    for half in range(1 << (g.n - 1)):
        x1 = (half << 1) | 1
        x2 = full & ~x1
        if x1.bit_count() < 3 or x2.bit_count() < 3:
            continue
        bundles = _bundles_of_partition(g, x1, x2)
        if bundles is None:
            continue
        a1, b1, a2, b2 = bundles
        split = TwoJoinSplit(
            frozenset(bits(x1)), frozenset(bits(x2)),
            frozenset(bits(a1)), frozenset(bits(a2)),
            frozenset(bits(b1)), frozenset(bits(b2)))
        if validate_split(g, split, mode="full"):
            out.append(split)
    return out


def all_almost_2joins_brute(g: Graph) -> list[TwoJoinSplit]:
    """Every valid almost-2-join split, exhaustively (both side orders)."""
    if g.n > 16:
        raise ValueError("brute-force almost-2-join sweep capped at 16 nodes")
    out = []
    if g.n < 6:
        return out
    full = g.full_mask()
    for half in range(1 << (g.n - 1)):
        x1 = (half << 1) | 1
        x2 = full & ~x1
        if x1.bit_count() < 3 or x2.bit_count() < 3:
            continue
        bundles = _bundles_of_partition(g, x1, x2)
        if bundles is None:
            continue
        a1, b1, a2, b2 = bundles
        split = TwoJoinSplit(
            frozenset(bits(x1)), frozenset(bits(x2)),
            frozenset(bits(a1)), frozenset(bits(a2)),
            frozenset(bits(b1)), frozenset(bits(b2)))
        if validate_split(g, split, mode="almost"):
            out.append(split)
    return out


# -- blocks and composition -------------------------------------------------------

def blocks_of_2join(g: Graph, s: TwoJoinSplit) -> tuple[
        tuple[Graph, tuple[Optional[int], ...]],
        tuple[Graph, tuple[Optional[int], ...]]]:
    """The two blocks of decomposition, each with a map back to g.

    Block i keeps G[X_i] and replaces the far side by a marker path
    a-c-b with a complete to A_i, b complete to B_i and c of degree 2;
    marker nodes are tagged and map to None.
    """
    rep = validate_split(g, s, mode="full")
    if not rep:
        raise ValueError(f"not a 2-join: {rep.violation}")
    g1 = _one_block(g, sorted(s.X1), s.A1, s.B1)
    g2 = _one_block(g, sorted(s.X2), s.A2, s.B2)
    return g1, g2


def _one_block(g: Graph, side_nodes: list[int], a_set: frozenset[int],
               b_set: frozenset[int]) -> tuple[Graph, tuple[Optional[int], ...]]:
    pos = {old: i for i, old in enumerate(side_nodes)}
    k = len(side_nodes)
    ma, mc, mb = k, k + 1, k + 2
    edges = []
    side_mask = mask_of(side_nodes)
    for old in side_nodes:
        for w in bits(g.adj_mask(old) & side_mask):
            if w > old:
                edges.append((pos[old], pos[w]))
    edges.extend((pos[v], ma) for v in sorted(a_set))
    edges.extend((pos[v], mb) for v in sorted(b_set))
    edges.append((ma, mc))
    edges.append((mc, mb))
    tags = [g.tags[old] for old in side_nodes] + list(MARKER_TAGS)
    block = Graph.from_edge_list(k + 3, edges, tags)
    origin: tuple[Optional[int], ...] = tuple(side_nodes) + (None, None, None)
    return block, origin


def marker_path_of(g: Graph) -> tuple[int, int, int]:
    """The tagged marker path (a, c, b) of a block; raises if absent or
    malformed."""
    found = {}
    for v in range(g.n):
        if g.tags[v] in MARKER_TAGS:
            if g.tags[v] in found:
                raise ValueError(f"duplicate {g.tags[v]} tag")
            found[g.tags[v]] = v
    if set(found) != set(MARKER_TAGS):
        raise ValueError("graph does not carry a tagged marker path")
    a, c, b = found["marker-a"], found["marker-c"], found["marker-b"]
    if not (g.has_edge(a, c) and g.has_edge(c, b)):
        raise ValueError("marker nodes do not form a path")
    if g.has_edge(a, b):
        raise ValueError("marker path ends are adjacent")
    if g.degree(c) != 2:
        raise ValueError("marker middle node must have degree 2")
    return a, c, b


def _marker_side_split(g: Graph) -> TwoJoinSplit:
    a, c, b = marker_path_of(g)
    markers = {a, c, b}
    x1 = frozenset(range(g.n)) - markers
    a1 = frozenset(bits(g.adj_mask(a))) - {c}
    b1 = frozenset(bits(g.adj_mask(b))) - {c}
    return TwoJoinSplit(x1, frozenset(markers), a1, frozenset({a}),
                        b1, frozenset({b}))


def check_marker_precondition(g: Graph) -> TwoJoinSplit:
    """Validate that (V minus markers, markers) is a consistent almost
    2-join; returns the split or raises naming the failure."""
    split = _marker_side_split(g)
    rep = validate_split(g, split, mode="almost")
    if not rep:
        raise ValueError(f"marker side is not an almost 2-join: {rep.violation}")
    ok, idx = is_consistent(g, split)
    if not ok:
        raise ValueError(
            f"marker-side split fails consistency condition {idx}: "
            f"{CONSISTENCY_CONDITIONS[idx - 1]}")
    return split


def compose_2join_with_split(g1: Graph, g2: Graph) -> tuple[Graph, TwoJoinSplit]:
    """Consistent 2-join composition of two marker-path blocks.

    Removes both marker paths and joins the neighborhoods of the a-ends
    and of the b-ends by complete bundles.  Also returns the induced
    split of the composed graph (side 1 holds the g1 part).
    """
    s1 = check_marker_precondition(g1)
    s2 = check_marker_precondition(g2)
    a_mark1, _c1, b_mark1 = marker_path_of(g1)
    a_mark2, _c2, b_mark2 = marker_path_of(g2)
    part1 = sorted(s1.X1)
    part2 = sorted(s2.X1)
    pos1 = {old: i for i, old in enumerate(part1)}
    off = len(part1)
    pos2 = {old: off + i for i, old in enumerate(part2)}
    edges = []
    m1 = mask_of(part1)
    for old in part1:
        for w in bits(g1.adj_mask(old) & m1):
            if w > old:
                edges.append((pos1[old], pos1[w]))
    m2 = mask_of(part2)
    for old in part2:
        for w in bits(g2.adj_mask(old) & m2):
            if w > old:
                edges.append((pos2[old], pos2[w]))
    for u in sorted(bits(g1.adj_mask(a_mark1) & m1)):
        for v in sorted(bits(g2.adj_mask(a_mark2) & m2)):
            edges.append((pos1[u], pos2[v]))
    for u in sorted(bits(g1.adj_mask(b_mark1) & m1)):
        for v in sorted(bits(g2.adj_mask(b_mark2) & m2)):
            edges.append((pos1[u], pos2[v]))
    tags = [g1.tags[old] for old in part1] + [g2.tags[old] for old in part2]
    composed = Graph.from_edge_list(off + len(part2), edges, tags)
    split = TwoJoinSplit(
        frozenset(range(off)), frozenset(range(off, composed.n)),
        frozenset(pos1[v] for v in s1.A1), frozenset(pos2[v] for v in s2.A1),
        frozenset(pos1[v] for v in s1.B1), frozenset(pos2[v] for v in s2.B1))
    # the partition is always an almost 2-join; it is a full 2-join
    # unless a factor's side is a chordless path with singleton specials
    # (e.g. a hole factor), in which case blocks_of_2join refuses it
    assert validate_split(composed, split, mode="almost").ok
    return composed, split


def compose_2join(g1: Graph, g2: Graph) -> Graph:
    """Consistent 2-join composition (see compose_2join_with_split)."""
    return compose_2join_with_split(g1, g2)[0]


# -- decomposition tree ------------------------------------------------------------

LEAF_NO_2JOIN = "no-2join"
LEAF_NON_CONSISTENT = "non-consistent-2join"
INTERNAL = "internal"


@dataclass
class TwoJoinDecompNode:
    graph: Graph
    kind: str
    split: Optional[TwoJoinSplit] = None
    failed_condition: Optional[int] = None
    children: tuple["TwoJoinDecompNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.kind != INTERNAL


@dataclass
class TwoJoinDecompTree:
    root: TwoJoinDecompNode
    leaves: list[TwoJoinDecompNode] = field(default_factory=list)
    calls: int = 0

    def to_json(self) -> dict:
        def node_json(node: TwoJoinDecompNode) -> dict:
            out = {
                "n": node.graph.n,
                "edges": [[u, v] for u, v in node.graph.edges()],
                "kind": node.kind,
            }
            if node.split is not None:
                out["split"] = node.split.to_json()
            if node.failed_condition is not None:
                out["failed_condition"] = node.failed_condition
            if node.children:
                out["children"] = [node_json(c) for c in node.children]
            return out

        return {"tree": "consistent-2join", "calls": self.calls,
                "root": node_json(self.root)}

    def to_dot(self) -> str:
        lines = ["graph twojoin_decomposition {", "  node [shape=box];"]
        counter = [0]

        def walk(node: TwoJoinDecompNode) -> int:
            idx = counter[0]
            counter[0] += 1
            label = f"n={node.graph.n} {node.kind}"
            lines.append(f'  v{idx} [label="{label}"];')
            for child in node.children:
                cidx = walk(child)
                lines.append(f"  v{idx} -- v{cidx};")
            return idx

        walk(self.root)
        lines.append("}")
        return "\n".join(lines) + "\n"


def two_join_decomposition_tree(g: Graph) -> TwoJoinDecompTree:
    """Decompose along consistent 2-joins; leaves either have no 2-join
    or carry a non-consistent one (flagged as such).

    The total number of recursive calls is recorded; it stays within
    2n - 13 for inputs with at least 7 nodes because consistent 2-joins
    have both sides of size at least 4.
    """
    counter = [0]
    leaves: list[TwoJoinDecompNode] = []

    def build(graph: Graph) -> TwoJoinDecompNode:
        counter[0] += 1
        split = find_2join(graph)
        if split is None:
            node = TwoJoinDecompNode(graph, LEAF_NO_2JOIN)
            leaves.append(node)
            return node
        ok, idx = is_consistent(graph, split)
        if not ok:
            node = TwoJoinDecompNode(graph, LEAF_NON_CONSISTENT, split, idx)
            leaves.append(node)
            return node
        (b1, _map1), (b2, _map2) = blocks_of_2join(graph, split)
        children = (build(b1), build(b2))
        return TwoJoinDecompNode(graph, INTERNAL, split, None, children)

    root = build(g)
    return TwoJoinDecompTree(root, leaves, counter[0])
