"""Immutable simple undirected graphs over contiguous integer node ids.

Adjacency is stored twice: as bitset rows (Python ints, one bit per
neighbor) for fast set algebra, and as sorted neighbor tuples for
iteration.  All operations are pure functions; edits return new graphs.
Iteration order is ascending node id everywhere, so every "first found"
answer is reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_NODES = 4096


class Graph:
    """A finite simple graph on nodes 0..n-1.

    Node tags are metadata only (used to mark marker-path nodes and the
    special nodes of pyramid-basic constructions); no structural predicate
    reads them.
    """

    __slots__ = ("n", "_adj", "_nbrs", "tags")

    def __init__(self, n: int, adj_masks: Sequence[int], tags: Optional[Sequence[Optional[str]]] = None):
        if n < 0 or n > MAX_NODES:
            raise ValueError(f"node count {n} outside supported range 0..{MAX_NODES}")
        full = (1 << n) - 1
        for v in range(n):
            row = adj_masks[v]
            if row & (1 << v):
                raise ValueError(f"self-loop at node {v}")
            if row & ~full:
                raise ValueError(f"adjacency row of node {v} mentions out-of-range nodes")
        for v in range(n):
            row = adj_masks[v]
            w = row
            while w:
                b = w & -w
                u = b.bit_length() - 1
                if not adj_masks[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric on pair ({v}, {u})")
                w ^= b
        self.n = n
        self._adj = tuple(adj_masks)
        self._nbrs = tuple(tuple(_bits(adj_masks[v])) for v in range(n))
        self.tags = tuple(tags) if tags is not None else tuple(None for _ in range(n))
        if len(self.tags) != n:
            raise ValueError("tags length must equal node count")

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                       tags: Optional[Sequence[Optional[str]]] = None) -> "Graph":
        """Build a graph from an explicit edge list.

        Rejects self-loops, duplicate edges and out-of-range ids.
        """
        if n < 0 or n > MAX_NODES:
            raise ValueError(f"node count {n} outside supported range 0..{MAX_NODES}")
        rows = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows, tags)

    def with_tags(self, tags: Sequence[Optional[str]]) -> "Graph":
        return Graph(self.n, self._adj, tags)

    # -- elementary queries ----------------------------------------------

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self._adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bits(mask: int) -> list[int]:
    """Node ids present in a bitmask, ascending."""
    return list(_bits(mask))


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


# -- derived graphs -------------------------------------------------------

def induced_subgraph(g: Graph, nodes: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on a node set, plus the map new id -> old id."""
    order = sorted(set(nodes))
    for v in order:
        if not 0 <= v < g.n:
            raise ValueError(f"node {v} not in graph")
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * len(order)
    sel = mask_of(order)
    for i, v in enumerate(order):
        row = g.adj_mask(v) & sel
        for u in _bits(row):
            rows[i] |= 1 << pos[u]
    tags = [g.tags[v] for v in order]
    return Graph(len(order), rows, tags), tuple(order)


# -- connectivity ---------------------------------------------------------

def components_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components as bitmasks, ordered by smallest contained id."""
    todo = g.full_mask() if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj_mask(v)
            nxt &= todo & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def components(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in components_masks(g)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(components_masks(g)) == 1


def biconnected_blocks(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """2-connected blocks as edge sets (edges normalized u < v).

    Iterative Hopcroft-Tarjan; isolated nodes contribute no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[tuple[int, int]]] = []
    stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        work = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    # skip one parent edge occurrence; simple graph so this is exact
                    parent = -1
                    work[-1] = (v, -1, it)
                    continue
                if disc[w] == -1:
                    stack.append((v, w) if v < w else (w, v))
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append((v, w) if v < w else (w, v))
                    low[v] = min(low[v], disc[w])
                    work[-1] = (v, parent, it)
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    edge = (pv, v) if pv < v else (v, pv)
                    block = []
                    while stack:
                        e = stack.pop()
                        block.append(e)
                        if e == edge:
                            break
                    if block:
                        blocks.append(frozenset(block))
        if stack:
            blocks.append(frozenset(stack))
            stack.clear()
    return blocks


# -- paths and cycles as node sequences -------------------------------------

def is_path_sequence(g: Graph, nodes: Sequence[int]) -> bool:
    """True iff nodes lists a path: distinct nodes, consecutive adjacent."""
    if len(set(nodes)) != len(nodes) or not nodes:
        return False
    return all(g.has_edge(nodes[i], nodes[i + 1]) for i in range(len(nodes) - 1))


def is_chordless_path_sequence(g: Graph, nodes: Sequence[int]) -> bool:
    """True iff nodes lists a path with no chord (no non-consecutive
    pair adjacent)."""
    if not is_path_sequence(g, nodes):
        return False
    for i in range(len(nodes)):
        for j in range(i + 2, len(nodes)):
            if g.has_edge(nodes[i], nodes[j]):
                return False
    return True


def is_chordless_cycle_sequence(g: Graph, nodes: Sequence[int]) -> bool:
    """True iff nodes lists a chordless cycle (closing on its first node)."""
    if len(nodes) < 3 or not is_path_sequence(g, nodes):
        return False
    if not g.has_edge(nodes[-1], nodes[0]):
        return False
    for i in range(len(nodes)):
        for j in range(i + 2, len(nodes)):
            if (i, j) == (0, len(nodes) - 1):
                continue
            if g.has_edge(nodes[i], nodes[j]):
                return False
    return True


# -- small structural predicates -------------------------------------------

def is_clique_graph(g: Graph) -> bool:
    """True iff g itself is complete (vacuously for n <= 1)."""
    full = g.full_mask()
    return all(g.adj_mask(v) == full & ~(1 << v) for v in range(g.n))


def is_hole_graph(g: Graph) -> bool:
    """True iff g itself is a chordless cycle of length >= 4."""
    if g.n < 4:
        return False
    if any(g.degree(v) != 2 for v in range(g.n)):
        return False
    return is_connected(g)


def hole_order(g: Graph) -> list[int]:
    """Cyclic node order of a hole graph, starting at node 0."""
    if not is_hole_graph(g):
        raise ValueError("not a hole graph")
    order = [0, g.neighbors(0)[0]]
    while len(order) < g.n:
        prev, cur = order[-2], order[-1]
        a, b = g.neighbors(cur)
        order.append(b if a == prev else a)
    return order


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in g.neighbors(u):
            if v <= u:
                continue
            if g.adj_mask(u) & g.adj_mask(v):
                return False
    return True


def find_diamond(g: Graph) -> Optional[frozenset[int]]:
    """Some induced K4-minus-an-edge as a node set, or None.

    Scans non-adjacent pairs for two adjacent common neighbors; first hit
    in ascending order.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = g.adj_mask(u) & g.adj_mask(v)
            if common.bit_count() < 2:
                continue
            cn = bits(common)
            for w1, w2 in combinations(cn, 2):
                if g.has_edge(w1, w2):
                    return frozenset((u, v, w1, w2))
    return None


def find_claw(g: Graph) -> Optional[frozenset[int]]:
    """Some induced K_{1,3} as a node set, or None."""
    for c in range(g.n):
        nb = g.neighbors(c)
        if len(nb) < 3:
            continue
        for t in combinations(nb, 3):
            if not (g.has_edge(t[0], t[1]) or g.has_edge(t[0], t[2]) or g.has_edge(t[1], t[2])):
                return frozenset((c,) + t)
    return None


# -- edge-list text format --------------------------------------------------
# Canonical on-disk representation: first line "n m", then m lines "u v",
# 0-based, whitespace separated, '#' starts a comment.

class EdgeListParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected two integers, got {body!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"expected two integers, got {body!r}", lineno) from None
        rows.append((lineno, [a, b]))
    if not rows:
        raise EdgeListParseError("missing header line 'n m'", 1)
    header_line, (n, m) = rows[0]
    if n < 0 or m < 0:
        raise EdgeListParseError("header counts must be nonnegative", header_line)
    if len(rows) - 1 != m:
        raise EdgeListParseError(
            f"header announces {m} edges but file lists {len(rows) - 1}", header_line)
    edges = []
    for lineno, (u, v) in rows[1:]:
        try:
            probe = Graph.from_edge_list(n, [(u, v)])
        except ValueError as exc:
            raise EdgeListParseError(str(exc), lineno) from None
        del probe
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges)
    except ValueError as exc:
        raise EdgeListParseError(str(exc), header_line) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph_file(path: str, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def from_graph6(line: str) -> Graph:
    """Decode one graph in graph6 format (optional import path)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("graph6 sizes above 258047 not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 string too short")
    bitstream = 0
    for b in body[:need]:
        bitstream = (bitstream << 6) | b
    total = need * 6
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream >> (total - 1 - k) & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edge_list(n, edges)
