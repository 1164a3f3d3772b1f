"""Exhaustive ground-truth detectors for Truemper configurations.

A Truemper configuration is a theta, wheel, prism or pyramid.  The is_*
checks decide whether a WHOLE graph is one of these, by structural
analysis (degree filter, then explicit path verification).  The
contains_config oracle enumerates induced subgraphs up to a hard node
cap, so it is sound and complete at desk scale and never silently wrong
above it.

Definitions used throughout:

* theta: two non-adjacent nodes a, b joined by three internally disjoint
  chordless paths, each of length >= 2, with no other edges between the
  paths.
* pyramid: an apex a joined to a triangle b1b2b3 by three chordless
  paths of length >= 1, at least two of them of length >= 2, disjoint
  except at a, with no other edges between the paths.
* prism: two disjoint triangles a1a2a3, b1b2b3 joined by three disjoint
  chordless paths of length >= 1 with no other edges between the paths.
* wheel: a hole (chordless cycle of length >= 4) plus a center with at
  least three neighbors on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, bits, mask_of

KINDS = ("theta", "wheel", "prism", "pyramid")

# Smallest instance of each kind: K_{2,3}, the 4-wheel, K3 x K2,
# the (1,2,2)-pyramid.
_MIN_NODES = {"theta": 5, "wheel": 5, "prism": 6, "pyramid": 6}

DEFAULT_CAP = 14


class OracleScaleError(ValueError):
    """Raised when a graph exceeds the exhaustive oracle's node cap."""


@dataclass(frozen=True)
class ConfigWitness:
    """A found configuration with its defining pieces.

    structure is kind specific:
      theta:   {"a": int, "b": int, "paths": [[a, ..., b] x3]}
      wheel:   {"rim": [cycle order], "center": int}
      prism:   {"triangles": [[a1,a2,a3],[b1,b2,b3]], "paths": [[a_i,...,b_j] x3]}
      pyramid: {"apex": int, "triangle": [b1,b2,b3], "paths": [[apex,...,b_i] x3]}
    """

    kind: str
    nodes: frozenset[int]
    structure: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, "nodes": sorted(self.nodes), "structure": self.structure}


# -- mask-level helpers ------------------------------------------------------

def _comp_masks(adj: Sequence[int], within: int) -> list[int]:
    comps = []
    todo = within
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            nxt &= todo & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def _path_order(adj: Sequence[int], part: int) -> Optional[list[int]]:
    """Node order of an induced path, or None if part does not induce one."""
    if part.bit_count() == 1:
        return [part.bit_length() - 1]
    ends = []
    for v in bits(part):
        d = (adj[v] & part).bit_count()
        if d == 1:
            ends.append(v)
        elif d != 2:
            return None
    if len(ends) != 2:
        return None
    order = [ends[0]]
    seen = 1 << ends[0]
    cur = ends[0]
    while True:
        nxt = adj[cur] & part & ~seen
        if not nxt:
            break
        if nxt.bit_count() > 1:
            return None
        cur = nxt.bit_length() - 1
        order.append(cur)
        seen |= nxt
    if len(order) != part.bit_count() or order[-1] != ends[1]:
        return None
    return order


def _walk_from(adj: Sequence[int], sub: int, start: int, first: int,
               stop_mask: int) -> Optional[tuple[int, list[int]]]:
    """Follow degree-2 nodes from start via first until a stop node.

    Returns (stop node, interior list) or None if the walk dies or revisits.
    """
    interior = []
    prev, cur = start, first
    seen = (1 << start) | (1 << first)
    while not stop_mask & (1 << cur):
        if (adj[cur] & sub).bit_count() != 2:
            return None
        nxt = adj[cur] & sub & ~(1 << prev)
        if nxt.bit_count() != 1:
            return None
        interior.append(cur)
        prev, cur = cur, nxt.bit_length() - 1
        if seen & (1 << cur):
            return None
        seen |= 1 << cur
    return cur, interior


def _triangles(adj: Sequence[int], sub: int) -> list[tuple[int, int, int]]:
    out = []
    nodes = bits(sub)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if not adj[u] & (1 << v):
                continue
            common = adj[u] & adj[v] & sub
            for w in bits(common):
                if w > v:
                    out.append((u, v, w))
    return out


# -- whole-graph structural checks (mask core) -------------------------------

def _theta_mask(adj: Sequence[int], sub: int) -> Optional[ConfigWitness]:
    if sub.bit_count() < _MIN_NODES["theta"]:
        return None
    deg3 = []
    for v in bits(sub):
        d = (adj[v] & sub).bit_count()
        if d == 3:
            deg3.append(v)
        elif d != 2:
            return None
    if len(deg3) != 2:
        return None
    a, b = deg3
    if adj[a] & (1 << b):
        return None
    rest = sub & ~(1 << a) & ~(1 << b)
    comps = _comp_masks(adj, rest)
    if len(comps) != 3:
        return None
    paths = []
    for comp in comps:
        na = adj[a] & comp
        nb = adj[b] & comp
        if comp.bit_count() == 1:
            if na != comp or nb != comp:
                return None
            paths.append([a, comp.bit_length() - 1, b])
            continue
        order = _path_order(adj, comp)
        if order is None:
            return None
        if na == 1 << order[0] and nb == 1 << order[-1]:
            paths.append([a] + order + [b])
        elif na == 1 << order[-1] and nb == 1 << order[0]:
            paths.append([a] + order[::-1] + [b])
        else:
            return None
    return ConfigWitness("theta", frozenset(bits(sub)),
                         {"a": a, "b": b, "paths": paths})


def _wheel_mask(adj: Sequence[int], sub: int) -> Optional[ConfigWitness]:
    if sub.bit_count() < _MIN_NODES["wheel"]:
        return None
    for c in bits(sub):
        if (adj[c] & sub).bit_count() < 3:
            continue
        rim = sub & ~(1 << c)
        if rim.bit_count() < 4:
            continue
        ok = True
        for v in bits(rim):
            if (adj[v] & rim).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        if len(_comp_masks(adj, rim)) != 1:
            continue
        start = rim & -rim
        v0 = start.bit_length() - 1
        order = [v0]
        prev = -1
        cur = v0
        while len(order) < rim.bit_count():
            nxt = adj[cur] & rim & ~(1 << prev if prev >= 0 else 0)
            nb = bits(nxt)
            cur, prev = (nb[0], cur)
            order.append(cur)
        return ConfigWitness("wheel", frozenset(bits(sub)),
                             {"rim": order, "center": c})
    return None


def _prism_mask(adj: Sequence[int], sub: int) -> Optional[ConfigWitness]:
    if sub.bit_count() < _MIN_NODES["prism"]:
        return None
    deg3 = 0
    for v in bits(sub):
        d = (adj[v] & sub).bit_count()
        if d == 3:
            deg3 |= 1 << v
        elif d != 2:
            return None
    if deg3.bit_count() != 6:
        return None
    tris = _triangles(adj, sub)
    if len(tris) != 2:
        return None
    ta, tb = tris
    ta_mask, tb_mask = mask_of(ta), mask_of(tb)
    if ta_mask & tb_mask or (ta_mask | tb_mask) != deg3:
        return None
    paths = []
    reached = {}
    covered = ta_mask | tb_mask
    for a_i in ta:
        out = adj[a_i] & sub & ~ta_mask
        if out.bit_count() != 1:
            return None
        res = _walk_from(adj, sub, a_i, out.bit_length() - 1, tb_mask | ta_mask)
        if res is None:
            return None
        end, interior = res
        if not tb_mask & (1 << end) or end in reached.values():
            return None
        reached[a_i] = end
        covered |= mask_of(interior)
        paths.append([a_i] + interior + [end])
    if covered != sub:
        return None
    return ConfigWitness("prism", frozenset(bits(sub)),
                         {"triangles": [list(ta), list(tb)], "paths": paths})


def _pyramid_mask(adj: Sequence[int], sub: int) -> Optional[ConfigWitness]:
    if sub.bit_count() < _MIN_NODES["pyramid"]:
        return None
    deg3 = 0
    for v in bits(sub):
        d = (adj[v] & sub).bit_count()
        if d == 3:
            deg3 |= 1 << v
        elif d != 2:
            return None
    if deg3.bit_count() != 4:
        return None
    tris = _triangles(adj, sub)
    if len(tris) != 1:
        return None
    tri = tris[0]
    tri_mask = mask_of(tri)
    if tri_mask & ~deg3:
        return None
    apex_mask = deg3 & ~tri_mask
    if apex_mask.bit_count() != 1:
        return None
    apex = apex_mask.bit_length() - 1
    paths = []
    covered = tri_mask | apex_mask
    short = 0
    for b_i in tri:
        out = adj[b_i] & sub & ~tri_mask
        if out.bit_count() != 1:
            return None
        first = out.bit_length() - 1
        if first == apex:
            short += 1
            paths.append([apex, b_i])
            continue
        res = _walk_from(adj, sub, b_i, first, apex_mask | tri_mask)
        if res is None:
            return None
        end, interior = res
        if end != apex:
            return None
        covered |= mask_of(interior)
        paths.append([apex] + interior[::-1] + [b_i])
    if short > 1 or covered != sub:
        return None
    return ConfigWitness("pyramid", frozenset(bits(sub)),
                         {"apex": apex, "triangle": list(tri), "paths": paths})


_CHECKS = {"theta": _theta_mask, "wheel": _wheel_mask,
           "prism": _prism_mask, "pyramid": _pyramid_mask}


# -- public predicates -------------------------------------------------------

def is_theta(g: Graph) -> Optional[ConfigWitness]:
    """Witness iff the whole graph is a theta."""
    return _theta_mask(g._adj, g.full_mask())


def is_wheel(g: Graph) -> Optional[ConfigWitness]:
    """Witness iff the whole graph is a wheel (rim plus its center)."""
    return _wheel_mask(g._adj, g.full_mask())


def is_prism(g: Graph) -> Optional[ConfigWitness]:
    """Witness iff the whole graph is a prism."""
    return _prism_mask(g._adj, g.full_mask())


def is_pyramid(g: Graph) -> Optional[ConfigWitness]:
    """Witness iff the whole graph is a pyramid."""
    return _pyramid_mask(g._adj, g.full_mask())


def is_long_pyramid(g: Graph) -> bool:
    """True iff g is a pyramid all of whose three paths have length >= 2."""
    w = is_pyramid(g)
    if w is None:
        return False
    return all(len(p) >= 3 for p in w.structure["paths"])


def contains_config(g: Graph, kinds: Sequence[str] = KINDS,
                    cap: int = DEFAULT_CAP) -> Optional[ConfigWitness]:
    """First induced configuration of one of the given kinds, or None.

    Enumerates node subsets by size then lexicographically and runs the
    structural checks on each induced subgraph, so the answer is sound
    and complete for graphs within the cap.  Raises OracleScaleError
    above the cap rather than ever returning a wrong answer.
    """
    wanted = _validate_kinds(kinds)
    if g.n > cap:
        raise OracleScaleError(
            f"oracle scale exceeded: graph has {g.n} nodes, cap is {cap}")
    found = _scan(g, wanted, first_only=True)
    for kind in KINDS:
        if kind in found and found[kind] is not None:
            return found[kind]
    return None


def scan_configs(g: Graph, kinds: Sequence[str] = KINDS,
                 cap: int = DEFAULT_CAP) -> dict[str, Optional[ConfigWitness]]:
    """First witness per kind in one subset sweep (oracle bulk interface)."""
    wanted = _validate_kinds(kinds)
    if g.n > cap:
        raise OracleScaleError(
            f"oracle scale exceeded: graph has {g.n} nodes, cap is {cap}")
    return _scan(g, wanted, first_only=False)


def _validate_kinds(kinds: Sequence[str]) -> tuple[str, ...]:
    wanted = tuple(k for k in KINDS if k in set(kinds))
    unknown = set(kinds) - set(KINDS)
    if unknown:
        raise ValueError(f"unknown configuration kinds: {sorted(unknown)}")
    if not wanted:
        raise ValueError("no configuration kinds requested")
    return wanted


def _scan(g: Graph, wanted: tuple[str, ...], first_only: bool) -> dict:
    adj = g._adj
    found: dict[str, Optional[ConfigWitness]] = {k: None for k in wanted}
    remaining = set(wanted)
    min_size = min(_MIN_NODES[k] for k in wanted)
    nodes = list(range(g.n))
    for size in range(min_size, g.n + 1):
        sizes_ok = [k for k in remaining if _MIN_NODES[k] <= size]
        if not sizes_ok:
            continue
        for combo in combinations(nodes, size):
            sub = mask_of(combo)
            # all four kinds have minimum degree 2 inside the subgraph
            ok = True
            d3 = dhi = 0  # counts of degree-3 and degree->=4 nodes
            for v in combo:
                d = (adj[v] & sub).bit_count()
                if d <= 1:
                    ok = False
                    break
                if d == 3:
                    d3 += 1
                elif d > 3:
                    dhi += 1
            if not ok:
                continue
            for kind in wanted:
                if found[kind] is not None:
                    continue
                if kind == "theta":
                    if d3 != 2 or dhi:
                        continue
                elif kind == "prism":
                    if d3 != 6 or dhi:
                        continue
                elif kind == "pyramid":
                    if d3 != 4 or dhi:
                        continue
                else:  # wheel: at most the center may exceed degree 3
                    if dhi > 1:
                        continue
                w = _CHECKS[kind](adj, sub)
                if w is not None:
                    found[kind] = w
                    if first_only:
                        return found
                    remaining.discard(kind)
        if not remaining:
            break
    return found


# -- star cutsets ------------------------------------------------------------

def has_star_cutset(g: Graph) -> Optional[tuple[int, frozenset[int]]]:
    """A (center, cutset) pair where the cutset lies in the closed
    neighborhood of its center, or None.

    Scans centers ascending; for each the candidate cutset is the closed
    neighborhood minus a pair of surviving nodes, then greedily minimized.
    """
    if g.n < 3:
        return None
    full = g.full_mask()
    for x in range(g.n):
        star = (1 << x) | g.adj_mask(x)
        outside = full & ~(1 << x)
        rest = bits(outside)
        for i, u in enumerate(rest):
            for v in rest[i + 1:]:
                s_mask = star & ~(1 << u) & ~(1 << v)
                remain = full & ~s_mask
                comps = _comp_masks(g._adj, remain)
                if len(comps) < 2:
                    continue
                cu = next(c for c in comps if c & (1 << u))
                if cu & (1 << v):
                    continue
                # greedy minimization, keeping the center
                for s in bits(s_mask & ~(1 << x)):
                    trial = s_mask & ~(1 << s)
                    trial_comps = _comp_masks(g._adj, full & ~trial)
                    if len(trial_comps) >= 2:
                        tu = next(c for c in trial_comps if c & (1 << u))
                        if not tu & (1 << v):
                            s_mask = trial
                return x, frozenset(bits(s_mask))
    return None
