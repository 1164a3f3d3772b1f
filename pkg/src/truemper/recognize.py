"""Recognition of the only-prism, only-pyramid and universally-signable
graph classes via decomposition.

only-prism graphs exclude thetas, wheels and pyramids; only-pyramid
graphs exclude thetas, wheels and prisms; universally-signable graphs
exclude all four configurations.  Each recognizer first decomposes along
clique cutsets, then certifies the leaves: only-prism leaves must be
line graphs of triangle-free chordless graphs; only-pyramid leaves are
decomposed further along consistent 2-joins, whose terminal graphs must
be cliques, holes, long pyramids or pyramid-basic graphs; universally-
signable leaves must be cliques or holes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .basic import (BasicVerdict, ONLY_PYRAMID_BASIC, classify_basic,
                    is_lg_tf_chordless)
from .cutset import CliqueDecompTree, clique_decomposition_tree
from .graph import Graph, is_clique_graph, is_hole_graph
from .oracle import ConfigWitness, contains_config
from .twojoin import (LEAF_NON_CONSISTENT, TwoJoinDecompTree,
                      two_join_decomposition_tree)

EXCLUDED_SETS = {
    "only-prism": ("theta", "wheel", "pyramid"),
    "only-pyramid": ("theta", "wheel", "prism"),
    "universally-signable": ("theta", "wheel", "prism", "pyramid"),
}

CLASS_NAMES = tuple(EXCLUDED_SETS)


@dataclass
class LeafReport:
    """Certification outcome for one clique-tree leaf."""

    graph: Graph
    origin: tuple[int, ...]
    accepted: bool
    basic: Optional[BasicVerdict] = None
    twojoin_tree: Optional[TwoJoinDecompTree] = None
    terminal_verdicts: list[BasicVerdict] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "n": self.graph.n,
            "edges": [[u, v] for u, v in self.graph.edges()],
            "origin": list(self.origin),
            "accepted": self.accepted,
        }
        if self.basic is not None:
            out["basic"] = self.basic.to_json()
        if self.twojoin_tree is not None:
            out["twojoin_tree"] = self.twojoin_tree.to_json()
            out["terminal_verdicts"] = [v.to_json() for v in self.terminal_verdicts]
        return out


@dataclass
class Rejection:
    reason: str
    graph: Graph
    witness: Optional[ConfigWitness] = None
    failed_condition: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "reason": self.reason,
            "leaf": {"n": self.graph.n,
                     "edges": [[u, v] for u, v in self.graph.edges()]},
            "witness": None if self.witness is None else self.witness.to_json(),
            "failed_condition": self.failed_condition,
        }


@dataclass
class RecognitionReport:
    class_name: str
    verdict: bool
    clique_tree: CliqueDecompTree
    leaves: list[LeafReport]
    rejection: Optional[Rejection] = None

    def to_json(self) -> dict:
        return {
            "class": self.class_name,
            "verdict": self.verdict,
            "clique_tree": self.clique_tree.to_json(),
            "leaves": [leaf.to_json() for leaf in self.leaves],
            "rejection": None if self.rejection is None else self.rejection.to_json(),
        }


def _extract_witness(g: Graph, class_name: str,
                     witness_cap: Optional[int]) -> Optional[ConfigWitness]:
    if witness_cap is None or g.n > witness_cap:
        return None
    return contains_config(g, EXCLUDED_SETS[class_name], cap=witness_cap)


def recognize_only_prism(g: Graph, witness_cap: Optional[int] = None) -> RecognitionReport:
    """Decide membership in the class excluding thetas, wheels and
    pyramids: every clique-tree leaf must be the line graph of a
    triangle-free chordless graph."""
    tree = clique_decomposition_tree(g)
    leaves = []
    rejection = None
    verdict = True
    for node in tree.leaves:
        root_cert = is_lg_tf_chordless(node.graph)
        accepted = root_cert is not None
        basic = (BasicVerdict("lg-tf-chordless", root_cert) if accepted
                 else BasicVerdict("none"))
        leaves.append(LeafReport(node.graph, node.origin, accepted, basic))
        if not accepted and verdict:
            verdict = False
            rejection = Rejection(
                "leaf is not the line graph of a triangle-free chordless graph",
                node.graph,
                _extract_witness(node.graph, "only-prism", witness_cap))
    return RecognitionReport("only-prism", verdict, tree, leaves, rejection)


def recognize_only_pyramid(g: Graph, witness_cap: Optional[int] = None) -> RecognitionReport:
    """Decide membership in the class excluding thetas, wheels and
    prisms.

    Clique-tree leaves have no clique cutset, so all their almost
    2-joins must be consistent if the graph is in the class; a leaf of
    the 2-join tree flagged non-consistent therefore rejects.  Terminal
    graphs with no 2-join must be cliques, holes, long pyramids or
    pyramid-basic graphs.
    """
    tree = clique_decomposition_tree(g)
    leaves = []
    rejection = None
    verdict = True
    for node in tree.leaves:
        tj = two_join_decomposition_tree(node.graph)
        verdicts = []
        accepted = True
        local_rejection = None
        for tnode in tj.leaves:
            if tnode.kind == LEAF_NON_CONSISTENT:
                accepted = False
                if local_rejection is None:
                    local_rejection = Rejection(
                        "leaf carries a non-consistent 2-join",
                        tnode.graph,
                        _extract_witness(tnode.graph, "only-pyramid", witness_cap),
                        failed_condition=tnode.failed_condition)
                continue
            verdict_basic = classify_basic(tnode.graph)
            verdicts.append(verdict_basic)
            if verdict_basic.category not in ONLY_PYRAMID_BASIC:
                accepted = False
                if local_rejection is None:
                    local_rejection = Rejection(
                        "terminal graph is not a clique, hole, long pyramid "
                        "or pyramid-basic graph",
                        tnode.graph,
                        _extract_witness(tnode.graph, "only-pyramid", witness_cap))
        leaves.append(LeafReport(node.graph, node.origin, accepted,
                                 None, tj, verdicts))
        if not accepted and verdict:
            verdict = False
            rejection = local_rejection
    return RecognitionReport("only-pyramid", verdict, tree, leaves, rejection)


def recognize_universally_signable(g: Graph,
                                   witness_cap: Optional[int] = None) -> RecognitionReport:
    """Decide whether g excludes all four configurations: every
    clique-tree leaf must be a clique or a hole."""
    tree = clique_decomposition_tree(g)
    leaves = []
    rejection = None
    verdict = True
    for node in tree.leaves:
        if is_clique_graph(node.graph):
            basic = BasicVerdict("clique", sorted(range(node.graph.n)))
            accepted = True
        elif is_hole_graph(node.graph):
            basic = classify_basic(node.graph)
            accepted = True
        else:
            basic = BasicVerdict("none")
            accepted = False
        leaves.append(LeafReport(node.graph, node.origin, accepted, basic))
        if not accepted and verdict:
            verdict = False
            rejection = Rejection(
                "leaf is neither a clique nor a hole",
                node.graph,
                _extract_witness(node.graph, "universally-signable", witness_cap))
    return RecognitionReport("universally-signable", verdict, tree, leaves, rejection)


RECOGNIZERS = {
    "only-prism": recognize_only_prism,
    "only-pyramid": recognize_only_pyramid,
    "universally-signable": recognize_universally_signable,
}
