"""
Tree-shaped pointed interpretations: unfolding, canonical models of EL-bottom
concepts, and the way back from a finite tree to its concept.

Elements of generated trees are named by their path from the root: the root
is "ε", its first r-child "r.0", and that child's second s-child "r.0/s.1".
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..concepts.syntax import (
    BOT, Concept, ConceptKind, Dialect, check_dialect, conj, exists, name,
)
from .interpretation import Interpretation, PointedInterpretation

logger = logging.getLogger(__name__)

ROOT = "ε"


class NotTreeShapedError(ValueError):
    """Raised when an operation needs a finite tree-shaped interpretation."""


class UnsatisfiableConceptError(ValueError):
    """Raised when an operation needs a satisfiable concept."""


def child_id(parent: str, role: str, index: int) -> str:
    if parent == ROOT:
        return f"{role}.{index}"
    return f"{parent}/{role}.{index}"


def to_graph(pi: PointedInterpretation) -> nx.MultiDiGraph:
    """Role edges of pi as a multigraph; edge keys are role names."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(pi.interp.domain)
    for role, pairs in pi.interp.role_ext.items():
        for source, target in pairs:
            graph.add_edge(source, target, key=role)
    return graph


def is_tree_shaped(pi: PointedInterpretation) -> bool:
    """
    True iff pi is a finite rooted tree at its point: the point has no
    incoming edge, every other element exactly one over all roles, and
    every element is reachable from the point.
    """
    graph = to_graph(pi)
    if graph.in_degree(pi.point) != 0:
        return False
    return nx.is_arborescence(graph)


def require_tree(pi: PointedInterpretation) -> None:
    """
    Raises:
        NotTreeShapedError: If pi is not tree-shaped.
    """
    if not is_tree_shaped(pi):
        raise NotTreeShapedError(f"Interpretation pointed at {pi.point!r} is not tree-shaped")


def height(pi: PointedInterpretation) -> Optional[int]:
    """Length of the longest path from the point, or None if a cycle is reachable."""
    graph = to_graph(pi)
    reachable = nx.descendants(graph, pi.point) | {pi.point}
    sub = nx.DiGraph(graph.subgraph(reachable))
    if not nx.is_directed_acyclic_graph(sub):
        return None
    return nx.dag_longest_path_length(sub)


def unfold(pi: PointedInterpretation, k: int) -> PointedInterpretation:
    """
    Tree unfolding of pi from its point, cut after k edges.

    Each element of the result is a path of pi starting at the point.
    """
    if k < 0:
        raise ValueError(f"Unfolding depth must be non-negative, got {k}")
    interp = pi.interp
    domain: List[str] = [ROOT]
    concepts: Dict[str, List[str]] = {}
    edges: Dict[str, List[Tuple[str, str]]] = {}
    frontier = [(ROOT, pi.point)]
    for level in range(k + 1):
        next_frontier = []
        for path, element in frontier:
            for label in interp.labels[element]:
                concepts.setdefault(label, []).append(path)
            if level == k:
                continue
            for index, (role, target) in enumerate(interp.children(element)):
                child = child_id(path, role, index)
                domain.append(child)
                edges.setdefault(role, []).append((path, child))
                next_frontier.append((child, target))
        frontier = next_frontier
    logger.debug(f"Unfolded {pi.point!r} to depth {k}: {len(domain)} elements")
    return PointedInterpretation(Interpretation.build(domain, concepts, edges), ROOT)


def _propagate_bottom(c: Concept) -> Concept:
    if c.kind is ConceptKind.AND:
        parts = [_propagate_bottom(ch) for ch in c.children]
        return BOT if BOT in parts else conj(*parts)
    if c.kind is ConceptKind.EXISTS:
        filler = _propagate_bottom(c.child)
        return BOT if filler == BOT else exists(c.name, filler)
    return c


def el_bot_satisfiable(c: Concept) -> bool:
    """
    Satisfiability of an EL-bottom concept by pushing bottom upwards.

    Raises:
        DialectError: If c is not an EL-bottom concept.
    """
    check_dialect(c, Dialect.EL_BOT)
    return _propagate_bottom(c) != BOT


def canonical_model(c: Concept) -> PointedInterpretation:
    """
    Canonical model of a satisfiable EL-bottom concept: a root per concept,
    roots of conjuncts identified, a fresh child per existential.

    Raises:
        DialectError: If c is not an EL-bottom concept.
        UnsatisfiableConceptError: If c is unsatisfiable.
    """
    if not el_bot_satisfiable(c):
        raise UnsatisfiableConceptError(f"{c.text} has no canonical model")
    domain: List[str] = [ROOT]
    concepts: Dict[str, List[str]] = {}
    edges: Dict[str, List[Tuple[str, str]]] = {}
    counters: Dict[str, int] = {}

    def build(concept: Concept, node: str) -> None:
        if concept.kind is ConceptKind.NAME:
            concepts.setdefault(concept.name, []).append(node)
        elif concept.kind is ConceptKind.AND:
            for ch in concept.children:
                build(ch, node)
        elif concept.kind is ConceptKind.EXISTS:
            index = counters.get(node, 0)
            counters[node] = index + 1
            child = child_id(node, concept.name, index)
            domain.append(child)
            edges.setdefault(concept.name, []).append((node, child))
            build(concept.child, child)

    build(c, ROOT)
    return PointedInterpretation(Interpretation.build(domain, concepts, edges), ROOT)


def concept_of_tree(pi: PointedInterpretation) -> Concept:
    """
    The EL concept whose canonical model is isomorphic to the tree pi.

    Identical sibling subtrees are kept as repeated conjuncts, so the result
    also serves as a canonical form of the tree.

    Raises:
        NotTreeShapedError: If pi is not tree-shaped.
    """
    require_tree(pi)
    interp = pi.interp

    def describe(node: str) -> Concept:
        parts = [name(label) for label in interp.labels[node]]
        parts += [exists(role, describe(child)) for role, child in interp.children(node)]
        return conj(*parts, dedupe=False)

    return describe(pi.point)


def isomorphic_trees(p1: PointedInterpretation, p2: PointedInterpretation) -> bool:
    """
    Rooted labelled tree isomorphism, by comparing canonical forms.

    Raises:
        NotTreeShapedError: If either input is not tree-shaped.
    """
    return concept_of_tree(p1) == concept_of_tree(p2)


def tree_size(pi: PointedInterpretation) -> int:
    """Number of elements reachable from the point."""
    reached: Set[str] = {pi.point}
    stack = [pi.point]
    while stack:
        node = stack.pop()
        for _, child in pi.interp.children(node):
            if child not in reached:
                reached.add(child)
                stack.append(child)
    return len(reached)
