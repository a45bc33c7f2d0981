"""
Least common subsumers of EL-bottom concepts and EL-bottom reception.

The least common subsumer of two satisfiable concepts is read off the
product of their canonical models: a pair of nodes keeps the names both
carry and has an r-child for every pair of r-children.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..concepts.syntax import (
    BOT, Concept, ConceptKind, Dialect, check_dialect, conj, exists,
)
from ..interpretations.interpretation import Interpretation, PointedInterpretation
from ..interpretations.trees import (
    ROOT, canonical_model, child_id, concept_of_tree, el_bot_satisfiable,
)
from ..relations.homomorphism import el_subsumes

logger = logging.getLogger(__name__)


def tree_product(p1: PointedInterpretation, p2: PointedInterpretation) -> PointedInterpretation:
    """Part of the product of two trees reachable from the pair of points."""
    i1, i2 = p1.interp, p2.interp
    domain: List[str] = [ROOT]
    concepts: Dict[str, List[str]] = {}
    edges: Dict[str, List[Tuple[str, str]]] = {}
    stack = [(ROOT, p1.point, p2.point)]
    while stack:
        node, x, y = stack.pop()
        for label in i1.labels[x] & i2.labels[y]:
            concepts.setdefault(label, []).append(node)
        index = 0
        for role in sorted(set(i1.roles) & set(i2.roles)):
            for a in i1.succ(role, x):
                for b in i2.succ(role, y):
                    child = child_id(node, role, index)
                    index += 1
                    domain.append(child)
                    edges.setdefault(role, []).append((node, child))
                    stack.append((child, a, b))
    return PointedInterpretation(Interpretation.build(domain, concepts, edges), ROOT)


def el_minimize(c: Concept) -> Concept:
    """
    Reduced form of an EL concept: at every node, drop an existential that
    is implied by a sibling existential over the same role.
    """
    if c.kind is ConceptKind.EXISTS:
        return exists(c.name, el_minimize(c.child))
    if c.kind is not ConceptKind.AND:
        return c
    parts = [el_minimize(ch) for ch in c.children]
    kept = list(dict.fromkeys(parts))
    for candidate in sorted(kept, key=lambda x: x.text, reverse=True):
        if candidate.kind is not ConceptKind.EXISTS:
            continue
        if any(other != candidate and other.kind is ConceptKind.EXISTS and other.name == candidate.name
               and el_subsumes(other.child, candidate.child) for other in kept):
            kept.remove(candidate)
    return conj(*kept)


def el_lcs(c: Concept, d: Concept) -> Concept:
    """
    Least common subsumer of two EL-bottom concepts.

    Bottom is the neutral element: lcs(bot, x) = x.

    Raises:
        DialectError: If either concept is not EL-bottom.
    """
    check_dialect(c, Dialect.EL_BOT)
    check_dialect(d, Dialect.EL_BOT)
    if not el_bot_satisfiable(c):
        return el_minimize(d) if el_bot_satisfiable(d) else BOT
    if not el_bot_satisfiable(d):
        return el_minimize(c)
    product = tree_product(canonical_model(c), canonical_model(d))
    result = el_minimize(concept_of_tree(product))
    logger.debug(f"lcs({c.text}, {d.text}) = {result.text}")
    return result


def el_receive(base: Concept, positives: Sequence[PointedInterpretation]) -> Concept:
    """
    EL-bottom reception: the least common subsumer of the base and the
    concepts of all positive trees.

    Raises:
        NotTreeShapedError: If a positive is not tree-shaped.
    """
    check_dialect(base, Dialect.EL_BOT)
    acc: Optional[Concept] = el_minimize(base) if el_bot_satisfiable(base) else None
    for pi in positives:
        tree = concept_of_tree(pi)
        acc = el_minimize(tree) if acc is None else el_lcs(acc, tree)
    result = BOT if acc is None else acc
    logger.info(f"EL reception into {base.text} with {len(positives)} models: {result.text}")
    return result
