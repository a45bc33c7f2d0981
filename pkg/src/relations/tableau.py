"""
ALC concept satisfiability.

`alc_satisfiable` is a tableau over negation normal form. Without a TBox
every successor node depends only on its own label, so the tableau is a
plain recursion over nodes.

`bounded_model_search` decides the same question independently by building
every truth assignment to the subconcepts that some small tree realizes.
"""

import logging
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from ..concepts.syntax import (
    Concept, ConceptKind, conj, depth, neg, nnf, subconcepts,
)

logger = logging.getLogger(__name__)


def _expand(todo: List[Concept], label: Set[Concept]) -> bool:
    """Saturate label with the concepts in todo; True if some branch is open."""
    while todo:
        c = todo.pop()
        if c in label:
            continue
        kind = c.kind
        if kind is ConceptKind.BOT:
            return False
        if kind is ConceptKind.NAME and neg(c) in label:
            return False
        if kind is ConceptKind.NOT and c.child in label:
            return False
        label.add(c)
        if kind is ConceptKind.AND:
            todo.extend(c.children)
        elif kind is ConceptKind.OR:
            if any(ch in label for ch in c.children):
                continue
            for ch in c.children:
                if _expand(todo + [ch], set(label)):
                    return True
            return False
    return _successors_open(label)


def _successors_open(label: Set[Concept]) -> bool:
    for c in label:
        if c.kind is not ConceptKind.EXISTS:
            continue
        required = [c.child] + [u.child for u in label
                                if u.kind is ConceptKind.FORALL and u.name == c.name]
        if not _expand(required, set()):
            return False
    return True


def alc_satisfiable(c: Concept) -> bool:
    """Decide whether some pointed interpretation satisfies c."""
    result = _expand([nnf(c)], set())
    logger.debug(f"Tableau: {c.text} is {'satisfiable' if result else 'unsatisfiable'}")
    return result


def alc_entails(c: Concept, d: Concept) -> bool:
    """True iff every model of c is a model of d."""
    return not alc_satisfiable(conj(c, neg(d)))


def equivalent(c: Concept, d: Concept) -> bool:
    return alc_entails(c, d) and alc_entails(d, c)


def _powerset(items: Iterable[str]) -> List[FrozenSet[str]]:
    items = sorted(items)
    return [frozenset(x for x, keep in zip(items, bits) if keep)
            for bits in product((False, True), repeat=len(items))]


def bounded_model_search(c: Concept) -> bool:
    """
    Decide satisfiability of c by exhaustive search over small trees.

    A satisfiable concept has a tree model of height at most depth(c) in
    which every node has at most as many children as c has existential
    subconcepts. Trees are summarised by the subconcepts true at their root,
    built level by level from the summaries of their subtrees.
    """
    target = nnf(c)
    order = sorted(subconcepts(target), key=lambda s: (len(s.text), s.text))
    index: Dict[Concept, int] = {s: i for i, s in enumerate(order)}
    names = {s.name for s in order if s.kind is ConceptKind.NAME}
    roles = sorted({s.name for s in order if s.kind in (ConceptKind.EXISTS, ConceptKind.FORALL)})
    branching = sum(1 for s in order if s.kind is ConceptKind.EXISTS)
    labels = _powerset(names)

    def evaluate(label: FrozenSet[str], kids: Tuple[Tuple[str, Tuple[bool, ...]], ...]) -> Tuple[bool, ...]:
        values: List[bool] = []
        for s in order:
            kind = s.kind
            if kind is ConceptKind.TOP:
                value = True
            elif kind is ConceptKind.BOT:
                value = False
            elif kind is ConceptKind.NAME:
                value = s.name in label
            elif kind is ConceptKind.NOT:
                value = not values[index[s.child]]
            elif kind is ConceptKind.AND:
                value = all(values[index[ch]] for ch in s.children)
            elif kind is ConceptKind.OR:
                value = any(values[index[ch]] for ch in s.children)
            elif kind is ConceptKind.EXISTS:
                value = any(vec[index[s.child]] for role, vec in kids if role == s.name)
            else:
                value = all(vec[index[s.child]] for role, vec in kids if role == s.name)
            values.append(value)
        return tuple(values)

    realized = {evaluate(label, ()) for label in labels}
    for level in range(depth(target)):
        items = [(role, vec) for role in roles for vec in sorted(realized)]
        grown = set(realized)
        for size in range(1, branching + 1):
            for kids in combinations(items, size):
                for label in labels:
                    grown.add(evaluate(label, kids))
        logger.debug(f"Bounded search level {level + 1}: {len(grown)} realizable types")
        realized = grown
    return any(vec[index[target]] for vec in realized)
