"""
Exhaustive enumeration of EL concepts of bounded depth.
"""

import logging
from itertools import combinations_with_replacement, product
from typing import List, Sequence

from ..concepts.syntax import Concept, Signature, conj, exists, name
from ..relations.homomorphism import el_subsumes

logger = logging.getLogger(__name__)


def _name_conjunctions(sig: Signature) -> List[Concept]:
    names = sig.concept_names
    return [conj(*(name(n) for n, keep in zip(names, bits) if keep))
            for bits in product((False, True), repeat=len(names))]


def enumerate_el_concepts(sig: Signature, max_depth: int, max_existentials: int) -> List[Concept]:
    """
    Every EL concept of depth <= max_depth with at most `max_existentials`
    existential conjuncts per node, up to normalization.
    """
    atoms = _name_conjunctions(sig)
    concepts = list(dict.fromkeys(atoms))
    for _ in range(max_depth):
        restrictions = [exists(role, c) for role in sig.role_names for c in concepts]
        grown = {}
        for count in range(max_existentials + 1):
            for chosen in combinations_with_replacement(restrictions, count):
                for atom in atoms:
                    c = conj(atom, *chosen)
                    grown[c] = None
        concepts = list(grown)
    concepts.sort(key=lambda c: (len(c.text), c.text))
    logger.info(f"Enumerated {len(concepts)} EL concepts over {sig}, depth <= {max_depth}")
    return concepts


def _antichains(items: Sequence[Concept]) -> List[List[Concept]]:
    """Subsets of existential restrictions in which no member implies another."""
    comparable = {(a, b): a != b and (el_subsumes(a, b) or el_subsumes(b, a))
                  for a in items for b in items}
    result: List[List[Concept]] = []

    def extend(chain: List[Concept], start: int) -> None:
        result.append(list(chain))
        for i in range(start, len(items)):
            if not any(comparable[items[i], c] for c in chain):
                chain.append(items[i])
                extend(chain, i + 1)
                chain.pop()

    extend([], 0)
    return result


def enumerate_el_classes(sig: Signature, max_depth: int) -> List[Concept]:
    """
    One reduced EL concept per equivalence class of EL concepts of depth
    <= max_depth: names at the root plus an antichain of existentials over
    the classes of the previous depth.
    """
    atoms = _name_conjunctions(sig)
    classes = list(atoms)
    for _ in range(max_depth):
        restrictions = [exists(role, c) for role in sig.role_names for c in classes]
        classes = [conj(atom, *chain) for atom in atoms for chain in _antichains(restrictions)]
    classes.sort(key=lambda c: (len(c.text), c.text))
    logger.info(f"Enumerated {len(classes)} EL classes over {sig}, depth <= {max_depth}")
    return classes
