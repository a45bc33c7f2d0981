"""
Characteristic ALC concepts of finite trees.

Over a finite signature the translation of a satisfiable EL-bottom concept
C pins down, node by node, exactly which names hold, which successors
exist and that no other successors exist. Its models are precisely the
pointed interpretations bisimilar to the canonical model of C.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from ..concepts.syntax import (
    BOT, Concept, ConceptKind, Signature, conj, disj, exists, forall, name, neg, signature_of,
)
from ..interpretations.interpretation import PointedInterpretation
from ..interpretations.trees import UnsatisfiableConceptError, concept_of_tree, el_bot_satisfiable

logger = logging.getLogger(__name__)


class InfiniteSignatureError(ValueError):
    """Raised when a characteristic concept is requested without a finite signature."""


class SignatureMismatchError(ValueError):
    """Raised when a concept or interpretation uses names outside the signature."""


def flatten(c: Concept) -> Tuple[Set[str], Dict[str, List[Concept]]]:
    """
    Split an EL concept into its atoms and its existential fillers per role.

    Repeated existentials are kept, one filler per occurrence.
    """
    atoms: Set[str] = set()
    fillers: Dict[str, List[Concept]] = {}
    stack = [c]
    while stack:
        node = stack.pop()
        if node.kind is ConceptKind.NAME:
            atoms.add(node.name)
        elif node.kind is ConceptKind.AND:
            stack.extend(node.children)
        elif node.kind is ConceptKind.EXISTS:
            fillers.setdefault(node.name, []).append(node.child)
    for role in fillers:
        fillers[role].sort(key=lambda f: f.text)
    return atoms, fillers


def _translate(c: Concept, sig: Signature) -> Concept:
    atoms, fillers = flatten(c)
    parts: List[Concept] = [name(a) for a in sorted(atoms)]
    parts += [neg(name(b)) for b in sig.concept_names if b not in atoms]
    for role in sig.role_names:
        if role not in fillers:
            parts.append(forall(role, BOT))
            continue
        translated = [_translate(f, sig) for f in fillers[role]]
        parts += [exists(role, t) for t in translated]
        parts.append(forall(role, disj(*translated)))
    return conj(*parts)


def dagger(c: Concept, sig: Optional[Signature]) -> Concept:
    """
    Characteristic ALC concept of a satisfiable EL-bottom concept.

    Args:
        c: Satisfiable EL-bottom concept.
        sig: Finite signature covering the names of c.

    Raises:
        InfiniteSignatureError: If sig is None.
        DialectError: If c is not EL-bottom.
        UnsatisfiableConceptError: If c is unsatisfiable.
        SignatureMismatchError: If c uses names outside sig.
    """
    if sig is None:
        raise InfiniteSignatureError("Characteristic concepts need a finite signature")
    if not el_bot_satisfiable(c):
        raise UnsatisfiableConceptError(f"{c.text} is unsatisfiable")
    if not signature_of(c).issubset(sig):
        raise SignatureMismatchError(f"{c.text} uses names outside {sig}")
    return _translate(c, sig)


def dagger_of_tree(pi: PointedInterpretation, sig: Optional[Signature]) -> Concept:
    """
    Characteristic ALC concept of a finite tree.

    Raises:
        NotTreeShapedError: If pi is not tree-shaped.
        SignatureMismatchError: If pi uses names outside sig.
    """
    if sig is not None and not pi.signature().issubset(sig):
        raise SignatureMismatchError(f"Interpretation uses names outside {sig}")
    result = dagger(concept_of_tree(pi), sig)
    logger.debug(f"Characteristic concept of {pi.point!r}: {result.text}")
    return result
