"""
Random concepts, trees and change requests for postulate sweeps.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..change.operators import ChangeRequest
from ..concepts.syntax import (
    BOT, TOP, Concept, Dialect, Signature, conj, disj, exists, forall, name, neg,
)
from ..interpretations.interpretation import Interpretation, PointedInterpretation
from ..interpretations.trees import ROOT, child_id
from .universe import FiniteUniverse

logger = logging.getLogger(__name__)


def random_concept(rng: np.random.Generator, sig: Signature, max_depth: int,
                   dialect: Dialect = Dialect.ALC, max_width: int = 2) -> Concept:
    """A random concept of depth <= max_depth in the given dialect."""
    leaves: List[Concept] = [TOP] + [name(n) for n in sig.concept_names]
    if dialect is not Dialect.EL:
        leaves.append(BOT)
    kinds = ["leaf", "and"]
    if sig.role_names and max_depth > 0:
        kinds.append("exists")
    if dialect is Dialect.ALC:
        kinds += ["not", "or"]
        if sig.role_names and max_depth > 0:
            kinds.append("forall")
    kind = kinds[rng.integers(len(kinds))]
    if kind == "leaf":
        return leaves[rng.integers(len(leaves))]
    if kind in ("and", "or"):
        width = int(rng.integers(2, max_width + 1))
        parts = [random_concept(rng, sig, max_depth, dialect, max_width) if rng.random() < 0.3
                 else random_concept(rng, sig, 0, dialect, max_width) for _ in range(width)]
        return conj(*parts) if kind == "and" else disj(*parts)
    if kind == "not":
        return neg(random_concept(rng, sig, max_depth, dialect, max_width))
    role = sig.role_names[rng.integers(len(sig.role_names))]
    filler = random_concept(rng, sig, max_depth - 1, dialect, max_width)
    return exists(role, filler) if kind == "exists" else forall(role, filler)


def random_tree(rng: np.random.Generator, sig: Signature, max_depth: int,
                max_branching: int) -> PointedInterpretation:
    """A random finite tree of height <= max_depth."""
    domain: List[str] = []
    concepts: Dict[str, List[str]] = {}
    edges: Dict[str, List[Tuple[str, str]]] = {}

    def grow(node: str, remaining: int) -> None:
        domain.append(node)
        for label in sig.concept_names:
            if rng.random() < 0.5:
                concepts.setdefault(label, []).append(node)
        if remaining == 0 or not sig.role_names:
            return
        for index in range(int(rng.integers(max_branching + 1))):
            role = sig.role_names[rng.integers(len(sig.role_names))]
            child = child_id(node, role, index)
            edges.setdefault(role, []).append((node, child))
            grow(child, remaining - 1)

    grow(ROOT, max_depth)
    return PointedInterpretation(Interpretation.build(domain, concepts, edges), ROOT)


def random_request(rng: np.random.Generator, universe: FiniteUniverse, max_positives: int = 2,
                   max_negatives: int = 2, base: Optional[Concept] = None) -> ChangeRequest:
    """
    A random request whose models are distinct universe representatives,
    so positives and negatives are never bisimilar.
    """
    if base is None:
        base = random_concept(rng, universe.sig, universe.k, Dialect.ALC)
    n_pos = int(rng.integers(max_positives + 1))
    n_neg = int(rng.integers(max_negatives + 1))
    picked = rng.choice(len(universe), size=min(len(universe), n_pos + n_neg), replace=False)
    positives = tuple(universe.models[int(i)] for i in picked[:n_pos])
    negatives = tuple(universe.models[int(i)] for i in picked[n_pos:])
    return ChangeRequest(base=base, sig=universe.sig, positives=positives, negatives=negatives)
