"""
Hypothesis strategies for concepts and finite trees.
"""

import hypothesis.strategies as st

from src.concepts.syntax import (
    BOT, TOP, Dialect, Signature, conj, disj, exists, forall, name, neg,
)
from src.interpretations.interpretation import Interpretation, PointedInterpretation
from src.interpretations.trees import ROOT, child_id


@st.composite
def concepts(draw, sig: Signature, max_depth: int = 2, dialect: Dialect = Dialect.ALC, size: int = 4):
    """Concepts over sig of depth <= max_depth with at most `size` inner nodes."""
    leaves = [TOP] + [name(n) for n in sig.concept_names]
    if dialect is not Dialect.EL:
        leaves.append(BOT)
    kinds = ["leaf"]
    if size > 0:
        kinds.append("and")
        if sig.role_names and max_depth > 0:
            kinds.append("exists")
        if dialect is Dialect.ALC:
            kinds += ["not", "or"]
            if sig.role_names and max_depth > 0:
                kinds.append("forall")
    kind = draw(st.sampled_from(kinds))
    if kind == "leaf":
        return draw(st.sampled_from(leaves))
    if kind in ("and", "or"):
        left = draw(concepts(sig, max_depth, dialect, size // 2))
        right = draw(concepts(sig, max_depth, dialect, size // 2))
        return conj(left, right) if kind == "and" else disj(left, right)
    if kind == "not":
        return neg(draw(concepts(sig, max_depth, dialect, size - 1)))
    role = draw(st.sampled_from(sig.role_names))
    filler = draw(concepts(sig, max_depth - 1, dialect, size - 1))
    return exists(role, filler) if kind == "exists" else forall(role, filler)


@st.composite
def trees(draw, sig: Signature, max_depth: int = 2, max_branching: int = 2):
    """Finite trees of height <= max_depth pointed at their root."""
    domain, labelled, edges = [], {}, {}

    def grow(node: str, remaining: int) -> None:
        domain.append(node)
        for label in sig.concept_names:
            if draw(st.booleans()):
                labelled.setdefault(label, []).append(node)
        if remaining == 0 or not sig.role_names:
            return
        for index in range(draw(st.integers(min_value=0, max_value=max_branching))):
            role = draw(st.sampled_from(sig.role_names))
            child = child_id(node, role, index)
            edges.setdefault(role, []).append((node, child))
            grow(child, remaining - 1)

    grow(ROOT, max_depth)
    return PointedInterpretation(Interpretation.build(domain, labelled, edges), ROOT)


@st.composite
def graphs(draw, sig: Signature, max_size: int = 3):
    """Small interpretations with arbitrary edges, loops and cycles included, pointed at d0."""
    domain = [f"d{i}" for i in range(draw(st.integers(min_value=1, max_value=max_size)))]
    labelled = {label: [d for d in domain if draw(st.booleans())] for label in sig.concept_names}
    pairs = [(a, b) for a in domain for b in domain]
    edges = {role: [p for p in pairs if draw(st.booleans())] for role in sig.role_names}
    return PointedInterpretation(Interpretation.build(domain, labelled, edges), domain[0])
