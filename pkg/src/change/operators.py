"""
Reception, eviction and revision of ALC concepts with finite trees.

Each finite tree has a characteristic concept whose models are exactly
the trees bisimilar to it. Receiving models is then a disjunction with
their characteristic concepts, evicting is a conjunction with their
negations, and revising does both.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from ..characteristic.dagger import SignatureMismatchError, dagger_of_tree
from ..concepts.parser import parse_concept
from ..concepts.syntax import Concept, ConceptKind, Signature, conj, disj, neg, signature_of
from ..interpretations.interpretation import PointedInterpretation
from ..interpretations.serialization import (
    interpretation_from_json, interpretation_to_json, signature_from_json, signature_to_json,
)
from ..interpretations.trees import require_tree
from ..relations.bisimulation import bisimilar
from ..relations.tableau import alc_entails

logger = logging.getLogger(__name__)


class RealizabilityError(ValueError):
    """Raised when no concept can keep every positive and drop every negative."""


@dataclass(frozen=True)
class ChangeRequest:
    """A base concept with models to receive (positives) and to evict (negatives)."""
    base: Concept
    sig: Signature
    positives: Tuple[PointedInterpretation, ...] = field(default_factory=tuple)
    negatives: Tuple[PointedInterpretation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "positives", tuple(self.positives))
        object.__setattr__(self, "negatives", tuple(self.negatives))
        if not signature_of(self.base).issubset(self.sig):
            raise SignatureMismatchError(f"Base {self.base.text} uses names outside {self.sig}")
        _validate_models(self.positives, self.sig)
        _validate_models(self.negatives, self.sig)

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "ChangeRequest":
        """
        Build a request from {"base", "signature", "positives", "negatives"}.

        Raises:
            ValueError: On a missing key or malformed content.
        """
        if not isinstance(obj, dict):
            raise ValueError("A change request must be a JSON object")
        for key in ("base", "signature"):
            if key not in obj:
                raise ValueError(f"Change request is missing the {key!r} key")
        sig = signature_from_json(obj["signature"])
        return cls(
            base=parse_concept(obj["base"], sig),
            sig=sig,
            positives=tuple(interpretation_from_json(p) for p in obj.get("positives", [])),
            negatives=tuple(interpretation_from_json(n) for n in obj.get("negatives", [])),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "base": self.base.text,
            "signature": signature_to_json(self.sig),
            "positives": [interpretation_to_json(p) for p in self.positives],
            "negatives": [interpretation_to_json(n) for n in self.negatives],
        }


def _validate_models(models: Sequence[PointedInterpretation], sig: Signature) -> None:
    for pi in models:
        require_tree(pi)
        if not pi.signature().issubset(sig):
            raise SignatureMismatchError(f"Interpretation pointed at {pi.point!r} uses names outside {sig}")


def bisimulation_disjoint(ps: Sequence[PointedInterpretation], ns: Sequence[PointedInterpretation],
                          sig: Signature) -> bool:
    """True iff no positive is bisimilar to a negative over sig."""
    return not any(bisimilar(p, n, sig) is not None for p in ps for n in ns)


def dedupe_models(models: Sequence[PointedInterpretation], sig: Signature) -> List[PointedInterpretation]:
    """Keep the first model of every bisimulation class, in input order."""
    kept: List[PointedInterpretation] = []
    for pi in models:
        if any(bisimilar(pi, other, sig) is not None for other in kept):
            logger.info(f"Dropping model pointed at {pi.point!r}: bisimilar to an earlier one")
            continue
        kept.append(pi)
    return kept


def _prune(c: Concept) -> Concept:
    """
    Drop operands made redundant by a sibling: a disjunct entailing another
    disjunct, a conjunct entailed by another conjunct. Among equivalent
    operands the one with the least text stays.
    """
    if c.kind not in (ConceptKind.AND, ConceptKind.OR):
        return c
    operands = [_prune(ch) for ch in c.children]
    kept = list(operands)
    for candidate in sorted(operands, key=lambda x: x.text, reverse=True):
        others = [x for x in kept if x != candidate]
        if c.kind is ConceptKind.OR:
            redundant = any(alc_entails(candidate, x) for x in others)
        else:
            redundant = any(alc_entails(x, candidate) for x in others)
        if redundant:
            kept.remove(candidate)
    return conj(*kept) if c.kind is ConceptKind.AND else disj(*kept)


def _characteristics(models: Sequence[PointedInterpretation], sig: Signature) -> List[Concept]:
    _validate_models(models, sig)
    return [dagger_of_tree(pi, sig) for pi in dedupe_models(models, sig)]


def receive_alc(base: Concept, positives: Sequence[PointedInterpretation], sig: Signature) -> Concept:
    """
    Smallest change of base admitting every positive model.

    Raises:
        NotTreeShapedError, SignatureMismatchError: On invalid positives.
    """
    result = _prune(disj(base, *_characteristics(positives, sig)))
    logger.info(f"Received {len(positives)} models into {base.text}: {result.text}")
    return result


def evict_alc(base: Concept, negatives: Sequence[PointedInterpretation], sig: Signature) -> Concept:
    """
    Smallest change of base rejecting every negative model.

    Raises:
        NotTreeShapedError, SignatureMismatchError: On invalid negatives.
    """
    result = _prune(conj(base, *(neg(d) for d in _characteristics(negatives, sig))))
    logger.info(f"Evicted {len(negatives)} models from {base.text}: {result.text}")
    return result


def revise_alc(req: ChangeRequest) -> Concept:
    """
    Receive the positives and evict the negatives in one step.

    Raises:
        RealizabilityError: If a positive is bisimilar to a negative.
    """
    if not bisimulation_disjoint(req.positives, req.negatives, req.sig):
        raise RealizabilityError("A positive model is bisimilar to a negative model; "
                                 "no concept can keep one and drop the other")
    received = disj(req.base, *_characteristics(req.positives, req.sig))
    result = _prune(conj(received, *(neg(d) for d in _characteristics(req.negatives, req.sig))))
    logger.info(f"Revised {req.base.text} with {len(req.positives)}+/{len(req.negatives)}-: {result.text}")
    return result
