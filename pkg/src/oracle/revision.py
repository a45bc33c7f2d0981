"""
Revision and eviction by minimal change over a finite universe.

Candidates are the definable sets that keep every positive and drop every
negative; among them the ones closest to the base win, where closeness
compares symmetric differences with the base by inclusion.
"""

import logging
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..change.operators import ChangeRequest, RealizabilityError
from ..concepts.syntax import Concept
from ..interpretations.interpretation import PointedInterpretation
from .families import ModelFamily, select
from .universe import FiniteUniverse, ModelSet

logger = logging.getLogger(__name__)


class RevisionCase(Enum):
    """Which of the three revision cases applies to a request."""
    EVICT_ONLY = "i"
    RECEIVE_ONLY = "ii"
    GENERAL = "iii"


def chi_min(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily) -> List[ModelSet]:
    """
    Definable sets containing plus and disjoint from minus whose symmetric
    difference with b is inclusion-minimal.

    Raises:
        RealizabilityError: If plus and minus overlap or no candidate exists.
    """
    return fr.chi_min(b, plus, minus)


def revision_case(b: ModelSet, plus: ModelSet, minus: ModelSet) -> RevisionCase:
    if plus <= b:
        return RevisionCase.EVICT_ONLY
    if not (minus & b):
        return RevisionCase.RECEIVE_ONLY
    return RevisionCase.GENERAL


def case_minima(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily,
                universe_mask: Optional[ModelSet] = None) -> List[ModelSet]:
    """
    Closest candidates for the case that applies: when every positive is
    already in b, everything outside b must go as well; when no negative is
    in b, everything in b must stay; otherwise plain minimal change.
    """
    everything = universe_mask if universe_mask is not None else fr.universe.full()
    case = revision_case(b, plus, minus)
    if case is RevisionCase.EVICT_ONLY:
        return chi_min(b, plus, minus | (everything - b), fr)
    if case is RevisionCase.RECEIVE_ONLY:
        return chi_min(b, plus | b, minus, fr)
    return chi_min(b, plus, minus, fr)


def symmetric_differential_revise(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily,
                                  universe_mask: Optional[ModelSet] = None) -> ModelSet:
    """
    Revise b with positives plus and negatives minus, respecting the
    vacuous cases, and pick the least mask among the closest candidates.

    Raises:
        RealizabilityError: If no candidate exists.
    """
    result = select(case_minima(b, plus, minus, fr, universe_mask))
    logger.info(f"Revision case {revision_case(b, plus, minus).value}: {b} -> {result}")
    return result


def naive_revise(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily) -> ModelSet:
    """Minimal change without the vacuous cases."""
    return select(chi_min(b, plus, minus, fr))


def request_sets(req: ChangeRequest, universe: FiniteUniverse) -> Tuple[ModelSet, ModelSet, ModelSet]:
    """Base, positive and negative model sets of a request within a universe."""
    return (universe.mod_set(req.base, strict=False),
            universe.closure(req.positives),
            universe.closure(req.negatives))


def el_evict_bounded(base: Concept, negatives: Sequence[PointedInterpretation],
                     fr: ModelFamily) -> Tuple[Concept, ModelSet]:
    """
    Eviction within the bounded fragment: a greatest definable subset of
    the base's models without the negatives, chosen by least mask.

    Returns:
        The defining concept of the chosen set and the set itself.
    """
    universe = fr.universe
    target = universe.mod_set(base, strict=False) - universe.closure(negatives)
    chosen = select(fr.max_fr_subs(target))
    concept = fr.witness(chosen)
    logger.info(f"Bounded eviction from {base.text}: {concept.text}")
    return concept, chosen


def el_revise_bounded(req: ChangeRequest, fr: ModelFamily) -> Tuple[Concept, ModelSet]:
    """
    Revision within the bounded fragment of fr.

    Raises:
        RealizabilityError: If no definable set separates the request.
    """
    b, plus, minus = request_sets(req, fr.universe)
    if plus & minus:
        raise RealizabilityError("A positive and a negative model share a class")
    chosen = symmetric_differential_revise(b, plus, minus, fr)
    concept = fr.witness(chosen)
    logger.info(f"Bounded revision of {req.base.text}: {concept.text}")
    return concept, chosen
