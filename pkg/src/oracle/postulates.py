"""
Rationality postulates of reception, eviction and revision, checked on
concrete runs over a finite universe.

Postulates that quantify over definable sets (finite temperance, finite
retainment, circumspection) are checked against the family of the run's
fragment only, so their verdicts are relative to that fragment.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ..concepts.syntax import Concept
from ..interpretations.interpretation import PointedInterpretation
from ..interpretations.serialization import interpretation_to_json
from .families import ModelFamily
from .revision import case_minima
from .universe import FiniteUniverse, ModelSet

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"


class OperatorKind(Enum):
    RECEPTION = "reception"
    EVICTION = "eviction"
    REVISION = "revision"


@dataclass
class Verdict:
    """Outcome of checking one postulate on one run."""
    postulate: str
    status: str
    witness: Optional[PointedInterpretation] = None
    fragment: Dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> Dict[str, Any]:
        return {
            "postulate": self.postulate,
            "status": self.status,
            "witness": None if self.witness is None else interpretation_to_json(self.witness),
            "fragment": dict(self.fragment),
        }


@dataclass
class OperatorRun:
    """Inputs and output of one operator application, as model sets."""
    kind: OperatorKind
    base: ModelSet
    output: ModelSet
    plus: Optional[ModelSet] = None
    minus: Optional[ModelSet] = None

    def __post_init__(self):
        universe = self.base.universe
        if self.plus is None:
            self.plus = universe.empty()
        if self.minus is None:
            self.minus = universe.empty()


def run_from_concepts(kind: OperatorKind, universe: FiniteUniverse, base: Concept, output: Concept,
                      positives: Sequence[PointedInterpretation] = (),
                      negatives: Sequence[PointedInterpretation] = ()) -> OperatorRun:
    """
    Evaluate a concept-level run on the universe.

    Raises:
        FragmentError: If a model has no representative in the universe.
    """
    return OperatorRun(
        kind=kind,
        base=universe.mod_set(base, strict=False),
        output=universe.mod_set(output, strict=False),
        plus=universe.closure(positives),
        minus=universe.closure(negatives),
    )


class PostulateChecker:
    """Checks the postulates of each operator kind against a family."""

    def __init__(self, fr: ModelFamily):
        self.fr = fr
        universe = fr.universe
        self.fragment = {
            "nc": len(universe.sig.concept_names),
            "nr": len(universe.sig.role_names),
            "k": universe.k,
            "language": fr.fragment.value,
            "relative": True,
        }

    def _verdict(self, postulate: str, violators: Optional[ModelSet], detail: str = "") -> Verdict:
        if violators is None or not violators:
            return Verdict(postulate, PASS, fragment=self.fragment)
        first = next(iter(violators))
        return Verdict(postulate, FAIL, witness=self.fr.universe.models[first], fragment=self.fragment,
                       detail=detail or f"violated at {self.fr.universe.describe(first)}")

    def _no_definable_between(self, postulate: str, lo: ModelSet, hi: ModelSet, out: ModelSet) -> Verdict:
        between = self.fr.exists_between(lo, hi, out)
        if between is None:
            return Verdict(postulate, PASS, fragment=self.fragment)
        return self._verdict(postulate, between ^ out, f"definable set {between} lies closer than the output")

    def reception(self, run: OperatorRun) -> List[Verdict]:
        b, plus, out = run.base, run.plus, run.output
        return [
            self._verdict("success", plus - out),
            self._verdict("persistence", b - out),
            self._no_definable_between("finite-temperance", b | plus, out, out),
        ]

    def eviction(self, run: OperatorRun) -> List[Verdict]:
        b, minus, out = run.base, run.minus, run.output
        return [
            self._verdict("success", minus & out),
            self._verdict("inclusion", out - b),
            self._no_definable_between("finite-retainment", out, b - minus, out),
        ]

    def revision(self, run: OperatorRun) -> List[Verdict]:
        b, plus, minus, out = run.base, run.plus, run.minus, run.output
        verdicts = [self._verdict("success", (plus - out) | (minus & out))]
        expansion = out - b if plus <= b else None
        verdicts.append(self._verdict("vacuous-expansion", expansion))
        removal = b - out if not (minus & b) else None
        verdicts.append(self._verdict("vacuous-removal", removal))
        lethargic = plus <= b and not (minus & b)
        verdicts.append(self._verdict("lethargy", (b ^ out) if lethargic else None))
        verdicts.append(self._circumspection(b, plus, minus, out))
        return verdicts

    def _circumspection(self, b: ModelSet, plus: ModelSet, minus: ModelSet, out: ModelSet) -> Verdict:
        # Extra removals X- range over [minus & b, b - out], extra additions
        # X+ over [plus - b, out - b]; (b - X-) | X+ then spans [lo, hi].
        if not (minus & b) <= (b - out) or not (plus - b) <= (out - b):
            return Verdict("circumspection", PASS, fragment=self.fragment)
        lo = (b & out) | (plus - b)
        hi = (b - minus) | (out - b)
        return self._no_definable_between("circumspection", lo, hi, out)

    def check(self, run: OperatorRun) -> List[Verdict]:
        if run.kind is OperatorKind.RECEPTION:
            verdicts = self.reception(run)
        elif run.kind is OperatorKind.EVICTION:
            verdicts = self.eviction(run)
        else:
            verdicts = self.revision(run)
        failed = [v.postulate for v in verdicts if not v.passed]
        if failed:
            logger.info(f"{run.kind.value} run fails {failed}")
        return verdicts

    def decomposition(self, run: OperatorRun) -> List[Verdict]:
        """
        A revision with no negatives is a reception and one with no
        positives is an eviction; check it against those postulates too.
        """
        verdicts: List[Verdict] = []
        if not run.minus:
            verdicts += self.reception(OperatorRun(OperatorKind.RECEPTION, run.base, run.output, plus=run.plus))
        if not run.plus:
            verdicts += self.eviction(OperatorRun(OperatorKind.EVICTION, run.base, run.output, minus=run.minus))
        return verdicts

    def reception_uniform(self, first: OperatorRun, second: OperatorRun) -> Verdict:
        """Equal least definable supersets of base plus inputs must give equal outputs."""
        same = (set(self.fr.min_fr_sups(first.base | first.plus))
                == set(self.fr.min_fr_sups(second.base | second.plus)))
        return self._verdict("uniformity", (first.output ^ second.output) if same else None)

    def eviction_uniform(self, first: OperatorRun, second: OperatorRun) -> Verdict:
        """Equal greatest definable subsets of base minus inputs must give equal outputs."""
        same = (set(self.fr.max_fr_subs(first.base - first.minus))
                == set(self.fr.max_fr_subs(second.base - second.minus)))
        return self._verdict("uniformity", (first.output ^ second.output) if same else None)


def check_postulates(run: OperatorRun, fr: ModelFamily) -> List[Verdict]:
    """Verdicts for every postulate of the run's operator kind."""
    return PostulateChecker(fr).check(run)


def revision_passing_outputs(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily) -> List[ModelSet]:
    """Every definable output passing success, both vacuity postulates and circumspection."""
    checker = PostulateChecker(fr)
    wanted = {"success", "vacuous-expansion", "vacuous-removal", "circumspection"}
    passing = []
    for out in fr.members():
        verdicts = checker.revision(OperatorRun(OperatorKind.REVISION, b, out, plus, minus))
        if all(v.passed for v in verdicts if v.postulate in wanted):
            passing.append(out)
    return passing


def characterization_gap(b: ModelSet, plus: ModelSet, minus: ModelSet, fr: ModelFamily) -> Dict[str, List[ModelSet]]:
    """
    Compare the outputs passing the four revision postulates with the
    closest candidates of the applicable case; both lists are empty when
    the two sets coincide.
    """
    passing = set(revision_passing_outputs(b, plus, minus, fr))
    minima = set(case_minima(b, plus, minus, fr))
    return {
        "passing_not_minimal": sorted(passing - minima, key=lambda m: m.bits()),
        "minimal_not_passing": sorted(minima - passing, key=lambda m: m.bits()),
    }
