"""
Families of finitely representable model sets over a finite universe.

In the ALC fragment every union of classes is definable (a disjunction of
characteristic concepts), so the family is every subset of the universe
and its queries have closed forms. In the EL-bottom fragment the family is
computed explicitly: conjunction makes it closed under intersection, and
it is generated by the concept names, top, bottom and the existential
restrictions over sets of the previous depth.
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..change.operators import RealizabilityError
from ..characteristic.dagger import dagger_of_tree
from ..concepts.syntax import BOT, TOP, Concept, conj, disj, exists, name
from .universe import FiniteUniverse, FragmentError, ModelSet

logger = logging.getLogger(__name__)

MAX_ENUMERABLE_MODELS = 16


class Fragment(Enum):
    """Concept languages a family can be built for."""
    EL_BOT = "EL_BOT"
    ALC = "ALC"


def select(candidates: List[ModelSet]) -> ModelSet:
    """Deterministic choice: the candidate whose mask is lexicographically least."""
    if not candidates:
        raise RealizabilityError("Nothing to choose from")
    return min(candidates, key=lambda m: m.bits())


def _minimal(sets: List[ModelSet]) -> List[ModelSet]:
    return [s for s in sets if not any(t < s for t in sets)]


def _maximal(sets: List[ModelSet]) -> List[ModelSet]:
    return [s for s in sets if not any(t > s for t in sets)]


def _check_disjoint(plus: ModelSet, minus: ModelSet) -> None:
    if plus & minus:
        raise RealizabilityError(f"Models {list(plus & minus)} are both to be kept and dropped")


class ModelFamily(ABC):
    """The finitely representable sets of one fragment over a universe."""

    fragment: Fragment

    def __init__(self, universe: FiniteUniverse):
        self.universe = universe

    @abstractmethod
    def contains(self, m: ModelSet) -> bool:
        ...

    @abstractmethod
    def members(self) -> List[ModelSet]:
        ...

    @abstractmethod
    def witness(self, m: ModelSet) -> Concept:
        """A concept of the fragment whose models are exactly m."""

    @abstractmethod
    def min_fr_sups(self, m: ModelSet) -> List[ModelSet]:
        ...

    @abstractmethod
    def max_fr_subs(self, m: ModelSet) -> List[ModelSet]:
        ...

    @abstractmethod
    def exists_between(self, lo: ModelSet, hi: ModelSet, exclude: ModelSet) -> Optional[ModelSet]:
        """Some member Y with lo <= Y <= hi and Y != exclude, if there is one."""

    @abstractmethod
    def chi_min(self, b: ModelSet, plus: ModelSet, minus: ModelSet) -> List[ModelSet]:
        """Members containing plus and missing minus that are closest to b."""


class AllSubsetsFamily(ModelFamily):
    """Every subset of the universe."""

    fragment = Fragment.ALC

    def contains(self, m: ModelSet) -> bool:
        return True

    def members(self) -> List[ModelSet]:
        n = len(self.universe)
        if n > MAX_ENUMERABLE_MODELS:
            raise FragmentError(f"Refusing to list 2^{n} subsets")
        return [self.universe.from_indices(i for i in range(n) if code >> i & 1) for code in range(2 ** n)]

    def witness(self, m: ModelSet) -> Concept:
        return disj(*(dagger_of_tree(pi, self.universe.sig) for pi in m.models()))

    def min_fr_sups(self, m: ModelSet) -> List[ModelSet]:
        return [m]

    def max_fr_subs(self, m: ModelSet) -> List[ModelSet]:
        return [m]

    def exists_between(self, lo: ModelSet, hi: ModelSet, exclude: ModelSet) -> Optional[ModelSet]:
        if not lo <= hi:
            return None
        for candidate in (lo, hi):
            if candidate != exclude:
                return candidate
        return None

    def chi_min(self, b: ModelSet, plus: ModelSet, minus: ModelSet) -> List[ModelSet]:
        _check_disjoint(plus, minus)
        return [(b | plus) - minus]


class ExplicitFamily(ModelFamily):
    """A family given by its members, each with a defining concept."""

    fragment = Fragment.EL_BOT

    def __init__(self, universe: FiniteUniverse, witnesses: Dict[ModelSet, Concept]):
        super().__init__(universe)
        self._witnesses = dict(witnesses)
        self._members = sorted(self._witnesses, key=lambda m: m.bits())

    def __len__(self) -> int:
        return len(self._members)

    def contains(self, m: ModelSet) -> bool:
        return m in self._witnesses

    def members(self) -> List[ModelSet]:
        return list(self._members)

    def witness(self, m: ModelSet) -> Concept:
        if m not in self._witnesses:
            raise FragmentError(f"{m} is not definable in the {self.fragment.value} fragment")
        return self._witnesses[m]

    def min_fr_sups(self, m: ModelSet) -> List[ModelSet]:
        return _minimal([y for y in self._members if m <= y])

    def max_fr_subs(self, m: ModelSet) -> List[ModelSet]:
        return _maximal([y for y in self._members if y <= m])

    def exists_between(self, lo: ModelSet, hi: ModelSet, exclude: ModelSet) -> Optional[ModelSet]:
        for y in self._members:
            if lo <= y <= hi and y != exclude:
                return y
        return None

    def chi(self, plus: ModelSet, minus: ModelSet) -> List[ModelSet]:
        _check_disjoint(plus, minus)
        return [y for y in self._members if plus <= y and not (y & minus)]

    def chi_min(self, b: ModelSet, plus: ModelSet, minus: ModelSet) -> List[ModelSet]:
        candidates = self.chi(plus, minus)
        if not candidates:
            raise RealizabilityError("No definable set keeps every positive and drops every negative")
        distance = {y: b ^ y for y in candidates}
        return [y for y in candidates if not any(distance[z] < distance[y] for z in candidates)]


def _preference(c: Concept) -> Tuple[int, str]:
    return len(c.text), c.text


def _offer(table: Dict[ModelSet, Concept], m: ModelSet, c: Concept) -> bool:
    """Record c for m if m is new or c is shorter; True if m is new."""
    current = table.get(m)
    if current is None:
        table[m] = c
        return True
    if _preference(c) < _preference(current):
        table[m] = c
    return False


def _intersection_closure(generators: Dict[ModelSet, Concept]) -> Dict[ModelSet, Concept]:
    family = dict(generators)
    frontier = list(family)
    while frontier:
        fresh: List[ModelSet] = []
        for a in frontier:
            for b in list(family):
                m = a & b
                if _offer(family, m, conj(family[a], family[b])):
                    fresh.append(m)
        frontier = fresh
    return family


def el_family(universe: FiniteUniverse) -> ExplicitFamily:
    """Model sets of EL-bottom concepts of depth <= k over the universe."""
    atoms: Dict[ModelSet, Concept] = {}
    _offer(atoms, universe.full(), TOP)
    for concept_name in universe.sig.concept_names:
        c = name(concept_name)
        _offer(atoms, universe.mod_set(c), c)
    level = _intersection_closure(atoms)
    for _ in range(universe.k):
        generators = dict(atoms)
        for m, c in level.items():
            for role in universe.sig.role_names:
                _offer(generators, universe.exists_mask(role, m), exists(role, c))
        level = _intersection_closure(generators)
    _offer(level, universe.empty(), BOT)
    logger.info(f"EL-bottom family over {universe.sig}, k={universe.k}: {len(level)} sets")
    return ExplicitFamily(universe, level)


def fr_family(universe: FiniteUniverse, fragment: Fragment) -> ModelFamily:
    """The finitely representable sets of `fragment` over the universe."""
    if fragment is Fragment.ALC:
        return AllSubsetsFamily(universe)
    return el_family(universe)
